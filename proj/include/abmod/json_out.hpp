#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "abmod/decider.hpp"
#include "abmod/transfer.hpp"

namespace abmod {

using Json = nlohmann::ordered_json;

Json witness_json(const PrimeWitness& w, const std::vector<std::string>& names);
Json certificate_json(const NoCertificate& c,
                      const std::vector<std::string>& names);
Json budget_json(const BudgetReport& r);
Json verdict_json(const Verdict& v, const Sentence& s);
Json char0_json(const Char0Verdict& v, const Sentence& s);
Json bad_primes_json(const BadPrimeSet& b);
Json all_primes_json(const AllPrimesVerdict& v, const Sentence& s);
Json reduce_json(const Sentence& s, std::size_t dnf_cap);

// Gap-variable names for a conjunct reduced to n blocks of arity m.
std::vector<std::string> gap_var_names(const GapSentence& g,
                                       const std::vector<std::string>& orig);

}  // namespace abmod
