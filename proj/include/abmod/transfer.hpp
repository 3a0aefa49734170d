#pragma once

// The all-primes driver: decide the characteristic-zero analogue first,
// compute an effective set of exceptional primes from the traces of that
// computation, check those primes (plus a small floor set) individually,
// and aggregate.

#include <cstdint>
#include <string>
#include <vector>

#include "abmod/decider.hpp"
#include "abmod/ratpoly.hpp"

namespace abmod {

struct TraceValue {
  Int value;
  std::string provenance;
};

// Integers collected during a characteristic-zero run whose prime divisors
// are the only places where the generic verdict may fail to specialize.
struct Char0Trace {
  std::vector<TraceValue> values;

  void add(Int v, std::string what) {
    values.push_back({std::move(v), std::move(what)});
  }
};

struct Char0ConjunctVerdict {
  enum class Kind { Yes, No, Inconclusive };
  Kind kind = Kind::Inconclusive;
  ConjunctClass cls = ConjunctClass::General;
  Conjunct reduced;
  std::vector<unsigned> var_map;
  std::string detail;
};

struct Char0Verdict {
  enum class Kind { Yes, No, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::vector<Char0ConjunctVerdict> conjuncts;
  Char0Trace trace;
};

std::string to_string(Char0Verdict::Kind k);

Char0Verdict char0_decide(const Sentence& s, const DecideBudget& budget = {});
Char0Verdict char0_decide_conjuncts(const std::vector<Conjunct>& dnf,
                                    const DecideBudget& budget = {});

struct BadPrime {
  Int p;
  std::vector<std::string> provenance;
};

struct BadPrimeSet {
  std::vector<BadPrime> primes;  // ascending

  bool contains(std::uint64_t p) const {
    for (const auto& b : primes)
      if (b.p == Int(static_cast<unsigned long>(p))) return true;
    return false;
  }
};

BadPrimeSet bad_primes(const Char0Trace& trace);

struct AllPrimesConfig {
  std::vector<std::uint64_t> floor_primes = {2, 3, 5, 7, 11, 13};
  std::uint64_t general_prime_bound = 50;
  DecideBudget per_prime;
};

struct PerPrimeOutcome {
  std::uint64_t p = 0;
  bool from_bad_set = false;
  Verdict verdict;
};

struct AllPrimesVerdict {
  enum class Kind { HoldsForAll, FailsAt, Inconclusive };
  Kind kind = Kind::Inconclusive;
  Char0Verdict char0;
  BadPrimeSet bad;
  std::uint64_t failing_prime = 0;
  std::vector<PerPrimeOutcome> checked;  // ascending prime order
  std::vector<std::string> unresolved;
  bool contradiction = false;  // would indicate a transfer-contract bug
  std::vector<std::string> assumptions;
};

std::string to_string(AllPrimesVerdict::Kind k);

AllPrimesVerdict decide_all_primes(const Sentence& s,
                                   const AllPrimesConfig& cfg = {});

}  // namespace abmod
