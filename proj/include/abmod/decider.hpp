#pragma once

// Per-prime decision of gap sentences. Complete for the positive,
// inequations-only and separated fragments; budgeted semi-decision with an
// honest Inconclusive for the general multivariate case. A Yes always
// carries a witness that re-verifies; a No always carries a certificate
// that re-checks by an independent routine.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abmod/factor.hpp"
#include "abmod/formula.hpp"
#include "abmod/groebner.hpp"
#include "abmod/prime_field.hpp"
#include "abmod/reduction.hpp"
#include "abmod/rng.hpp"
#include "abmod/series.hpp"

namespace abmod {

struct DecideBudget {
  unsigned max_field_deg = 3;  // K: extension degrees k <= K
  unsigned max_ram = 2;        // E: ramification exponents e <= E
  unsigned max_cap = 3;        // M: integer truncation caps <= M in search
  std::uint64_t max_level_assignments = std::uint64_t{1} << 18;
  std::uint64_t random_trials = 4096;
  std::size_t dnf_cap = 4096;
  std::size_t groebner_pair_cap = 200000;
  std::uint64_t seed = kDefaultSeed;
};

struct GapMargin {
  Valuation min_upper;
  Valuation max_lower;
};

// A verified satisfying assignment for a gap sentence at a finite level.
// Normalized so the cap is the canonical p-1: every upper valuation hits
// the cap and every lower valuation is finite below it, hence the same
// assignment also satisfies the replicated conjunct in the local model.
struct PrimeWitness {
  std::uint64_t p = 0;
  unsigned k = 0, e = 0;
  Rat cap;
  SeriesCtxPtr ctx;
  std::vector<TruncSeries> assignment;  // blocks * arity entries
  GapMargin margin;
};

struct OrdProfileCert {
  std::uint64_t p = 0;
  std::vector<UPoly<Fp>> basis;  // monic irreducible over F_p
  // ord tables vs the basis; -1 encodes infinity (the zero polynomial)
  std::vector<long> f_ord_min;           // min over nonzero f's, per basis elem
  std::vector<std::vector<long>> f_ord;  // [i][j]
  std::vector<std::vector<long>> g_ord;  // [k][j]
  unsigned failing_block = 0;
};

struct ResidueObstructionCert {
  std::uint64_t p = 0;
  std::vector<MPoly<Fp>> gens;       // reduced equation system (maybe extended)
  std::vector<MPoly<Fp>> cofactors;  // sum cof_i * gens_i == 1
};

struct PolyVanishesCert {
  std::uint64_t p = 0;
  std::size_t neq_index = 0;
  ZPoly g;  // integer form; reduces to the zero polynomial mod p
};

using NoCertificate =
    std::variant<OrdProfileCert, ResidueObstructionCert, PolyVanishesCert>;

std::string certificate_kind(const NoCertificate& c);

struct BudgetReport {
  unsigned max_field_deg = 0, max_ram = 0, max_cap = 0;
  std::uint64_t assignments_tried = 0;
  std::vector<std::string> notes;
};

struct ConjunctVerdict {
  enum class Kind { Yes, No, Inconclusive };
  Kind kind = Kind::Inconclusive;
  ConjunctClass cls = ConjunctClass::General;
  Conjunct reduced;               // variable-compressed conjunct
  std::vector<unsigned> var_map;  // original index of each compressed var
  GapSentence gap;                // gap form used by the decision
  std::optional<PrimeWitness> witness;
  std::optional<NoCertificate> certificate;
  std::optional<BudgetReport> budget;
};

struct Verdict {
  enum class Kind { Yes, No, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::uint64_t p = 0;
  std::vector<ConjunctVerdict> conjuncts;
  std::size_t yes_index = static_cast<std::size_t>(-1);
};

std::string to_string(Verdict::Kind k);

// Evaluates every pair (f_i, block j) and (g_k, block k) in the witness
// ring; true iff all lower valuations are finite below the cap and every
// upper valuation strictly exceeds every lower one.
bool verify_witness(const GapSentence& g, const PrimeWitness& w,
                    GapMargin* margin = nullptr);

// Fair level schedule (k + e + cap interleaving) with exhaustive or
// seeded-random assignment search per level; any returned witness has been
// normalized to the canonical cap and re-verified.
std::optional<PrimeWitness> witness_search(const GapSentence& g,
                                           std::uint64_t p,
                                           const DecideBudget& budget,
                                           BudgetReport* report = nullptr);

// Shared factor basis + multiplicity table for univariate inputs over F_p.
struct ModPOrdProfile {
  std::vector<UPoly<Fp>> basis;
  std::vector<std::vector<long>> ord;  // [input][basis], -1 = infinity
  std::vector<bool> input_is_zero;
};

ModPOrdProfile ord_profile_mod_p(const std::vector<UPoly<Fp>>& inputs,
                                 const PrimeField& F,
                                 std::uint64_t seed = kDefaultSeed);

// Complete decision for separated gap sentences (single original variable).
ConjunctVerdict decide_separated(const Conjunct& reduced, const GapSentence& g,
                                 std::uint64_t p, const DecideBudget& budget);

enum class AcfSat { Sat, Unsat };

struct AcfResult {
  AcfSat sat = AcfSat::Unsat;
  std::optional<ResidueObstructionCert> cert;  // for Unsat via ideal triviality
  std::optional<PolyVanishesCert> vanish;      // for Unsat via g == 0
};

// Satisfiability over the algebraic closure of F_p. Positive systems via
// Groebner triviality, inequation systems via the nonzero-polynomial test,
// mixed systems via Rabinowitsch inversion variables (sound over fields,
// which is exactly what separates this from the ring-level decision).
AcfResult acf_decide_char_p(const Conjunct& reduced, std::uint64_t p,
                            const DecideBudget& budget);

// Per-prime decision of a whole sentence (DNF, classify, dispatch).
Verdict decide_mod_p(const Sentence& s, std::uint64_t p,
                     const DecideBudget& budget);
Verdict decide_conjuncts_mod_p(const std::vector<Conjunct>& dnf,
                               std::uint64_t p, const DecideBudget& budget);

// Independent certificate checks.
bool check_certificate(const Conjunct& reduced, const NoCertificate& cert);

// Re-run the witness through the plain ring-arithmetic route: every
// equation value must vanish and every inequation value must be a nonzero
// element of the witness ring (no valuations involved).
bool oracle_confirm_witness(const GapSentence& g, const PrimeWitness& w);

}  // namespace abmod
