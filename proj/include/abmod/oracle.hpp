#pragma once

// Desk-scale ground truth: explicit finite levels of the quotient rings
// (ramified local levels and cyclotomic quotients with their CRT split),
// decided by exhaustive enumeration. Everything else is tested against this.

#include <cstdint>
#include <optional>
#include <vector>

#include "abmod/errors.hpp"
#include "abmod/factor.hpp"
#include "abmod/formula.hpp"
#include "abmod/prime_field.hpp"
#include "abmod/quot_ring.hpp"
#include "abmod/rings.hpp"
#include "abmod/series.hpp"

namespace abmod {

struct OracleBudget {
  std::uint64_t max_ring_size = std::uint64_t{1} << 16;
  std::uint64_t max_assignments = std::uint64_t{1} << 24;
};

// F_{p^k}[v]/(v^(p^e (p-1))) with the marked element t = v^(p^e); the
// single-component finite level of the ramified tower at cap t^(p-1).
struct LocalModel {
  SeriesCtxPtr ring;

  std::uint64_t p() const { return ring->p(); }
  unsigned k() const { return ring->k(); }
  unsigned e() const { return ring->e(); }
  TruncSeries t() const { return ring->t(); }
};

LocalModel build_local_model(std::uint64_t p, unsigned k, unsigned e,
                             const OracleBudget& budget = {});

// F_p[x]/(Phi_N mod p) together with its CRT decomposition into local
// factors h_i^{m_i}.
struct CyclotomicModel {
  unsigned N = 0;
  std::uint64_t p = 0;
  QuotRing<PrimeField> ring;
  std::vector<UFactor<PrimeField>> factors;  // of Phi_N mod p
  CrtDecomposition<PrimeField> crt;          // components h_i^{m_i}

  std::size_t component_count() const { return crt.comps.size(); }
  QuotRing<PrimeField> component(std::size_t i) const {
    return QuotRing<PrimeField>(ring.field(), crt.comps[i]);
  }
};

CyclotomicModel build_cyclotomic_model(unsigned N, std::uint64_t p,
                                       const OracleBudget& budget = {});

template <class Ring>
struct BruteResult {
  bool sat = false;
  std::vector<typename Ring::Elem> witness;  // set when sat
  std::uint64_t tried = 0;
};

namespace detail {
inline std::uint64_t checked_assignment_count(const Int& ring_size,
                                              unsigned nvars,
                                              const OracleBudget& budget) {
  if (!ring_size.fits_ulong_p() ||
      ring_size.get_ui() > budget.max_ring_size)
    throw ResourceError("oracle: ring too large to enumerate");
  Int total = 1;
  for (unsigned i = 0; i < nvars; ++i) total *= ring_size;
  if (!total.fits_ulong_p() || total.get_ui() > budget.max_assignments)
    throw ResourceError("oracle: assignment space too large");
  return total.get_ui();
}
}  // namespace detail

// Exhaustive satisfaction of a formula matrix; enumeration is mixed-radix
// lexicographic on element indices, so the first witness is the canonical
// lowest one. The witness is re-verified through eval before returning.
template <class Ring, class Matrix>
BruteResult<Ring> brute_sat_impl(const Ring& R, const Matrix& matrix,
                                 unsigned nvars, const OracleBudget& budget) {
  const std::uint64_t total =
      detail::checked_assignment_count(R.size(), nvars, budget);
  const std::uint64_t ring_size = R.size().get_ui();
  BruteResult<Ring> res;
  std::vector<typename Ring::Elem> point(nvars, R.zero());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned v = 0; v < nvars; ++v) {
      point[v] = R.element_at(rest % ring_size);
      rest /= ring_size;
    }
    ++res.tried;
    bool ok;
    if constexpr (std::is_same_v<Matrix, Conjunct>) {
      ok = eval_conjunct(R, matrix, point);
    } else {
      ok = eval_formula(R, matrix, point);
    }
    if (ok) {
      res.sat = true;
      res.witness = point;
      return res;
    }
  }
  return res;
}

template <class Ring>
BruteResult<Ring> brute_sat(const Ring& R, const Conjunct& c, unsigned nvars,
                            const OracleBudget& budget = {}) {
  return brute_sat_impl(R, c, nvars, budget);
}

template <class Ring>
BruteResult<Ring> brute_sat(const Ring& R, const Formula& f, unsigned nvars,
                            const OracleBudget& budget = {}) {
  return brute_sat_impl(R, f, nvars, budget);
}

// The finite shadow of the replication law: S^r satisfies the conjunct
// exactly when S satisfies its replicated form. Used by test suites; any
// false return is a bug somewhere.
template <class Ring>
bool product_transfer_check(const Ring& S, unsigned r, const Conjunct& c,
                            const OracleBudget& budget = {});

}  // namespace abmod

#include "abmod/reduction.hpp"

namespace abmod {

template <class Ring>
bool product_transfer_check(const Ring& S, unsigned r, const Conjunct& c,
                            const OracleBudget& budget) {
  ProductRing<Ring> Sr{S, r};
  bool lhs = brute_sat(Sr, c, c.nvars, budget).sat;
  Conjunct balanced = pad(c);
  Conjunct repl = replicate(balanced).materialize();
  bool rhs = brute_sat(S, repl, repl.nvars, budget).sat;
  return lhs == rhs;
}

}  // namespace abmod
