#pragma once

// Univariate factorization over finite fields: squarefree decomposition,
// distinct-degree splitting, and Cantor-Zassenhaus equal-degree splitting
// (with the trace-map variant in characteristic 2).  Works over any field
// context exposing characteristic()/size()/pow() in addition to the
// arithmetic interface used by upoly.hpp.

#include <algorithm>
#include <utility>
#include <vector>

#include "abmod/bigint.hpp"
#include "abmod/errors.hpp"
#include "abmod/rng.hpp"
#include "abmod/upoly.hpp"

namespace abmod {

template <class K>
struct UFactor {
  UPolyOf<K> h;   // monic irreducible
  unsigned mult;  // multiplicity
};

template <class K>
struct UFactorization {
  typename K::Elem unit;
  std::vector<UFactor<K>> factors;
};

template <class K>
UPolyOf<K> random_poly_below(const K& F, int deg_bound, Rng& rng) {
  // random polynomial of degree < deg_bound, via random element indices
  std::vector<typename K::Elem> cs;
  const Int q = F.size();
  for (int i = 0; i < deg_bound; ++i) {
    if (q.fits_ulong_p()) {
      cs.push_back(F.element_at(rng.below(q.get_ui())));
    } else {
      // piece together from two draws; exactness of the distribution is
      // irrelevant here, any spread works for splitting attempts
      cs.push_back(F.element_at(rng.next()));
    }
  }
  return upoly_from(F, std::move(cs));
}

// f(x) = g(x)^p with g recovered coefficient-wise: the p-th root of a
// coefficient of F_q, q = p^k, is its q/p-th power.
template <class K>
UPolyOf<K> upoly_pth_root(const K& F, const UPolyOf<K>& f) {
  const std::uint64_t p = F.characteristic();
  const Int cexp = F.size() / Int(static_cast<unsigned long>(p));
  std::vector<typename K::Elem> cs;
  for (std::size_t i = 0; i < f.c.size(); i += p) {
    cs.push_back(F.pow(f.c[i], cexp));
  }
  UPolyOf<K> g{std::move(cs)};
  upoly_trim(F, g);
  return g;
}

// Squarefree decomposition of a monic f: returns pairs (g_i, m_i) with
// f = prod g_i^{m_i}, the g_i squarefree, monic and pairwise coprime.
template <class K>
std::vector<std::pair<UPolyOf<K>, unsigned>> squarefree_decomposition(
    const K& F, const UPolyOf<K>& f, unsigned mult_scale = 1) {
  std::vector<std::pair<UPolyOf<K>, unsigned>> out;
  if (f.degree() <= 0) return out;
  const std::uint64_t p = F.characteristic();
  UPolyOf<K> d = upoly_derivative(F, f);
  if (d.is_zero()) {
    // pure p-th power
    auto root = upoly_pth_root(F, f);
    return squarefree_decomposition(F, root,
                                    mult_scale * static_cast<unsigned>(p));
  }
  UPolyOf<K> c = upoly_gcd(F, f, d);
  UPolyOf<K> w = upoly_div(F, f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    UPolyOf<K> y = upoly_gcd(F, w, c);
    UPolyOf<K> z = upoly_div(F, w, y);
    if (z.degree() > 0) out.emplace_back(upoly_make_monic(F, z), i * mult_scale);
    w = std::move(y);
    c = upoly_div(F, c, w);
    ++i;
  }
  if (c.degree() > 0) {
    // remaining part has all multiplicities divisible by p
    auto root = upoly_pth_root(F, c);
    auto rest = squarefree_decomposition(
        F, root, mult_scale * static_cast<unsigned>(p));
    for (auto& pr : rest) out.push_back(std::move(pr));
  }
  return out;
}

// Distinct-degree: splits a monic squarefree f into products of irreducibles
// of equal degree; returns pairs (product, degree).
template <class K>
std::vector<std::pair<UPolyOf<K>, unsigned>> distinct_degree_split(
    const K& F, UPolyOf<K> f) {
  std::vector<std::pair<UPolyOf<K>, unsigned>> out;
  const Int q = F.size();
  UPolyOf<K> x = upoly_x(F);
  UPolyOf<K> r = upoly_mod(F, x, f);  // will hold x^(q^d) mod f
  unsigned d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > static_cast<unsigned>(f.degree())) {
      out.emplace_back(f, static_cast<unsigned>(f.degree()));
      break;
    }
    r = upoly_powmod(F, r, q, f);
    UPolyOf<K> g = upoly_gcd(F, upoly_sub(F, r, x), f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = upoly_div(F, f, g);
      r = upoly_mod(F, r, f);
    }
  }
  return out;
}

// Equal-degree splitting of a monic squarefree product of irreducibles of
// degree d.
template <class K>
void equal_degree_split(const K& F, const UPolyOf<K>& f, unsigned d, Rng& rng,
                        std::vector<UPolyOf<K>>& out) {
  const int n = f.degree();
  if (n == static_cast<int>(d)) {
    out.push_back(upoly_make_monic(F, f));
    return;
  }
  const Int q = F.size();
  const std::uint64_t p = F.characteristic();
  UPolyOf<K> g;
  while (true) {
    UPolyOf<K> a = random_poly_below(F, n, rng);
    if (a.degree() < 1 && p != 2) {
      // constants never split for odd q; retry
      continue;
    }
    if (p == 2) {
      // trace map over F_2: T(a) = sum a^(2^i), i < log2(q^d)
      unsigned kd = 0;
      Int qq = q;
      while (qq > 1) {
        qq /= 2;
        ++kd;
      }
      kd *= d;
      UPolyOf<K> t = upoly_mod(F, a, f);
      UPolyOf<K> term = t;
      for (unsigned i = 1; i < kd; ++i) {
        term = upoly_mod(F, upoly_mul(F, term, term), f);
        t = upoly_add(F, t, term);
      }
      g = upoly_gcd(F, t, f);
    } else {
      Int e = (int_pow(q, d) - 1) / 2;
      UPolyOf<K> b = upoly_powmod(F, a, e, f);
      g = upoly_gcd(F, upoly_sub(F, b, upoly_const(F, F.one())), f);
    }
    if (g.degree() > 0 && g.degree() < n) break;
  }
  equal_degree_split(F, g, d, rng, out);
  equal_degree_split(F, upoly_div(F, f, g), d, rng, out);
}

// Full factorization: unit * prod h_i^{m_i} = f, each h_i monic irreducible.
template <class K>
UFactorization<K> factor_univariate(const K& F, const UPolyOf<K>& f,
                                    std::uint64_t seed = kDefaultSeed) {
  if (f.is_zero()) throw InputError("factor_univariate: zero polynomial");
  UFactorization<K> res;
  res.unit = upoly_lc(F, f);
  if (f.degree() == 0) return res;
  Rng rng(mix_seed(seed, 0xfac7u, static_cast<std::uint64_t>(f.degree())));
  UPolyOf<K> monic = upoly_make_monic(F, f);
  for (auto& [sf, mult] : squarefree_decomposition(F, monic)) {
    for (auto& [prod, d] : distinct_degree_split(F, sf)) {
      std::vector<UPolyOf<K>> irr;
      equal_degree_split(F, prod, d, rng, irr);
      for (auto& h : irr) res.factors.push_back({std::move(h), mult});
    }
  }
  // deterministic order: by degree, then coefficient indices
  std::sort(res.factors.begin(), res.factors.end(),
            [&](const UFactor<K>& a, const UFactor<K>& b) {
              if (a.h.degree() != b.h.degree())
                return a.h.degree() < b.h.degree();
              for (std::size_t i = a.h.c.size(); i-- > 0;) {
                std::uint64_t ia = F.index_of(a.h.c[i]);
                std::uint64_t ib = F.index_of(b.h.c[i]);
                if (ia != ib) return ia < ib;
              }
              return false;
            });
  return res;
}

template <class K>
bool is_irreducible(const K& F, const UPolyOf<K>& f) {
  // Rabin's test: x^(q^n) = x mod f and gcd(x^(q^(n/l)) - x, f) = 1 for
  // every prime l dividing n.
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const Int q = F.size();
  const unsigned n = static_cast<unsigned>(f.degree());
  UPolyOf<K> x = upoly_x(F);
  std::vector<unsigned> prime_divs;
  {
    unsigned m = n;
    for (unsigned l = 2; l * l <= m; ++l)
      if (m % l == 0) {
        prime_divs.push_back(l);
        while (m % l == 0) m /= l;
      }
    if (m > 1) prime_divs.push_back(m);
  }
  for (unsigned l : prime_divs) {
    UPolyOf<K> r = upoly_powmod(F, x, int_pow(q, n / l), f);
    UPolyOf<K> g = upoly_gcd(F, upoly_sub(F, r, x), f);
    if (g.degree() != 0) return false;
  }
  UPolyOf<K> r = upoly_powmod(F, x, int_pow(q, n), f);
  return upoly_eq(F, r, upoly_mod(F, x, f));
}

// Reassemble unit * prod h^m; used by tests and certificate checking.
template <class K>
UPolyOf<K> factorization_product(const K& F, const UFactorization<K>& fac) {
  UPolyOf<K> acc = upoly_const(F, fac.unit);
  for (const auto& [h, m] : fac.factors)
    for (unsigned i = 0; i < m; ++i) acc = upoly_mul(F, acc, h);
  return acc;
}

}  // namespace abmod
