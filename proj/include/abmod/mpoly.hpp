#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abmod/bigint.hpp"
#include "abmod/errors.hpp"
#include "abmod/upoly.hpp"

namespace abmod {

// Exponent vector; one entry per registered variable.
using Exp = std::vector<std::uint32_t>;

inline std::uint32_t exp_total(const Exp& e) {
  std::uint32_t t = 0;
  for (auto x : e) t += x;
  return t;
}

// Graded lexicographic: total degree first, then lex with variable 0 most
// significant.
struct GradedLexLess {
  bool operator()(const Exp& a, const Exp& b) const {
    std::uint32_t ta = exp_total(a), tb = exp_total(b);
    if (ta != tb) return ta < tb;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return a.size() > b.size();
  }
};

template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);  // ADL picks the overload next to C
}

// Sparse multivariate polynomial in canonical form: no zero coefficients
// are stored, and terms live in graded-lex order. The zero polynomial is
// the empty term map.
template <class C>
class MPoly {
 public:
  using TermMap = std::map<Exp, C, GradedLexLess>;

  explicit MPoly(unsigned nvars = 0) : nvars_(nvars) {}

  unsigned nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  static MPoly constant(unsigned nvars, C v) {
    MPoly f(nvars);
    if (!coeff_is_zero(v)) f.terms_.emplace(Exp(nvars, 0), std::move(v));
    return f;
  }

  static MPoly variable(unsigned nvars, unsigned idx, C unit) {
    if (idx >= nvars) throw InternalError("variable index out of range");
    MPoly f(nvars);
    Exp e(nvars, 0);
    e[idx] = 1;
    f.terms_.emplace(std::move(e), std::move(unit));
    return f;
  }

  void add_term(Exp e, C coeff) {
    if (e.size() != nvars_) throw InternalError("exponent arity mismatch");
    if (coeff_is_zero(coeff)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), std::move(coeff));
    } else {
      it->second = it->second + coeff;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_total(e));
    return d;
  }

  std::uint32_t degree_in(unsigned var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  std::vector<unsigned> support_vars() const {
    std::vector<bool> used(nvars_, false);
    for (const auto& [e, c] : terms_)
      for (unsigned i = 0; i < nvars_; ++i)
        if (e[i] > 0) used[i] = true;
    std::vector<unsigned> out;
    for (unsigned i = 0; i < nvars_; ++i)
      if (used[i]) out.push_back(i);
    return out;
  }

  // Leading (greatest) term under graded lex.
  const std::pair<const Exp, C>& leading() const {
    if (terms_.empty()) throw InternalError("leading term of 0");
    return *terms_.rbegin();
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    check_arity(a, b);
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend MPoly operator-(const MPoly& a) {
    MPoly r(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    check_arity(a, b);
    MPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exp e(a.nvars_);
        for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
      return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return false;
      if (!(ia->second == ib->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly scaled(const C& s) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }

  MPoly pow(unsigned n, C unit) const {
    MPoly acc = constant(nvars_, std::move(unit));
    for (unsigned i = 0; i < n; ++i) acc = acc * (*this);
    return acc;
  }

  // Rename variables: new_index[i] is the position of old variable i.
  MPoly reindexed(const std::vector<unsigned>& new_index,
                  unsigned new_nvars) const {
    if (new_index.size() != nvars_)
      throw InternalError("reindex table arity mismatch");
    MPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
      Exp ne(new_nvars, 0);
      for (unsigned i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (new_index[i] >= new_nvars)
          throw InternalError("reindex target out of range");
        ne[new_index[i]] += e[i];
      }
      r.add_term(std::move(ne), c);
    }
    return r;
  }

  template <class D, class Fn>
  MPoly<D> map_coeffs(Fn&& fn) const {
    MPoly<D> r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

 private:
  static void check_arity(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_)
      throw InternalError("polynomial arity mismatch");
  }

  unsigned nvars_;
  TermMap terms_;
};

using ZPoly = MPoly<Int>;

// Evaluate a polynomial with integer coefficients in any ring, embedding
// the coefficients through the characteristic map.
template <class Ring>
typename Ring::Elem eval_zpoly(const Ring& R, const ZPoly& f,
                               const std::vector<typename Ring::Elem>& point) {
  if (point.size() < f.nvars())
    throw InternalError("evaluation point arity mismatch");
  typename Ring::Elem acc = R.zero();
  for (const auto& [e, c] : f.terms()) {
    typename Ring::Elem term = R.from_int(c);
    for (unsigned i = 0; i < f.nvars(); ++i) {
      for (std::uint32_t j = 0; j < e[i]; ++j) term = R.mul(term, point[i]);
    }
    acc = R.add(acc, term);
  }
  return acc;
}

// ZPoly specific helpers.
ZPoly zpoly_from_upoly(const UPoly<Int>& f, unsigned nvars, unsigned var);
std::optional<UPoly<Int>> zpoly_to_upoly(const ZPoly& f, unsigned var);
Int zpoly_content(const ZPoly& f);  // gcd of coefficients, 0 for the 0 poly

// Reduce coefficients mod p into a dense univariate (for separated inputs).
template <class K>
UPolyOf<K> upoly_reduce_zpoly(const K& F, const ZPoly& f, unsigned var) {
  auto u = zpoly_to_upoly(f, var);
  if (!u) throw InternalError("polynomial is not univariate in chosen var");
  std::vector<typename K::Elem> cs;
  cs.reserve(u->c.size());
  for (const auto& c : u->c) cs.push_back(F.from_int(c));
  return upoly_from(F, std::move(cs));
}

std::string zpoly_to_string(const ZPoly& f,
                            const std::vector<std::string>& names);

}  // namespace abmod
