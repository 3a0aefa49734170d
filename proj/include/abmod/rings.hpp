#pragma once

// Value-semantic ring contexts that compose: wrappers for the shared-pointer
// based fields, finite products R^kappa, and truncated polynomial rings
// R[x]/(x^m), plus the transposition maps identifying
// (R^kappa)[x]/(x^m) with (R[x]/(x^m))^kappa.
//
// A ring context K provides: K::Elem, zero(), one(), from_int(Int),
// add/sub/mul/neg/eq/is_zero, size() -> Int, element_at(uint64),
// index_of(Elem), to_string(Elem).

#include <cstdint>
#include <string>
#include <vector>

#include "abmod/bigint.hpp"
#include "abmod/errors.hpp"
#include "abmod/ext_field.hpp"
#include "abmod/series.hpp"

namespace abmod {

// F_{p^k} as a copyable context.
struct ExtFieldCtx {
  ExtFieldPtr F;
  using Elem = Fq;

  std::uint64_t characteristic() const { return F->p(); }
  Elem zero() const { return F->zero(); }
  Elem one() const { return F->one(); }
  Elem from_int(const Int& v) const { return F->from_int(v); }
  Elem add(const Elem& a, const Elem& b) const { return F->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return F->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return F->mul(a, b); }
  Elem neg(const Elem& a) const { return F->neg(a); }
  Elem inv(const Elem& a) const { return F->inv(a); }
  Elem pow(const Elem& a, const Int& e) const { return F->pow(a, e); }
  bool eq(const Elem& a, const Elem& b) const { return F->eq(a, b); }
  bool is_zero(const Elem& a) const { return F->is_zero(a); }
  Int size() const { return F->size(); }
  Elem element_at(std::uint64_t i) const { return F->element_at(i); }
  std::uint64_t index_of(const Elem& a) const { return F->index_of(a); }
  std::string to_string(const Elem& a) const { return F->to_string(a); }
};

// Truncated ramified series ring as a copyable context.
struct SeriesRingCtx {
  SeriesCtxPtr S;
  using Elem = TruncSeries;

  Elem zero() const { return S->zero(); }
  Elem one() const { return S->one(); }
  Elem from_int(const Int& v) const { return S->from_int(v); }
  Elem add(const Elem& a, const Elem& b) const { return S->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return S->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return S->mul(a, b); }
  Elem neg(const Elem& a) const { return S->neg(a); }
  bool eq(const Elem& a, const Elem& b) const { return S->eq(a, b); }
  bool is_zero(const Elem& a) const { return S->is_zero(a); }
  Int size() const { return S->size(); }
  Elem element_at(std::uint64_t i) const { return S->element_at(i); }
  std::uint64_t index_of(const Elem& a) const { return S->index_of(a); }
  std::string to_string(const Elem& a) const { return S->to_string(a); }
};

// R^kappa with componentwise operations.
template <class R>
struct ProductRing {
  R base;
  std::size_t kappa = 1;
  using Elem = std::vector<typename R::Elem>;

  void check(const Elem& a) const {
    if (a.size() != kappa) throw InternalError("product arity mismatch");
  }

  Elem zero() const { return Elem(kappa, base.zero()); }
  Elem one() const { return Elem(kappa, base.one()); }
  Elem from_int(const Int& v) const { return Elem(kappa, base.from_int(v)); }

  Elem add(const Elem& a, const Elem& b) const {
    check(a); check(b);
    Elem r = a;
    for (std::size_t i = 0; i < kappa; ++i) r[i] = base.add(r[i], b[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    check(a); check(b);
    Elem r = a;
    for (std::size_t i = 0; i < kappa; ++i) r[i] = base.sub(r[i], b[i]);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    check(a); check(b);
    Elem r = a;
    for (std::size_t i = 0; i < kappa; ++i) r[i] = base.mul(r[i], b[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    check(a);
    Elem r = a;
    for (auto& x : r) x = base.neg(x);
    return r;
  }
  bool eq(const Elem& a, const Elem& b) const {
    check(a); check(b);
    for (std::size_t i = 0; i < kappa; ++i)
      if (!base.eq(a[i], b[i])) return false;
    return true;
  }
  bool is_zero(const Elem& a) const {
    check(a);
    for (const auto& x : a)
      if (!base.is_zero(x)) return false;
    return true;
  }

  Int size() const { return int_pow_rec(base.size(), kappa); }
  Elem element_at(std::uint64_t i) const {
    Elem r = zero();
    Int bs = base.size();
    if (!bs.fits_ulong_p())
      throw ResourceError("component too large for enumeration");
    std::uint64_t b = bs.get_ui();
    for (std::size_t s = 0; s < kappa && i > 0; ++s) {
      r[s] = base.element_at(i % b);
      i /= b;
    }
    return r;
  }
  std::uint64_t index_of(const Elem& a) const {
    check(a);
    Int bs = base.size();
    std::uint64_t b = bs.fits_ulong_p() ? bs.get_ui() : 0;
    unsigned __int128 acc = 0, scale = 1;
    for (std::size_t s = 0; s < kappa; ++s) {
      acc += scale * base.index_of(a[s]);
      scale *= b;
    }
    const unsigned __int128 cap = ~std::uint64_t{0};
    return acc > cap ? ~std::uint64_t{0} : static_cast<std::uint64_t>(acc);
  }
  std::string to_string(const Elem& a) const {
    std::string out = "(";
    for (std::size_t i = 0; i < kappa; ++i) {
      if (i) out += ", ";
      out += base.to_string(a[i]);
    }
    return out + ")";
  }

 private:
  static Int int_pow_rec(const Int& b, std::size_t n) {
    Int r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= b;
    return r;
  }
};

// R[x]/(x^m): truncation of polynomial multiplication at degree m.
template <class R>
struct TruncPolyRing {
  R base;
  std::size_t m = 1;
  using Elem = std::vector<typename R::Elem>;  // length m, slot i = coeff x^i

  void check(const Elem& a) const {
    if (a.size() != m) throw InternalError("trunc-poly length mismatch");
  }

  Elem zero() const { return Elem(m, base.zero()); }
  Elem one() const {
    Elem r = zero();
    r[0] = base.one();
    return r;
  }
  Elem from_int(const Int& v) const {
    Elem r = zero();
    r[0] = base.from_int(v);
    return r;
  }
  Elem add(const Elem& a, const Elem& b) const {
    check(a); check(b);
    Elem r = a;
    for (std::size_t i = 0; i < m; ++i) r[i] = base.add(r[i], b[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    check(a); check(b);
    Elem r = a;
    for (std::size_t i = 0; i < m; ++i) r[i] = base.sub(r[i], b[i]);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    check(a); check(b);
    Elem r = zero();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; i + j < m; ++j)
        r[i + j] = base.add(r[i + j], base.mul(a[i], b[j]));
    return r;
  }
  Elem neg(const Elem& a) const {
    check(a);
    Elem r = a;
    for (auto& x : r) x = base.neg(x);
    return r;
  }
  bool eq(const Elem& a, const Elem& b) const {
    check(a); check(b);
    for (std::size_t i = 0; i < m; ++i)
      if (!base.eq(a[i], b[i])) return false;
    return true;
  }
  bool is_zero(const Elem& a) const {
    check(a);
    for (const auto& x : a)
      if (!base.is_zero(x)) return false;
    return true;
  }
  Int size() const {
    Int r = 1;
    for (std::size_t i = 0; i < m; ++i) r *= base.size();
    return r;
  }
  Elem element_at(std::uint64_t i) const {
    Elem r = zero();
    Int bs = base.size();
    if (!bs.fits_ulong_p())
      throw ResourceError("component too large for enumeration");
    std::uint64_t b = bs.get_ui();
    for (std::size_t s = 0; s < m && i > 0; ++s) {
      r[s] = base.element_at(i % b);
      i /= b;
    }
    return r;
  }
  std::uint64_t index_of(const Elem& a) const {
    check(a);
    Int bs = base.size();
    std::uint64_t b = bs.fits_ulong_p() ? bs.get_ui() : 0;
    unsigned __int128 acc = 0, scale = 1;
    for (std::size_t s = 0; s < m; ++s) {
      acc += scale * base.index_of(a[s]);
      scale *= b;
    }
    const unsigned __int128 cap = ~std::uint64_t{0};
    return acc > cap ? ~std::uint64_t{0} : static_cast<std::uint64_t>(acc);
  }
  std::string to_string(const Elem& a) const {
    std::string out;
    for (std::size_t i = 0; i < m; ++i) {
      if (base.is_zero(a[i])) continue;
      if (!out.empty()) out += " + ";
      out += base.to_string(a[i]);
      if (i >= 1) out += "*x" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out.empty() ? "0" : out;
  }
};

// The mutually inverse ring homomorphisms between (R^kappa)[x]/(x^m) and
// (R[x]/(x^m))^kappa: both directions are transpositions of the coefficient
// grid.
template <class R>
typename ProductRing<TruncPolyRing<R>>::Elem power_quotient_split(
    const TruncPolyRing<ProductRing<R>>& L,
    const typename TruncPolyRing<ProductRing<R>>::Elem& a) {
  const std::size_t m = L.m;
  const std::size_t kappa = L.base.kappa;
  typename ProductRing<TruncPolyRing<R>>::Elem out(
      kappa, std::vector<typename R::Elem>(m, L.base.base.zero()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < kappa; ++j) out[j][i] = a[i][j];
  return out;
}

template <class R>
typename TruncPolyRing<ProductRing<R>>::Elem power_quotient_join(
    const TruncPolyRing<ProductRing<R>>& L,
    const typename ProductRing<TruncPolyRing<R>>::Elem& a) {
  const std::size_t m = L.m;
  const std::size_t kappa = L.base.kappa;
  typename TruncPolyRing<ProductRing<R>>::Elem out(
      m, std::vector<typename R::Elem>(kappa, L.base.base.zero()));
  for (std::size_t j = 0; j < kappa; ++j)
    for (std::size_t i = 0; i < m; ++i) out[i][j] = a[j][i];
  return out;
}

}  // namespace abmod
