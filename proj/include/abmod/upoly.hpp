#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "abmod/bigint.hpp"
#include "abmod/errors.hpp"

namespace abmod {

// Coefficient contexts for Q and Z, so univariate machinery can run over
// exact rationals/integers with the same code paths as finite fields.
struct RatField {
  using Elem = Rat;
  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat from_int(const Int& v) const { return Rat(v); }
  Rat add(const Rat& a, const Rat& b) const { return a + b; }
  Rat sub(const Rat& a, const Rat& b) const { return a - b; }
  Rat mul(const Rat& a, const Rat& b) const { return a * b; }
  Rat neg(const Rat& a) const { return -a; }
  bool eq(const Rat& a, const Rat& b) const { return a == b; }
  bool is_zero(const Rat& a) const { return sgn(a) == 0; }
  Rat inv(const Rat& a) const {
    if (sgn(a) == 0) throw InputError("division by zero in Q");
    return Rat(1) / a;
  }
  std::string to_string(const Rat& a) const { return rat_string(a); }
};

struct IntRing {
  using Elem = Int;
  Int zero() const { return Int(0); }
  Int one() const { return Int(1); }
  Int from_int(const Int& v) const { return v; }
  Int add(const Int& a, const Int& b) const { return a + b; }
  Int sub(const Int& a, const Int& b) const { return a - b; }
  Int mul(const Int& a, const Int& b) const { return a * b; }
  Int neg(const Int& a) const { return -a; }
  bool eq(const Int& a, const Int& b) const { return a == b; }
  bool is_zero(const Int& a) const { return sgn(a) == 0; }
  std::string to_string(const Int& a) const { return a.get_str(); }
};

// Dense univariate polynomial; c[i] is the coefficient of x^i.
// Invariant: no trailing zero coefficients (the zero polynomial is empty).
template <class E>
struct UPoly {
  std::vector<E> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
};

template <class K>
using UPolyOf = UPoly<typename K::Elem>;

template <class K>
void upoly_trim(const K& ctx, UPoly<typename K::Elem>& f) {
  while (!f.c.empty() && ctx.is_zero(f.c.back())) f.c.pop_back();
}

template <class K>
UPolyOf<K> upoly_from(const K& ctx, std::vector<typename K::Elem> coeffs) {
  UPolyOf<K> f{std::move(coeffs)};
  upoly_trim(ctx, f);
  return f;
}

template <class K>
UPolyOf<K> upoly_zero(const K&) {
  return {};
}

template <class K>
UPolyOf<K> upoly_const(const K& ctx, typename K::Elem v) {
  UPolyOf<K> f;
  if (!ctx.is_zero(v)) f.c.push_back(std::move(v));
  return f;
}

template <class K>
UPolyOf<K> upoly_x(const K& ctx) {
  return {{ctx.zero(), ctx.one()}};
}

// x^n with given leading coefficient.
template <class K>
UPolyOf<K> upoly_monomial(const K& ctx, typename K::Elem lc, std::size_t n) {
  UPolyOf<K> f;
  if (ctx.is_zero(lc)) return f;
  f.c.assign(n + 1, ctx.zero());
  f.c[n] = std::move(lc);
  return f;
}

template <class K>
typename K::Elem upoly_lc(const K& ctx, const UPolyOf<K>& f) {
  if (f.is_zero()) throw InternalError("leading coefficient of 0");
  (void)ctx;
  return f.c.back();
}

template <class K>
bool upoly_eq(const K& ctx, const UPolyOf<K>& a, const UPolyOf<K>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (!ctx.eq(a.c[i], b.c[i])) return false;
  return true;
}

template <class K>
UPolyOf<K> upoly_add(const K& ctx, const UPolyOf<K>& a, const UPolyOf<K>& b) {
  UPolyOf<K> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), ctx.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = ctx.add(r.c[i], b.c[i]);
  upoly_trim(ctx, r);
  return r;
}

template <class K>
UPolyOf<K> upoly_neg(const K& ctx, const UPolyOf<K>& a) {
  UPolyOf<K> r = a;
  for (auto& x : r.c) x = ctx.neg(x);
  return r;
}

template <class K>
UPolyOf<K> upoly_sub(const K& ctx, const UPolyOf<K>& a, const UPolyOf<K>& b) {
  return upoly_add(ctx, a, upoly_neg(ctx, b));
}

template <class K>
UPolyOf<K> upoly_mul(const K& ctx, const UPolyOf<K>& a, const UPolyOf<K>& b) {
  UPolyOf<K> r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, ctx.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (ctx.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = ctx.add(r.c[i + j], ctx.mul(a.c[i], b.c[j]));
  }
  upoly_trim(ctx, r);
  return r;
}

template <class K>
UPolyOf<K> upoly_scale(const K& ctx, const UPolyOf<K>& a,
                       const typename K::Elem& s) {
  UPolyOf<K> r = a;
  for (auto& x : r.c) x = ctx.mul(x, s);
  upoly_trim(ctx, r);
  return r;
}

// Division with remainder over a field.
template <class K>
std::pair<UPolyOf<K>, UPolyOf<K>> upoly_divmod(const K& ctx,
                                               const UPolyOf<K>& a,
                                               const UPolyOf<K>& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  UPolyOf<K> r = a;
  UPolyOf<K> q;
  const int db = b.degree();
  if (a.degree() < db) return {q, r};
  q.c.assign(a.degree() - db + 1, ctx.zero());
  const typename K::Elem lb_inv = ctx.inv(b.c.back());
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    typename K::Elem coef = ctx.mul(r.c.back(), lb_inv);
    q.c[shift] = coef;
    for (int i = 0; i <= db; ++i) {
      r.c[shift + i] = ctx.sub(r.c[shift + i], ctx.mul(coef, b.c[i]));
    }
    upoly_trim(ctx, r);
  }
  upoly_trim(ctx, q);
  return {q, r};
}

template <class K>
UPolyOf<K> upoly_mod(const K& ctx, const UPolyOf<K>& a, const UPolyOf<K>& b) {
  return upoly_divmod(ctx, a, b).second;
}

template <class K>
UPolyOf<K> upoly_div(const K& ctx, const UPolyOf<K>& a, const UPolyOf<K>& b) {
  auto [q, r] = upoly_divmod(ctx, a, b);
  if (!r.is_zero()) throw InternalError("upoly_div: inexact division");
  return q;
}

template <class K>
UPolyOf<K> upoly_make_monic(const K& ctx, const UPolyOf<K>& f) {
  if (f.is_zero()) return f;
  return upoly_scale(ctx, f, ctx.inv(f.c.back()));
}

template <class K>
UPolyOf<K> upoly_gcd(const K& ctx, UPolyOf<K> a, UPolyOf<K> b) {
  while (!b.is_zero()) {
    UPolyOf<K> r = upoly_mod(ctx, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return upoly_make_monic(ctx, a);
}

// Extended gcd: returns (d, u, v) with u*a + v*b = d, d monic.
template <class K>
struct UPolyExtGcd {
  UPolyOf<K> d, u, v;
};

template <class K>
UPolyExtGcd<K> upoly_ext_gcd(const K& ctx, const UPolyOf<K>& a,
                             const UPolyOf<K>& b) {
  UPolyOf<K> r0 = a, r1 = b;
  UPolyOf<K> u0 = upoly_const(ctx, ctx.one()), u1 = upoly_zero(ctx);
  UPolyOf<K> v0 = upoly_zero(ctx), v1 = upoly_const(ctx, ctx.one());
  while (!r1.is_zero()) {
    auto [q, r2] = upoly_divmod(ctx, r0, r1);
    UPolyOf<K> u2 = upoly_sub(ctx, u0, upoly_mul(ctx, q, u1));
    UPolyOf<K> v2 = upoly_sub(ctx, v0, upoly_mul(ctx, q, v1));
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (!r0.is_zero()) {
    auto s = ctx.inv(r0.c.back());
    r0 = upoly_scale(ctx, r0, s);
    u0 = upoly_scale(ctx, u0, s);
    v0 = upoly_scale(ctx, v0, s);
  }
  return {r0, u0, v0};
}

template <class K>
UPolyOf<K> upoly_derivative(const K& ctx, const UPolyOf<K>& f) {
  UPolyOf<K> r;
  if (f.c.size() <= 1) return r;
  r.c.resize(f.c.size() - 1, ctx.zero());
  for (std::size_t i = 1; i < f.c.size(); ++i)
    r.c[i - 1] = ctx.mul(f.c[i], ctx.from_int(Int(static_cast<unsigned long>(i))));
  upoly_trim(ctx, r);
  return r;
}

template <class K>
typename K::Elem upoly_eval(const K& ctx, const UPolyOf<K>& f,
                            const typename K::Elem& x) {
  typename K::Elem acc = ctx.zero();
  for (std::size_t i = f.c.size(); i-- > 0;)
    acc = ctx.add(ctx.mul(acc, x), f.c[i]);
  return acc;
}

// base^e mod m over a field context, square-and-multiply on the bits of e.
template <class K>
UPolyOf<K> upoly_powmod(const K& ctx, UPolyOf<K> base, const Int& e,
                        const UPolyOf<K>& m) {
  if (sgn(e) < 0) throw InternalError("upoly_powmod: negative exponent");
  UPolyOf<K> acc = upoly_const(ctx, ctx.one());
  acc = upoly_mod(ctx, acc, m);
  base = upoly_mod(ctx, base, m);
  const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return acc;
  for (mp_bitcnt_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i))
      acc = upoly_mod(ctx, upoly_mul(ctx, acc, base), m);
    if (i + 1 < bits) base = upoly_mod(ctx, upoly_mul(ctx, base, base), m);
  }
  return acc;
}

// Multiplicity of divisor d in f; caller guarantees d nonconstant, f != 0.
template <class K>
unsigned upoly_multiplicity(const K& ctx, UPolyOf<K> f, const UPolyOf<K>& d) {
  unsigned m = 0;
  while (true) {
    auto [q, r] = upoly_divmod(ctx, f, d);
    if (!r.is_zero()) return m;
    ++m;
    f = std::move(q);
    if (f.is_zero()) throw InternalError("upoly_multiplicity: zero quotient");
  }
}

template <class K>
std::string upoly_to_string(const K& ctx, const UPolyOf<K>& f,
                            const std::string& var = "x") {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.c.size(); i-- > 0;) {
    if (ctx.is_zero(f.c[i])) continue;
    if (!out.empty()) out += " + ";
    std::string cs = ctx.to_string(f.c[i]);
    if (i == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace abmod
