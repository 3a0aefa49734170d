#pragma once

// Quotient ring F[x]/(f) over a field context, with a Chinese-remainder
// decomposition along a pairwise-coprime factorization of f. Elements are
// reduced dense polynomials of degree < deg f.

#include <cstdint>
#include <string>
#include <vector>

#include "abmod/errors.hpp"
#include "abmod/upoly.hpp"

namespace abmod {

template <class F>
class QuotRing {
 public:
  using CoeffElem = typename F::Elem;
  using Elem = UPoly<CoeffElem>;

  QuotRing(F field, Elem modulus) : field_(std::move(field)), mod_(std::move(modulus)) {
    if (mod_.degree() < 1)
      throw InputError("quotient modulus must be nonconstant");
    if (!field_.eq(mod_.c.back(), field_.one()))
      throw InputError("quotient modulus must be monic");
  }

  const F& field() const { return field_; }
  const Elem& modulus() const { return mod_; }
  unsigned degree() const { return static_cast<unsigned>(mod_.degree()); }

  Elem reduce(const Elem& a) const { return upoly_mod(field_, a, mod_); }

  Elem zero() const { return upoly_zero(field_); }
  Elem one() const { return upoly_const(field_, field_.one()); }
  Elem x() const { return reduce(upoly_x(field_)); }
  Elem from_int(const Int& v) const {
    return upoly_const(field_, field_.from_int(v));
  }

  Elem add(const Elem& a, const Elem& b) const { return upoly_add(field_, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return upoly_sub(field_, a, b); }
  Elem mul(const Elem& a, const Elem& b) const {
    return reduce(upoly_mul(field_, a, b));
  }
  Elem neg(const Elem& a) const { return upoly_neg(field_, a); }
  bool eq(const Elem& a, const Elem& b) const { return upoly_eq(field_, a, b); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }

  Int size() const {
    Int r = 1;
    for (unsigned i = 0; i < degree(); ++i) r *= field_.size();
    return r;
  }

  Elem element_at(std::uint64_t i) const {
    Int fs = field_.size();
    if (!fs.fits_ulong_p())
      throw ResourceError("coefficient field too large for enumeration");
    std::uint64_t b = fs.get_ui();
    std::vector<CoeffElem> cs;
    for (unsigned s = 0; s < degree(); ++s) {
      cs.push_back(field_.element_at(i % b));
      i /= b;
    }
    return upoly_from(field_, std::move(cs));
  }

  std::uint64_t index_of(const Elem& a) const {
    Int fs = field_.size();
    std::uint64_t b = fs.fits_ulong_p() ? fs.get_ui() : 0;
    unsigned __int128 acc = 0, scale = 1;
    for (unsigned s = 0; s < degree(); ++s) {
      CoeffElem c = s < a.c.size() ? a.c[s] : field_.zero();
      acc += scale * field_.index_of(c);
      scale *= b;
    }
    const unsigned __int128 cap = ~std::uint64_t{0};
    return acc > cap ? ~std::uint64_t{0} : static_cast<std::uint64_t>(acc);
  }

  std::string to_string(const Elem& a) const {
    return upoly_to_string(field_, a);
  }

 private:
  F field_;
  Elem mod_;
};

// Precomputed CRT data for F[x]/(prod comps) with pairwise coprime comps.
template <class F>
struct CrtDecomposition {
  std::vector<UPolyOf<F>> comps;        // the pairwise coprime moduli
  std::vector<UPolyOf<F>> idempotents;  // e_i = 1 mod comps[i], 0 elsewhere
  UPolyOf<F> modulus;                   // product of comps
};

template <class F>
CrtDecomposition<F> crt_prepare(const F& field,
                                const std::vector<UPolyOf<F>>& comps) {
  if (comps.empty()) throw InputError("CRT needs at least one component");
  CrtDecomposition<F> d;
  d.comps = comps;
  d.modulus = upoly_const(field, field.one());
  for (const auto& c : comps) {
    if (c.degree() < 1) throw InputError("CRT component must be nonconstant");
    d.modulus = upoly_mul(field, d.modulus, c);
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      auto g = upoly_gcd(field, comps[i], comps[j]);
      if (g.degree() != 0)
        throw InputError("CRT components are not pairwise coprime");
    }
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    UPolyOf<F> rest = upoly_div(field, d.modulus, comps[i]);
    // u * rest = 1 mod comps[i]
    auto g = upoly_ext_gcd(field, rest, comps[i]);
    if (g.d.degree() != 0)
      throw InternalError("CRT: cofactor not invertible");
    UPolyOf<F> idem =
        upoly_mod(field, upoly_mul(field, g.u, rest), d.modulus);
    d.idempotents.push_back(std::move(idem));
  }
  return d;
}

// Ring homomorphism F[x]/(prod) -> prod F[x]/(comps[i]).
template <class F>
std::vector<UPolyOf<F>> crt_split(const F& field, const CrtDecomposition<F>& d,
                                  const UPolyOf<F>& a) {
  std::vector<UPolyOf<F>> out;
  out.reserve(d.comps.size());
  for (const auto& c : d.comps) out.push_back(upoly_mod(field, a, c));
  return out;
}

// Inverse homomorphism via the precomputed idempotents.
template <class F>
UPolyOf<F> crt_join(const F& field, const CrtDecomposition<F>& d,
                    const std::vector<UPolyOf<F>>& parts) {
  if (parts.size() != d.comps.size())
    throw InputError("CRT join: wrong number of parts");
  UPolyOf<F> acc = upoly_zero(field);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    acc = upoly_add(field, acc,
                    upoly_mul(field, parts[i], d.idempotents[i]));
  }
  return upoly_mod(field, acc, d.modulus);
}

}  // namespace abmod
