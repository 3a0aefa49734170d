#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "abmod/prime_field.hpp"
#include "abmod/rng.hpp"
#include "abmod/upoly.hpp"

namespace abmod {

class ExtField;
using ExtFieldPtr = std::shared_ptr<const ExtField>;

// Element of F_{p^k}, represented by its coefficient vector modulo the
// context's irreducible polynomial. c.size() == k always.
struct Fq {
  ExtFieldPtr F;
  std::vector<std::uint64_t> c;
};

// F_{p^k} = F_p[w]/(h) for a monic irreducible h of degree k.  For k = 1 the
// modulus is h = x and elements are plain residues.  Contexts are immutable
// and shareable across threads; elements from structurally different
// contexts never mix (hard error).
class ExtField : public std::enable_shared_from_this<ExtField> {
 public:
  using Elem = Fq;

  // Randomized search for an irreducible modulus; deterministic per
  // (p, k, seed). Results are cached process-wide.
  static ExtFieldPtr make(std::uint64_t p, unsigned k,
                          std::uint64_t seed = kDefaultSeed);

  // Wrap a caller-supplied monic irreducible modulus (degree = k).
  static ExtFieldPtr with_modulus(std::uint64_t p, UPoly<Fp> h);

  std::uint64_t p() const { return base_.p(); }
  unsigned k() const { return k_; }
  std::uint64_t characteristic() const { return base_.p(); }
  const PrimeField& base() const { return base_; }
  const UPoly<Fp>& modulus() const { return modulus_; }

  Int size() const;

  Fq zero() const;
  Fq one() const;
  Fq gen() const;  // the class of x; zero when k == 1
  Fq from_int(const Int& v) const;
  Fq from_base(const Fp& v) const;
  Fq from_coeffs(std::vector<std::uint64_t> coeffs) const;

  Fq add(const Fq& a, const Fq& b) const;
  Fq sub(const Fq& a, const Fq& b) const;
  Fq mul(const Fq& a, const Fq& b) const;
  Fq neg(const Fq& a) const;
  Fq inv(const Fq& a) const;
  Fq pow(const Fq& a, const Int& e) const;
  Fq frobenius(const Fq& a) const;  // a^p
  bool eq(const Fq& a, const Fq& b) const;
  bool is_zero(const Fq& a) const;

  Fq element_at(std::uint64_t i) const;  // base-p digits as coefficients
  std::uint64_t index_of(const Fq& a) const;

  std::string to_string(const Fq& a) const;

  bool same_structure(const ExtField& o) const;

 private:
  ExtField(std::uint64_t p, unsigned k, UPoly<Fp> h);

  void check(const Fq& a) const;
  void check2(const Fq& a, const Fq& b) const;

  PrimeField base_;
  unsigned k_;
  UPoly<Fp> modulus_;
};

inline bool is_zero(const Fq& a) {
  for (auto v : a.c)
    if (v != 0) return false;
  return true;
}

Fq operator+(const Fq& a, const Fq& b);
Fq operator-(const Fq& a, const Fq& b);
Fq operator-(const Fq& a);
Fq operator*(const Fq& a, const Fq& b);
Fq operator/(const Fq& a, const Fq& b);
bool operator==(const Fq& a, const Fq& b);
inline bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }
inline Fq& operator+=(Fq& a, const Fq& b) { return a = a + b; }
inline Fq& operator-=(Fq& a, const Fq& b) { return a = a - b; }
inline Fq& operator*=(Fq& a, const Fq& b) { return a = a * b; }

}  // namespace abmod
