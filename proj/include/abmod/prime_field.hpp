#pragma once

#include <cstdint>
#include <string>

#include "abmod/bigint.hpp"
#include "abmod/errors.hpp"

namespace abmod {

// Element of F_p. Carries its modulus so values from different primes can
// never be combined silently.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;  // 0 marks a default-constructed element
};

namespace detail {
inline void check_same_prime(const Fp& a, const Fp& b) {
  if (a.p != b.p) throw InputError("mixed prime-field moduli");
}
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}
}  // namespace detail

inline bool is_zero(const Fp& a) { return a.v == 0; }

inline bool operator==(const Fp& a, const Fp& b) {
  detail::check_same_prime(a, b);
  return a.v == b.v;
}
inline bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

inline Fp operator+(const Fp& a, const Fp& b) {
  detail::check_same_prime(a, b);
  std::uint64_t s = a.v + b.v;
  if (s >= a.p) s -= a.p;
  return {s, a.p};
}
inline Fp operator-(const Fp& a, const Fp& b) {
  detail::check_same_prime(a, b);
  std::uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
  return {s, a.p};
}
inline Fp operator-(const Fp& a) {
  return {a.v == 0 ? 0 : a.p - a.v, a.p};
}
inline Fp operator*(const Fp& a, const Fp& b) {
  detail::check_same_prime(a, b);
  return {detail::mulmod_u64(a.v, b.v, a.p), a.p};
}
inline Fp& operator+=(Fp& a, const Fp& b) { return a = a + b; }
inline Fp& operator-=(Fp& a, const Fp& b) { return a = a - b; }
inline Fp& operator*=(Fp& a, const Fp& b) { return a = a * b; }

Fp inv(const Fp& a);
Fp pow(const Fp& a, const Int& e);
inline Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }

// Context for F_p. Primality is checked once at construction.
class PrimeField {
 public:
  using Elem = Fp;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  Fp zero() const { return {0, p_}; }
  Fp one() const { return {1 % p_, p_}; }
  Fp from_uint(std::uint64_t v) const { return {v % p_, p_}; }
  Fp from_int(const Int& v) const;

  Fp add(const Fp& a, const Fp& b) const { return a + b; }
  Fp inv(const Fp& a) const;
  Fp pow(const Fp& a, const Int& e) const;
  Fp sub(const Fp& a, const Fp& b) const { return a - b; }
  Fp mul(const Fp& a, const Fp& b) const { return a * b; }
  Fp neg(const Fp& a) const { return -a; }
  bool eq(const Fp& a, const Fp& b) const { return a == b; }
  bool is_zero(const Fp& a) const { return a.v == 0; }

  Int size() const { return Int(static_cast<unsigned long>(p_)); }
  Fp element_at(std::uint64_t i) const { return {i % p_, p_}; }
  std::uint64_t index_of(const Fp& a) const { return a.v; }

  std::string to_string(const Fp& a) const { return std::to_string(a.v); }

 private:
  std::uint64_t p_;
};

}  // namespace abmod
