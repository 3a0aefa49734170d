#include "abmod/prime_field.hpp"

namespace abmod {

Fp inv(const Fp& a) {
  if (a.v == 0) throw InputError("division by zero in F_p");
  // extended Euclid on (v, p)
  std::int64_t t = 0, newt = 1;
  std::uint64_t r = a.p, newr = a.v;
  while (newr != 0) {
    std::uint64_t q = r / newr;
    std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * newt;
    t = newt;
    newt = tmp_t;
    std::uint64_t tmp_r = r - q * newr;
    r = newr;
    newr = tmp_r;
  }
  if (r != 1) throw InternalError("F_p inverse: modulus not prime?");
  std::int64_t res = t % static_cast<std::int64_t>(a.p);
  if (res < 0) res += static_cast<std::int64_t>(a.p);
  return {static_cast<std::uint64_t>(res), a.p};
}

Fp pow(const Fp& a, const Int& e) {
  if (sgn(e) < 0) return pow(inv(a), -e);
  Fp base = a;
  Fp acc{1 % a.p, a.p};
  const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return acc;
  for (mp_bitcnt_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) acc *= base;
    if (i + 1 < bits) base *= base;
  }
  return acc;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p_ >= (std::uint64_t{1} << 62))
    throw ResourceError("prime modulus exceeds 2^62");
  if (!is_prime_u64(p_)) throw InputError("modulus is not prime: " + std::to_string(p_));
}

Fp PrimeField::inv(const Fp& a) const { return abmod::inv(a); }

Fp PrimeField::pow(const Fp& a, const Int& e) const { return abmod::pow(a, e); }

Fp PrimeField::from_int(const Int& v) const {
  Int m = v % Int(static_cast<unsigned long>(p_));
  if (sgn(m) < 0) m += Int(static_cast<unsigned long>(p_));
  return {m.get_ui(), p_};
}

}  // namespace abmod
