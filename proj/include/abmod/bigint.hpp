#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace abmod {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_zero(const Rat& a) { return sgn(a) == 0; }

bool is_prime(const Int& n);
bool is_prime_u64(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Distinct prime divisors of |n|, ascending. n must be nonzero.
// Trial division below 10^6, then Miller-Rabin + Pollard rho.
std::vector<Int> prime_factors(const Int& n);

Int int_pow(const Int& base, unsigned long e);

// q = num/den with den = p^e. Returns false if den is not a power of p.
bool p_power_denominator(const Rat& q, std::uint64_t p, unsigned* e_out);

// Smallest rational with denominator p^e in the half-open interval (lo, hi],
// growing e as needed. hi may be +inf (pass has_hi = false). lo >= 0.
Rat rational_in_interval_p_power(const Rat& lo, const Rat& hi, bool has_hi,
                                 std::uint64_t p);

std::string rat_string(const Rat& q);

}  // namespace abmod
