#include "abmod/bigint.hpp"

#include <algorithm>
#include <map>

#include "abmod/errors.hpp"
#include "abmod/rng.hpp"

namespace abmod {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime_u64(std::uint64_t n) { return is_prime(Int(static_cast<unsigned long>(n))); }

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(bound + 1, true);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

namespace {

Int pollard_rho(const Int& n, Rng& rng) {
  // n odd composite, not a prime power handled elsewhere; Brent's variant.
  if (n % 2 == 0) return 2;
  while (true) {
    Int x = Int(static_cast<unsigned long>(rng.next())) % n;
    Int c = Int(static_cast<unsigned long>(rng.next())) % n + 1;
    Int y = x, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x - y;
      if (sgn(diff) < 0) diff = -diff;
      if (sgn(diff) == 0) break;  // cycle without factor; restart
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(Int n, std::map<Int, int>& acc, Rng& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    acc[n]++;
    return;
  }
  Int d = pollard_rho(n, rng);
  factor_rec(d, acc, rng);
  factor_rec(n / d, acc, rng);
}

}  // namespace

std::vector<Int> prime_factors(const Int& n) {
  if (sgn(n) == 0) throw InputError("prime_factors: zero input");
  Int m = abs(n);
  std::map<Int, int> acc;
  static const std::vector<std::uint64_t> small = primes_up_to(100000);
  for (std::uint64_t p : small) {
    if (m == 1) break;
    Int pz(static_cast<unsigned long>(p));
    if (pz * pz > m) break;
    while (mpz_divisible_p(m.get_mpz_t(), pz.get_mpz_t())) {
      acc[pz]++;
      m /= pz;
    }
  }
  if (m > 1) {
    if (is_prime(m)) {
      acc[m]++;
    } else {
      Rng rng(kDefaultSeed ^ 0xfac702ull);
      factor_rec(m, acc, rng);
    }
  }
  std::vector<Int> out;
  for (auto& [p, e] : acc) out.push_back(p);
  return out;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool p_power_denominator(const Rat& q, std::uint64_t p, unsigned* e_out) {
  Int den = q.get_den();
  unsigned e = 0;
  Int pz(static_cast<unsigned long>(p));
  while (den != 1) {
    if (!mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t())) return false;
    den /= pz;
    ++e;
  }
  if (e_out) *e_out = e;
  return true;
}

Rat rational_in_interval_p_power(const Rat& lo, const Rat& hi, bool has_hi,
                                 std::uint64_t p) {
  if (has_hi && !(lo < hi))
    throw InternalError("rational_in_interval_p_power: empty interval");
  Int pe = 1;
  Int pz(static_cast<unsigned long>(p));
  for (unsigned e = 0; e < 512; ++e) {
    // candidate = floor(lo * p^e) + 1 over p^e  ->  strictly above lo
    Int num;
    Rat scaled = lo * Rat(pe);
    mpz_fdiv_q(num.get_mpz_t(), scaled.get_num().get_mpz_t(),
               scaled.get_den().get_mpz_t());
    num += 1;
    Rat cand(num, pe);
    cand.canonicalize();
    if (!has_hi || cand <= hi) return cand;
    pe *= pz;
  }
  throw InternalError("rational_in_interval_p_power: no denominator found");
}

std::string rat_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace abmod
