#include "abmod/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "abmod/errors.hpp"

namespace abmod {

UPoly<Int> upoly_div_exact_monic(const UPoly<Int>& a, const UPoly<Int>& b) {
  IntRing Z;
  if (b.is_zero() || b.c.back() != 1)
    throw InternalError("exact division requires a monic divisor");
  UPoly<Int> r = a;
  UPoly<Int> q;
  const int db = b.degree();
  if (a.degree() < db) {
    if (!a.is_zero()) throw InternalError("inexact division");
    return q;
  }
  q.c.assign(a.degree() - db + 1, Int(0));
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    Int coef = r.c.back();
    q.c[shift] = coef;
    for (int i = 0; i <= db; ++i) r.c[shift + i] -= coef * b.c[i];
    upoly_trim(Z, r);
  }
  if (!r.is_zero()) throw InternalError("inexact division");
  upoly_trim(Z, q);
  return q;
}

UPoly<Int> cyclotomic(unsigned n) {
  if (n < 1) throw InputError("cyclotomic index must be >= 1");
  static std::mutex mu;
  static std::map<unsigned, UPoly<Int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto compute = [](auto&& self, unsigned m) -> const UPoly<Int>& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    UPoly<Int> xm1;  // x^m - 1
    xm1.c.assign(m + 1, Int(0));
    xm1.c[0] = -1;
    xm1.c[m] = 1;
    UPoly<Int> phi = xm1;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      phi = upoly_div_exact_monic(phi, self(self, d));
    }
    return cache.emplace(m, std::move(phi)).first->second;
  };
  return compute(compute, n);
}

}  // namespace abmod
