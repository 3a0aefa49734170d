#include "abmod/oracle.hpp"

#include "abmod/cyclotomic.hpp"

namespace abmod {

LocalModel build_local_model(std::uint64_t p, unsigned k, unsigned e,
                             const OracleBudget& budget) {
  auto ctx = TruncSeriesCtx::make(p, k, e,
                                  Rat(Int(static_cast<unsigned long>(p - 1))));
  Int size = ctx->size();
  if (!size.fits_ulong_p() || size.get_ui() > budget.max_ring_size)
    throw ResourceError("local model exceeds the enumeration budget");
  return LocalModel{ctx};
}

CyclotomicModel build_cyclotomic_model(unsigned N, std::uint64_t p,
                                       const OracleBudget& budget) {
  if (N < 1) throw InputError("cyclotomic index must be >= 1");
  PrimeField F(p);
  UPoly<Int> phi = cyclotomic(N);
  UPoly<Fp> phi_p;
  {
    std::vector<Fp> cs;
    cs.reserve(phi.c.size());
    for (const auto& c : phi.c) cs.push_back(F.from_int(c));
    phi_p = upoly_from(F, std::move(cs));
  }
  if (phi_p.degree() < 1)
    throw InputError("cyclotomic polynomial degenerates mod p");
  {
    Int size = 1;
    for (int i = 0; i < phi_p.degree(); ++i) size *= F.size();
    if (!size.fits_ulong_p() || size.get_ui() > budget.max_ring_size)
      throw ResourceError("cyclotomic model exceeds the enumeration budget");
  }
  auto fac = factor_univariate(F, phi_p);
  std::vector<UPoly<Fp>> comps;
  for (const auto& [h, mult] : fac.factors) {
    UPoly<Fp> powed = upoly_const(F, F.one());
    for (unsigned i = 0; i < mult; ++i) powed = upoly_mul(F, powed, h);
    comps.push_back(std::move(powed));
  }
  CyclotomicModel model{N, p, QuotRing<PrimeField>(F, phi_p), fac.factors,
                        crt_prepare(F, comps)};
  return model;
}

}  // namespace abmod
