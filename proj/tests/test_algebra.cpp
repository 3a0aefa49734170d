#include <doctest.h>

#include "abmod/cyclotomic.hpp"
#include "abmod/ext_field.hpp"
#include "abmod/factor.hpp"
#include "abmod/prime_field.hpp"
#include "abmod/rings.hpp"
#include "abmod/rng.hpp"

using namespace abmod;

TEST_CASE("prime field arithmetic and error paths") {
  CHECK_THROWS_AS(PrimeField(4), InputError);
  CHECK_THROWS_AS(PrimeField(1), InputError);
  PrimeField F7(7);
  Fp a = F7.from_uint(3), b = F7.from_uint(5);
  CHECK((a * b).v == 1);
  CHECK((a + b).v == 1);
  CHECK(inv(a).v == 5);  // 3*5 = 15 = 1 mod 7
  CHECK(pow(a, Int(6)).v == 1);
  PrimeField F5(5);
  CHECK_THROWS_AS((void)(a + F5.from_uint(1)), InputError);
  CHECK_THROWS_AS(inv(F7.zero()), InputError);
}

TEST_CASE("extension field contexts") {
  SUBCASE("k = 1 uses the modulus x") {
    auto F = ExtField::make(2, 1);
    CHECK(F->modulus().degree() == 1);
    CHECK(F->modulus().c[0].v == 0);
    CHECK(F->size() == 2);
  }
  SUBCASE("F_16: x^16 = x for all 16 elements") {
    auto F = ExtField::make(2, 4);
    for (std::uint64_t i = 0; i < 16; ++i) {
      Fq a = F->element_at(i);
      CHECK(F->eq(F->pow(a, Int(16)), a));
    }
  }
  SUBCASE("F_9: the modulus divides x^9 - x") {
    auto F = ExtField::make(3, 2);
    PrimeField F3(3);
    // oracle: polynomial division of x^9 - x by the modulus leaves rest 0
    UPoly<Fp> x9x;
    x9x.c.assign(10, F3.zero());
    x9x.c[9] = F3.one();
    x9x.c[1] = F3.from_uint(2);  // -x
    auto [q, r] = upoly_divmod(F3, x9x, F->modulus());
    CHECK(r.is_zero());
  }
  SUBCASE("mixed contexts are a hard error") {
    auto F1 = ExtField::make(2, 2, 1);
    auto F2 = ExtField::make(3, 2, 1);
    CHECK_THROWS_AS(F1->add(F1->one(), F2->one()), InputError);
  }
  SUBCASE("deterministic under a fixed seed") {
    auto A = ExtField::make(5, 3, 42);
    auto B = ExtField::make(5, 3, 42);
    CHECK(A->same_structure(*B));
  }
  SUBCASE("field laws on random elements") {
    auto F = ExtField::make(3, 2);
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
      Fq a = F->element_at(rng.below(9));
      Fq b = F->element_at(rng.below(9));
      CHECK(F->eq(F->mul(a, b), F->mul(b, a)));
      if (!F->is_zero(a)) CHECK(F->eq(F->mul(a, F->inv(a)), F->one()));
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  IntRing Z;
  SUBCASE("n = 1 is x - 1") {
    CHECK(cyclotomic(1).c == std::vector<Int>({-1, 1}));
  }
  SUBCASE("prime index gives the all-ones polynomial") {
    for (unsigned p : {2u, 3u, 5u, 7u, 11u}) {
      auto phi = cyclotomic(p);
      REQUIRE(phi.degree() == static_cast<int>(p - 1));
      for (const auto& c : phi.c) CHECK(c == 1);
    }
  }
  SUBCASE("n = 4 equals the quotient oracle (x^4-1)/((x-1)(x+1))") {
    UPoly<Int> x4;
    x4.c.assign(5, Int(0));
    x4.c[0] = -1;
    x4.c[4] = 1;
    UPoly<Int> xm1{{Int(-1), Int(1)}};
    UPoly<Int> xp1{{Int(1), Int(1)}};
    auto expected =
        upoly_div_exact_monic(upoly_div_exact_monic(x4, xm1), xp1);
    CHECK(upoly_eq(Z, cyclotomic(4), expected));
    CHECK(cyclotomic(4).c == std::vector<Int>({1, 0, 1}));
  }
  SUBCASE("degree is Euler phi") {
    CHECK(cyclotomic(15).degree() == 8);
    CHECK(cyclotomic(30).degree() == 8);
    CHECK(cyclotomic(27).degree() == 18);
  }
}

namespace {

UPoly<Fp> reduce_int_poly(const PrimeField& F, const UPoly<Int>& f) {
  UPoly<Fp> out;
  for (const auto& c : f.c) out.c.push_back(F.from_int(c));
  upoly_trim(F, out);
  return out;
}

}  // namespace

TEST_CASE("univariate factorization over finite fields") {
  SUBCASE("Phi_15 mod 2: two quartics, cross-checked by trial division") {
    PrimeField F2(2);
    UPoly<Fp> phi = reduce_int_poly(F2, cyclotomic(15));
    auto fac = factor_univariate(F2, phi);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].h.degree() == 4);
    CHECK(fac.factors[1].h.degree() == 4);
    CHECK(fac.factors[0].mult == 1);
    CHECK(fac.factors[1].mult == 1);
    // oracle: trial-divide Phi_15 by every monic quartic over F_2
    std::vector<UPoly<Fp>> divisors;
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      UPoly<Fp> cand;
      for (unsigned i = 0; i < 4; ++i)
        cand.c.push_back(F2.from_uint((mask >> i) & 1));
      cand.c.push_back(F2.one());
      if (upoly_divmod(F2, phi, cand).second.is_zero())
        divisors.push_back(cand);
    }
    REQUIRE(divisors.size() == 2);
    CHECK(upoly_eq(F2, divisors[0], fac.factors[0].h));
    CHECK(upoly_eq(F2, divisors[1], fac.factors[1].h));
  }
  SUBCASE("x^2 + x + 1 over F_3 is (x + 2)^2") {
    PrimeField F3(3);
    UPoly<Fp> f{{F3.one(), F3.one(), F3.one()}};
    auto fac = factor_univariate(F3, f);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].mult == 2);
    CHECK(fac.factors[0].h.c[0].v == 2);
    // oracle: expand (x+2)^2 = x^2 + 4x + 4 = x^2 + x + 1 mod 3
    auto sq = upoly_mul(F3, fac.factors[0].h, fac.factors[0].h);
    CHECK(upoly_eq(F3, sq, f));
  }
  SUBCASE("x^2 - 1 over F_2 is (x + 1)^2") {
    PrimeField F2(2);
    UPoly<Fp> f{{F2.one(), F2.zero(), F2.one()}};
    auto fac = factor_univariate(F2, f);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].mult == 2);
    CHECK(fac.factors[0].h.degree() == 1);
    CHECK(fac.factors[0].h.c[0].v == 1);
  }
  SUBCASE("zero polynomial is rejected") {
    PrimeField F2(2);
    CHECK_THROWS_AS(factor_univariate(F2, UPoly<Fp>{}), InputError);
  }
  SUBCASE("reconstruction on random polynomials") {
    Rng rng(99);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      PrimeField F(p);
      for (int trial = 0; trial < 40; ++trial) {
        UPoly<Fp> f;
        unsigned deg = 1 + static_cast<unsigned>(rng.below(6));
        for (unsigned i = 0; i < deg; ++i)
          f.c.push_back(F.from_uint(rng.below(p)));
        f.c.push_back(F.from_uint(1 + rng.below(p - 1)));
        auto fac = factor_univariate(F, f);
        CHECK(upoly_eq(F, factorization_product(F, fac), f));
        for (const auto& [h, m] : fac.factors) CHECK(is_irreducible(F, h));
      }
    }
  }
  SUBCASE("reconstruction over an extension field") {
    ExtFieldCtx E{ExtField::make(2, 2)};
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      UPoly<Fq> f;
      unsigned deg = 1 + static_cast<unsigned>(rng.below(4));
      for (unsigned i = 0; i <= deg; ++i)
        f.c.push_back(E.element_at(rng.below(4)));
      upoly_trim(E, f);
      if (f.degree() < 1) continue;
      auto fac = factor_univariate(E, f);
      CHECK(upoly_eq(E, factorization_product(E, fac), f));
      for (const auto& [h, m] : fac.factors) CHECK(is_irreducible(E, h));
    }
  }
}
