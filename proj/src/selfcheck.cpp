#include "abmod/selfcheck.hpp"

#include <functional>
#include <map>

#include "abmod/cyclotomic.hpp"
#include "abmod/oracle.hpp"
#include "abmod/quot_ring.hpp"
#include "abmod/rings.hpp"

namespace abmod {

namespace {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

struct Check {
  SuiteResult& res;
  void operator()(bool ok, const std::string& what) {
    ++res.cases;
    if (!ok) {
      ++res.failures;
      if (res.failure_examples.size() < 5) res.failure_examples.push_back(what);
    }
  }
};

template <class Ring>
typename Ring::Elem random_elem(const Ring& R, Rng& rng) {
  return R.element_at(rng.below(R.size().get_ui()));
}

// the two transposition maps between (R^kappa)[x]/(x^m) and (R[x]/(x^m))^kappa
void suite_power_iso(SuiteResult& res, std::uint64_t seed, bool fault) {
  Check check{res};
  Rng rng(mix_seed(seed, 0x150));
  for (std::uint64_t p : {2ull, 3ull}) {
    PrimeField F(p);
    TruncPolyRing<ProductRing<PrimeField>> L{{F, 3}, 2};
    ProductRing<TruncPolyRing<PrimeField>> R{{F, 2}, 3};
    for (int trial = 0; trial < 100; ++trial) {
      auto a = random_elem(L, rng);
      auto b = random_elem(L, rng);
      auto fa = power_quotient_split<PrimeField>(L, a);
      auto fb = power_quotient_split<PrimeField>(L, b);
      check(L.eq(power_quotient_join<PrimeField>(L, fa), a),
            "g(f(a)) != a over F_" + std::to_string(p));
      auto ra = random_elem(R, rng);
      check(R.eq(power_quotient_split<PrimeField>(
                     L, power_quotient_join<PrimeField>(L, ra)),
                 ra),
            "f(g(a)) != a over F_" + std::to_string(p));
      check(R.eq(power_quotient_split<PrimeField>(L, L.add(a, b)),
                 R.add(fa, fb)),
            "additivity fails over F_" + std::to_string(p));
      bool mult_ok = R.eq(power_quotient_split<PrimeField>(L, L.mul(a, b)),
                          R.mul(fa, fb));
      if (fault && trial == 0 && p == 2) mult_ok = !mult_ok;
      check(mult_ok, "multiplicativity fails over F_" + std::to_string(p) +
                         " at " + L.to_string(a) + " * " + L.to_string(b));
    }
  }
}

void suite_crt(SuiteResult& res, std::uint64_t seed, bool) {
  Check check{res};
  Rng rng(mix_seed(seed, 0xc47));
  {
    // F_2[x]/(x(x+1)): split x -> (0, 1), full roundtrip over all elements
    PrimeField F(2);
    UPoly<Fp> x = upoly_x(F);
    UPoly<Fp> xp1 = upoly_from(F, {F.one(), F.one()});
    auto crt = crt_prepare(F, {x, xp1});
    QuotRing<PrimeField> R(F, crt.modulus);
    auto parts = crt_split(F, crt, R.x());
    check(parts.size() == 2 && parts[0].is_zero() && !parts[1].is_zero(),
          "x must map to (0, 1) in F_2 x F_2");
    for (std::uint64_t i = 0; i < 4; ++i) {
      auto a = R.element_at(i);
      check(upoly_eq(F, crt_join(F, crt, crt_split(F, crt, a)), a),
            "roundtrip failed in F_2[x]/(x(x+1))");
    }
  }
  {
    // F_3[x]/(x^2(x+1)): random roundtrips and the homomorphism law
    PrimeField F(3);
    UPoly<Fp> x2 = upoly_from(F, {F.zero(), F.zero(), F.one()});
    UPoly<Fp> xp1 = upoly_from(F, {F.one(), F.one()});
    auto crt = crt_prepare(F, {x2, xp1});
    QuotRing<PrimeField> R(F, crt.modulus);
    for (int trial = 0; trial < 50; ++trial) {
      auto a = random_elem(R, rng);
      auto b = random_elem(R, rng);
      check(upoly_eq(F, crt_join(F, crt, crt_split(F, crt, a)), a),
            "roundtrip failed in F_3[x]/(x^2(x+1))");
      auto sa = crt_split(F, crt, a);
      auto sb = crt_split(F, crt, b);
      auto sprod = crt_split(F, crt, R.mul(a, b));
      bool hom = true;
      for (std::size_t i = 0; i < sa.size(); ++i) {
        QuotRing<PrimeField> comp(F, crt.comps[i]);
        hom &= upoly_eq(F, sprod[i], comp.mul(sa[i], sb[i]));
      }
      check(hom, "split is not multiplicative in F_3[x]/(x^2(x+1))");
    }
  }
}

std::vector<SeriesCtxPtr> sample_series_ctxs(std::uint64_t seed) {
  return {
      TruncSeriesCtx::make(2, 1, 1, Rat(1), seed),
      TruncSeriesCtx::make(2, 2, 1, Rat(2), seed),
      TruncSeriesCtx::make(3, 1, 1, Rat(2), seed),
      TruncSeriesCtx::make(5, 1, 0, Rat(4), seed),
  };
}

void suite_ultrametric(SuiteResult& res, std::uint64_t seed, bool) {
  Check check{res};
  Rng rng(mix_seed(seed, 0x0317));
  for (const auto& ctx : sample_series_ctxs(seed)) {
    SeriesRingCtx R{ctx};
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_elem(R, rng);
      auto b = random_elem(R, rng);
      Valuation va = a.valuation(), vb = b.valuation();
      Valuation vsum = R.add(a, b).valuation();
      Valuation vmin = val_less(va, vb) ? va : vb;
      check(!val_less(vsum, vmin), "v(a+b) >= min(v a, v b) fails at " +
                                       R.to_string(a) + ", " + R.to_string(b));
      Valuation vprod = R.mul(a, b).valuation();
      if (va.finite && vb.finite && va.q + vb.q < ctx->cap()) {
        check(vprod.finite && vprod.q == va.q + vb.q,
              "v(ab) = v(a)+v(b) fails at " + R.to_string(a) + ", " +
                  R.to_string(b));
      } else {
        check(!vprod.finite || !(vprod.q < (va.finite && vb.finite
                                                ? va.q + vb.q
                                                : ctx->cap())),
              "truncated product valuation dipped below the sum");
      }
    }
  }
}

void suite_frobenius(SuiteResult& res, std::uint64_t seed, bool) {
  Check check{res};
  Rng rng(mix_seed(seed, 0xf40b));
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 1}, {2, 4}, {3, 2}, {5, 2}}) {
    auto F = ExtField::make(p, k, seed);
    ExtFieldCtx E{F};
    Int pe(static_cast<unsigned long>(p));
    for (int trial = 0; trial < 100; ++trial) {
      auto a = random_elem(E, rng);
      auto b = random_elem(E, rng);
      check(E.eq(E.pow(E.add(a, b), pe), E.add(E.pow(a, pe), E.pow(b, pe))),
            "(a+b)^p != a^p + b^p in F_{p^k}, p=" + std::to_string(p));
    }
    // x^q = x for every element of F_q (spot: q = 16 checked exhaustively)
    if (p == 2 && k == 4) {
      for (std::uint64_t i = 0; i < 16; ++i) {
        auto a = E.element_at(i);
        check(E.eq(E.pow(a, Int(16)), a), "x^16 != x in F_16");
      }
    }
  }
  for (const auto& ctx : sample_series_ctxs(seed)) {
    SeriesRingCtx R{ctx};
    Int pe(static_cast<unsigned long>(ctx->p()));
    auto powp = [&](TruncSeries a) {
      TruncSeries acc = R.one();
      for (Int i = 0; i < pe; ++i) acc = R.mul(acc, a);
      return acc;
    };
    for (int trial = 0; trial < 60; ++trial) {
      auto a = random_elem(R, rng);
      auto b = random_elem(R, rng);
      check(R.eq(powp(R.add(a, b)), R.add(powp(a), powp(b))),
            "(a+b)^p != a^p + b^p in a series ring, p=" +
                std::to_string(ctx->p()));
    }
  }
}

void suite_cyclotomic(SuiteResult& res, std::uint64_t, bool fault) {
  Check check{res};
  IntRing Z;
  for (unsigned n = 1; n <= 30; ++n) {
    UPoly<Int> prod = upoly_const(Z, Int(1));
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d) continue;
      UPoly<Int> phi = cyclotomic(d);
      if (fault && n == 6 && d == 6) phi.c[0] += 1;
      prod = upoly_mul(Z, prod, phi);
    }
    UPoly<Int> xn1;
    xn1.c.assign(n + 1, Int(0));
    xn1.c[0] = -1;
    xn1.c[n] = 1;
    check(upoly_eq(Z, prod, xn1),
          "prod of cyclotomics over divisors != x^n - 1 at n = " +
              std::to_string(n));
  }
  check(cyclotomic(1).degree() == 1, "Phi_1 must be x - 1");
  check(cyclotomic(4).c == std::vector<Int>({1, 0, 1}), "Phi_4 must be x^2+1");
}

void suite_rescale(SuiteResult& res, std::uint64_t seed, bool) {
  Check check{res};
  Rng rng(mix_seed(seed, 0x4e5c));
  std::vector<Rat> factors = {Rat(2), Rat(1, 2), Rat(3, 2), Rat(3)};
  for (const auto& ctx : sample_series_ctxs(seed)) {
    SeriesRingCtx R{ctx};
    for (const Rat& q0 : factors) {
      Rat q = q0;
      unsigned e = 0;
      if (!p_power_denominator(q, ctx->p(), &e)) continue;
      for (int trial = 0; trial < 40; ++trial) {
        auto a = random_elem(R, rng);
        auto b = random_elem(R, rng);
        auto ra = rescale(a, q);
        auto rb = rescale(b, q);
        Valuation va = a.valuation(), vb = b.valuation();
        Valuation wa = ra.valuation(), wb = rb.valuation();
        if (va.finite)
          check(wa.finite && wa.q == va.q * q, "rescale ratio broken");
        else
          check(!wa.finite, "rescale must keep vanished elements vanished");
        if (va.finite && vb.finite) {
          check(val_less(va, vb) == val_less(wa, wb),
                "rescale must preserve valuation order");
        }
        // embedding: multiplicative on a pair
        auto prod = rescale(R.mul(a, b), q);
        check(prod == ra * rb, "rescale is not multiplicative");
      }
    }
  }
}

void suite_modulopfinite(SuiteResult& res, std::uint64_t, bool) {
  Check check{res};
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (unsigned m = 1;; ++m) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < m; ++i) q *= p;
      if (q > 32) break;
      if (q - 1 == 0) continue;
      unsigned N = static_cast<unsigned>(q - 1);
      auto model = build_cyclotomic_model(N, p);
      std::uint64_t expected =
          N == 1 ? 1 : euler_phi(N) / m;  // phi(1) = 1, order conventions
      check(model.component_count() == expected,
            "component count off for q = " + std::to_string(q) +
                ", p = " + std::to_string(p));
      bool fields_ok = true;
      for (const auto& [h, mult] : model.factors)
        fields_ok &= (N == 1) ||
                     (mult == 1 && h.degree() == static_cast<int>(m));
      check(fields_ok, "components are not fields of size q = " +
                           std::to_string(q));
    }
  }
}

void suite_product_transfer(SuiteResult& res, std::uint64_t seed, bool) {
  Check check{res};
  Rng rng(mix_seed(seed, 0x9a0d));
  PrimeField F2(2), F3(3);
  ExtFieldCtx F4{ExtField::make(2, 2, seed)};
  SeriesRingCtx D2{TruncSeriesCtx::make(2, 1, 1, Rat(1), seed)};
  SeriesRingCtx D3{TruncSeriesCtx::make(3, 1, 0, Rat(2), seed)};

  auto random_upoly = [&](unsigned deg) {
    UPoly<Int> f;
    for (unsigned i = 0; i <= deg; ++i)
      f.c.push_back(Int(static_cast<long>(rng.below(3)) - 1));
    IntRing Z;
    upoly_trim(Z, f);
    return zpoly_from_upoly(f, 1, 0);
  };

  auto run_ring = [&](const auto& S, const std::string& name) {
    for (int trial = 0; trial < 60; ++trial) {
      Conjunct c;
      c.nvars = 1;
      unsigned n = 1 + static_cast<unsigned>(rng.below(2));
      for (unsigned i = 0; i < n; ++i) c.eqs.push_back(random_upoly(2));
      for (unsigned i = 0; i < n; ++i) c.neqs.push_back(random_upoly(2));
      for (unsigned r = n; r <= n + 1; ++r) {
        check(product_transfer_check(S, r, c),
              "product transfer violated over " + name);
      }
    }
  };
  run_ring(F2, "F_2");
  run_ring(F3, "F_3");
  run_ring(F4, "F_4");
  run_ring(D2, "F_2[v]/v^2");
  run_ring(D3, "F_3[t]/t^2");
}

void suite_dnf(SuiteResult& res, std::uint64_t seed, bool) {
  Check check{res};
  Rng rng(mix_seed(seed, 0xd4f));
  PrimeField F2(2), F3(3);
  SeriesRingCtx D2{TruncSeriesCtx::make(2, 1, 1, Rat(1), seed)};

  auto random_poly = [&](unsigned nvars) {
    ZPoly f(nvars);
    unsigned terms = 1 + static_cast<unsigned>(rng.below(3));
    for (unsigned t = 0; t < terms; ++t) {
      Exp e(nvars, 0);
      for (unsigned v = 0; v < nvars; ++v)
        e[v] = static_cast<std::uint32_t>(rng.below(3));
      f.add_term(std::move(e), Int(static_cast<long>(rng.below(5)) - 2));
    }
    return f;
  };
  std::function<Formula(unsigned, unsigned)> random_formula =
      [&](unsigned nvars, unsigned depth) -> Formula {
    if (depth == 0 || rng.below(3) == 0) {
      return Formula::literal(
          {random_poly(nvars), rng.below(2) ? Rel::Eq : Rel::Neq});
    }
    std::vector<Formula> kids;
    unsigned n = 2;
    for (unsigned i = 0; i < n; ++i)
      kids.push_back(random_formula(nvars, depth - 1));
    return rng.below(2) ? Formula::conj(std::move(kids))
                        : Formula::disj(std::move(kids));
  };

  auto run_ring = [&](const auto& R, const std::string& name) {
    for (int trial = 0; trial < 40; ++trial) {
      unsigned nvars = 1 + static_cast<unsigned>(rng.below(3));
      Formula f = random_formula(nvars, 2);
      auto dnf = to_dnf(f, 4096);
      for (int a = 0; a < 20; ++a) {
        std::vector<typename std::decay_t<decltype(R)>::Elem> point;
        for (unsigned v = 0; v < nvars; ++v)
          point.push_back(R.element_at(rng.below(R.size().get_ui())));
        bool direct = eval_formula(R, f, point);
        bool via_dnf = false;
        for (const auto& c : dnf) via_dnf |= eval_conjunct(R, c, point);
        check(direct == via_dnf, "DNF is not equivalent over " + name);
      }
    }
  };
  run_ring(F2, "F_2");
  run_ring(F3, "F_3");
  run_ring(D2, "F_2[v]/v^2");
}

}  // namespace

std::vector<std::string> selfcheck_suite_names() {
  return {"power_iso",     "crt_roundtrip", "ultrametric",
          "frobenius",     "cyclotomic",    "rescale",
          "modulopfinite", "product_transfer", "dnf_equivalence"};
}

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& opt) {
  using Runner = std::function<void(SuiteResult&, std::uint64_t, bool)>;
  std::vector<std::pair<std::string, Runner>> suites = {
      {"power_iso", suite_power_iso},
      {"crt_roundtrip", suite_crt},
      {"ultrametric", suite_ultrametric},
      {"frobenius", suite_frobenius},
      {"cyclotomic", suite_cyclotomic},
      {"rescale", suite_rescale},
      {"modulopfinite", suite_modulopfinite},
      {"product_transfer", suite_product_transfer},
      {"dnf_equivalence", suite_dnf},
  };
  std::vector<SuiteResult> out;
  for (auto& [name, runner] : suites) {
    if (!opt.suite_filter.empty() && opt.suite_filter != name) continue;
    SuiteResult res;
    res.name = name;
    runner(res, opt.seed, opt.inject_fault);
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace abmod
