#include "abmod/decider.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "abmod/rings.hpp"

namespace abmod {

std::string to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Yes: return "yes";
    case Verdict::Kind::No: return "no";
    case Verdict::Kind::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string certificate_kind(const NoCertificate& c) {
  if (std::holds_alternative<OrdProfileCert>(c)) return "ord_profile";
  if (std::holds_alternative<ResidueObstructionCert>(c))
    return "residue_obstruction";
  return "poly_vanishes";
}

namespace {

std::vector<TruncSeries> block_slice(const std::vector<TruncSeries>& a,
                                     unsigned block, unsigned arity) {
  return std::vector<TruncSeries>(a.begin() + block * arity,
                                  a.begin() + (block + 1) * arity);
}

struct GapEval {
  bool pass = false;
  Valuation min_upper = Valuation::finite_val(Rat(0));
  Valuation max_lower = Valuation::finite_val(Rat(0));
  Rat gamma1;  // max lower exponent
  Rat gamma2;  // min upper exponent, counting AtLeastCap as the cap
};

GapEval eval_gap(const GapSentence& g, const SeriesRingCtx& R,
                 const std::vector<TruncSeries>& point) {
  GapEval out;
  bool first_upper = true, first_lower = true;
  Valuation min_upper = Valuation::at_least_cap(R.S->cap());
  Valuation max_lower = Valuation::finite_val(Rat(0));
  Rat gamma2 = R.S->cap();
  Rat gamma1(0);
  for (unsigned j = 0; j < g.blocks; ++j) {
    auto slice = block_slice(point, j, g.arity);
    for (const auto& f : g.fs) {
      Valuation v = eval_zpoly(R, f, slice).valuation();
      Rat bound = v.finite ? v.q : R.S->cap();
      if (first_upper || bound < gamma2) gamma2 = bound;
      if (first_upper || val_less(v, min_upper)) min_upper = v;
      first_upper = false;
    }
  }
  for (unsigned k = 0; k < g.blocks; ++k) {
    auto slice = block_slice(point, k, g.arity);
    Valuation v = eval_zpoly(R, g.gs[k], slice).valuation();
    if (!v.finite) return out;  // lower side must stay visible
    if (first_lower || v.q > gamma1) gamma1 = v.q;
    if (first_lower || val_less(max_lower, v)) max_lower = v;
    first_lower = false;
  }
  // strict gap: max lower < min upper
  if (!val_less(max_lower, min_upper)) return out;
  if (!(gamma1 < gamma2)) return out;
  out.pass = true;
  out.min_upper = min_upper;
  out.max_lower = max_lower;
  out.gamma1 = gamma1;
  out.gamma2 = gamma2;
  return out;
}

// Smallest rational with denominator a power of p in [lo, hi), hi possibly
// absent. The interval is nonempty by construction.
Rat p_power_scale(const Rat& lo, const Rat& hi, bool has_hi, std::uint64_t p) {
  Int pe = 1;
  Int pz(static_cast<unsigned long>(p));
  for (unsigned e = 0; e < 512; ++e) {
    Rat scaled = lo * Rat(pe);
    Int num;
    mpz_cdiv_q(num.get_mpz_t(), scaled.get_num().get_mpz_t(),
               scaled.get_den().get_mpz_t());
    if (num < 1) num = 1;
    Rat cand(num, pe);
    cand.canonicalize();
    if (!has_hi || cand < hi) return cand;
    pe *= pz;
  }
  throw InternalError("p_power_scale: no scale found");
}

// Rescale an assignment by q and retruncate at the canonical cap p-1.
// Sound because the chosen q pushes every upper valuation to >= p-1 while
// every lower valuation stays strictly below p-1.
PrimeWitness normalize_witness(const GapSentence& g, std::uint64_t p,
                               const SeriesCtxPtr& ctx,
                               const std::vector<TruncSeries>& point,
                               const Rat& q) {
  unsigned extra_e = 0;
  if (!p_power_denominator(q, p, &extra_e))
    throw InternalError("normalize_witness: bad scale denominator");
  Rat cap(Int(static_cast<unsigned long>(p - 1)));
  auto nctx = TruncSeriesCtx::make(ctx->field(), ctx->e() + extra_e, cap);
  PrimeWitness w;
  w.p = p;
  w.k = ctx->k();
  w.e = nctx->e();
  w.cap = cap;
  w.ctx = nctx;
  for (const auto& s : point) {
    auto ns = nctx->zero();
    for (std::size_t i = 0; i < ctx->slots(); ++i) {
      if (abmod::is_zero(s.coeffs()[i])) continue;
      Rat ex = ctx->exponent_of_slot(i) * q;
      if (!(ex < cap)) continue;  // truncated away at the canonical cap
      Int pe = int_pow(Int(static_cast<unsigned long>(p)), nctx->e());
      Rat slot_q = ex * Rat(pe);
      if (slot_q.get_den() != 1)
        throw InternalError("normalize_witness: slot misalignment");
      ns.coeffs()[slot_q.get_num().get_ui()] = s.coeffs()[i];
    }
    w.assignment.push_back(std::move(ns));
  }
  GapMargin margin;
  if (!verify_witness(g, w, &margin))
    throw InternalError("normalize_witness: rescaled witness fails");
  w.margin = margin;
  return w;
}

UPoly<Fp> reduce_separated(const PrimeField& F, const ZPoly& f) {
  // inputs have at most one variable; constants reduce to degree-0 polys
  unsigned var = 0;
  auto sup = f.support_vars();
  if (!sup.empty()) var = sup[0];
  return upoly_reduce_zpoly(F, f, var);
}

long ord_or_inf(const PrimeField& F, const UPoly<Fp>& f, const UPoly<Fp>& h) {
  if (f.is_zero()) return -1;
  return static_cast<long>(upoly_multiplicity(F, f, h));
}

Fq min_root_in(const ExtFieldCtx& E, const UPoly<Fp>& h,
               std::uint64_t seed) {
  // coerce h into the extension and take the least root by element index
  std::vector<Fq> cs;
  cs.reserve(h.c.size());
  for (const auto& c : h.c) cs.push_back(E.F->from_base(c));
  UPoly<Fq> hext = upoly_from(E, std::move(cs));
  auto fac = factor_univariate(E, hext, seed);
  bool found = false;
  Fq best = E.zero();
  for (const auto& [factor, mult] : fac.factors) {
    if (factor.degree() != 1) continue;
    Fq root = E.neg(factor.c[0]);  // monic: x + c -> root -c
    if (!found || E.index_of(root) < E.index_of(best)) {
      best = root;
      found = true;
    }
  }
  if (!found)
    throw InternalError("min_root_in: no root in the chosen extension");
  return best;
}

MPoly<Fp> zpoly_mod_p(const PrimeField& F, const ZPoly& f) {
  return f.map_coeffs<Fp>([&](const Int& c) { return F.from_int(c); });
}

}  // namespace

bool verify_witness(const GapSentence& g, const PrimeWitness& w,
                    GapMargin* margin) {
  if (w.assignment.size() != static_cast<std::size_t>(g.blocks) * g.arity)
    throw InputError("witness arity does not match the gap sentence");
  if (!w.ctx) throw InputError("witness has no ring context");
  for (const auto& s : w.assignment) {
    if (!s.ctx()) throw InputError("witness variable without context");
    if (s.ctx().get() != w.ctx.get() && !s.ctx()->same_structure(*w.ctx))
      throw InputError("witness variables live in mixed contexts");
  }
  SeriesRingCtx R{w.ctx};
  GapEval ev = eval_gap(g, R, w.assignment);
  if (margin && ev.pass) *margin = {ev.min_upper, ev.max_lower};
  return ev.pass;
}

bool oracle_confirm_witness(const GapSentence& g, const PrimeWitness& w) {
  // plain ring arithmetic: every f_i vanishes on every block, every g_k is
  // a nonzero ring element on its own block
  SeriesRingCtx R{w.ctx};
  for (unsigned j = 0; j < g.blocks; ++j) {
    auto slice = block_slice(w.assignment, j, g.arity);
    for (const auto& f : g.fs) {
      if (!R.is_zero(eval_zpoly(R, f, slice))) return false;
    }
  }
  for (unsigned k = 0; k < g.blocks; ++k) {
    auto slice = block_slice(w.assignment, k, g.arity);
    if (R.is_zero(eval_zpoly(R, g.gs[k], slice))) return false;
  }
  return true;
}

std::optional<PrimeWitness> witness_search(const GapSentence& g,
                                           std::uint64_t p,
                                           const DecideBudget& budget,
                                           BudgetReport* report) {
  BudgetReport rep;
  rep.max_field_deg = budget.max_field_deg;
  rep.max_ram = budget.max_ram;
  rep.max_cap = budget.max_cap;
  const unsigned nvars = g.blocks * g.arity;

  struct Level {
    unsigned k, e, cap;
  };
  std::vector<Level> levels;
  for (unsigned k = 1; k <= budget.max_field_deg; ++k)
    for (unsigned e = 0; e <= budget.max_ram; ++e)
      for (unsigned cap = 1; cap <= budget.max_cap; ++cap)
        levels.push_back({k, e, cap});
  std::sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) {
    unsigned wa = a.k + a.e + a.cap, wb = b.k + b.e + b.cap;
    if (wa != wb) return wa < wb;
    if (a.k != b.k) return a.k < b.k;
    if (a.e != b.e) return a.e < b.e;
    return a.cap < b.cap;
  });

  for (std::size_t li = 0; li < levels.size(); ++li) {
    const auto& [k, e, cap] = levels[li];
    SeriesCtxPtr ctx;
    try {
      ctx = TruncSeriesCtx::make(p, k, e,
                                 Rat(Int(static_cast<unsigned long>(cap))),
                                 budget.seed);
    } catch (const ResourceError&) {
      rep.notes.push_back("level (" + std::to_string(k) + "," +
                          std::to_string(e) + "," + std::to_string(cap) +
                          ") skipped: context too large");
      continue;
    }
    SeriesRingCtx R{ctx};
    Int ring_size = ctx->size();
    Int total = 1;
    bool overflow = false;
    for (unsigned v = 0; v < nvars; ++v) {
      total *= ring_size;
      if (!total.fits_ulong_p() && v + 1 < nvars) {
        overflow = true;
        break;
      }
    }
    std::vector<TruncSeries> point(nvars, ctx->zero());
    auto try_point = [&](const std::vector<TruncSeries>& pt)
        -> std::optional<PrimeWitness> {
      ++rep.assignments_tried;
      GapEval ev = eval_gap(g, R, pt);
      if (!ev.pass) return std::nullopt;
      Rat target(Int(static_cast<unsigned long>(p - 1)));
      Rat lo = target / ev.gamma2;
      bool has_hi = sgn(ev.gamma1) > 0;
      Rat hi = has_hi ? target / ev.gamma1 : Rat(0);
      Rat q = p_power_scale(lo, hi, has_hi, p);
      return normalize_witness(g, p, ctx, pt, q);
    };
    if (!overflow && total.fits_ulong_p() &&
        total.get_ui() <= budget.max_level_assignments) {
      if (!ring_size.fits_ulong_p()) continue;
      std::uint64_t rs = ring_size.get_ui();
      std::uint64_t count = total.get_ui();
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t rest = idx;
        for (unsigned v = 0; v < nvars; ++v) {
          point[v] = ctx->element_at(rest % rs);
          rest /= rs;
        }
        if (auto w = try_point(point)) return w;
      }
    } else {
      // seeded random sampling; deterministic per (seed, p, level)
      if (!ctx->field()->size().fits_ulong_p()) {
        rep.notes.push_back("level (" + std::to_string(k) + "," +
                            std::to_string(e) + "," + std::to_string(cap) +
                            ") skipped: field too large");
        continue;
      }
      Rng rng(mix_seed(budget.seed, p, li));
      std::uint64_t fsize = ctx->field()->size().get_ui();
      for (std::uint64_t trial = 0; trial < budget.random_trials; ++trial) {
        for (unsigned v = 0; v < nvars; ++v) {
          auto s = ctx->zero();
          for (std::size_t slot = 0; slot < ctx->slots(); ++slot)
            s.coeffs()[slot] = ctx->field()->element_at(rng.below(fsize));
          point[v] = std::move(s);
        }
        if (auto w = try_point(point)) return w;
      }
      rep.notes.push_back("level (" + std::to_string(k) + "," +
                          std::to_string(e) + "," + std::to_string(cap) +
                          ") sampled randomly");
    }
  }
  if (report) *report = rep;
  return std::nullopt;
}

ModPOrdProfile ord_profile_mod_p(const std::vector<UPoly<Fp>>& inputs,
                                 const PrimeField& F, std::uint64_t seed) {
  ModPOrdProfile out;
  UPoly<Fp> prod = upoly_const(F, F.one());
  for (const auto& f : inputs) {
    out.input_is_zero.push_back(f.is_zero());
    if (!f.is_zero() && f.degree() > 0) prod = upoly_mul(F, prod, f);
  }
  if (prod.degree() > 0) {
    auto fac = factor_univariate(F, prod, seed);
    for (auto& [h, m] : fac.factors) out.basis.push_back(h);
  }
  for (const auto& f : inputs) {
    std::vector<long> row;
    for (const auto& h : out.basis) row.push_back(ord_or_inf(F, f, h));
    out.ord.push_back(std::move(row));
  }
  return out;
}

namespace {

ConjunctVerdict make_no(const Conjunct& reduced, const GapSentence& g,
                        ConjunctClass cls, NoCertificate cert) {
  ConjunctVerdict v;
  v.kind = ConjunctVerdict::Kind::No;
  v.cls = cls;
  v.reduced = reduced;
  v.gap = g;
  v.certificate = std::move(cert);
  return v;
}

ConjunctVerdict make_yes(const Conjunct& reduced, const GapSentence& g,
                         ConjunctClass cls, PrimeWitness w) {
  ConjunctVerdict v;
  v.kind = ConjunctVerdict::Kind::Yes;
  v.cls = cls;
  v.reduced = reduced;
  v.gap = g;
  v.witness = std::move(w);
  return v;
}

// witness made of residue-field constants at the canonical cap; one entry
// per gap variable (blocks * arity in total)
PrimeWitness constant_witness_full(const GapSentence& g, std::uint64_t p,
                                   unsigned field_deg,
                                   const std::vector<Fq>& per_var,
                                   std::uint64_t seed) {
  auto ctx = TruncSeriesCtx::make(p, field_deg, 0,
                                  Rat(Int(static_cast<unsigned long>(p - 1))),
                                  seed);
  PrimeWitness w;
  w.p = p;
  w.k = field_deg;
  w.e = 0;
  w.cap = ctx->cap();
  w.ctx = ctx;
  for (const auto& a : per_var) w.assignment.push_back(ctx->from_field(a));
  GapMargin margin;
  if (!verify_witness(g, w, &margin))
    throw InternalError("constant witness fails to verify");
  w.margin = margin;
  return w;
}

// same point used for every block
PrimeWitness constant_witness(const GapSentence& g, std::uint64_t p,
                              unsigned field_deg, const std::vector<Fq>& point,
                              std::uint64_t seed) {
  if (point.size() != g.arity)
    throw InternalError("constant witness: point arity mismatch");
  std::vector<Fq> per_var;
  for (unsigned j = 0; j < g.blocks; ++j)
    for (unsigned v = 0; v < g.arity; ++v) per_var.push_back(point[v]);
  return constant_witness_full(g, p, field_deg, per_var, seed);
}

}  // namespace

ConjunctVerdict decide_separated(const Conjunct& reduced, const GapSentence& g,
                                 std::uint64_t p, const DecideBudget& budget) {
  if (g.arity > 1)
    throw InputError("decide_separated: more than one original variable");
  PrimeField F(p);
  const unsigned n = g.blocks;

  std::vector<UPoly<Fp>> fbar, gbar;
  for (const auto& f : g.fs) fbar.push_back(reduce_separated(F, f));
  for (const auto& gp : g.gs) gbar.push_back(reduce_separated(F, gp));

  for (unsigned k = 0; k < n; ++k) {
    if (gbar[k].is_zero())
      return make_no(reduced, g, ConjunctClass::Separated,
                     PolyVanishesCert{p, k, g.gs[k]});
  }

  std::vector<UPoly<Fp>> nonzero_f;
  for (const auto& f : fbar)
    if (!f.is_zero()) nonzero_f.push_back(f);

  if (nonzero_f.empty()) {
    // every upper valuation is infinite; any point avoiding the finitely
    // many roots of each g_k works, taken in a small extension
    std::uint32_t max_deg = 0;
    for (const auto& gp : gbar)
      max_deg = std::max(max_deg, static_cast<std::uint32_t>(gp.degree()));
    unsigned d = 1;
    Int sz(static_cast<unsigned long>(p));
    while (sz <= Int(static_cast<unsigned long>(max_deg))) {
      sz *= Int(static_cast<unsigned long>(p));
      ++d;
    }
    ExtFieldCtx E{ExtField::make(p, d, budget.seed)};
    std::vector<Fq> alphas;
    for (unsigned k = 0; k < n; ++k) {
      bool found = false;
      std::uint64_t limit = E.size().get_ui();
      for (std::uint64_t i = 0; i < limit; ++i) {
        Fq cand = E.element_at(i);
        std::vector<Fq> cs;
        for (const auto& c : gbar[k].c) cs.push_back(E.F->from_base(c));
        UPoly<Fq> gx = upoly_from(E, std::move(cs));
        if (!E.is_zero(upoly_eval(E, gx, cand))) {
          alphas.push_back(cand);
          found = true;
          break;
        }
      }
      if (!found)
        throw InternalError("separated: no non-root found in extension");
    }
    if (g.arity == 0) alphas.clear();
    return make_yes(reduced, g, ConjunctClass::Separated,
                    constant_witness_full(g, p, d, alphas, budget.seed));
  }

  auto build_no_cert = [&](unsigned failing_block) {
    OrdProfileCert cert;
    cert.p = p;
    UPoly<Fp> prod = upoly_const(F, F.one());
    for (const auto& f : nonzero_f) prod = upoly_mul(F, prod, f);
    for (const auto& gp : gbar) prod = upoly_mul(F, prod, gp);
    if (prod.degree() > 0) {
      auto fac = factor_univariate(F, prod, budget.seed);
      for (auto& [h, m] : fac.factors) cert.basis.push_back(h);
    }
    for (const auto& f : fbar) {
      std::vector<long> row;
      for (const auto& h : cert.basis) row.push_back(ord_or_inf(F, f, h));
      cert.f_ord.push_back(std::move(row));
    }
    for (const auto& gp : gbar) {
      std::vector<long> row;
      for (const auto& h : cert.basis) row.push_back(ord_or_inf(F, gp, h));
      cert.g_ord.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < cert.basis.size(); ++j) {
      long mn = -1;
      for (std::size_t i = 0; i < cert.f_ord.size(); ++i) {
        long o = cert.f_ord[i][j];
        if (o < 0) continue;  // zero polynomial: infinite order
        if (mn < 0 || o < mn) mn = o;
      }
      cert.f_ord_min.push_back(mn);
    }
    cert.failing_block = failing_block;
    return cert;
  };

  UPoly<Fp> G = nonzero_f[0];
  for (std::size_t i = 1; i < nonzero_f.size(); ++i)
    G = upoly_gcd(F, G, nonzero_f[i]);
  if (G.degree() == 0)
    return make_no(reduced, g, ConjunctClass::Separated, build_no_cert(0));

  auto gcd_fac = factor_univariate(F, G, budget.seed);

  struct Choice {
    UPoly<Fp> h;
    unsigned a = 0;  // min_i ord_h(f_i) = ord_h(gcd)
    unsigned b = 0;  // ord_h(g_k)
  };
  std::vector<Choice> chosen;
  for (unsigned k = 0; k < n; ++k) {
    bool found = false;
    Choice best;
    for (const auto& [h, a] : gcd_fac.factors) {
      unsigned b = upoly_multiplicity(F, gbar[k], h);
      if (a <= b) continue;
      Choice cand{h, a, b};
      if (!found) {
        best = cand;
        found = true;
        continue;
      }
      // deterministic preference: smaller degree, then (for linear factors)
      // the smaller root, then the smaller coefficient vector
      auto key_less = [&](const Choice& x, const Choice& y) {
        if (x.h.degree() != y.h.degree()) return x.h.degree() < y.h.degree();
        if (x.h.degree() == 1) {
          std::uint64_t rx = (p - x.h.c[0].v) % p;
          std::uint64_t ry = (p - y.h.c[0].v) % p;
          if (rx != ry) return rx < ry;
        }
        for (std::size_t i = x.h.c.size(); i-- > 0;) {
          if (x.h.c[i].v != y.h.c[i].v) return x.h.c[i].v < y.h.c[i].v;
        }
        return false;
      };
      if (key_less(cand, best)) best = cand;
    }
    if (!found)
      return make_no(reduced, g, ConjunctClass::Separated, build_no_cert(k));
    chosen.push_back(best);
  }

  // block scales: s_k near 1/a_k, rounded up to p-power denominators until
  // every cross comparison a_j s_j > b_k s_k holds exactly
  std::vector<Rat> scales(n);
  {
    Int pe = 1;
    Int pz(static_cast<unsigned long>(p));
    for (unsigned round = 0;; ++round) {
      if (round > 256)
        throw InternalError("separated: scale refinement did not settle");
      for (unsigned k = 0; k < n; ++k) {
        Int num;
        Int a(static_cast<unsigned long>(chosen[k].a));
        mpz_cdiv_q(num.get_mpz_t(), pe.get_mpz_t(), a.get_mpz_t());
        Rat s(num, pe);
        s.canonicalize();
        scales[k] = s;
      }
      bool ok = true;
      for (unsigned j = 0; j < n && ok; ++j)
        for (unsigned k = 0; k < n && ok; ++k) {
          Rat upper = Rat(Int(static_cast<unsigned long>(chosen[j].a))) *
                      scales[j];
          Rat lower = Rat(Int(static_cast<unsigned long>(chosen[k].b))) *
                      scales[k];
          if (!(upper > lower)) ok = false;
        }
      if (ok) break;
      pe *= pz;
    }
  }

  Rat gamma1(0), gamma2(0);
  bool first = true;
  for (unsigned k = 0; k < n; ++k) {
    Rat up = Rat(Int(static_cast<unsigned long>(chosen[k].a))) * scales[k];
    Rat low = Rat(Int(static_cast<unsigned long>(chosen[k].b))) * scales[k];
    if (first || up < gamma2) gamma2 = up;
    if (first || low > gamma1) gamma1 = low;
    first = false;
  }
  Rat target(Int(static_cast<unsigned long>(p - 1)));
  Rat lo = target / gamma2;
  bool has_hi = sgn(gamma1) > 0;
  Rat hi = has_hi ? target / gamma1 : Rat(0);
  Rat q = p_power_scale(lo, hi, has_hi, p);

  unsigned lcm_deg = 1;
  for (const auto& c : chosen)
    lcm_deg = static_cast<unsigned>(
        std::lcm<std::uint64_t>(lcm_deg, c.h.degree()));
  unsigned max_e = 0;
  std::vector<Rat> final_scales(n);
  for (unsigned k = 0; k < n; ++k) {
    final_scales[k] = scales[k] * q;
    unsigned e = 0;
    if (!p_power_denominator(final_scales[k], p, &e))
      throw InternalError("separated: scale lost its p-power denominator");
    max_e = std::max(max_e, e);
  }

  auto ctx = TruncSeriesCtx::make(p, lcm_deg, max_e, target, budget.seed);
  ExtFieldCtx E{ctx->field()};
  PrimeWitness w;
  w.p = p;
  w.k = lcm_deg;
  w.e = max_e;
  w.cap = target;
  w.ctx = ctx;
  for (unsigned k = 0; k < n; ++k) {
    Fq alpha = min_root_in(E, chosen[k].h, budget.seed);
    TruncSeries x = ctx->from_field(alpha);
    x = ctx->add(x, ctx->t_power(final_scales[k]));
    w.assignment.push_back(std::move(x));
  }
  GapMargin margin;
  if (!verify_witness(g, w, &margin))
    throw InternalError("separated: synthesized witness fails to verify");
  w.margin = margin;
  return make_yes(reduced, g, ConjunctClass::Separated, std::move(w));
}

AcfResult acf_decide_char_p(const Conjunct& reduced, std::uint64_t p,
                            const DecideBudget& budget) {
  PrimeField F(p);
  AcfResult out;
  const unsigned m = reduced.nvars;

  std::vector<MPoly<Fp>> eqs;
  for (const auto& f : reduced.eqs) eqs.push_back(zpoly_mod_p(F, f));
  std::vector<MPoly<Fp>> neqs;
  for (const auto& gp : reduced.neqs) neqs.push_back(zpoly_mod_p(F, gp));

  // an inequation that reduces to the zero polynomial kills satisfiability
  for (std::size_t k = 0; k < neqs.size(); ++k) {
    if (neqs[k].is_zero()) {
      out.sat = AcfSat::Unsat;
      out.vanish = PolyVanishesCert{p, k, reduced.neqs[k]};
      return out;
    }
  }

  if (neqs.empty() || eqs.empty()) {
    if (eqs.empty()) {
      // finitely many hypersurfaces cannot cover the algebraic closure
      out.sat = AcfSat::Sat;
      return out;
    }
    // positive system: trivial ideal over F_p iff trivial over the closure
    GroebnerOptions<Fp> opt;
    opt.pair_cap = budget.groebner_pair_cap;
    auto gb = buchberger(eqs, F.one(), opt);
    if (gb.capped) throw ResourceError("Groebner pair budget exceeded");
    if (gb.trivial) {
      out.sat = AcfSat::Unsat;
      out.cert = ResidueObstructionCert{p, eqs, gb.one_cofactors};
    } else {
      out.sat = AcfSat::Sat;
    }
    return out;
  }

  // mixed system over a field: adjoin an inversion variable per inequation
  const unsigned total = m + static_cast<unsigned>(neqs.size());
  std::vector<MPoly<Fp>> gens;
  std::vector<unsigned> keep(m);
  for (unsigned i = 0; i < m; ++i) keep[i] = i;
  for (const auto& f : eqs) gens.push_back(f.reindexed(keep, total));
  for (std::size_t k = 0; k < neqs.size(); ++k) {
    MPoly<Fp> ext = neqs[k].reindexed(keep, total);
    MPoly<Fp> y = MPoly<Fp>::variable(total, m + static_cast<unsigned>(k),
                                      F.one());
    gens.push_back(ext * y - MPoly<Fp>::constant(total, F.one()));
  }
  GroebnerOptions<Fp> opt;
  opt.pair_cap = budget.groebner_pair_cap;
  auto gb = buchberger(gens, F.one(), opt);
  if (gb.capped) throw ResourceError("Groebner pair budget exceeded");
  if (gb.trivial) {
    out.sat = AcfSat::Unsat;
    out.cert = ResidueObstructionCert{p, gens, gb.one_cofactors};
  } else {
    out.sat = AcfSat::Sat;
  }
  return out;
}

namespace {

// Residue-root search over growing extensions; complete for univariate
// systems (via gcd factorization), budgeted enumeration otherwise.
std::optional<PrimeWitness> positive_witness(const Conjunct& reduced,
                                             const GapSentence& g,
                                             std::uint64_t p,
                                             const DecideBudget& budget,
                                             BudgetReport* rep) {
  PrimeField F(p);
  const unsigned m = reduced.nvars;
  if (m <= 1) {
    std::vector<UPoly<Fp>> fs;
    for (const auto& f : reduced.eqs) {
      auto fb = reduce_separated(F, f);
      if (!fb.is_zero()) fs.push_back(fb);
    }
    if (fs.empty()) {
      std::vector<Fq> alphas;
      if (m == 1) alphas.push_back(ExtField::make(p, 1, budget.seed)->zero());
      return constant_witness(g, p, 1, alphas, budget.seed);
    }
    UPoly<Fp> G = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) G = upoly_gcd(F, G, fs[i]);
    if (G.degree() == 0)
      throw InternalError("positive_witness called on an unsat system");
    auto fac = factor_univariate(F, G, budget.seed);
    const UPoly<Fp>* best = nullptr;
    for (const auto& [h, mult] : fac.factors)
      if (!best || h.degree() < best->degree()) best = &h;
    unsigned d = static_cast<unsigned>(best->degree());
    ExtFieldCtx E{ExtField::make(p, d, budget.seed)};
    Fq alpha = min_root_in(E, *best, budget.seed);
    return constant_witness(g, p, d, {alpha}, budget.seed);
  }
  // multivariate: exhaustive residue search per extension degree
  Conjunct eqs_only;
  eqs_only.nvars = m;
  eqs_only.eqs = reduced.eqs;
  for (unsigned k = 1; k <= std::max(budget.max_field_deg, 1u); ++k) {
    ExtFieldCtx E{ExtField::make(p, k, budget.seed)};
    Int total = 1;
    bool feasible = true;
    for (unsigned v = 0; v < m; ++v) {
      total *= E.size();
      if (!total.fits_ulong_p()) {
        feasible = false;
        break;
      }
    }
    if (!feasible || total.get_ui() > budget.max_level_assignments) {
      if (rep)
        rep->notes.push_back("residue search skipped at degree " +
                             std::to_string(k));
      continue;
    }
    std::uint64_t rs = E.size().get_ui();
    std::vector<Fq> point(m, E.zero());
    for (std::uint64_t idx = 0; idx < total.get_ui(); ++idx) {
      std::uint64_t rest = idx;
      for (unsigned v = 0; v < m; ++v) {
        point[v] = E.element_at(rest % rs);
        rest /= rs;
      }
      if (rep) ++rep->assignments_tried;
      if (eval_conjunct(E, eqs_only, point))
        return constant_witness(g, p, k, point, budget.seed);
    }
  }
  return std::nullopt;
}

std::optional<PrimeWitness> inequations_witness(const Conjunct& reduced,
                                                const GapSentence& g,
                                                std::uint64_t p,
                                                const DecideBudget& budget,
                                                BudgetReport* rep) {
  PrimeField F(p);
  const unsigned m = reduced.nvars;
  std::vector<MPoly<Fp>> neqs;
  std::uint64_t degsum = 0;
  for (const auto& gp : reduced.neqs) {
    auto red = zpoly_mod_p(F, gp);
    if (red.is_zero())
      throw InternalError("inequations_witness called with vanishing g");
    degsum += red.total_degree();
    neqs.push_back(std::move(red));
  }
  unsigned k = 1;
  {
    Int sz(static_cast<unsigned long>(p));
    while (sz <= Int(static_cast<unsigned long>(degsum))) {
      sz *= Int(static_cast<unsigned long>(p));
      ++k;
    }
  }
  ExtFieldCtx E{ExtField::make(p, k, budget.seed)};
  auto good = [&](const std::vector<Fq>& point) {
    for (const auto& gp : neqs) {
      Fq v = eval_zpoly(E, gp.map_coeffs<Int>([&](const Fp& c) {
                          return Int(static_cast<unsigned long>(c.v));
                        }),
                        point);
      if (E.is_zero(v)) return false;
    }
    return true;
  };
  // exhaustive when affordable, else seeded sampling (a positive fraction
  // of the grid works once p^k exceeds the total degree sum)
  Int total = 1;
  bool feasible = m > 0;
  for (unsigned v = 0; v < m; ++v) {
    total *= E.size();
    if (!total.fits_ulong_p()) feasible = false;
  }
  std::vector<Fq> point(m, E.zero());
  if (m == 0) return constant_witness(g, p, 1, {}, budget.seed);
  if (feasible && total.get_ui() <= budget.max_level_assignments) {
    std::uint64_t rs = E.size().get_ui();
    for (std::uint64_t idx = 0; idx < total.get_ui(); ++idx) {
      std::uint64_t rest = idx;
      for (unsigned v = 0; v < m; ++v) {
        point[v] = E.element_at(rest % rs);
        rest /= rs;
      }
      if (rep) ++rep->assignments_tried;
      if (good(point)) return constant_witness(g, p, k, point, budget.seed);
    }
    return std::nullopt;
  }
  Rng rng(mix_seed(budget.seed, p, 0x1e0 + m));
  std::uint64_t rs = E.size().fits_ulong_p() ? E.size().get_ui() : 0;
  if (rs == 0) return std::nullopt;
  for (std::uint64_t trial = 0; trial < budget.random_trials; ++trial) {
    for (unsigned v = 0; v < m; ++v) point[v] = E.element_at(rng.below(rs));
    if (rep) ++rep->assignments_tried;
    if (good(point)) return constant_witness(g, p, k, point, budget.seed);
  }
  return std::nullopt;
}

ConjunctVerdict decide_one_conjunct(const Conjunct& original, std::uint64_t p,
                                    const DecideBudget& budget) {
  std::vector<unsigned> var_map;
  Conjunct reduced = compress_vars(original, &var_map);
  ConjunctClass cls = classify(reduced);
  Conjunct padded = pad(reduced);
  GapSentence gap = to_gap(replicate(padded));

  if (cls == ConjunctClass::Separated)
    return decide_separated(reduced, gap, p, budget);

  if (cls == ConjunctClass::Positive || cls == ConjunctClass::InequationsOnly) {
    AcfResult acf = acf_decide_char_p(reduced, p, budget);
    if (acf.sat == AcfSat::Unsat) {
      NoCertificate cert = acf.vanish
                               ? NoCertificate(*acf.vanish)
                               : NoCertificate(*acf.cert);
      return make_no(reduced, gap, cls, std::move(cert));
    }
    BudgetReport rep;
    rep.max_field_deg = budget.max_field_deg;
    rep.max_ram = budget.max_ram;
    rep.max_cap = budget.max_cap;
    std::optional<PrimeWitness> w =
        cls == ConjunctClass::Positive
            ? positive_witness(reduced, gap, p, budget, &rep)
            : inequations_witness(reduced, gap, p, budget, &rep);
    if (w) return make_yes(reduced, gap, cls, std::move(*w));
    // the fragment verdict is Yes, but no witness fit the budget; report
    // honestly instead of emitting an unverified Yes
    ConjunctVerdict v;
    v.kind = ConjunctVerdict::Kind::Inconclusive;
    v.cls = cls;
    v.reduced = reduced;
    v.gap = gap;
    rep.notes.push_back("satisfiable fragment, witness synthesis exhausted");
    v.budget = rep;
    return v;
  }

  // general fragment
  PrimeField F(p);
  for (std::size_t k = 0; k < gap.gs.size(); ++k) {
    if (zpoly_mod_p(F, gap.gs[k]).is_zero())
      return make_no(reduced, gap, cls, PolyVanishesCert{p, k, gap.gs[k]});
  }
  {
    // necessary condition: the equations need a common residue root
    std::vector<MPoly<Fp>> eqs;
    for (const auto& f : gap.fs)
      if (!zpoly_mod_p(F, f).is_zero()) eqs.push_back(zpoly_mod_p(F, f));
    if (!eqs.empty()) {
      GroebnerOptions<Fp> opt;
      opt.pair_cap = budget.groebner_pair_cap;
      auto gb = buchberger(eqs, F.one(), opt);
      if (!gb.capped && gb.trivial)
        return make_no(reduced, gap, cls,
                       ResidueObstructionCert{p, eqs, gb.one_cofactors});
    }
  }
  BudgetReport rep;
  if (auto w = witness_search(gap, p, budget, &rep))
    return make_yes(reduced, gap, cls, std::move(*w));
  ConjunctVerdict v;
  v.kind = ConjunctVerdict::Kind::Inconclusive;
  v.cls = cls;
  v.reduced = reduced;
  v.gap = gap;
  v.budget = rep;
  return v;
}

}  // namespace

Verdict decide_conjuncts_mod_p(const std::vector<Conjunct>& dnf,
                               std::uint64_t p, const DecideBudget& budget) {
  Verdict out;
  out.p = p;
  bool all_no = true;
  for (std::size_t i = 0; i < dnf.size(); ++i) {
    ConjunctVerdict cv = decide_one_conjunct(dnf[i], p, budget);
    if (cv.var_map.empty()) {
      std::vector<unsigned> vm;
      compress_vars(dnf[i], &vm);
      cv.var_map = std::move(vm);
    }
    if (cv.kind == ConjunctVerdict::Kind::Yes &&
        out.yes_index == static_cast<std::size_t>(-1)) {
      out.yes_index = i;
    }
    if (cv.kind != ConjunctVerdict::Kind::No) all_no = false;
    out.conjuncts.push_back(std::move(cv));
  }
  if (out.yes_index != static_cast<std::size_t>(-1)) {
    out.kind = Verdict::Kind::Yes;
  } else if (all_no && !dnf.empty()) {
    out.kind = Verdict::Kind::No;
  } else {
    out.kind = Verdict::Kind::Inconclusive;
  }
  return out;
}

Verdict decide_mod_p(const Sentence& s, std::uint64_t p,
                     const DecideBudget& budget) {
  auto dnf = to_dnf(s.matrix, budget.dnf_cap);
  return decide_conjuncts_mod_p(dnf, p, budget);
}

namespace {

bool check_ord_profile(const Conjunct& reduced, const OrdProfileCert& cert) {
  PrimeField F(cert.p);
  Conjunct padded = pad(reduced);
  GapSentence gap = to_gap(replicate(padded));
  std::vector<UPoly<Fp>> fbar, gbar;
  for (const auto& f : gap.fs) fbar.push_back(reduce_separated(F, f));
  for (const auto& gp : gap.gs) gbar.push_back(reduce_separated(F, gp));
  if (cert.f_ord.size() != fbar.size() || cert.g_ord.size() != gbar.size())
    return false;
  if (cert.failing_block >= gbar.size()) return false;
  // basis sanity: monic irreducible, pairwise coprime
  for (const auto& h : cert.basis) {
    if (h.degree() < 1) return false;
    if (!F.eq(h.c.back(), F.one())) return false;
    if (!is_irreducible(F, h)) return false;
  }
  for (std::size_t i = 0; i < cert.basis.size(); ++i)
    for (std::size_t j = i + 1; j < cert.basis.size(); ++j)
      if (upoly_gcd(F, cert.basis[i], cert.basis[j]).degree() != 0)
        return false;
  // reconstruction: input = lc * prod basis^ord, exactly
  auto check_row = [&](const UPoly<Fp>& input, const std::vector<long>& row) {
    if (row.size() != cert.basis.size()) return false;
    if (input.is_zero()) {
      for (long o : row)
        if (o >= 0) return false;
      return true;
    }
    UPoly<Fp> acc = upoly_const(F, upoly_lc(F, input));
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 0) return false;
      for (long t = 0; t < row[j]; ++t)
        acc = upoly_mul(F, acc, cert.basis[j]);
    }
    return upoly_eq(F, acc, input);
  };
  bool any_nonzero_f = false;
  for (std::size_t i = 0; i < fbar.size(); ++i) {
    if (!check_row(fbar[i], cert.f_ord[i])) return false;
    if (!fbar[i].is_zero()) any_nonzero_f = true;
  }
  for (std::size_t k = 0; k < gbar.size(); ++k) {
    if (gbar[k].is_zero()) return false;  // that case needs PolyVanishes
    if (!check_row(gbar[k], cert.g_ord[k])) return false;
  }
  if (!any_nonzero_f) return false;  // all-zero equations cannot yield a No
  // the failing block must fail the criterion at every basis element; any
  // irreducible outside the basis has order zero in some nonzero f
  if (cert.f_ord_min.size() != cert.basis.size()) return false;
  for (std::size_t j = 0; j < cert.basis.size(); ++j) {
    long mn = -1;
    for (std::size_t i = 0; i < fbar.size(); ++i) {
      long o = cert.f_ord[i][j];
      if (o < 0) continue;
      if (mn < 0 || o < mn) mn = o;
    }
    if (mn != cert.f_ord_min[j]) return false;
    if (mn < 0) return false;  // impossible: some f is nonzero
    if (mn > cert.g_ord[cert.failing_block][j]) return false;  // criterion holds!
  }
  return true;
}

bool check_residue_obstruction(const Conjunct& reduced,
                               const ResidueObstructionCert& cert) {
  PrimeField F(cert.p);
  if (cert.gens.empty()) return false;
  if (!check_one_cofactors(cert.gens, cert.cofactors, F.one())) return false;
  // every generator must come from the conjunct: either a reduced equation
  // or a Rabinowitsch inversion row y*g - 1 for a reduced inequation
  const unsigned total = cert.gens[0].nvars();
  const unsigned m = reduced.nvars;
  if (total < m) return false;
  std::vector<unsigned> keep(m);
  for (unsigned i = 0; i < m; ++i) keep[i] = i;
  for (const auto& gen : cert.gens) {
    bool matched = false;
    for (const auto& f : reduced.eqs) {
      auto red = f.map_coeffs<Fp>([&](const Int& c) { return F.from_int(c); })
                     .reindexed(keep, total);
      if (red == gen) {
        matched = true;
        break;
      }
    }
    for (std::size_t k = 0; !matched && k < reduced.neqs.size(); ++k) {
      auto red = reduced.neqs[k]
                     .map_coeffs<Fp>([&](const Int& c) { return F.from_int(c); })
                     .reindexed(keep, total);
      MPoly<Fp> y = MPoly<Fp>::variable(
          total, m + static_cast<unsigned>(k), F.one());
      if (red * y - MPoly<Fp>::constant(total, F.one()) == gen) matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

bool check_poly_vanishes(const Conjunct& reduced, const PolyVanishesCert& cert) {
  PrimeField F(cert.p);
  if (!zpoly_mod_p(F, cert.g).is_zero()) return false;
  // the certified polynomial must be one of the conjunct's inequations (or
  // an inequation of its padded gap form, which only adds the constant 1)
  for (const auto& gp : reduced.neqs)
    if (gp == cert.g) return true;
  Conjunct padded = pad(reduced);
  for (const auto& gp : padded.neqs)
    if (gp == cert.g) return true;
  return false;
}

}  // namespace

bool check_certificate(const Conjunct& reduced, const NoCertificate& cert) {
  if (const auto* c = std::get_if<OrdProfileCert>(&cert))
    return check_ord_profile(reduced, *c);
  if (const auto* c = std::get_if<ResidueObstructionCert>(&cert))
    return check_residue_obstruction(reduced, *c);
  return check_poly_vanishes(reduced, std::get<PolyVanishesCert>(cert));
}

}  // namespace abmod
