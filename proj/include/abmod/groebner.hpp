#pragma once

// Buchberger with degree-graded pair selection over an exact field
// (F_p, F_{p^k} or Q). Tracks cofactors so that a trivial ideal comes with
// a checkable identity sum cof_i * gen_i = 1 rather than a bare verdict.

#include <algorithm>
#include <functional>
#include <vector>

#include "abmod/errors.hpp"
#include "abmod/mpoly.hpp"

namespace abmod {

inline bool exp_divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exp exp_sub(const Exp& a, const Exp& b) {
  Exp r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

inline Exp exp_lcm(const Exp& a, const Exp& b) {
  Exp r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

template <class FE>
MPoly<FE> mpoly_term_mul(const MPoly<FE>& f, const Exp& e, const FE& c) {
  MPoly<FE> r(f.nvars());
  for (const auto& [fe, fc] : f.terms()) {
    Exp ne = fe;
    for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += e[i];
    r.add_term(std::move(ne), fc * c);
  }
  return r;
}

template <class FE>
struct GroebnerResult {
  bool trivial = false;               // 1 lies in the ideal
  bool capped = false;                // pair budget ran out
  std::vector<MPoly<FE>> basis;
  std::vector<MPoly<FE>> one_cofactors;  // when trivial
};

template <class FE>
struct GroebnerOptions {
  std::size_t pair_cap = 200000;
  bool want_cofactors = true;
  // sees every polynomial added to the working basis (inputs included)
  std::function<void(const MPoly<FE>&)> poly_trace;
};

template <class FE>
class Buchberger {
 public:
  Buchberger(std::vector<MPoly<FE>> gens, FE one, GroebnerOptions<FE> opt)
      : gens_(std::move(gens)), one_(std::move(one)), opt_(std::move(opt)) {}

  GroebnerResult<FE> run() {
    GroebnerResult<FE> res;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      Work w;
      w.p = gens_[i];
      if (opt_.want_cofactors) {
        w.rep.assign(gens_.size(), MPoly<FE>(arity()));
        w.rep[i] = MPoly<FE>::constant(arity(), one_);
      }
      if (add_poly(std::move(w), res)) return res;
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > opt_.pair_cap) {
        res.capped = true;
        return res;
      }
      auto pr = pop_pair();
      const Work& a = basis_[pr.first];
      const Work& b = basis_[pr.second];
      const Exp& la = a.p.leading().first;
      const Exp& lb = b.p.leading().first;
      // product criterion: coprime leading monomials reduce to zero
      bool coprime = true;
      for (std::size_t i = 0; i < la.size(); ++i)
        if (la[i] > 0 && lb[i] > 0) coprime = false;
      if (coprime) continue;
      Work s = spoly(a, b);
      if (add_poly(std::move(s), res)) return res;
    }
    for (const auto& w : basis_) res.basis.push_back(w.p);
    return res;
  }

 private:
  struct Work {
    MPoly<FE> p;
    std::vector<MPoly<FE>> rep;
  };

  unsigned arity() const {
    return gens_.empty() ? 0 : gens_.front().nvars();
  }

  Work spoly(const Work& a, const Work& b) {
    const auto& [la, ca] = a.p.leading();
    const auto& [lb, cb] = b.p.leading();
    Exp l = exp_lcm(la, lb);
    FE inv_ca = one_ / ca;
    FE inv_cb = one_ / cb;
    Work s;
    s.p = mpoly_term_mul(a.p, exp_sub(l, la), inv_ca) -
          mpoly_term_mul(b.p, exp_sub(l, lb), inv_cb);
    if (opt_.want_cofactors) {
      s.rep.reserve(a.rep.size());
      for (std::size_t i = 0; i < a.rep.size(); ++i) {
        s.rep.push_back(mpoly_term_mul(a.rep[i], exp_sub(l, la), inv_ca) -
                        mpoly_term_mul(b.rep[i], exp_sub(l, lb), inv_cb));
      }
    }
    return s;
  }

  void reduce(Work& w) const {
    bool changed = true;
    while (changed && !w.p.is_zero()) {
      changed = false;
      const auto& [le, lc] = w.p.leading();
      for (const auto& b : basis_) {
        const auto& [ble, blc] = b.p.leading();
        if (!exp_divides(ble, le)) continue;
        FE q = lc / blc;
        Exp shift = exp_sub(le, ble);
        w.p = w.p - mpoly_term_mul(b.p, shift, q);
        if (opt_.want_cofactors) {
          for (std::size_t i = 0; i < w.rep.size(); ++i)
            w.rep[i] = w.rep[i] - mpoly_term_mul(b.rep[i], shift, q);
        }
        changed = true;
        break;
      }
    }
  }

  // returns true when the ideal is proven trivial
  bool add_poly(Work w, GroebnerResult<FE>& res) {
    reduce(w);
    if (w.p.is_zero()) return false;
    if (opt_.poly_trace) opt_.poly_trace(w.p);
    if (w.p.total_degree() == 0) {
      res.trivial = true;
      if (opt_.want_cofactors) {
        const FE& c = w.p.terms().begin()->second;
        FE s = one_ / c;
        res.one_cofactors.clear();
        for (auto& r : w.rep) res.one_cofactors.push_back(r.scaled(s));
      }
      return true;
    }
    std::size_t idx = basis_.size();
    basis_.push_back(std::move(w));
    for (std::size_t i = 0; i < idx; ++i) pairs_.push_back({i, idx});
    return false;
  }

  std::pair<std::size_t, std::size_t> pop_pair() {
    // degree-graded selection: smallest lcm total degree first
    std::size_t best = 0;
    std::uint32_t best_deg = ~std::uint32_t{0};
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto& [a, b] = pairs_[i];
      Exp l = exp_lcm(basis_[a].p.leading().first,
                      basis_[b].p.leading().first);
      std::uint32_t d = exp_total(l);
      if (d < best_deg) {
        best_deg = d;
        best = i;
      }
    }
    auto pr = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return pr;
  }

  std::vector<MPoly<FE>> gens_;
  FE one_;
  GroebnerOptions<FE> opt_;
  std::vector<Work> basis_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

template <class FE>
GroebnerResult<FE> buchberger(std::vector<MPoly<FE>> gens, FE one,
                              GroebnerOptions<FE> opt = {}) {
  // drop zero generators; an empty list generates the zero ideal
  std::vector<MPoly<FE>> nz;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero()) {
      nz.push_back(gens[i]);
      origin.push_back(i);
    }
  if (nz.empty()) {
    GroebnerResult<FE> res;
    return res;
  }
  Buchberger<FE> engine(nz, one, opt);
  GroebnerResult<FE> res = engine.run();
  if (res.trivial && opt.want_cofactors) {
    // re-expand cofactors to the original generator positions
    std::vector<MPoly<FE>> full(gens.size(), MPoly<FE>(gens[0].nvars()));
    for (std::size_t i = 0; i < origin.size(); ++i)
      full[origin[i]] = res.one_cofactors[i];
    res.one_cofactors = std::move(full);
  }
  return res;
}

// Independent check of a triviality certificate: sum cof_i * gen_i == 1.
template <class FE>
bool check_one_cofactors(const std::vector<MPoly<FE>>& gens,
                         const std::vector<MPoly<FE>>& cofs, FE one) {
  if (gens.size() != cofs.size() || gens.empty()) return false;
  MPoly<FE> acc(gens[0].nvars());
  for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + cofs[i] * gens[i];
  return acc == MPoly<FE>::constant(gens[0].nvars(), one);
}

}  // namespace abmod
