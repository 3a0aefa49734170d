#include "abmod/json_out.hpp"

namespace abmod {

namespace {
std::vector<std::string> mapped_names(const std::vector<unsigned>& var_map,
                                      const std::vector<std::string>& orig) {
  std::vector<std::string> out;
  for (unsigned idx : var_map)
    out.push_back(idx < orig.size() ? orig[idx] : "x" + std::to_string(idx));
  return out;
}
}  // namespace

std::vector<std::string> gap_var_names(const GapSentence& g,
                                       const std::vector<std::string>& orig) {
  std::vector<std::string> out;
  for (unsigned j = 0; j < g.blocks; ++j) {
    for (unsigned v = 0; v < g.arity; ++v) {
      std::string base = v < orig.size() ? orig[v] : "x" + std::to_string(v);
      out.push_back(g.blocks == 1 ? base : base + "." + std::to_string(j + 1));
    }
  }
  return out;
}

Json witness_json(const PrimeWitness& w,
                  const std::vector<std::string>& names) {
  Json j;
  j["p"] = w.p;
  j["k"] = w.k;
  j["e"] = w.e;
  j["cap"] = rat_string(w.cap);
  std::vector<std::uint64_t> mod;
  for (const auto& c : w.ctx->field()->modulus().c) mod.push_back(c.v);
  j["field_modulus"] = mod;
  Json assign = Json::object();
  for (std::size_t i = 0; i < w.assignment.size(); ++i) {
    std::string name = i < names.size() ? names[i] : "x" + std::to_string(i);
    assign[name] = w.ctx->to_string(w.assignment[i]);
  }
  j["assignment"] = assign;
  j["margin"] = {{"min_upper", to_string(w.margin.min_upper)},
                 {"max_lower", to_string(w.margin.max_lower)}};
  return j;
}

Json certificate_json(const NoCertificate& c,
                      const std::vector<std::string>& names) {
  Json j;
  j["type"] = certificate_kind(c);
  if (const auto* ord = std::get_if<OrdProfileCert>(&c)) {
    j["p"] = ord->p;
    PrimeField F(ord->p);
    std::vector<std::string> basis;
    for (const auto& h : ord->basis) basis.push_back(upoly_to_string(F, h));
    j["basis"] = basis;
    j["f_ord"] = ord->f_ord;
    j["g_ord"] = ord->g_ord;
    j["f_ord_min"] = ord->f_ord_min;
    j["failing_block"] = ord->failing_block;
    j["note"] = "-1 encodes an infinite order (zero polynomial)";
  } else if (const auto* res = std::get_if<ResidueObstructionCert>(&c)) {
    j["p"] = res->p;
    std::vector<std::string> gen_names;
    for (unsigned i = 0; i < (res->gens.empty() ? 0u : res->gens[0].nvars());
         ++i)
      gen_names.push_back(i < names.size() ? names[i]
                                           : "y" + std::to_string(i));
    std::vector<std::string> gens, cofs;
    auto print_fp = [&](const MPoly<Fp>& f) {
      auto zf = f.map_coeffs<Int>(
          [](const Fp& v) { return Int(static_cast<unsigned long>(v.v)); });
      return zpoly_to_string(zf, gen_names);
    };
    for (const auto& g : res->gens) gens.push_back(print_fp(g));
    for (const auto& g : res->cofactors) cofs.push_back(print_fp(g));
    j["generators"] = gens;
    j["one_cofactors"] = cofs;
    j["identity"] = "sum(cofactor * generator) = 1 over F_p";
  } else {
    const auto& v = std::get<PolyVanishesCert>(c);
    j["p"] = v.p;
    j["inequation_index"] = v.neq_index;
    j["polynomial"] = zpoly_to_string(v.g, names);
  }
  return j;
}

Json budget_json(const BudgetReport& r) {
  Json j;
  j["max_field_deg"] = r.max_field_deg;
  j["max_ram"] = r.max_ram;
  j["max_cap"] = r.max_cap;
  j["assignments_tried"] = r.assignments_tried;
  j["notes"] = r.notes;
  return j;
}

Json verdict_json(const Verdict& v, const Sentence& s) {
  Json j;
  j["verdict"] = to_string(v.kind);
  j["p"] = v.p;
  Json conjuncts = Json::array();
  for (const auto& cv : v.conjuncts) {
    Json cj;
    auto names = mapped_names(cv.var_map, s.vars);
    cj["class"] = to_string(cv.cls);
    cj["conjunct"] = conjunct_to_string(cv.reduced, names);
    switch (cv.kind) {
      case ConjunctVerdict::Kind::Yes:
        cj["verdict"] = "yes";
        cj["witness"] = witness_json(*cv.witness, gap_var_names(cv.gap, names));
        break;
      case ConjunctVerdict::Kind::No:
        cj["verdict"] = "no";
        cj["certificate"] =
            certificate_json(*cv.certificate, gap_var_names(cv.gap, names));
        break;
      case ConjunctVerdict::Kind::Inconclusive:
        cj["verdict"] = "inconclusive";
        if (cv.budget) cj["budget"] = budget_json(*cv.budget);
        break;
    }
    conjuncts.push_back(std::move(cj));
  }
  j["conjuncts"] = conjuncts;
  if (v.kind == Verdict::Kind::Yes) {
    const auto& cv = v.conjuncts[v.yes_index];
    j["witness"] = witness_json(
        *cv.witness, gap_var_names(cv.gap, mapped_names(cv.var_map, s.vars)));
  }
  return j;
}

Json char0_json(const Char0Verdict& v, const Sentence& s) {
  Json j;
  j["verdict"] = to_string(v.kind);
  Json conjuncts = Json::array();
  for (const auto& cv : v.conjuncts) {
    Json cj;
    cj["class"] = to_string(cv.cls);
    cj["conjunct"] = conjunct_to_string(cv.reduced, mapped_names(cv.var_map, s.vars));
    cj["verdict"] = cv.kind == Char0ConjunctVerdict::Kind::Yes  ? "yes"
                    : cv.kind == Char0ConjunctVerdict::Kind::No ? "no"
                                                                : "inconclusive";
    cj["detail"] = cv.detail;
    conjuncts.push_back(std::move(cj));
  }
  j["conjuncts"] = conjuncts;
  return j;
}

Json bad_primes_json(const BadPrimeSet& b) {
  Json arr = Json::array();
  for (const auto& bp : b.primes) {
    Json j;
    j["p"] = bp.p.get_str();
    j["provenance"] = bp.provenance;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json all_primes_json(const AllPrimesVerdict& v, const Sentence& s) {
  Json j;
  j["verdict"] = to_string(v.kind);
  if (v.kind == AllPrimesVerdict::Kind::FailsAt)
    j["failing_prime"] = v.failing_prime;
  j["char0"] = char0_json(v.char0, s);
  j["bad_primes"] = bad_primes_json(v.bad);
  Json per = Json::array();
  for (const auto& o : v.checked) {
    Json pj;
    pj["p"] = o.p;
    pj["from_bad_set"] = o.from_bad_set;
    pj["result"] = verdict_json(o.verdict, s);
    per.push_back(std::move(pj));
  }
  j["per_prime"] = per;
  j["unresolved"] = v.unresolved;
  if (v.contradiction) j["transfer_contradiction"] = true;
  j["assumptions"] = v.assumptions;
  return j;
}

Json reduce_json(const Sentence& s, std::size_t dnf_cap) {
  Json j;
  j["sentence"] = to_string(s);
  auto dnf = to_dnf(s.matrix, dnf_cap);
  Json conjuncts = Json::array();
  for (const auto& c : dnf) {
    Json cj;
    cj["dnf"] = conjunct_to_string(c, s.vars);
    std::vector<unsigned> var_map;
    Conjunct reduced = compress_vars(c, &var_map);
    auto rnames = mapped_names(var_map, s.vars);
    cj["class"] = to_string(classify(reduced));
    Conjunct padded = pad(reduced);
    cj["padded"] = conjunct_to_string(padded, rnames);
    ReplicatedConjunct repl = replicate(padded);
    auto names = repl.block_var_names(rnames);
    cj["replicated"] = {{"blocks", repl.blocks},
                        {"arity", repl.arity},
                        {"literals",
                         conjunct_to_string(repl.materialize(), names)}};
    GapSentence gap = to_gap(repl);
    Json gj;
    gj["blocks"] = gap.blocks;
    gj["arity"] = gap.arity;
    std::vector<std::string> fs, gs;
    std::vector<std::string> base_names;
    for (unsigned vv = 0; vv < gap.arity; ++vv)
      base_names.push_back(vv < rnames.size() ? rnames[vv]
                                              : "x" + std::to_string(vv));
    for (const auto& f : gap.fs) fs.push_back(zpoly_to_string(f, base_names));
    for (const auto& g : gap.gs) gs.push_back(zpoly_to_string(g, base_names));
    gj["upper"] = fs;
    gj["lower"] = gs;
    gj["semantics"] =
        "exists blocks in the valuation ring with every v(upper_i(block_j)) "
        "strictly above every v(lower_k(block_k))";
    cj["gap"] = gj;
    conjuncts.push_back(std::move(cj));
  }
  j["conjuncts"] = conjuncts;
  return j;
}

}  // namespace abmod
