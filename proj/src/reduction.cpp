#include "abmod/reduction.hpp"

#include <set>

#include "abmod/errors.hpp"

namespace abmod {

std::string to_string(ConjunctClass c) {
  switch (c) {
    case ConjunctClass::Positive: return "positive";
    case ConjunctClass::InequationsOnly: return "inequations_only";
    case ConjunctClass::Separated: return "separated";
    case ConjunctClass::General: return "general";
  }
  return "?";
}

ConjunctClass classify(const Conjunct& c) {
  if (c.neqs.empty()) return ConjunctClass::Positive;
  if (c.eqs.empty()) return ConjunctClass::InequationsOnly;
  std::set<unsigned> used;
  for (const auto& f : c.eqs)
    for (unsigned v : f.support_vars()) used.insert(v);
  for (const auto& g : c.neqs)
    for (unsigned v : g.support_vars()) used.insert(v);
  if (used.size() <= 1) return ConjunctClass::Separated;
  return ConjunctClass::General;
}

Conjunct pad(const Conjunct& c) {
  Conjunct out = c;
  std::size_t n = std::max<std::size_t>({c.eqs.size(), c.neqs.size(), 1});
  while (out.eqs.size() < n) out.eqs.push_back(ZPoly(c.nvars));
  while (out.neqs.size() < n)
    out.neqs.push_back(ZPoly::constant(c.nvars, Int(1)));
  return out;
}

Conjunct compress_vars(const Conjunct& c, std::vector<unsigned>* old_of) {
  std::set<unsigned> used;
  for (const auto& f : c.eqs)
    for (unsigned v : f.support_vars()) used.insert(v);
  for (const auto& g : c.neqs)
    for (unsigned v : g.support_vars()) used.insert(v);
  std::vector<unsigned> old_index(used.begin(), used.end());
  std::vector<unsigned> new_index(c.nvars, 0);
  for (unsigned i = 0; i < old_index.size(); ++i)
    new_index[old_index[i]] = i;
  unsigned m = static_cast<unsigned>(old_index.size());
  Conjunct out;
  out.nvars = m;
  for (const auto& f : c.eqs) out.eqs.push_back(f.reindexed(new_index, m));
  for (const auto& g : c.neqs) out.neqs.push_back(g.reindexed(new_index, m));
  if (old_of) *old_of = std::move(old_index);
  return out;
}

ReplicatedConjunct replicate(const Conjunct& balanced) {
  if (balanced.eqs.size() != balanced.neqs.size() || balanced.eqs.empty())
    throw InputError("replicate expects a balanced nonempty conjunct");
  ReplicatedConjunct r;
  r.blocks = static_cast<unsigned>(balanced.eqs.size());
  r.arity = balanced.nvars;
  r.eqs = balanced.eqs;
  r.neqs = balanced.neqs;
  return r;
}

Conjunct ReplicatedConjunct::materialize() const {
  const unsigned n = blocks, m = arity;
  Conjunct out;
  out.nvars = n * m;
  for (unsigned j = 0; j < n; ++j) {
    std::vector<unsigned> shift(m);
    for (unsigned v = 0; v < m; ++v) shift[v] = j * m + v;
    for (const auto& f : eqs) out.eqs.push_back(f.reindexed(shift, n * m));
  }
  for (unsigned k = 0; k < n; ++k) {
    std::vector<unsigned> shift(m);
    for (unsigned v = 0; v < m; ++v) shift[v] = k * m + v;
    out.neqs.push_back(neqs[k].reindexed(shift, n * m));
  }
  return out;
}

std::vector<std::string> ReplicatedConjunct::block_var_names(
    const std::vector<std::string>& orig) const {
  std::vector<std::string> out;
  for (unsigned j = 0; j < blocks; ++j) {
    for (unsigned v = 0; v < arity; ++v) {
      std::string base = v < orig.size() ? orig[v] : "x" + std::to_string(v);
      out.push_back(blocks == 1 ? base : base + "." + std::to_string(j + 1));
    }
  }
  return out;
}

GapSentence to_gap(const ReplicatedConjunct& r) {
  GapSentence g;
  g.blocks = r.blocks;
  g.arity = r.arity;
  g.fs = r.eqs;
  g.gs = r.neqs;
  return g;
}

std::string GapSentence::structural_digest() const {
  std::vector<std::string> names;
  for (unsigned v = 0; v < arity; ++v) names.push_back("x" + std::to_string(v));
  std::string out = "n=" + std::to_string(blocks) + ";m=" +
                    std::to_string(arity) + ";F=";
  for (const auto& f : fs) out += "[" + zpoly_to_string(f, names) + "]";
  out += ";G=";
  for (const auto& gp : gs) out += "[" + zpoly_to_string(gp, names) + "]";
  return out;
}

}  // namespace abmod
