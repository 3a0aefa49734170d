#pragma once

#include <string>
#include <vector>

#include "abmod/mpoly.hpp"

namespace abmod {

enum class Rel { Eq, Neq };

// Atomic constraint "poly REL 0"; negation was already folded into rel.
struct Literal {
  ZPoly poly;
  Rel rel;
};

// Quantifier-free matrix: And/Or tree over literals, no negation nodes.
struct Formula {
  enum class Kind { Lit, And, Or };

  Kind kind = Kind::Lit;
  Literal lit;                 // when kind == Lit
  std::vector<Formula> kids;   // when kind == And/Or

  static Formula literal(Literal l) {
    Formula f;
    f.kind = Kind::Lit;
    f.lit = std::move(l);
    return f;
  }
  static Formula conj(std::vector<Formula> kids);
  static Formula disj(std::vector<Formula> kids);
};

// One DNF branch: conjunction of equations and inequations over Z.
struct Conjunct {
  std::vector<ZPoly> eqs;
  std::vector<ZPoly> neqs;
  unsigned nvars = 0;
};

// Existential input sentence: variables are implicitly bound.
struct Sentence {
  std::vector<std::string> vars;
  Formula matrix;
};

Sentence parse_sentence(const std::string& text);

std::string to_string(const Sentence& s);
std::string formula_to_string(const Formula& f,
                              const std::vector<std::string>& names);
std::string conjunct_to_string(const Conjunct& c,
                               const std::vector<std::string>& names);

// Distributes Or over And; duplicate literals inside a conjunct are removed.
// Throws ResourceError when the number of conjuncts would exceed the cap.
std::vector<Conjunct> to_dnf(const Formula& f, std::size_t conjunct_cap);

template <class Ring>
bool eval_literal(const Ring& R, const Literal& l,
                  const std::vector<typename Ring::Elem>& point) {
  auto v = eval_zpoly(R, l.poly, point);
  bool zero = R.is_zero(v);
  return l.rel == Rel::Eq ? zero : !zero;
}

template <class Ring>
bool eval_formula(const Ring& R, const Formula& f,
                  const std::vector<typename Ring::Elem>& point) {
  switch (f.kind) {
    case Formula::Kind::Lit:
      return eval_literal(R, f.lit, point);
    case Formula::Kind::And:
      for (const auto& k : f.kids)
        if (!eval_formula(R, k, point)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& k : f.kids)
        if (eval_formula(R, k, point)) return true;
      return false;
  }
  return false;
}

template <class Ring>
bool eval_conjunct(const Ring& R, const Conjunct& c,
                   const std::vector<typename Ring::Elem>& point) {
  for (const auto& f : c.eqs)
    if (!R.is_zero(eval_zpoly(R, f, point))) return false;
  for (const auto& g : c.neqs)
    if (R.is_zero(eval_zpoly(R, g, point))) return false;
  return true;
}

}  // namespace abmod
