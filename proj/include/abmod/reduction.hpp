#pragma once

#include <string>
#include <vector>

#include "abmod/formula.hpp"

namespace abmod {

enum class ConjunctClass { Positive, InequationsOnly, Separated, General };

std::string to_string(ConjunctClass c);

// Positive: no inequations before padding. InequationsOnly: no equations
// before padding. Separated: at most one variable occurs. General: the rest.
ConjunctClass classify(const Conjunct& c);

// Balance the conjunct: pad equations with 0 (0 = 0 always holds) and
// inequations with 1 (1 != 0 holds in every ring with 1 != 0) until
// |eqs| = |neqs| = max(|eqs|, |neqs|, 1).
Conjunct pad(const Conjunct& c);

// Restrict a conjunct to the variables that actually occur; old_of[i] is the
// original index of compressed variable i.
Conjunct compress_vars(const Conjunct& c, std::vector<unsigned>* old_of);

// Balanced conjunct with n = |eqs| = |neqs| blocks of m variables each.
// Block j owns variables [j*m, (j+1)*m) of the materialized form; the stored
// polynomials keep the original m-variable arity.
struct ReplicatedConjunct {
  unsigned blocks = 0;  // n
  unsigned arity = 0;   // m
  std::vector<ZPoly> eqs;   // f_1..f_n, each in m variables
  std::vector<ZPoly> neqs;  // g_1..g_n, each in m variables

  // literal set over n*m fresh variables:
  //   f_i(x_j) = 0 for all i, j and g_i(x_i) != 0 for all i
  Conjunct materialize() const;
  std::vector<std::string> block_var_names(
      const std::vector<std::string>& orig) const;
};

ReplicatedConjunct replicate(const Conjunct& balanced);

// The p-uniform valuation-gap form: find x_1..x_n in the valuation ring
// with every v(f_i(x_j)) strictly above every v(g_k(x_k)).
struct GapSentence {
  unsigned blocks = 0;  // n
  unsigned arity = 0;   // m
  std::vector<ZPoly> fs;  // upper family; paired with every block (n^2 pairs)
  std::vector<ZPoly> gs;  // lower family; g_k paired with block k only

  std::string structural_digest() const;  // p-independent by construction
};

GapSentence to_gap(const ReplicatedConjunct& r);

}  // namespace abmod
