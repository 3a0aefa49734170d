#pragma once

// Characteristic-zero univariate support: primitive forms over Z, Yun
// squarefree decomposition over Q, gcd-free coprime refinement, and exact
// Sylvester resultants/discriminants. This is what the generic (char-0)
// route of the all-primes driver runs on.

#include <vector>

#include "abmod/bigint.hpp"
#include "abmod/upoly.hpp"

namespace abmod {

// f = (num/den) * prim, prim a primitive integer polynomial with positive
// leading coefficient.
struct PrimitiveForm {
  Int num = 0, den = 1;
  UPoly<Int> prim;
};

PrimitiveForm primitive_form(const UPoly<Rat>& f);
UPoly<Rat> upoly_rat_from_int(const UPoly<Int>& f);
UPoly<Int> upoly_int_from_z(const UPoly<Int>& f);  // identity; for symmetry

// Yun's algorithm (char 0): monic pairwise-coprime squarefree parts with
// multiplicities, product = monic(f).
std::vector<std::pair<UPoly<Rat>, unsigned>> yun_squarefree(
    const UPoly<Rat>& f);

// Refine monic squarefree polynomials into a pairwise coprime monic
// squarefree basis; every input is a product of basis elements.
std::vector<UPoly<Rat>> coprime_refine(std::vector<UPoly<Rat>> polys);

// Multiplicity profile against a refined basis. For each nonzero input i,
// input_i = residual_i * prod basis_j^{mult[i][j]} holds exactly, which
// also pins the per-irreducible multiplicities (they are constant across
// each basis element).
struct RatOrdProfile {
  std::vector<UPoly<Rat>> basis;
  std::vector<std::vector<unsigned>> mult;  // [input][basis]
  std::vector<bool> input_is_zero;
  std::vector<Rat> residual;
};

RatOrdProfile rat_ord_profile(const std::vector<UPoly<Rat>>& inputs);

// Sylvester resultant by fraction-free (Bareiss) elimination; exact.
Int resultant_int(const UPoly<Int>& a, const UPoly<Int>& b);

// disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f); degree <= 1 gives 1.
Int discriminant_int(const UPoly<Int>& f);

}  // namespace abmod
