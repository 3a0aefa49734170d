#pragma once

#include "abmod/bigint.hpp"
#include "abmod/upoly.hpp"

namespace abmod {

// n-th cyclotomic polynomial over Z, computed by dividing x^n - 1 by the
// product of the lower-index cyclotomics. Memoized process-wide.
UPoly<Int> cyclotomic(unsigned n);

// Exact division by a monic divisor over Z; remainder must vanish.
UPoly<Int> upoly_div_exact_monic(const UPoly<Int>& a, const UPoly<Int>& b);

}  // namespace abmod
