#pragma once

// Deliberately naive reference implementations, kept apart from the library code they check.

#include "tqft/diagram.hpp"
#include "tqft/laurent.hpp"
#include "tqft/params.hpp"

#include <array>
#include <vector>

namespace tqft::oracle {

// Sum over all 2^c smoothings of A^(#A - #B) d^(#loops), loops counted by union-find.
LaurentPoly state_sum_bracket(const LinkDiagram& d);

// TL product computed by gluing operator tangles with compose().
TLProduct tl_multiply_via_tangles(const PlanarMatching& a, const PlanarMatching& b);

// Classical Gram-Schmidt on the basis vectors e_0, e_1 with the bilinear form g
// (g[i][j] = <e_i|e_j>). Returns coordinates of the orthonormal vectors in that basis.
std::array<std::array<cplx, 2>, 2> gram_schmidt(const std::array<std::array<cplx, 2>, 2>& g);

} // namespace tqft::oracle
