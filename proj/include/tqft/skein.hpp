#pragma once

#include "tqft/diagram.hpp"
#include "tqft/laurent.hpp"
#include "tqft/params.hpp"

#include <cstddef>
#include <map>

namespace tqft {

struct BracketOptions {
    std::size_t max_crossings = 24;
};

// Unnormalized Kauffman bracket: empty diagram 1, each free loop d = -A^2 - A^-2.
// Resolves crossings recursively in a frontier-friendly order and memoizes on the
// canonical form of the remaining crossings. The cache lives for one call.
LaurentPoly kauffman_bracket(const LinkDiagram& d, const BracketOptions& opts = {});
// Throws OpenBoundary if t has endpoints.
LaurentPoly kauffman_bracket(const TangleDiagram& t, const BracketOptions& opts = {});

// <bra|ket>: glue the mirror image of bra onto ket point to point and take the bracket.
LaurentPoly bracket_of_tangle_pairing(const TangleDiagram& bra, const TangleDiagram& ket,
                                      const BracketOptions& opts = {});

// Skein expansion of a ket tangle into crossingless wirings, loops already absorbed.
std::map<PlanarMatching, LaurentPoly> expand_tangle(const TangleDiagram& ket, const BracketOptions& opts = {});

// Substitute A. Exact integer arithmetic at A in {1, i, -1, -i}; otherwise the
// conjugate-symmetric parts are combined exactly before the numeric sum, so a
// polynomial invariant under A -> A^-1 evaluates to an exactly real number.
cplx evaluate(const LaurentPoly& p, const ChernSimonsParams& params);

} // namespace tqft
