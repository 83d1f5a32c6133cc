#pragma once

#include "tqft/diagram.hpp"
#include "tqft/params.hpp"
#include "tqft/spin.hpp"

#include <array>
#include <span>
#include <utility>

namespace tqft {

// R = [[A,0,0,0],[0,A-A^-3,A^-1,0],[0,A^-1,0,0],[0,0,0,A]] on two strands.
RepMatrix r_matrix(const ChernSimonsParams& p);
// Closed form A^-1 I + A U.
RepMatrix r_matrix_inverse(const ChernSimonsParams& p);
// U = A R - A^2 I, middle block [[-A^-2, 1], [1, -A^2]].
RepMatrix tl_u(const ChernSimonsParams& p);

// I (x) ... (x) gate (x) ... (x) I with the 4x4 gate on strands (i, i+1), 1 <= i <= n-1.
RepMatrix embed_two_site(const RepMatrix& gate, std::size_t i, std::size_t n);
RepMatrix braid_generator(std::size_t i, std::size_t n, const ChernSimonsParams& p, bool inverse = false);
RepMatrix tl_generator(std::size_t i, std::size_t n, const ChernSimonsParams& p);
// Product b_{w_1} b_{w_2} ... over the word (letters as in braid_tangle).
RepMatrix braid_word_matrix(std::size_t n, std::span<const int> word, const ChernSimonsParams& p);
// Same product applied to a vector without materializing 2^n x 2^n matrices:
// returns b_{w_1} ... b_{w_m} v.
SpinVector apply_braid_word(std::span<const int> word, SpinVector v, const ChernSimonsParams& p);
// In place, gate on strands (i, i+1).
void apply_two_site(SpinVector& v, std::size_t i, const RepMatrix& gate);

// |0^> and |1^> as printed 16-component vectors.
std::pair<SpinVector, SpinVector> hat_vectors(const ChernSimonsParams& p);

// Sigma^{(x)n} m^dagger (Sigma^{(x)n})^dagger, Sigma = [[0,1],[1,0]].
RepMatrix pseudounitary_conjugate(const RepMatrix& m);
// Tr((q^H)^{(x)n} m), q^H = diag(-A^2, -A^-2).
cplx markov_trace(const RepMatrix& m, const ChernSimonsParams& p);

// The two-strand cup (0, iA^-1, -iA, 0). It is the unique choice, up to an overall sign
// that cancels in every wiring, for which the adjacent and nested two-cup wirings
// reproduce |0^> and |1^>: x^2 = -A^-2, xy = 1, y^2 = -A^2. Its outer square is U.
std::array<cplx, 4> cup_tensor(const ChernSimonsParams& p);
// Contract one cup per boundary pair of a crossingless ket tangle; free loops give d.
SpinVector wire_state(const TangleDiagram& w, const ChernSimonsParams& p);
SpinVector wire_state(const PlanarMatching& m, const ChernSimonsParams& p);

} // namespace tqft
