#pragma once

#include "tqft/params.hpp"
#include "tqft/qubit.hpp"
#include "tqft/symbolic.hpp"

#include <array>
#include <cstddef>
#include <span>

namespace tqft {

// Digit order: target, top, bottom, lost.
constexpr std::size_t coeff_index(int target, int top, int bottom, int lost) {
    return static_cast<std::size_t>(8 * target + 4 * top + 2 * bottom + lost);
}

// All 16 encoding coefficients as exact expressions in A, d, sqrt(d^2-1), alpha, beta.
const std::array<SymbolicRatio, 16>& coefficient_table();

struct EncodedFourQubit {
    std::array<cplx, 16> coefficients; // coeff_index order
    ChernSimonsParams params;
    cplx alpha, beta;

    cplx a(int target, int top, int bottom, int lost) const { return coefficients[coeff_index(target, top, bottom, lost)]; }
};

// Throws DegenerateQubit when d^2 - 1 <= 0 (k = 1).
EncodedFourQubit encode_stochastic(cplx alpha, cplx beta, const ChernSimonsParams& params);

struct Pattern {
    int top = 0;
    int bottom = 0;
};

struct MeasurementOutcome {
    Pattern pattern;
    // Unnormalized, index 2*target + lost.
    std::array<cplx, 4> post_state;
    double probability;
    ChernSimonsParams params;
};

MeasurementOutcome measure_top_bottom(const EncodedFourQubit& e, Pattern pattern);

// Singular values (descending) of a rows x 2 matrix given row-major. The smaller one
// comes from the 2x2 minors, so it stays accurate when the matrix is nearly rank one.
std::array<double, 2> two_column_singular_values(std::span<const cplx> m);
// Bipartite 2x2 state, index 2i + j. Counts singular values above tol * largest.
int schmidt_rank(std::span<const cplx, 4> v, double tol);

// P(pattern 00) for the logical state with orthonormal coordinates (sin phi, cos phi).
double success_probability(double phi, const ChernSimonsParams& params);

// Target-qubit state after outcome 00. Throws NotApplicable for other patterns and
// NotSeparable if the post-measurement state is entangled.
QubitState recover_after_00(const MeasurementOutcome& o);

} // namespace tqft
