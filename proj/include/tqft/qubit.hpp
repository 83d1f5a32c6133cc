#pragma once

#include "tqft/diagram.hpp"
#include "tqft/laurent.hpp"
#include "tqft/params.hpp"
#include "tqft/spin.hpp"

#include <array>
#include <cstdint>
#include <utility>

namespace tqft {

// Logical qubit alpha|0^> + beta|1^> on the four-punctured sphere.
class QubitState {
public:
    // Throws DegenerateQubit when d^2 - 1 <= 0.
    QubitState(cplx alpha, cplx beta, const ChernSimonsParams& params);
    static QubitState from_orthonormal(cplx alpha_on, cplx beta_on, const ChernSimonsParams& params);

    cplx alpha() const { return alpha_; }
    cplx beta() const { return beta_; }
    const ChernSimonsParams& params() const { return params_; }

private:
    cplx alpha_, beta_;
    ChernSimonsParams params_;
};

// (alpha d + beta, beta sqrt(d^2 - 1))
std::pair<cplx, cplx> hat_to_orthonormal(const QubitState& s);

using Matrix2 = std::array<std::array<cplx, 2>, 2>;
using ExactMatrix2 = std::array<std::array<LaurentPoly, 2>, 2>;

// Overlaps of the hat basis: [[d^2, d], [d, d^2]].
Matrix2 gram_matrix(const ChernSimonsParams& p);
ExactMatrix2 gram_matrix_exact();
// Same matrix computed by closing hat diagrams and taking brackets.
ExactMatrix2 gram_matrix_from_skein();

// |0> = |0^>/d, |1> = (|1^> - |0^>/d)/sqrt(d^2 - 1), from the printed hat vectors.
std::pair<SpinVector, SpinVector> orthonormal_basis_vectors(const ChernSimonsParams& p);

// (2n)! / ((n+1)! n!), n <= 35.
std::uint64_t catalan_dim(unsigned n);

// Adjacent cups (|0^>) or nested cups (|1^>) on four points.
PlanarMatching hat_matching(int which);
TangleDiagram hat_tangle(int which);

// A two-qubit ON-basis coordinate held exactly as numerator / denominator,
// optionally with an extra 1/sqrt(d^2-1) factor that has no Laurent form.
struct ExactCoordinate {
    LaurentPoly numerator;
    LaurentPoly denominator;
    bool over_sqrt_delta = false;

    // Exact test against a Laurent polynomial. An odd power of sqrt(d^2-1)
    // can only be equal to the zero polynomial.
    bool equals(const LaurentPoly& target) const;
    cplx evaluate(const ChernSimonsParams& p) const;
};

// <ij|psi> for an 8-point ket tangle (points 0..3 on the first sphere, 4..7 on the second),
// via brackets of the ket closed against hat-basis bras.
std::array<ExactCoordinate, 4> two_qubit_coordinates_exact(const TangleDiagram& ket);
// Same coordinates through the 8-strand vector representation.
std::array<cplx, 4> two_qubit_coordinates(const SpinVector& state, const ChernSimonsParams& p);
// Normalized reduced density matrix of the first qubit from coordinates c_{ij} (index 2i+j).
Matrix2 reduced_density_matrix(const std::array<cplx, 4>& coords);

} // namespace tqft
