#pragma once

#include "tqft/params.hpp"
#include "tqft/qubit.hpp"
#include "tqft/spin.hpp"

#include <array>
#include <optional>

namespace tqft {

struct FourSpinState {
    SpinVector state; // 4 strands; the first factor is the qubit that is lost
    ChernSimonsParams params;
    double alpha, beta;
};

// |0>|Phi> + |1>|Phi*> with Phi = B|011> + (bB + cC)|101> + C|110>,
// B = -A^2 beta, C = alpha, b = -A^-2, c = -A^2.
FourSpinState encode_four_spin(double alpha, double beta, const ChernSimonsParams& params);

// The three-qubit basis vectors the correction is built from.
struct RecoveryBasis {
    SpinVector phi0, phi0_star, phi_plus, phi_plus_star, phi_minus, phi_minus_star;
};
RecoveryBasis recovery_basis(const ChernSimonsParams& params);

// (|0~>, |1~>) = ((-sqrt3 |0> - |1>)/2, (-|0> + sqrt3 |1>)/2). These are the printed
// vectors scaled to unit length.
std::array<SpinVector, 2> tilde_basis();

// Sum of |out><in| over the eight basis pairs; unitary for every unit A.
RepMatrix recovery_unitary(const ChernSimonsParams& params);

struct RecoveryResult {
    SpinVector output;                // (I_2 (x) U)|Psi>
    std::array<cplx, 8> ghz_factor;   // three-qubit factor, scaled so its |000> entry is 1
    std::array<cplx, 2> recovered_on; // last-spin factor in the orthonormal basis
    std::optional<QubitState> recovered; // hat coordinates; empty when d^2 - 1 <= 0
    int schmidt_rank = 0;             // across (first three | last) of the output
    double fidelity = 0;              // |<psi|rec>|^2 / norms, in the orthonormal basis
    bool non_unitary_point = false;   // A outside {1, -1, i, -i}: exact recovery not guaranteed
};

RecoveryResult apply_recovery(const FourSpinState& s);

} // namespace tqft
