#include "tqft/recovery.hpp"

#include "tqft/error.hpp"
#include "tqft/stochastic.hpp"

#include <cmath>

namespace tqft {

namespace {

SpinVector three(std::initializer_list<std::pair<std::size_t, cplx>> entries, double scale) {
    SpinVector v(3);
    for (auto [i, z] : entries) v[i] = z * scale;
    return v;
}

} // namespace

FourSpinState encode_four_spin(double alpha, double beta, const ChernSimonsParams& params) {
    const cplx a2 = params.A() * params.A();
    const cplx B = -a2 * beta, C = alpha;
    const cplx b = -1.0 / a2, c = -a2;
    const cplx mid = b * B + c * C;
    SpinVector psi(4);
    psi[0b0011] = B;
    psi[0b0101] = mid;
    psi[0b0110] = C;
    psi[0b1100] = std::conj(B);
    psi[0b1010] = std::conj(mid);
    psi[0b1001] = std::conj(C);
    return {psi, params, alpha, beta};
}

RecoveryBasis recovery_basis(const ChernSimonsParams& params) {
    const cplx a2 = params.A() * params.A();
    const cplx b = -1.0 / a2, c = -a2;
    const double bb = std::norm(b), cc = std::norm(c);
    const double n0 = 1.0 / std::sqrt(1.0 + bb + cc);
    const double np = 1.0 / std::sqrt((bb + cc) * (bb + cc) + bb + cc);
    const double nm = 1.0 / std::sqrt(bb + cc);
    using std::conj;
    return {
        three({{0b011, -conj(b)}, {0b101, 1.0}, {0b110, -conj(c)}}, n0),
        three({{0b100, -b}, {0b010, 1.0}, {0b001, -c}}, n0),
        three({{0b011, -conj(b)}, {0b101, -(bb + cc)}, {0b110, -conj(c)}}, np),
        three({{0b100, -b}, {0b010, -(bb + cc)}, {0b001, -c}}, np),
        three({{0b011, c}, {0b110, -b}}, nm),
        three({{0b100, conj(c)}, {0b001, -conj(b)}}, nm),
    };
}

std::array<SpinVector, 2> tilde_basis() {
    const double r3 = std::sqrt(3.0);
    return {SpinVector(1, {-r3 / 2.0, -0.5}), SpinVector(1, {-0.5, r3 / 2.0})};
}

RepMatrix recovery_unitary(const ChernSimonsParams& params) {
    const RecoveryBasis rb = recovery_basis(params);
    const auto [t0, t1] = tilde_basis();
    auto out = [&](std::size_t two_bits, const SpinVector& tilde) { return SpinVector::basis(2, two_bits).kron(tilde); };
    RepMatrix u(3);
    u += outer(out(0b00, t0), rb.phi_plus);
    u += outer(out(0b11, t0), rb.phi_plus_star);
    u += outer(out(0b00, t1), rb.phi_minus);
    u += outer(out(0b11, t1), rb.phi_minus_star);
    u += outer(out(0b01, t0), rb.phi0);
    u += outer(out(0b10, t0), rb.phi0_star);
    u += outer(out(0b01, t1), SpinVector::basis(3, 0b000));
    u += outer(out(0b10, t1), SpinVector::basis(3, 0b111));
    return u;
}

RecoveryResult apply_recovery(const FourSpinState& s) {
    RecoveryResult r;
    r.non_unitary_point = !s.params.is_unitary_point();
    r.output = RepMatrix::identity(1).kron(recovery_unitary(s.params)) * s.state;

    // Rows: the lost spin and the two spare spins. Columns: the last spin.
    const std::span<const cplx> m(r.output.data(), r.output.size());
    auto [s1, s2] = two_column_singular_values(m);
    if (s1 == 0) throw Error(ErrorCode::zero_vector, "recovery output is zero");
    r.schmidt_rank = s2 > 1e-9 * s1 ? 2 : 1;

    std::size_t ref = 0;
    double best = -1;
    for (std::size_t row = 0; row < 8; ++row) {
        double w = std::norm(m[2 * row]) + std::norm(m[2 * row + 1]);
        if (w > best) {
            best = w;
            ref = row;
        }
    }
    std::array<cplx, 2> rec = {m[2 * ref], m[2 * ref + 1]};
    for (std::size_t row = 0; row < 8; ++row)
        r.ghz_factor[row] = (std::conj(rec[0]) * m[2 * row] + std::conj(rec[1]) * m[2 * row + 1]) / best;
    if (std::abs(r.ghz_factor[0]) > 0) {
        const cplx g0 = r.ghz_factor[0];
        for (auto& g : r.ghz_factor) g /= g0;
        rec[0] *= g0;
        rec[1] *= g0;
    }
    r.recovered_on = rec;

    if (!s.params.degenerate_qubit()) {
        const double d = s.params.d(), sq = s.params.sqrt_delta();
        const cplx src[2] = {s.alpha * d + s.beta, s.beta * sq};
        const cplx overlap = std::conj(src[0]) * rec[0] + std::conj(src[1]) * rec[1];
        const double norms = (std::norm(src[0]) + std::norm(src[1])) * (std::norm(rec[0]) + std::norm(rec[1]));
        r.fidelity = norms > 0 ? std::norm(overlap) / norms : 0.0;
        r.recovered = QubitState::from_orthonormal(rec[0], rec[1], s.params);
    }
    return r;
}

} // namespace tqft
