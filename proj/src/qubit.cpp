#include "tqft/qubit.hpp"

#include "tqft/error.hpp"
#include "tqft/punitary.hpp"
#include "tqft/skein.hpp"

#include <cmath>
#include <string>

namespace tqft {

QubitState::QubitState(cplx alpha, cplx beta, const ChernSimonsParams& params)
    : alpha_(alpha), beta_(beta), params_(params) {
    (void)params_.sqrt_delta(); // rejects degenerate d
}

QubitState QubitState::from_orthonormal(cplx alpha_on, cplx beta_on, const ChernSimonsParams& params) {
    const double s = params.sqrt_delta();
    const cplx beta = beta_on / s;
    return QubitState((alpha_on - beta) / params.d(), beta, params);
}

std::pair<cplx, cplx> hat_to_orthonormal(const QubitState& s) {
    const double d = s.params().d();
    return {s.alpha() * d + s.beta(), s.beta() * s.params().sqrt_delta()};
}

Matrix2 gram_matrix(const ChernSimonsParams& p) {
    const double d = p.d();
    return {{{d * d, d}, {d, d * d}}};
}

ExactMatrix2 gram_matrix_exact() {
    const LaurentPoly d = LaurentPoly::loop_value();
    return {{{d * d, d}, {d, d * d}}};
}

ExactMatrix2 gram_matrix_from_skein() {
    ExactMatrix2 g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g[i][j] = bracket_of_tangle_pairing(hat_tangle(i), hat_tangle(j));
    return g;
}

std::pair<SpinVector, SpinVector> orthonormal_basis_vectors(const ChernSimonsParams& p) {
    const double s = p.sqrt_delta();
    const double d = p.d();
    auto [h0, h1] = hat_vectors(p);
    SpinVector zero = (1.0 / d) * h0;
    SpinVector one = (1.0 / s) * (h1 - zero);
    return {zero, one};
}

std::uint64_t catalan_dim(unsigned n) {
    if (n > 35) throw Error(ErrorCode::invalid_argument, "catalan_dim overflows 64 bits beyond n = 35");
    __extension__ using u128 = unsigned __int128;
    u128 c = 1;
    for (unsigned m = 0; m < n; ++m) c = c * 2 * (2 * m + 1) / (m + 2);
    return static_cast<std::uint64_t>(c);
}

PlanarMatching hat_matching(int which) {
    using P = std::pair<std::size_t, std::size_t>;
    static const P adjacent[] = {{0, 1}, {2, 3}};
    static const P nested[] = {{0, 3}, {1, 2}};
    if (which == 0) return PlanarMatching(2, adjacent);
    if (which == 1) return PlanarMatching(2, nested);
    throw Error(ErrorCode::index_out_of_range, "hat basis index " + std::to_string(which));
}

TangleDiagram hat_tangle(int which) { return ket_tangle(hat_matching(which)); }

bool ExactCoordinate::equals(const LaurentPoly& target) const {
    if (over_sqrt_delta) return target.is_zero() && numerator.is_zero();
    return numerator == target * denominator;
}

cplx ExactCoordinate::evaluate(const ChernSimonsParams& p) const {
    cplx v = tqft::evaluate(numerator, p) / tqft::evaluate(denominator, p);
    if (over_sqrt_delta) v /= p.sqrt_delta();
    return v;
}

std::array<ExactCoordinate, 4> two_qubit_coordinates_exact(const TangleDiagram& ket) {
    if (ket.boundary().size() != 8)
        throw Error(ErrorCode::boundary_mismatch, "two-sphere state needs 8 endpoints, got " + std::to_string(ket.boundary().size()));
    LaurentPoly pr[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) pr[i][j] = bracket_of_tangle_pairing(juxtapose(hat_tangle(i), hat_tangle(j)), ket);
    const LaurentPoly d = LaurentPoly::loop_value();
    const LaurentPoly d2 = d * d;
    const LaurentPoly delta = d2 - LaurentPoly(1);
    // <0| = <0^|/d and <1| = (<1^| - <0^|/d)/sqrt(delta), on each factor.
    return {{
        {pr[0][0], d2, false},
        {d * pr[0][1] - pr[0][0], d2, true},
        {d * pr[1][0] - pr[0][0], d2, true},
        {d2 * pr[1][1] - d * pr[1][0] - d * pr[0][1] + pr[0][0], d2 * delta, false},
    }};
}

std::array<cplx, 4> two_qubit_coordinates(const SpinVector& state, const ChernSimonsParams& p) {
    if (state.strands() != 8) throw Error(ErrorCode::size_mismatch, "two-sphere state needs 8 strands");
    auto [on0, on1] = orthonormal_basis_vectors(p);
    const SpinVector* on[2] = {&on0, &on1};
    std::array<cplx, 4> c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[2 * i + j] = transpose_pairing(on[i]->kron(*on[j]), state);
    return c;
}

Matrix2 reduced_density_matrix(const std::array<cplx, 4>& c) {
    double total = 0;
    for (const auto& z : c) total += std::norm(z);
    if (total == 0) throw Error(ErrorCode::zero_vector, "zero state has no density matrix");
    Matrix2 rho{};
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            cplx s = 0;
            for (int j = 0; j < 2; ++j) s += c[2 * i + j] * std::conj(c[2 * k + j]);
            rho[i][k] = s / total;
        }
    return rho;
}

} // namespace tqft
