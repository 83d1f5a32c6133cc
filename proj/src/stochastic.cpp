#include "tqft/stochastic.hpp"

#include "tqft/error.hpp"

#include <cmath>

namespace tqft {

namespace {

SymbolicRatio build(int target, int top, int bottom, int lost) {
    using S = SymbolicPoly;
    const S alpha = S::alpha(), beta = S::beta(), d = S::d(), s = S::sqrt_delta();
    const S a8 = S::A(8), am8 = S::A(-8), dm3 = S::d(-3);
    const S x = alpha * d + beta;
    const S y = alpha * d - am8 * beta;
    switch (coeff_index(target, top, bottom, lost)) {
    case 0b0000: return x * dm3;
    case 0b0001: return s * x * dm3;
    case 0b0010: return a8 * s * x * dm3;
    case 0b0011: return -(a8 * x * dm3);
    case 0b0100: return s * beta * am8 * dm3;
    case 0b0101: return -(beta * am8 * dm3);
    case 0b0110: return S::delta() * beta * dm3;
    case 0b0111: return SymbolicRatio(beta * dm3).over_sqrt_delta();
    case 0b1000: return s * beta * dm3;
    case 0b1001: return S::delta() * beta * dm3;
    case 0b1010: return -(a8 * beta * dm3);
    case 0b1011: return SymbolicRatio(a8 * beta * dm3).over_sqrt_delta();
    case 0b1100: return y * dm3;
    case 0b1101: return -SymbolicRatio(y * dm3).over_sqrt_delta();
    case 0b1110: return -SymbolicRatio(a8 * y * dm3).over_sqrt_delta();
    default:
        return SymbolicRatio(-((S::A(2) * alpha - beta) * S::d(-1))) -
               SymbolicRatio((S::A(4) * alpha * d + beta) * dm3, 1);
    }
}

} // namespace

const std::array<SymbolicRatio, 16>& coefficient_table() {
    static const std::array<SymbolicRatio, 16> table = [] {
        std::array<SymbolicRatio, 16> t;
        for (int i = 0; i < 16; ++i) t[i] = build(i >> 3, (i >> 2) & 1, (i >> 1) & 1, i & 1);
        return t;
    }();
    return table;
}

EncodedFourQubit encode_stochastic(cplx alpha, cplx beta, const ChernSimonsParams& params) {
    const SymPoint at{params.A(), params.d(), params.sqrt_delta(), alpha, beta};
    EncodedFourQubit e{{}, params, alpha, beta};
    const auto& table = coefficient_table();
    for (std::size_t i = 0; i < 16; ++i) e.coefficients[i] = table[i].evaluate(at);
    return e;
}

MeasurementOutcome measure_top_bottom(const EncodedFourQubit& e, Pattern pattern) {
    if ((pattern.top != 0 && pattern.top != 1) || (pattern.bottom != 0 && pattern.bottom != 1))
        throw Error(ErrorCode::invalid_argument, "pattern bits must be 0 or 1");
    double total = 0;
    for (const auto& z : e.coefficients) total += std::norm(z);
    if (total == 0) throw Error(ErrorCode::zero_vector, "encoded state is zero");
    MeasurementOutcome o{pattern, {}, 0.0, e.params};
    double kept = 0;
    for (int t = 0; t < 2; ++t)
        for (int l = 0; l < 2; ++l) {
            const cplx z = e.a(t, pattern.top, pattern.bottom, l);
            o.post_state[2 * t + l] = z;
            kept += std::norm(z);
        }
    o.probability = kept / total;
    return o;
}

std::array<double, 2> two_column_singular_values(std::span<const cplx> m) {
    if (m.size() % 2 != 0) throw Error(ErrorCode::size_mismatch, "matrix must have two columns");
    const std::size_t rows = m.size() / 2;
    double g00 = 0, g11 = 0;
    cplx g01 = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        g00 += std::norm(m[2 * r]);
        g11 += std::norm(m[2 * r + 1]);
        g01 += std::conj(m[2 * r]) * m[2 * r + 1];
    }
    // det(M^dagger M) as a sum of squared 2x2 minors (Cauchy-Binet).
    double det = 0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t q = r + 1; q < rows; ++q) det += std::norm(m[2 * r] * m[2 * q + 1] - m[2 * r + 1] * m[2 * q]);
    const double tr = g00 + g11;
    const double lmax = 0.5 * (tr + std::sqrt((g00 - g11) * (g00 - g11) + 4.0 * std::norm(g01)));
    if (lmax <= 0) return {0.0, 0.0};
    return {std::sqrt(lmax), std::sqrt(det / lmax)};
}

int schmidt_rank(std::span<const cplx, 4> v, double tol) {
    if (!(tol > 0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
    auto [s1, s2] = two_column_singular_values(std::span<const cplx>(v.data(), v.size()));
    if (s1 == 0) throw Error(ErrorCode::zero_vector, "Schmidt rank of the zero vector");
    return s2 > tol * s1 ? 2 : 1;
}

double success_probability(double phi, const ChernSimonsParams& params) {
    const QubitState s = QubitState::from_orthonormal(std::sin(phi), std::cos(phi), params);
    return measure_top_bottom(encode_stochastic(s.alpha(), s.beta(), params), {0, 0}).probability;
}

QubitState recover_after_00(const MeasurementOutcome& o) {
    if (o.pattern.top != 0 || o.pattern.bottom != 0)
        throw Error(ErrorCode::not_applicable, "recovery without knowledge of the state needs outcome 00");
    if (schmidt_rank(o.post_state, 1e-9) != 1)
        throw Error(ErrorCode::not_separable, "post-measurement state is entangled");
    // After outcome 00 the lost qubit is left in d^-3 (|0> + sqrt(d^2-1)|1>) whatever the
    // logical state was, so projecting onto it gives the target factor with its scale intact.
    const double d = o.params.d();
    const double s = o.params.sqrt_delta();
    const double v[2] = {1.0 / (d * d * d), s / (d * d * d)};
    const double vv = v[0] * v[0] + v[1] * v[1];
    const cplx u0 = (o.post_state[0] * v[0] + o.post_state[1] * v[1]) / vv;
    const cplx u1 = (o.post_state[2] * v[0] + o.post_state[3] * v[1]) / vv;
    return QubitState::from_orthonormal(u0, u1, o.params);
}

} // namespace tqft
