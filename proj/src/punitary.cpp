#include "tqft/punitary.hpp"

#include "tqft/error.hpp"
#include "tqft/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace tqft {

namespace {

const cplx kI{0.0, 1.0};

void check_slot(std::size_t i, std::size_t n) {
    if (i < 1 || i + 1 > n)
        throw Error(ErrorCode::index_out_of_range, "slot " + std::to_string(i) + " on " + std::to_string(n) + " strands");
}

} // namespace

RepMatrix r_matrix(const ChernSimonsParams& p) {
    const cplx a = p.A();
    const cplx ai = 1.0 / a;
    RepMatrix r(2);
    r(0, 0) = a;
    r(1, 1) = a - ai * ai * ai;
    r(1, 2) = ai;
    r(2, 1) = ai;
    r(3, 3) = a;
    return r;
}

RepMatrix r_matrix_inverse(const ChernSimonsParams& p) {
    const cplx a = p.A();
    return (1.0 / a) * RepMatrix::identity(2) + a * tl_u(p);
}

RepMatrix tl_u(const ChernSimonsParams& p) {
    const cplx a = p.A();
    return a * r_matrix(p) - (a * a) * RepMatrix::identity(2);
}

RepMatrix embed_two_site(const RepMatrix& gate, std::size_t i, std::size_t n) {
    check_slot(i, n);
    if (gate.strands() != 2) throw Error(ErrorCode::size_mismatch, "two-site gate must be 4x4");
    RepMatrix m = gate;
    if (i > 1) m = RepMatrix::identity(i - 1).kron(m);
    if (i + 1 < n) m = m.kron(RepMatrix::identity(n - i - 1));
    return m;
}

RepMatrix braid_generator(std::size_t i, std::size_t n, const ChernSimonsParams& p, bool inverse) {
    return embed_two_site(inverse ? r_matrix_inverse(p) : r_matrix(p), i, n);
}

RepMatrix tl_generator(std::size_t i, std::size_t n, const ChernSimonsParams& p) {
    return embed_two_site(tl_u(p), i, n);
}

RepMatrix braid_word_matrix(std::size_t n, std::span<const int> word, const ChernSimonsParams& p) {
    RepMatrix m = RepMatrix::identity(n);
    const RepMatrix r = r_matrix(p);
    const RepMatrix rinv = r_matrix_inverse(p);
    for (int letter : word) {
        if (letter == 0) throw Error(ErrorCode::index_out_of_range, "braid letter 0");
        m = m * embed_two_site(letter > 0 ? r : rinv, static_cast<std::size_t>(std::abs(letter)), n);
    }
    return m;
}

void apply_two_site(SpinVector& v, std::size_t i, const RepMatrix& gate) {
    check_slot(i, v.strands());
    if (gate.strands() != 2) throw Error(ErrorCode::size_mismatch, "two-site gate must be 4x4");
    kernels::active().apply_two_site(v.data(), v.strands(), i - 1, gate.data());
}

SpinVector apply_braid_word(std::span<const int> word, SpinVector v, const ChernSimonsParams& p) {
    const RepMatrix r = r_matrix(p);
    const RepMatrix rinv = r_matrix_inverse(p);
    // The rightmost letter acts first.
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == 0) throw Error(ErrorCode::index_out_of_range, "braid letter 0");
        apply_two_site(v, static_cast<std::size_t>(std::abs(*it)), *it > 0 ? r : rinv);
    }
    return v;
}

std::pair<SpinVector, SpinVector> hat_vectors(const ChernSimonsParams& p) {
    const cplx a2 = p.A() * p.A();
    SpinVector h0(4), h1(4);
    h0[5] = -1.0 / a2;
    h0[6] = 1.0;
    h0[9] = 1.0;
    h0[10] = -a2;
    h1[3] = -1.0 / a2;
    h1[5] = 1.0;
    h1[10] = 1.0;
    h1[12] = -a2;
    return {h0, h1};
}

RepMatrix pseudounitary_conjugate(const RepMatrix& m) {
    // Sigma^{(x)n} flips every bit of the index and is its own adjoint.
    const std::size_t flip = m.dim() - 1;
    RepMatrix out(m.strands());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = std::conj(m(j ^ flip, i ^ flip));
    return out;
}

cplx markov_trace(const RepMatrix& m, const ChernSimonsParams& p) {
    const cplx a2 = p.A() * p.A();
    const cplx q[2] = {-a2, -1.0 / a2};
    cplx t = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        cplx w = 1.0;
        for (std::size_t b = 0; b < m.strands(); ++b) w *= q[(i >> b) & 1u];
        t += w * m(i, i);
    }
    return t;
}

std::array<cplx, 4> cup_tensor(const ChernSimonsParams& p) {
    const cplx a = p.A();
    return {0.0, kI / a, -kI * a, 0.0};
}

SpinVector wire_state(const PlanarMatching& m, const ChernSimonsParams& p) {
    const std::size_t points = m.point_count();
    const auto pairs = m.pairs();
    const auto cup = cup_tensor(p);
    SpinVector v(points);
    // Only spin-antiparallel assignments survive, so enumerate which end of each pair is up.
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
        std::size_t index = 0;
        cplx amp = 1.0;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const bool left_up = (mask >> k) & 1u;
            const auto [a, b] = pairs[k];
            const std::size_t up = left_up ? a : b;
            index |= std::size_t{1} << (points - 1 - up);
            amp *= left_up ? cup[2] : cup[1];
        }
        v[index] = amp;
    }
    return v;
}

SpinVector wire_state(const TangleDiagram& w, const ChernSimonsParams& p) {
    SpinVector v = wire_state(ket_matching(w), p);
    if (w.free_loops() != 0) v *= std::pow(cplx(p.d(), 0.0), static_cast<int>(w.free_loops()));
    return v;
}

} // namespace tqft
