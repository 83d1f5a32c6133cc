#include "support.hpp"

#include "tqft/diagram.hpp"
#include "tqft/fixtures.hpp"
#include "tqft/punitary.hpp"
#include "tqft/qubit.hpp"
#include "tqft/skein.hpp"

#include <doctest.h>

using namespace tqft;

TEST_CASE("R-matrix closed forms") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = test_support::random_phase();
        const cplx a = p.A();
        const RepMatrix R = r_matrix(p);
        CHECK(R(0, 0) == a);
        CHECK(std::abs(R(1, 1) - (a - std::pow(a, -3))) < 1e-15);
        CHECK(max_abs_diff(R * r_matrix_inverse(p), RepMatrix::identity(2)) < 1e-13);
        CHECK(max_abs_diff(tl_u(p), a * R - (a * a) * RepMatrix::identity(2)) < 1e-14);
        CHECK(max_abs_diff(tl_generator(2, 3, p), embed_two_site(tl_u(p), 2, 3)) == 0.0);
        CHECK(max_abs_diff(braid_generator(1, 3, p, true), embed_two_site(r_matrix_inverse(p), 1, 3)) == 0.0);
    }
}

TEST_CASE("braid relations on 16 strands without dense matrices") {
    const auto p = test_support::random_phase();
    std::normal_distribution<double> g;
    SpinVector v(16);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = {g(test_support::rng()), g(test_support::rng())};
    for (int i : {1, 7, 14}) {
        const int l[] = {i, i + 1, i}, r[] = {i + 1, i, i + 1};
        CHECK(max_abs_diff(apply_braid_word(l, v, p), apply_braid_word(r, v, p)) < 1e-12);
    }
    const int far_l[] = {3, 11}, far_r[] = {11, 3};
    CHECK(max_abs_diff(apply_braid_word(far_l, v, p), apply_braid_word(far_r, v, p)) < 1e-12);
    const int cancel[] = {5, -5, -15, 15};
    CHECK(max_abs_diff(apply_braid_word(cancel, v, p), v) < 1e-12);
}

TEST_CASE("vector and matrix braid actions agree") {
    const auto p = test_support::random_phase();
    const auto w = test_support::random_word(4, 7);
    std::normal_distribution<double> g;
    SpinVector v(4);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = {g(test_support::rng()), g(test_support::rng())};
    CHECK(max_abs_diff(braid_word_matrix(4, w, p) * v, apply_braid_word(w, v, p)) < 1e-12);
}

TEST_CASE("pseudounitarity on random braid words") {
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = test_support::random_phase();
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        const RepMatrix m = braid_word_matrix(n, test_support::random_word(n, 6), p);
        CHECK(max_abs_diff(pseudounitary_conjugate(m), m.inverse()) < 1e-10);
    }
}

TEST_CASE("unitary at the four special points") {
    for (int q = 0; q < 4; ++q) {
        const auto p = ChernSimonsParams::unit_point(q);
        const RepMatrix R = r_matrix(p);
        CHECK(max_abs_diff(R.adjoint() * R, RepMatrix::identity(2)) < 1e-15);
    }
}

TEST_CASE("Markov trace of trivial braids counts loops") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto p = test_support::random_phase();
        const cplx tr = markov_trace(RepMatrix::identity(n), p);
        CHECK(std::abs(tr - std::pow(cplx(p.d()), static_cast<int>(n))) < 1e-12);
    }
}

TEST_CASE("Markov trace agrees with the bracket on every braid fixture") {
    for (const auto& b : fixtures::braid_fixtures()) {
        const auto p = test_support::random_phase();
        const auto link = braid_closure(b.strands, b.word);
        const cplx a = p.A();
        const cplx lhs = std::pow(-a * a * a, -braid_writhe(b.word)) * markov_trace(braid_word_matrix(b.strands, b.word, p), p);
        const cplx rhs = std::pow(-a * a * a, -writhe(link)) * evaluate(kauffman_bracket(link), p);
        INFO(b.name);
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("cup wirings reproduce the hat vectors") {
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = test_support::random_phase();
        const auto [h0, h1] = hat_vectors(p);
        CHECK(max_abs_diff(wire_state(hat_matching(0), p), h0) < 1e-14);
        CHECK(max_abs_diff(wire_state(hat_matching(1), p), h1) < 1e-14);
        const cplx a = p.A();
        CHECK(std::abs(h0[5] + 1.0 / (a * a)) < 1e-15);
        CHECK(h0[6] == cplx(1));
        CHECK(h1[3] == h0[5]);
        CHECK(std::abs(h1[12] + a * a) < 1e-15);
        // Cup tensor outer product is U.
        const auto c = cup_tensor(p);
        const RepMatrix u = tl_u(p);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(std::abs(c[i] * c[j] - u(i, j)) < 1e-14);
    }
}

TEST_CASE("wire state with free loops") {
    const auto p = ChernSimonsParams::level(5);
    const auto t = ket_tangle(hat_matching(0));
    const TangleDiagram with_loop(t.crossings(), 2, t.boundary());
    const SpinVector w = wire_state(with_loop, p);
    CHECK(max_abs_diff(w, (p.d() * p.d()) * wire_state(t, p)) < 1e-14);
}
