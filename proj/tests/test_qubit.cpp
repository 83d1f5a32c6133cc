#include "support.hpp"

#include "tqft/error.hpp"
#include "tqft/fixtures.hpp"
#include "tqft/punitary.hpp"
#include "tqft/qubit.hpp"
#include "tqft/skein.hpp"
#include "tqft/verify/oracles.hpp"

#include <doctest.h>

using namespace tqft;

namespace {
LaurentPoly A(int e) { return LaurentPoly::a_power(e); }
} // namespace

TEST_CASE("overlap matrix three ways") {
    CHECK(gram_matrix_exact() == gram_matrix_from_skein());
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = test_support::random_phase();
        const auto g = gram_matrix(p);
        const auto [h0, h1] = hat_vectors(p);
        CHECK(std::abs(transpose_pairing(h0, h0) - g[0][0]) < 1e-13);
        CHECK(std::abs(transpose_pairing(h0, h1) - g[0][1]) < 1e-13);
        CHECK(std::abs(transpose_pairing(h1, h1) - g[1][1]) < 1e-13);
    }
}

TEST_CASE("orthonormal basis") {
    for (int k : {2, 3, 10, 400}) {
        const auto p = ChernSimonsParams::level(k);
        const auto [e0, e1] = orthonormal_basis_vectors(p);
        CHECK(std::abs(transpose_pairing(e0, e0) - 1.0) < 1e-12);
        CHECK(std::abs(transpose_pairing(e1, e1) - 1.0) < 1e-12);
        CHECK(std::abs(transpose_pairing(e0, e1)) < 1e-12);

        // Independent Gram-Schmidt on the overlap matrix; rows agree up to sign.
        const auto gs = oracle::gram_schmidt(gram_matrix(p));
        const double d = p.d(), s = p.sqrt_delta();
        const cplx mine[2][2] = {{1.0 / d, 0.0}, {-1.0 / (d * s), 1.0 / s}};
        for (int r = 0; r < 2; ++r) {
            const double sign = (gs[r][r].real() * mine[r][r].real()) >= 0 ? 1.0 : -1.0;
            for (int c = 0; c < 2; ++c) CHECK(std::abs(sign * gs[r][c] - mine[r][c]) < 1e-12);
        }
    }
}

TEST_CASE("orthonormal coordinates round-trip") {
    const auto p = ChernSimonsParams::level(6);
    const auto s = QubitState::from_orthonormal(0.6, 0.8, p);
    const auto [x, y] = hat_to_orthonormal(s);
    CHECK(std::abs(x - 0.6) < 1e-14);
    CHECK(std::abs(y - 0.8) < 1e-14);
    CHECK_THROWS_AS(QubitState(1.0, 0.0, ChernSimonsParams::level(1)), Error);
}

TEST_CASE("two-sphere examples, exact") {
    const LaurentPoly zero, one(1), d = LaurentPoly::loop_value();
    const auto bell = two_qubit_coordinates_exact(fixtures::bell_connector());
    CHECK(bell[0].equals(one));
    CHECK(bell[1].equals(zero));
    CHECK(bell[2].equals(zero));
    CHECK(bell[3].equals(one));

    const auto bridge = two_qubit_coordinates_exact(fixtures::bridge());
    CHECK(bridge[0].equals(d));
    CHECK(bridge[3].equals(zero));

    const auto caps = two_qubit_coordinates_exact(fixtures::double_cup());
    CHECK(caps[0].equals(d * d));
    CHECK(caps[1].equals(zero));
    CHECK(caps[3].equals(zero));

    // Computed linked-ring coordinates. The |11> sign is the opposite of the
    // printed expansion; see the acceptance report.
    const auto ring = two_qubit_coordinates_exact(fixtures::linked_ring());
    CHECK(ring[0].equals((A(4) + A(-4)).pow(2)));
    CHECK(ring[1].equals(zero));
    CHECK(ring[2].equals(zero));
    CHECK(ring[3].equals(-(A(2) - A(-2)).pow(2)));
}

TEST_CASE("exact and numeric coordinates agree") {
    for (int k : {2, 3, 5, 12}) {
        const auto p = ChernSimonsParams::level(k);
        for (const auto& ket : {fixtures::bell_connector(), fixtures::bridge(), fixtures::double_cup()}) {
            const auto exact = two_qubit_coordinates_exact(ket);
            const auto numeric = two_qubit_coordinates(wire_state(ket, p), p);
            for (int i = 0; i < 4; ++i) CHECK(std::abs(exact[i].evaluate(p) - numeric[i]) < 1e-11);
        }
        // The ring has crossings; wire its skein expansion term by term.
        SpinVector ring(8);
        for (const auto& [m, c] : expand_tangle(fixtures::linked_ring())) ring += evaluate(c, p) * wire_state(m, p);
        const auto exact = two_qubit_coordinates_exact(fixtures::linked_ring());
        const auto numeric = two_qubit_coordinates(ring, p);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(exact[i].evaluate(p) - numeric[i]) < 1e-10);
    }
}

TEST_CASE("reduced density matrices") {
    const auto rho_bell = reduced_density_matrix({1.0, 0.0, 0.0, 1.0});
    CHECK(std::abs(rho_bell[0][0] - 0.5) < 1e-15);
    CHECK(std::abs(rho_bell[0][1]) < 1e-15);
    const auto rho_prod = reduced_density_matrix({1.0, 0.0, 0.0, 0.0});
    CHECK(std::abs(rho_prod[0][0] - 1.0) < 1e-15);
}
