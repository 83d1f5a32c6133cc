#include "support.hpp"

#include "tqft/diagram.hpp"
#include "tqft/diagram_json.hpp"
#include "tqft/error.hpp"
#include "tqft/fixtures.hpp"
#include "tqft/qubit.hpp"
#include "tqft/verify/oracles.hpp"

#include <doctest.h>

using namespace tqft;

TEST_CASE("tangle validation") {
    CHECK_THROWS_AS(TangleDiagram({{0, 1, 2, 3}}, 0, {}), Error); // each arc must occur twice
    CHECK_THROWS_AS(TangleDiagram({}, 0, {0, 0, 0}), Error);
    CHECK_NOTHROW(TangleDiagram({{0, 1, 2, 3}}, 0, {0, 1, 2, 3}));
    CHECK_THROWS_AS(LinkDiagram(TangleDiagram({}, 0, {5, 5})), Error);
    // Ids are renumbered by first appearance.
    const TangleDiagram t({{7, 9, 9, 7}}, 0, {});
    CHECK(t.crossings()[0] == Crossing{0, 1, 1, 0});
}

TEST_CASE("catalan counts") {
    const std::uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (unsigned n = 0; n < 10; ++n) {
        CHECK(catalan_dim(n) == expected[n]);
        if (n >= 1) CHECK(enumerate_planar_matchings(n).size() == expected[n]);
    }
    CHECK(catalan_dim(35) == 3116285494907301262ull);
}

TEST_CASE("enumerated matchings are sorted, distinct and non-crossing") {
    const auto all = enumerate_planar_matchings(5);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    for (const auto& m : all)
        for (auto [a, b] : m.pairs())
            for (auto [c, e] : m.pairs()) CHECK_FALSE((a < c && c < b && b < e));
}

TEST_CASE("planar matching validation") {
    const std::pair<std::size_t, std::size_t> crossing[] = {{0, 2}, {1, 3}};
    CHECK_THROWS_AS(PlanarMatching(2, crossing), Error);
    const std::pair<std::size_t, std::size_t> fine[] = {{0, 3}, {1, 2}};
    CHECK_NOTHROW(PlanarMatching(2, fine));
}

TEST_CASE("TL product: associativity, identity, oracle agreement") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto all = enumerate_planar_matchings(n);
        const auto id = PlanarMatching::identity(n);
        for (const auto& a : all) {
            CHECK(tl_multiply(a, id).matching == a);
            CHECK(tl_multiply(id, a).loops == 0);
            for (const auto& b : all) {
                const auto ab = tl_multiply(a, b);
                const auto oracle_ab = oracle::tl_multiply_via_tangles(a, b);
                CHECK(ab.matching == oracle_ab.matching);
                CHECK(ab.loops == oracle_ab.loops);
                if (n <= 3)
                    for (const auto& c : all) {
                        const auto l = tl_multiply(tl_multiply(a, b).matching, c);
                        const auto r = tl_multiply(a, tl_multiply(b, c).matching);
                        CHECK(l.matching == r.matching);
                        CHECK(l.loops + tl_multiply(a, b).loops == r.loops + tl_multiply(b, c).loops);
                    }
            }
        }
    }
}

TEST_CASE("TL generator relations as diagrams") {
    const std::size_t n = 4;
    for (std::size_t i = 1; i < n; ++i) {
        const auto e = PlanarMatching::generator(i, n);
        const auto ee = tl_multiply(e, e);
        CHECK(ee.matching == e);
        CHECK(ee.loops == 1);
        if (i + 1 < n) {
            const auto f = PlanarMatching::generator(i + 1, n);
            const auto efe = tl_multiply(tl_multiply(e, f).matching, e);
            CHECK(efe.matching == e);
            CHECK(efe.loops == 0);
        }
    }
}

TEST_CASE("closure loops") {
    for (const auto& m : enumerate_planar_matchings(4)) CHECK(closure_loops(m, m) == 4);
    CHECK(closure_loops(hat_matching(0), hat_matching(1)) == 1);
}

TEST_CASE("compose, juxtapose and reflect") {
    const auto cup = ket_tangle(hat_matching(0));
    CHECK(reflect(reflect(cup)) == cup);
    // Pairing a ket with its own mirror gives n loops.
    const auto closed = LinkDiagram(compose(reflect(cup), cup, 4));
    CHECK(count_loops(closed) == 2);
    CHECK(juxtapose(cup, cup).boundary().size() == 8);
    CHECK_THROWS_AS(compose(cup, cup, 5), Error);
    const auto two = disjoint_union(fixtures::hopf_link(), fixtures::trefoil());
    CHECK(two.crossing_count() == 5);
}

TEST_CASE("ket and operator matchings round-trip") {
    for (const auto& m : enumerate_planar_matchings(4)) {
        CHECK(ket_matching(ket_tangle(m)) == m);
        CHECK(operator_matching(operator_tangle(m)) == m);
    }
    CHECK_THROWS_AS(ket_matching(fixtures::linked_ring()), Error);
}

TEST_CASE("writhe matches the braid exponent sum") {
    for (const auto& b : fixtures::braid_fixtures()) {
        INFO(b.name);
        CHECK(writhe(braid_closure(b.strands, b.word)) == braid_writhe(b.word));
    }
    CHECK(writhe(fixtures::kinked_unknot()) == 1);
    CHECK(writhe(fixtures::negative_kinked_unknot()) == -1);
    for (int trial = 0; trial < 30; ++trial) {
        const auto w = test_support::random_word(4, 9);
        CHECK(writhe(braid_closure(4, w)) == braid_writhe(w));
    }
}

TEST_CASE("resolve crossing removes exactly one crossing") {
    const auto t = fixtures::trefoil();
    const auto [a, b] = resolve_crossing(t, 1);
    CHECK(a.crossing_count() == 2);
    CHECK(b.crossing_count() == 2);
    CHECK_THROWS_AS(resolve_crossing(t, 3), Error);
}

TEST_CASE("json round trip and errors") {
    const auto ring = fixtures::linked_ring();
    CHECK(parse_diagram_json(diagram_to_json(ring)) == ring);
    const auto knot = fixtures::figure_eight().as_tangle();
    CHECK(parse_diagram_json(diagram_to_json(knot)) == knot);
    CHECK(parse_diagram_json(R"({"crossings": []})") == TangleDiagram({}, 0, {}));

    auto code_of = [](const char* text) {
        try {
            parse_diagram_json(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::invalid_argument;
    };
    CHECK(code_of("{") == ErrorCode::parse_error);
    CHECK(code_of(R"({"crossings": [], "extra": 1})") == ErrorCode::parse_error);
    CHECK(code_of(R"({"crossings": [[0, 1, -1, 2]]})") == ErrorCode::parse_error);
    CHECK(code_of(R"({"crossings": [[0, 1, 1]]})") == ErrorCode::parse_error);
    CHECK(code_of(R"({"crossings": [], "free_loops": -2})") == ErrorCode::parse_error);
    CHECK(code_of(R"({"crossings": [[0, 1, 2, 3]]})") == ErrorCode::invalid_diagram);
}
