#include "support.hpp"

#include "tqft/diagram.hpp"
#include "tqft/error.hpp"
#include "tqft/fixtures.hpp"
#include "tqft/skein.hpp"
#include "tqft/verify/oracles.hpp"

#include <doctest.h>

#include <map>
#include <thread>

using namespace tqft;

namespace {
LaurentPoly A(int e) { return LaurentPoly::a_power(e); }
const LaurentPoly d = LaurentPoly::loop_value();

// Operator boundary order (upper left to right, lower left to right) to cyclic order.
std::map<PlanarMatching, LaurentPoly> expand_braid(std::size_t n, std::span<const int> word) {
    const auto t = braid_tangle(n, word);
    std::vector<ArcId> b(t.boundary().begin(), t.boundary().begin() + static_cast<std::ptrdiff_t>(n));
    b.insert(b.end(), t.boundary().rbegin(), t.boundary().rbegin() + static_cast<std::ptrdiff_t>(n));
    return expand_tangle(TangleDiagram(t.crossings(), t.free_loops(), b));
}
} // namespace

TEST_CASE("bracket of small links") {
    CHECK(kauffman_bracket(LinkDiagram()) == LaurentPoly(1));
    CHECK(kauffman_bracket(fixtures::unknot()) == d);
    CHECK(kauffman_bracket(LinkDiagram({}, 3)) == d.pow(3));
    // Reidemeister I: a curl costs -A^{+-3}.
    CHECK(kauffman_bracket(fixtures::kinked_unknot()) == -A(3) * d);
    CHECK(kauffman_bracket(fixtures::negative_kinked_unknot()) == -A(-3) * d);
    // Hopf link: -A^4 - A^-4 per unknot, either orientation.
    CHECK(kauffman_bracket(fixtures::hopf_link()) == d * (-A(4) - A(-4)));
    // Figure eight: writhe 0 and amphichiral; the normalized value is the Jones polynomial at t = A^-4.
    CHECK(kauffman_bracket(fixtures::figure_eight()) == d * (A(8) - A(4) + LaurentPoly(1) - A(-4) + A(-8)));
    // Trefoil: one chirality gives A^-7 - A^-3 - A^5, its mirror the other.
    const auto t = kauffman_bracket(fixtures::trefoil());
    const LaurentPoly left = d * (A(-7) - A(-3) - A(5));
    CHECK((t == left || t == left.mirror()));
    const int mirror_word[] = {-1, -1, -1};
    CHECK(kauffman_bracket(braid_closure(2, mirror_word)) == t.mirror());
}

TEST_CASE("memoized bracket equals the 2^c state sum") {
    for (const auto& f : fixtures::small_links()) {
        INFO(f.name);
        CHECK(kauffman_bracket(f.link) == oracle::state_sum_bracket(f.link));
    }
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t strands = 2 + static_cast<std::size_t>(trial % 3);
        const auto w = test_support::random_word(strands, 1 + static_cast<std::size_t>(trial % 10));
        const auto link = braid_closure(strands, w);
        CHECK(kauffman_bracket(link) == oracle::state_sum_bracket(link));
    }
}

TEST_CASE("skein relation holds at every crossing") {
    for (const auto& b : fixtures::braid_fixtures()) {
        const auto link = braid_closure(b.strands, b.word);
        for (std::size_t i = 0; i < link.crossing_count(); ++i) {
            const auto [sa, sb] = resolve_crossing(link, i);
            INFO(b.name << " crossing " << i);
            CHECK(kauffman_bracket(link) == A(1) * kauffman_bracket(sa) + A(-1) * kauffman_bracket(sb));
        }
    }
}

TEST_CASE("bracket is multiplicative under disjoint union") {
    const auto& fx = fixtures::braid_fixtures();
    for (std::size_t i = 0; i < fx.size(); i += 3)
        for (std::size_t j = 1; j < fx.size(); j += 4) {
            const auto a = braid_closure(fx[i].strands, fx[i].word);
            const auto b = braid_closure(fx[j].strands, fx[j].word);
            CHECK(kauffman_bracket(disjoint_union(a, b)) == kauffman_bracket(a) * kauffman_bracket(b));
        }
}

TEST_CASE("Reidemeister II and III at the tangle level") {
    const std::vector<int> none;
    const int r2[] = {1, -1}, r2b[] = {-2, 2};
    CHECK(expand_braid(2, r2) == expand_braid(2, none));
    CHECK(expand_braid(3, r2b) == expand_braid(3, none));
    CHECK(expand_braid(3, none).size() == 1);

    const int l[] = {1, 2, 1}, r[] = {2, 1, 2};
    CHECK(expand_braid(3, l) == expand_braid(3, r));
    const int li[] = {-1, -2, -1}, ri[] = {-2, -1, -2};
    CHECK(expand_braid(3, li) == expand_braid(3, ri));
    const int l4[] = {2, 3, 2, 1}, r4[] = {3, 2, 3, 1};
    CHECK(expand_braid(4, l4) == expand_braid(4, r4));
    // Reidemeister I changes the expansion by a curl factor, so it must not match.
    const int r1[] = {1};
    CHECK_FALSE(expand_braid(2, r1) == expand_braid(2, none));
}

TEST_CASE("Reidemeister moves on closures") {
    const auto& fx = fixtures::braid_fixtures();
    auto by_name = [&](const char* name) {
        for (const auto& f : fx)
            if (f.name == name) return kauffman_bracket(braid_closure(f.strands, f.word));
        FAIL("missing fixture");
        return LaurentPoly();
    };
    CHECK(by_name("R2 pair") == by_name("two unknots"));
    CHECK(by_name("R3 left") == by_name("R3 right"));
}

TEST_CASE("expansion of a ket with crossings") {
    const auto expansion = expand_tangle(fixtures::linked_ring());
    const auto bridge = ket_matching(fixtures::bridge());
    const auto bell = ket_matching(fixtures::bell_connector());
    REQUIRE(expansion.size() == 2);
    CHECK(expansion.at(bridge) == -(A(6) + A(-6)));
    CHECK(expansion.at(bell) == -(A(2) - A(-2)).pow(2));
}

TEST_CASE("pairing with a mirror image") {
    const auto ring = fixtures::linked_ring();
    const auto b = fixtures::bell_connector();
    CHECK(bracket_of_tangle_pairing(b, b) == d.pow(4));
    CHECK_THROWS_AS(bracket_of_tangle_pairing(b, ket_tangle(PlanarMatching::identity(1))), Error);
    CHECK(bracket_of_tangle_pairing(b, ring) == bracket_of_tangle_pairing(b, ring));
}

TEST_CASE("crossing cap") {
    const std::vector<int> w25(25, 1), w3(3, 1);
    try {
        kauffman_bracket(braid_closure(2, w25));
        FAIL("expected DiagramTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::diagram_too_large);
    }
    CHECK_NOTHROW(kauffman_bracket(braid_closure(2, std::vector<int>(24, 1))));
    CHECK_THROWS_AS(kauffman_bracket(braid_closure(2, w3), BracketOptions{2}), Error);
    CHECK_NOTHROW(kauffman_bracket(braid_closure(2, w3), BracketOptions{3}));
}

TEST_CASE("concurrent bracket evaluation") {
    const auto link = braid_closure(3, std::vector<int>{1, 2, 1, 2, 1, 2, 1, 2, -1, 2});
    const auto expected = kauffman_bracket(link);
    std::vector<LaurentPoly> results(8);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < results.size(); ++i)
        pool.emplace_back([&, i] { results[i] = kauffman_bracket(link); });
    for (auto& t : pool) t.join();
    for (const auto& r : results) CHECK(r == expected);
}
