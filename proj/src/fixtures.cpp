#include "tqft/fixtures.hpp"

#include "tqft/qubit.hpp"

namespace tqft::fixtures {

namespace {

TangleDiagram ket(std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
    std::vector<std::pair<std::size_t, std::size_t>> v(pairs);
    return ket_tangle(PlanarMatching(v.size(), v));
}

} // namespace

LinkDiagram unknot() { return LinkDiagram({}, 1); }

LinkDiagram kinked_unknot() { return LinkDiagram({{0, 0, 1, 1}}, 0); }

LinkDiagram negative_kinked_unknot() { return LinkDiagram({{0, 1, 1, 0}}, 0); }

LinkDiagram hopf_link() {
    const int w[] = {1, 1};
    return braid_closure(2, w);
}

LinkDiagram trefoil() {
    const int w[] = {1, 1, 1};
    return braid_closure(2, w);
}

LinkDiagram figure_eight() {
    const int w[] = {1, -2, 1, -2};
    return braid_closure(3, w);
}

const std::vector<BraidFixture>& braid_fixtures() {
    static const std::vector<BraidFixture> list = {
        {"unknot", 1, {}},
        {"kinked unknot", 2, {1}},
        {"negative kinked unknot", 2, {-1}},
        {"two unknots", 2, {}},
        {"hopf", 2, {1, 1}},
        {"negative hopf", 2, {-1, -1}},
        {"trefoil", 2, {1, 1, 1}},
        {"mirror trefoil", 2, {-1, -1, -1}},
        {"figure eight", 3, {1, -2, 1, -2}},
        {"cinquefoil", 2, {1, 1, 1, 1, 1}},
        {"borromean", 3, {1, -2, 1, -2, 1, -2}},
        {"torus 3,4", 3, {1, 2, 1, 2, 1, 2, 1, 2}},
        {"mixed 4 strand", 4, {1, -2, 3, 2, -1, 3, -2}},
        {"R2 pair", 2, {1, -1}},
        {"R3 left", 3, {1, 2, 1, -2}},
        {"R3 right", 3, {2, 1, 2, -2}},
    };
    return list;
}

std::vector<NamedLink> small_links() {
    std::vector<NamedLink> out;
    out.push_back({"empty", LinkDiagram()});
    out.push_back({"unknot", unknot()});
    out.push_back({"curl", kinked_unknot()});
    out.push_back({"negative curl", negative_kinked_unknot()});
    for (const auto& b : braid_fixtures()) out.push_back({b.name, braid_closure(b.strands, b.word)});
    // The linked ring closed against each pair of hat-basis bras.
    const auto ring = linked_ring();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto bra = juxtapose(hat_tangle(i), hat_tangle(j));
            out.push_back({"ring vs hat " + std::to_string(i) + std::to_string(j),
                           LinkDiagram(compose(reflect(bra), ring, 8))});
        }
    return out;
}

TangleDiagram bell_connector() { return ket({{0, 7}, {1, 6}, {2, 5}, {3, 4}}); }

TangleDiagram double_cup() { return ket({{0, 1}, {2, 3}, {4, 5}, {6, 7}}); }

TangleDiagram bridge() { return ket({{0, 1}, {2, 5}, {3, 4}, {6, 7}}); }

TangleDiagram linked_ring() {
    // Left cup arcs a1..a3, right cup arcs c1..c3, ring arcs r1..r4, middle cups s1, s2.
    enum : ArcId { a1, a2, a3, c1, c2, c3, r1, r2, r3, r4, s1, s2 };
    std::vector<Crossing> crossings = {
        {r4, a2, r1, a3}, // upper left: ring under the left cup
        {a1, r3, a2, r4}, // lower left: ring over
        {r2, c3, r1, c2}, // upper right: ring under the right cup
        {c1, r2, c2, r3}, // lower right: ring over
    };
    return TangleDiagram(std::move(crossings), 0, {a1, a3, s1, s2, s2, s1, c3, c1});
}

} // namespace tqft::fixtures
