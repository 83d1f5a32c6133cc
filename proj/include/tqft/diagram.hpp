#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tqft {

using ArcId = std::uint32_t;
// PD-style crossing: arcs listed counterclockwise starting from the incoming under-strand.
// Smoothing X[a,b,c,d] joins (a,b)(c,d) with weight A and (a,d)(b,c) with weight A^-1.
using Crossing = std::array<ArcId, 4>;

// A planar diagram with open endpoints. Every arc id occurs exactly twice across the
// crossing slots and the boundary list together, so a crossingless strand running from
// one endpoint to another occurs twice in the boundary. Arc ids are renumbered densely
// in order of first appearance (crossings first, then boundary) on construction.
class TangleDiagram {
public:
    TangleDiagram() = default;
    TangleDiagram(std::vector<Crossing> crossings, std::size_t free_loops, std::vector<ArcId> boundary);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    std::size_t crossing_count() const { return crossings_.size(); }
    std::size_t free_loops() const { return free_loops_; }
    const std::vector<ArcId>& boundary() const { return boundary_; }
    std::size_t arc_count() const { return arc_count_; }
    bool is_closed() const { return boundary_.empty(); }

    friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;

private:
    std::vector<Crossing> crossings_;
    std::size_t free_loops_ = 0;
    std::vector<ArcId> boundary_;
    std::size_t arc_count_ = 0;
};

// A closed diagram: no endpoints.
class LinkDiagram {
public:
    LinkDiagram() = default;
    LinkDiagram(std::vector<Crossing> crossings, std::size_t free_loops);
    // Throws OpenBoundary if the tangle has endpoints.
    explicit LinkDiagram(const TangleDiagram& closed);

    const std::vector<Crossing>& crossings() const { return t_.crossings(); }
    std::size_t crossing_count() const { return t_.crossing_count(); }
    std::size_t free_loops() const { return t_.free_loops(); }
    std::size_t arc_count() const { return t_.arc_count(); }
    const TangleDiagram& as_tangle() const { return t_; }

    friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

private:
    TangleDiagram t_;
};

// Glue top's last `joined` endpoints, in order, to bottom's first `joined` endpoints.
// The result's boundary is top's remaining prefix followed by bottom's remaining suffix.
TangleDiagram compose(const TangleDiagram& top, const TangleDiagram& bottom, std::size_t joined);

// Side-by-side placement; boundary is left's then right's.
TangleDiagram juxtapose(const TangleDiagram& left, const TangleDiagram& right);
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

// Mirror image through the line carrying the endpoints (turns a ket into a bra).
TangleDiagram reflect(const TangleDiagram& t);

std::size_t count_loops(const LinkDiagram& d);

// Sum of crossing signs. Each component is oriented so that under-passes run from
// slot 0 to slot 2; a crossing is positive when the over-strand runs from slot 3 to slot 1.
// A component that never passes under is oriented from its first over-pass, slot 3 first.
int writhe(const LinkDiagram& d);

// (A-smoothing, A^-1-smoothing) of crossing `index`.
std::pair<LinkDiagram, LinkDiagram> resolve_crossing(const LinkDiagram& d, std::size_t index);
std::pair<TangleDiagram, TangleDiagram> resolve_crossing(const TangleDiagram& d, std::size_t index);

// Non-crossing perfect matching on points 0..2n-1, read cyclically.
// As a Temperley-Lieb element on n strands, top-row position j is point j and
// bottom-row position j is point 2n-1-j.
class PlanarMatching {
public:
    PlanarMatching() = default;
    PlanarMatching(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs);
    static PlanarMatching from_partners(std::vector<std::uint32_t> partner);

    static PlanarMatching identity(std::size_t n);
    // e_i for 1 <= i <= n-1: caps joining positions i-1 and i on both rows.
    static PlanarMatching generator(std::size_t i, std::size_t n);

    std::size_t n() const { return partner_.size() / 2; }
    std::size_t point_count() const { return partner_.size(); }
    std::size_t partner(std::size_t p) const { return partner_[p]; }
    const std::vector<std::uint32_t>& partners() const { return partner_; }
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    friend bool operator==(const PlanarMatching&, const PlanarMatching&) = default;
    friend auto operator<=>(const PlanarMatching&, const PlanarMatching&) = default;

private:
    void validate() const;
    std::vector<std::uint32_t> partner_;
};

std::vector<PlanarMatching> enumerate_planar_matchings(std::size_t n);

struct TLProduct {
    PlanarMatching matching;
    std::size_t loops = 0;
};

// Stack b atop a (a's top row meets b's bottom row). As matrices this is M_b * M_a.
TLProduct tl_multiply(const PlanarMatching& a, const PlanarMatching& b);

// Number of closed loops formed when two matchings on the same points are glued
// point to point (a ket paired with the reflected bra).
std::size_t closure_loops(const PlanarMatching& a, const PlanarMatching& b);

// Conversions. A "ket" tangle has all endpoints on one line, boundary index = point.
// An "operator" tangle lists upper endpoints left to right, then lower endpoints left to right.
TangleDiagram ket_tangle(const PlanarMatching& m);
TangleDiagram operator_tangle(const PlanarMatching& m);
// Boundary pairing of a crossingless ket tangle. Throws HasCrossings / InvalidDiagram.
PlanarMatching ket_matching(const TangleDiagram& t);
PlanarMatching operator_matching(const TangleDiagram& t);

// Braid words: letter +i is sigma_i, -i its inverse, 1 <= |i| <= strands-1.
// Strands run upward and letters are applied bottom to top.
TangleDiagram braid_tangle(std::size_t strands, std::span<const int> word);
LinkDiagram braid_closure(std::size_t strands, std::span<const int> word);
int braid_writhe(std::span<const int> word);

} // namespace tqft
