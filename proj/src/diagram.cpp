#include "tqft/diagram.hpp"

#include "tqft/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace tqft {

namespace {

// Plain union-find over dense arc ids.
struct ArcUnion {
    std::vector<ArcId> parent;
    explicit ArcUnion(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), ArcId{0}); }
    ArcId find(ArcId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // Joins the strands ending at x and y. Returns true if that closed a loop.
    bool join(ArcId x, ArcId y) {
        x = find(x);
        y = find(y);
        if (x == y) return true;
        parent[y] = x;
        return false;
    }
};

} // namespace

TangleDiagram::TangleDiagram(std::vector<Crossing> crossings, std::size_t free_loops, std::vector<ArcId> boundary)
    : free_loops_(free_loops) {
    std::unordered_map<ArcId, ArcId> rename;
    std::vector<std::uint8_t> seen;
    auto dense = [&](ArcId id) {
        auto [it, inserted] = rename.try_emplace(id, static_cast<ArcId>(rename.size()));
        if (inserted) seen.push_back(0);
        if (++seen[it->second] > 2)
            throw Error(ErrorCode::invalid_diagram, "arc " + std::to_string(id) + " occurs more than twice");
        return it->second;
    };
    crossings_.reserve(crossings.size());
    for (const auto& c : crossings) {
        Crossing r;
        for (int s = 0; s < 4; ++s) r[s] = dense(c[s]);
        crossings_.push_back(r);
    }
    boundary_.reserve(boundary.size());
    for (ArcId b : boundary) boundary_.push_back(dense(b));
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] != 2) {
            ArcId original = 0;
            for (const auto& [k, v] : rename)
                if (v == i) original = k;
            throw Error(ErrorCode::invalid_diagram, "arc " + std::to_string(original) + " occurs only once");
        }
    }
    arc_count_ = rename.size();
}

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::size_t free_loops)
    : t_(std::move(crossings), free_loops, {}) {}

LinkDiagram::LinkDiagram(const TangleDiagram& closed) : t_(closed) {
    if (!closed.is_closed())
        throw Error(ErrorCode::open_boundary, std::to_string(closed.boundary().size()) + " open endpoints");
}

TangleDiagram compose(const TangleDiagram& top, const TangleDiagram& bottom, std::size_t joined) {
    const auto& tb = top.boundary();
    const auto& bb = bottom.boundary();
    if (joined > tb.size() || joined > bb.size())
        throw Error(ErrorCode::boundary_mismatch, "cannot join " + std::to_string(joined) + " endpoints of tangles with " +
                                                      std::to_string(tb.size()) + " and " + std::to_string(bb.size()));
    const auto offset = static_cast<ArcId>(top.arc_count());
    ArcUnion uf(top.arc_count() + bottom.arc_count());
    std::size_t loops = top.free_loops() + bottom.free_loops();
    const std::size_t keep_top = tb.size() - joined;
    for (std::size_t j = 0; j < joined; ++j)
        if (uf.join(tb[keep_top + j], bb[j] + offset)) ++loops;

    std::vector<Crossing> crossings;
    crossings.reserve(top.crossing_count() + bottom.crossing_count());
    for (const auto& c : top.crossings())
        crossings.push_back({uf.find(c[0]), uf.find(c[1]), uf.find(c[2]), uf.find(c[3])});
    for (const auto& c : bottom.crossings())
        crossings.push_back({uf.find(c[0] + offset), uf.find(c[1] + offset), uf.find(c[2] + offset), uf.find(c[3] + offset)});
    std::vector<ArcId> boundary;
    for (std::size_t j = 0; j < keep_top; ++j) boundary.push_back(uf.find(tb[j]));
    for (std::size_t j = joined; j < bb.size(); ++j) boundary.push_back(uf.find(bb[j] + offset));
    return TangleDiagram(std::move(crossings), loops, std::move(boundary));
}

TangleDiagram juxtapose(const TangleDiagram& left, const TangleDiagram& right) {
    const auto offset = static_cast<ArcId>(left.arc_count());
    std::vector<Crossing> crossings = left.crossings();
    for (auto c : right.crossings()) {
        for (auto& a : c) a += offset;
        crossings.push_back(c);
    }
    std::vector<ArcId> boundary = left.boundary();
    for (ArcId b : right.boundary()) boundary.push_back(b + offset);
    return TangleDiagram(std::move(crossings), left.free_loops() + right.free_loops(), std::move(boundary));
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
    return LinkDiagram(juxtapose(a.as_tangle(), b.as_tangle()));
}

TangleDiagram reflect(const TangleDiagram& t) {
    std::vector<Crossing> crossings;
    crossings.reserve(t.crossing_count());
    for (const auto& c : t.crossings()) crossings.push_back({c[0], c[3], c[2], c[1]});
    return TangleDiagram(std::move(crossings), t.free_loops(), t.boundary());
}

std::size_t count_loops(const LinkDiagram& d) {
    if (d.crossing_count() != 0)
        throw Error(ErrorCode::has_crossings, std::to_string(d.crossing_count()) + " crossings remain");
    return d.free_loops();
}

int writhe(const LinkDiagram& d) {
    const auto& cs = d.crossings();
    // occurrences[arc] = two (crossing, slot) positions
    std::vector<std::array<std::pair<std::size_t, int>, 2>> occ(d.arc_count());
    std::vector<int> filled(d.arc_count(), 0);
    for (std::size_t c = 0; c < cs.size(); ++c)
        for (int s = 0; s < 4; ++s) occ[cs[c][s]][filled[cs[c][s]]++] = {c, s};

    std::vector<int> over_in(cs.size(), -1);
    std::vector<char> under_done(cs.size(), 0);
    auto walk = [&](std::size_t c0, int s0) {
        std::size_t c = c0;
        int s = s0;
        do {
            if (s % 2 == 0) {
                if (s != 0) throw Error(ErrorCode::invalid_diagram, "under-strand orientations disagree");
                under_done[c] = 1;
            } else {
                over_in[c] = s;
            }
            const int out = (s + 2) % 4;
            const auto& o = occ[cs[c][out]];
            const auto next = (o[0] == std::pair<std::size_t, int>{c, out}) ? o[1] : o[0];
            c = next.first;
            s = next.second;
        } while (c != c0 || s != s0);
    };
    for (std::size_t c = 0; c < cs.size(); ++c)
        if (!under_done[c]) walk(c, 0);
    for (std::size_t c = 0; c < cs.size(); ++c)
        if (over_in[c] < 0) walk(c, 3);
    int w = 0;
    for (std::size_t c = 0; c < cs.size(); ++c) w += over_in[c] == 3 ? 1 : -1;
    return w;
}

std::pair<TangleDiagram, TangleDiagram> resolve_crossing(const TangleDiagram& d, std::size_t index) {
    if (d.crossing_count() == 0) throw Error(ErrorCode::has_crossings, "diagram has no crossing to resolve");
    if (index >= d.crossing_count())
        throw Error(ErrorCode::index_out_of_range,
                    "crossing " + std::to_string(index) + " of " + std::to_string(d.crossing_count()));
    const Crossing& x = d.crossings()[index];
    auto smooth = [&](ArcId p, ArcId q, ArcId r, ArcId s) {
        ArcUnion uf(d.arc_count());
        std::size_t loops = d.free_loops();
        if (uf.join(p, q)) ++loops;
        if (uf.join(r, s)) ++loops;
        std::vector<Crossing> crossings;
        crossings.reserve(d.crossing_count() - 1);
        for (std::size_t i = 0; i < d.crossing_count(); ++i) {
            if (i == index) continue;
            const auto& c = d.crossings()[i];
            crossings.push_back({uf.find(c[0]), uf.find(c[1]), uf.find(c[2]), uf.find(c[3])});
        }
        std::vector<ArcId> boundary;
        for (ArcId b : d.boundary()) boundary.push_back(uf.find(b));
        return TangleDiagram(std::move(crossings), loops, std::move(boundary));
    };
    return {smooth(x[0], x[1], x[2], x[3]), smooth(x[0], x[3], x[1], x[2])};
}

std::pair<LinkDiagram, LinkDiagram> resolve_crossing(const LinkDiagram& d, std::size_t index) {
    auto [a, b] = resolve_crossing(d.as_tangle(), index);
    return {LinkDiagram(a), LinkDiagram(b)};
}

// ---- planar matchings ----

PlanarMatching::PlanarMatching(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
    if (pairs.size() != n) throw Error(ErrorCode::invalid_argument, "need exactly n pairs");
    partner_.assign(2 * n, UINT32_MAX);
    for (auto [a, b] : pairs) {
        if (a >= 2 * n || b >= 2 * n || a == b)
            throw Error(ErrorCode::invalid_argument, "pair out of range");
        if (partner_[a] != UINT32_MAX || partner_[b] != UINT32_MAX)
            throw Error(ErrorCode::invalid_argument, "point matched twice");
        partner_[a] = static_cast<std::uint32_t>(b);
        partner_[b] = static_cast<std::uint32_t>(a);
    }
    validate();
}

PlanarMatching PlanarMatching::from_partners(std::vector<std::uint32_t> partner) {
    PlanarMatching m;
    m.partner_ = std::move(partner);
    m.validate();
    return m;
}

void PlanarMatching::validate() const {
    const std::size_t np = partner_.size();
    if (np % 2 != 0) throw Error(ErrorCode::invalid_argument, "odd number of points");
    for (std::size_t p = 0; p < np; ++p) {
        std::size_t q = partner_[p];
        if (q >= np || q == p || partner_[q] != p) throw Error(ErrorCode::invalid_argument, "not a perfect matching");
    }
    // A matching is non-crossing iff its pairs nest like brackets.
    std::vector<std::size_t> stack;
    for (std::size_t p = 0; p < np; ++p) {
        std::size_t q = partner_[p];
        if (q > p) {
            stack.push_back(p);
        } else {
            if (stack.empty() || stack.back() != q)
                throw Error(ErrorCode::invalid_argument, "matching is not planar");
            stack.pop_back();
        }
    }
}

PlanarMatching PlanarMatching::identity(std::size_t n) {
    std::vector<std::uint32_t> partner(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        partner[j] = static_cast<std::uint32_t>(2 * n - 1 - j);
        partner[2 * n - 1 - j] = static_cast<std::uint32_t>(j);
    }
    return from_partners(std::move(partner));
}

PlanarMatching PlanarMatching::generator(std::size_t i, std::size_t n) {
    if (i < 1 || i >= n)
        throw Error(ErrorCode::index_out_of_range, "generator index " + std::to_string(i) + " on " + std::to_string(n) + " strands");
    std::vector<std::uint32_t> partner = identity(n).partners();
    auto link = [&](std::size_t a, std::size_t b) {
        partner[a] = static_cast<std::uint32_t>(b);
        partner[b] = static_cast<std::uint32_t>(a);
    };
    link(i - 1, i);
    link(2 * n - i, 2 * n - 1 - i);
    return from_partners(std::move(partner));
}

std::vector<std::pair<std::size_t, std::size_t>> PlanarMatching::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t p = 0; p < partner_.size(); ++p)
        if (partner_[p] > p) out.emplace_back(p, partner_[p]);
    return out;
}

std::vector<PlanarMatching> enumerate_planar_matchings(std::size_t n) {
    // Point `lo` pairs with some lo+2t+1; inside and outside are matched independently.
    std::vector<std::vector<std::vector<std::uint32_t>>> by_size(n + 1);
    by_size[0].push_back({});
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t t = 0; t < m; ++t) {
            const auto& inner = by_size[t];
            const auto& outer = by_size[m - 1 - t];
            for (const auto& in : inner) {
                for (const auto& out : outer) {
                    std::vector<std::uint32_t> p(2 * m);
                    const auto close = static_cast<std::uint32_t>(2 * t + 1);
                    p[0] = close;
                    p[close] = 0;
                    for (std::size_t j = 0; j < in.size(); ++j) p[1 + j] = in[j] + 1;
                    for (std::size_t j = 0; j < out.size(); ++j) p[close + 1 + j] = out[j] + close + 1;
                    by_size[m].push_back(std::move(p));
                }
            }
        }
    }
    std::vector<PlanarMatching> result;
    result.reserve(by_size[n].size());
    for (auto& p : by_size[n]) result.push_back(PlanarMatching::from_partners(std::move(p)));
    std::sort(result.begin(), result.end());
    return result;
}

TLProduct tl_multiply(const PlanarMatching& a, const PlanarMatching& b) {
    if (a.n() != b.n())
        throw Error(ErrorCode::size_mismatch, "TL product of " + std::to_string(a.n()) + " and " + std::to_string(b.n()) + " strands");
    const std::size_t n = a.n();
    const std::size_t np = 2 * n;
    // Node ids: a's points are 0..np-1, b's are np..2np-1.
    // a's top position j (point j) is glued to b's bottom position j (point np-1-j).
    auto glued = [&](std::size_t node) -> std::size_t {
        if (node < np) return node < n ? np + (np - 1 - node) : SIZE_MAX;
        std::size_t p = node - np;
        return p >= n ? np - 1 - p : SIZE_MAX;
    };
    auto partner = [&](std::size_t node) {
        return node < np ? a.partner(node) : np + b.partner(node - np);
    };
    // Result point r: top j -> b's point j; bottom j (point np-1-j) -> a's point np-1-j.
    auto node_of = [&](std::size_t r) { return r < n ? np + r : r; };
    auto point_of = [&](std::size_t node) { return node < np ? node : node - np; };

    std::vector<std::uint32_t> result(np, UINT32_MAX);
    std::vector<char> visited(2 * np, 0);
    for (std::size_t r = 0; r < np; ++r) {
        if (result[r] != UINT32_MAX) continue;
        std::size_t node = node_of(r);
        visited[node] = 1;
        for (;;) {
            node = partner(node);
            visited[node] = 1;
            std::size_t g = glued(node);
            if (g == SIZE_MAX) break;
            node = g;
            visited[node] = 1;
        }
        std::size_t end = point_of(node);
        result[r] = static_cast<std::uint32_t>(end);
        result[end] = static_cast<std::uint32_t>(r);
    }
    std::size_t loops = 0;
    for (std::size_t start = 0; start < 2 * np; ++start) {
        if (visited[start] || glued(start) == SIZE_MAX) continue;
        ++loops;
        std::size_t node = start;
        do {
            visited[node] = 1;
            node = partner(node);
            visited[node] = 1;
            node = glued(node);
        } while (node != start);
    }
    return {PlanarMatching::from_partners(std::move(result)), loops};
}

std::size_t closure_loops(const PlanarMatching& a, const PlanarMatching& b) {
    if (a.point_count() != b.point_count())
        throw Error(ErrorCode::size_mismatch, "matchings on different point counts");
    std::vector<char> visited(a.point_count(), 0);
    std::size_t loops = 0;
    for (std::size_t start = 0; start < a.point_count(); ++start) {
        if (visited[start]) continue;
        ++loops;
        std::size_t p = start;
        do {
            visited[p] = 1;
            p = a.partner(p);
            visited[p] = 1;
            p = b.partner(p);
        } while (p != start);
    }
    return loops;
}

TangleDiagram ket_tangle(const PlanarMatching& m) {
    std::vector<ArcId> boundary(m.point_count());
    ArcId next = 0;
    for (auto [p, q] : m.pairs()) {
        boundary[p] = next;
        boundary[q] = next;
        ++next;
    }
    return TangleDiagram({}, 0, std::move(boundary));
}

TangleDiagram operator_tangle(const PlanarMatching& m) {
    const std::size_t n = m.n();
    auto slot = [&](std::size_t p) { return p < n ? p : n + (2 * n - 1 - p); };
    std::vector<ArcId> boundary(m.point_count());
    ArcId next = 0;
    for (auto [p, q] : m.pairs()) {
        boundary[slot(p)] = next;
        boundary[slot(q)] = next;
        ++next;
    }
    return TangleDiagram({}, 0, std::move(boundary));
}

namespace {

std::vector<std::uint32_t> boundary_partners(const TangleDiagram& t) {
    if (t.crossing_count() != 0) throw Error(ErrorCode::has_crossings, "tangle has crossings");
    const auto& b = t.boundary();
    std::vector<std::uint32_t> partner(b.size(), UINT32_MAX);
    std::vector<std::uint32_t> first(t.arc_count(), UINT32_MAX);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (first[b[i]] == UINT32_MAX) {
            first[b[i]] = static_cast<std::uint32_t>(i);
        } else {
            partner[i] = first[b[i]];
            partner[first[b[i]]] = static_cast<std::uint32_t>(i);
        }
    }
    return partner;
}

} // namespace

PlanarMatching ket_matching(const TangleDiagram& t) {
    try {
        return PlanarMatching::from_partners(boundary_partners(t));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::has_crossings) throw;
        throw Error(ErrorCode::invalid_diagram, e.what());
    }
}

PlanarMatching operator_matching(const TangleDiagram& t) {
    auto slots = boundary_partners(t);
    if (slots.size() % 2 != 0) throw Error(ErrorCode::invalid_diagram, "odd boundary");
    const std::size_t n = slots.size() / 2;
    auto point = [&](std::size_t s) { return s < n ? s : 2 * n - 1 - (s - n); };
    std::vector<std::uint32_t> partner(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) partner[point(s)] = static_cast<std::uint32_t>(point(slots[s]));
    try {
        return PlanarMatching::from_partners(std::move(partner));
    } catch (const Error& e) {
        throw Error(ErrorCode::invalid_diagram, e.what());
    }
}

} // namespace tqft
