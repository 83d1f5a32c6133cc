#include "tqft/verify/oracles.hpp"

#include "tqft/error.hpp"

#include <cmath>
#include <numeric>

namespace tqft::oracle {

LaurentPoly state_sum_bracket(const LinkDiagram& d) {
    const auto& cs = d.crossings();
    const std::size_t c = cs.size();
    if (c > 20) throw Error(ErrorCode::diagram_too_large, "state sum oracle is limited to 20 crossings");
    const LaurentPoly delta = LaurentPoly::loop_value();
    LaurentPoly total;
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
        std::vector<std::size_t> parent(d.arc_count());
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };
        int a_count = 0;
        for (std::size_t i = 0; i < c; ++i) {
            const auto& x = cs[i];
            if ((state >> i) & 1u) {
                unite(x[0], x[3]);
                unite(x[1], x[2]);
            } else {
                ++a_count;
                unite(x[0], x[1]);
                unite(x[2], x[3]);
            }
        }
        std::size_t loops = d.free_loops();
        for (std::size_t arc = 0; arc < d.arc_count(); ++arc)
            if (find(arc) == arc) ++loops;
        const int b_count = static_cast<int>(c) - a_count;
        total += delta.pow(static_cast<unsigned>(loops)).shifted(a_count - b_count);
    }
    return total;
}

TLProduct tl_multiply_via_tangles(const PlanarMatching& a, const PlanarMatching& b) {
    if (a.n() != b.n()) throw Error(ErrorCode::size_mismatch, "different strand counts");
    // b on top: its lower endpoints (the last n boundary slots) meet a's upper endpoints.
    const TangleDiagram stacked = compose(operator_tangle(b), operator_tangle(a), a.n());
    return {operator_matching(stacked), stacked.free_loops()};
}

std::array<std::array<cplx, 2>, 2> gram_schmidt(const std::array<std::array<cplx, 2>, 2>& g) {
    auto form = [&](const std::array<cplx, 2>& u, const std::array<cplx, 2>& v) {
        cplx s = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) s += u[i] * g[i][j] * v[j];
        return s;
    };
    std::array<cplx, 2> f0 = {1.0, 0.0};
    f0[0] /= std::sqrt(form(f0, f0));
    std::array<cplx, 2> f1 = {0.0, 1.0};
    const cplx proj = form(f0, f1);
    f1[0] -= proj * f0[0];
    f1[1] -= proj * f0[1];
    const cplx n1 = std::sqrt(form(f1, f1));
    f1[0] /= n1;
    f1[1] /= n1;
    return {f0, f1};
}

} // namespace tqft::oracle
