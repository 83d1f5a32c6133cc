#include "tqft/diagram.hpp"
#include "tqft/error.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace tqft {

namespace {

struct BraidPD {
    std::vector<Crossing> crossings;
    std::vector<ArcId> bottom;
    std::vector<ArcId> top;
};

BraidPD trace_braid(std::size_t strands, std::span<const int> word) {
    if (strands == 0) throw Error(ErrorCode::invalid_argument, "braid needs at least one strand");
    BraidPD pd;
    pd.bottom.resize(strands);
    std::iota(pd.bottom.begin(), pd.bottom.end(), ArcId{0});
    std::vector<ArcId> cur = pd.bottom;
    auto next = static_cast<ArcId>(strands);
    for (int letter : word) {
        const std::size_t i = static_cast<std::size_t>(std::abs(letter));
        if (letter == 0 || i >= strands)
            throw Error(ErrorCode::index_out_of_range, "braid letter " + std::to_string(letter) + " on " +
                                                           std::to_string(strands) + " strands");
        const std::size_t p = i - 1;
        const ArcId a = cur[p], b = cur[p + 1];
        const ArcId lo = next++, hi = next++;
        // sigma_i: the strand from position p+1 passes under toward position p.
        if (letter > 0)
            pd.crossings.push_back({b, hi, lo, a});
        else
            pd.crossings.push_back({a, b, hi, lo});
        cur[p] = lo;
        cur[p + 1] = hi;
    }
    pd.top = std::move(cur);
    return pd;
}

} // namespace

TangleDiagram braid_tangle(std::size_t strands, std::span<const int> word) {
    BraidPD pd = trace_braid(strands, word);
    std::vector<ArcId> boundary = pd.top;
    boundary.insert(boundary.end(), pd.bottom.begin(), pd.bottom.end());
    return TangleDiagram(std::move(pd.crossings), 0, std::move(boundary));
}

LinkDiagram braid_closure(std::size_t strands, std::span<const int> word) {
    BraidPD pd = trace_braid(strands, word);
    std::vector<ArcId> rename(strands + 2 * word.size());
    std::iota(rename.begin(), rename.end(), ArcId{0});
    std::size_t loops = 0;
    for (std::size_t p = 0; p < strands; ++p) {
        if (pd.top[p] == pd.bottom[p])
            ++loops; // strand never crossed anything
        else
            rename[pd.top[p]] = pd.bottom[p];
    }
    for (auto& c : pd.crossings)
        for (auto& a : c) a = rename[a];
    return LinkDiagram(std::move(pd.crossings), loops);
}

int braid_writhe(std::span<const int> word) {
    int w = 0;
    for (int letter : word) w += letter > 0 ? 1 : -1;
    return w;
}

} // namespace tqft
