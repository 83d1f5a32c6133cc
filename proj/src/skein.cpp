#include "tqft/skein.hpp"

#include "tqft/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <unordered_map>

namespace tqft {

namespace {

using Flat = std::vector<ArcId>; // 4 entries per crossing

struct FlatHash {
    std::size_t operator()(const Flat& v) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (ArcId x : v) {
            h ^= x;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

// Orders crossings so that each next one shares as many arcs as possible with those
// already placed. Keeps the set of "open" arcs small, which is what the memo keys on.
Flat frontier_order(const std::vector<Crossing>& cs) {
    const std::size_t n = cs.size();
    std::vector<char> placed(n, 0);
    std::unordered_map<ArcId, int> open_count;
    Flat out;
    out.reserve(4 * n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        int best_score = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (placed[i]) continue;
            int score = 0;
            for (ArcId a : cs[i]) score += open_count.count(a) ? 1 : 0;
            if (score > best_score) {
                best_score = score;
                best = i;
            }
        }
        placed[best] = 1;
        for (ArcId a : cs[best]) {
            auto it = open_count.find(a);
            if (it == open_count.end())
                open_count.emplace(a, 1);
            else
                open_count.erase(it);
            out.push_back(a);
        }
    }
    return out;
}

void canonicalize(Flat& f) {
    std::unordered_map<ArcId, ArcId> rename;
    rename.reserve(f.size());
    for (ArcId& a : f) {
        auto [it, _] = rename.try_emplace(a, static_cast<ArcId>(rename.size()));
        a = it->second;
    }
}

class BracketEngine {
public:
    BracketEngine() : d_(LaurentPoly::loop_value()) { d_powers_.push_back(LaurentPoly(1)); }

    LaurentPoly run(Flat f) {
        canonicalize(f);
        return eval(f);
    }

    const LaurentPoly& d_pow(std::size_t k) {
        while (d_powers_.size() <= k) d_powers_.push_back(d_powers_.back() * d_);
        return d_powers_[k];
    }

private:
    // Removes crossing 0 and joins (p,q) then (r,s); returns loops closed.
    static std::size_t smooth(const Flat& f, ArcId p, ArcId q, ArcId r, ArcId s, Flat& out) {
        out.assign(f.begin() + 4, f.end());
        std::size_t loops = 0;
        auto join = [&](ArcId x, ArcId y) {
            if (x == y) {
                ++loops;
                return;
            }
            for (ArcId& a : out)
                if (a == y) a = x;
            if (r == y) r = x;
            if (s == y) s = x;
        };
        join(p, q);
        join(r, s);
        return loops;
    }

    LaurentPoly eval(const Flat& f) {
        if (f.empty()) return LaurentPoly(1);
        if (auto it = memo_.find(f); it != memo_.end()) return it->second;

        Flat sub;
        const ArcId a = f[0], b = f[1], c = f[2], e = f[3];
        std::size_t la = smooth(f, a, b, c, e, sub);
        canonicalize(sub);
        LaurentPoly result = (eval(sub) * d_pow(la)).shifted(1);
        std::size_t lb = smooth(f, a, e, b, c, sub);
        canonicalize(sub);
        result += (eval(sub) * d_pow(lb)).shifted(-1);

        memo_.emplace(f, result);
        return result;
    }

    LaurentPoly d_;
    std::deque<LaurentPoly> d_powers_; // stable references across growth
    std::unordered_map<Flat, LaurentPoly, FlatHash> memo_;
};

void check_size(std::size_t crossings, const BracketOptions& opts) {
    if (crossings > opts.max_crossings)
        throw Error(ErrorCode::diagram_too_large, std::to_string(crossings) + " crossings exceeds the cap of " +
                                                      std::to_string(opts.max_crossings));
}

void expand_into(const TangleDiagram& t, const LaurentPoly& weight, std::map<PlanarMatching, LaurentPoly>& out) {
    if (t.crossing_count() == 0) {
        out[ket_matching(t)] += weight * LaurentPoly::loop_value().pow(static_cast<unsigned>(t.free_loops()));
        return;
    }
    auto [sa, sb] = resolve_crossing(t, 0);
    expand_into(sa, weight.shifted(1), out);
    expand_into(sb, weight.shifted(-1), out);
}

} // namespace

LaurentPoly kauffman_bracket(const LinkDiagram& d, const BracketOptions& opts) {
    check_size(d.crossing_count(), opts);
    BracketEngine engine;
    LaurentPoly core = engine.run(frontier_order(d.crossings()));
    return core * engine.d_pow(d.free_loops());
}

LaurentPoly kauffman_bracket(const TangleDiagram& t, const BracketOptions& opts) {
    return kauffman_bracket(LinkDiagram(t), opts);
}

LaurentPoly bracket_of_tangle_pairing(const TangleDiagram& bra, const TangleDiagram& ket, const BracketOptions& opts) {
    if (bra.boundary().size() != ket.boundary().size())
        throw Error(ErrorCode::boundary_mismatch, "bra has " + std::to_string(bra.boundary().size()) +
                                                      " endpoints, ket has " + std::to_string(ket.boundary().size()));
    return kauffman_bracket(compose(reflect(bra), ket, ket.boundary().size()), opts);
}

std::map<PlanarMatching, LaurentPoly> expand_tangle(const TangleDiagram& ket, const BracketOptions& opts) {
    check_size(ket.crossing_count(), opts);
    std::map<PlanarMatching, LaurentPoly> out;
    expand_into(ket, LaurentPoly(1), out);
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

cplx evaluate(const LaurentPoly& p, const ChernSimonsParams& params) {
    if (p.is_zero()) return {0.0, 0.0};
    if (auto q = params.quarter_turns()) {
        // A^e = i^(q e)
        mpz_class re = 0, im = 0;
        for (const auto& [e, c] : p.terms()) {
            int r = static_cast<int>(((static_cast<long long>(*q) * e) % 4 + 4) % 4);
            switch (r) {
            case 0: re += c; break;
            case 1: im += c; break;
            case 2: re -= c; break;
            default: im -= c; break;
            }
        }
        return {re.get_d() + 0.0, im.get_d() + 0.0};
    }

    // Fold exponents e and -e together: A^e + A^-e = 2cos(e t), A^e - A^-e = 2i sin(e t).
    std::map<int, std::pair<mpz_class, mpz_class>> folded; // e >= 0 -> (cos weight, sin weight)
    for (const auto& [e, c] : p.terms()) {
        auto& [cw, sw] = folded[std::abs(e)];
        cw += c;
        if (e > 0) sw += c;
        if (e < 0) sw -= c;
    }
    const double theta = params.theta();
    static const mpz_class limit = mpz_class(1) << 53;
    bool small = true;
    for (const auto& [e, w] : folded)
        if (abs(w.first) > limit || abs(w.second) > limit) small = false;

    if (small) {
        // Neumaier-compensated sums.
        auto add = [](double& sum, double& comp, double x) {
            double t = sum + x;
            comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
            sum = t;
        };
        double re = 0, rc = 0, im = 0, ic = 0;
        for (const auto& [e, w] : folded) {
            double ang = e * theta;
            if (w.first != 0) add(re, rc, w.first.get_d() * std::cos(ang));
            if (w.second != 0) add(im, ic, w.second.get_d() * std::sin(ang));
        }
        return {re + rc + 0.0, im + ic + 0.0};
    }
    constexpr mp_bitcnt_t prec = 512;
    mpf_class re(0, prec), im(0, prec), term(0, prec);
    for (const auto& [e, w] : folded) {
        double ang = e * theta;
        term = mpf_class(w.first, prec);
        term *= std::cos(ang);
        re += term;
        term = mpf_class(w.second, prec);
        term *= std::sin(ang);
        im += term;
    }
    return {re.get_d() + 0.0, im.get_d() + 0.0};
}

} // namespace tqft
