#include "tqft/params.hpp"

#include "tqft/error.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace tqft {

namespace {

constexpr double kPi = std::numbers::pi;

std::optional<int> quarter_turns_of(double theta) {
    double q = theta / (kPi / 2.0);
    double r = std::nearbyint(q);
    if (std::abs(q - r) > 1e-15) return std::nullopt;
    int turns = static_cast<int>(std::fmod(r, 4.0));
    if (turns < 0) turns += 4;
    return turns;
}

} // namespace

ChernSimonsParams::ChernSimonsParams(LevelMode mode, std::optional<int> k, double theta)
    : mode_(mode), k_(k), theta_(theta), quarter_turns_(quarter_turns_of(theta)) {
    if (quarter_turns_) {
        static constexpr cplx exact_a[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        a_ = exact_a[*quarter_turns_];
        d_ = (*quarter_turns_ % 2 == 0) ? -2.0 : 2.0;
    } else {
        a_ = cplx(std::cos(theta), std::sin(theta));
        d_ = -2.0 * std::cos(2.0 * theta);
    }
    check_loop_value();
}

void ChernSimonsParams::check_loop_value() const {
    cplx a2 = a_ * a_;
    cplx from_a = -a2 - 1.0 / a2;
    if (std::abs(from_a - cplx(d_, 0.0)) > 1e-12)
        throw Error(ErrorCode::invalid_argument, "loop value inconsistent with A");
}

ChernSimonsParams ChernSimonsParams::level(int k) {
    if (k == -1) return minus_one();
    if (k < 1) throw Error(ErrorCode::invalid_argument, "level k must be >= 1 or -1, got " + std::to_string(k));
    ChernSimonsParams p(LevelMode::integer_k, k, kPi / (2.0 * (k + 2)));
    // d from the closed form rather than from A, to match -2cos(pi/(k+2)) bit for bit
    p.d_ = -2.0 * std::cos(kPi / (k + 2));
    p.check_loop_value();
    return p;
}

ChernSimonsParams ChernSimonsParams::minus_one() {
    return ChernSimonsParams(LevelMode::minus_one, -1, kPi / 2.0);
}

ChernSimonsParams ChernSimonsParams::classical_limit() {
    return ChernSimonsParams(LevelMode::classical_limit, std::nullopt, 0.0);
}

ChernSimonsParams ChernSimonsParams::from_phase(double theta) {
    if (!std::isfinite(theta)) throw Error(ErrorCode::invalid_argument, "phase must be finite");
    return ChernSimonsParams(LevelMode::phase, std::nullopt, theta);
}

ChernSimonsParams ChernSimonsParams::unit_point(int quarter_turns) {
    int q = ((quarter_turns % 4) + 4) % 4;
    return ChernSimonsParams(LevelMode::phase, std::nullopt, q * (kPi / 2.0));
}

ChernSimonsParams ChernSimonsParams::parse_level_label(std::string_view label) {
    if (label == "inf") return classical_limit();
    int k = 0;
    auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), k);
    if (ec != std::errc() || ptr != label.data() + label.size() || label.empty())
        throw Error(ErrorCode::parse_error, "bad level label '" + std::string(label) + "'");
    return level(k);
}

std::string ChernSimonsParams::label() const {
    switch (mode_) {
    case LevelMode::integer_k: return std::to_string(*k_);
    case LevelMode::minus_one: return "-1";
    case LevelMode::classical_limit: return "inf";
    case LevelMode::phase: break;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "exp:%.17g", theta_);
    return buf;
}

bool ChernSimonsParams::degenerate_qubit() const {
    return !(d_ * d_ - 1.0 > 1e-12);
}

double ChernSimonsParams::sqrt_delta() const {
    if (degenerate_qubit())
        throw Error(ErrorCode::degenerate_qubit, "d^2 - 1 must be positive (d = " + std::to_string(d_) + ")");
    return std::sqrt(d_ * d_ - 1.0);
}

} // namespace tqft
