#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace tqft {

using cplx = std::complex<double>;

enum class LevelMode { integer_k, minus_one, classical_limit, phase };

// The (k, A, d) bundle. A is always on the unit circle: A = e^{i theta}.
// For A in {1, i, -1, -i} the value is stored exactly and quarter_turns() reports it,
// which lets evaluation take an exact integer path.
class ChernSimonsParams {
public:
    // k >= 1; k == -1 is accepted as an alias for minus_one().
    static ChernSimonsParams level(int k);
    static ChernSimonsParams minus_one();
    static ChernSimonsParams classical_limit();
    // A = e^{i theta}; snaps to the exact value when theta is a multiple of pi/2.
    static ChernSimonsParams from_phase(double theta);
    // A in {1, i, -1, -i}, by number of quarter turns (0..3).
    static ChernSimonsParams unit_point(int quarter_turns);
    // "inf", "-1", or a decimal integer k.
    static ChernSimonsParams parse_level_label(std::string_view label);

    LevelMode mode() const { return mode_; }
    std::optional<int> k() const { return k_; }
    double theta() const { return theta_; }
    cplx A() const { return a_; }
    double d() const { return d_; }
    std::optional<int> quarter_turns() const { return quarter_turns_; }
    std::string label() const;

    // True at A in {1, -1, i, -i}, where the representation is genuinely unitary.
    bool is_unitary_point() const { return quarter_turns_.has_value(); }
    bool degenerate_qubit() const;
    // sqrt(d^2 - 1) on the principal branch; throws DegenerateQubit when d^2 - 1 <= 0.
    double sqrt_delta() const;

private:
    ChernSimonsParams(LevelMode mode, std::optional<int> k, double theta);
    void check_loop_value() const;

    LevelMode mode_;
    std::optional<int> k_;
    double theta_;
    cplx a_;
    double d_;
    std::optional<int> quarter_turns_;
};

} // namespace tqft
