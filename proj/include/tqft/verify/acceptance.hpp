#pragma once

#include "tqft/params.hpp"
#include "tqft/spin.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tqft::acceptance {

struct Options {
    // Hook for mutation testing: the R-matrix used by the representation checks.
    std::function<RepMatrix(const ChernSimonsParams&)> r_matrix;
    std::uint64_t seed = 20240611;
};

Options default_options();

struct Result {
    int id = 0;
    std::string title;
    std::string claim; // the quoted statement being reproduced
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

constexpr int criterion_count = 12;

Result run(int id, const Options& opts);
std::vector<Result> run_all(const Options& opts);
// "[PASS] 03 title -- detail (12.3 ms)"
std::string format_line(const Result& r);

} // namespace tqft::acceptance
