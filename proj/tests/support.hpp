#pragma once

#include "tqft/laurent.hpp"
#include "tqft/params.hpp"

#include <numbers>
#include <random>
#include <vector>

namespace test_support {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(12345);
    return g;
}

inline tqft::LaurentPoly random_laurent(int span = 6, int terms = 4) {
    std::uniform_int_distribution<int> exp(-span, span), coeff(-9, 9);
    tqft::LaurentPoly p;
    for (int i = 0; i < terms; ++i) p += tqft::LaurentPoly::monomial(coeff(rng()), exp(rng()));
    return p;
}

inline tqft::ChernSimonsParams random_phase() {
    std::uniform_real_distribution<double> t(0.0, 2.0 * std::numbers::pi);
    return tqft::ChernSimonsParams::from_phase(t(rng()));
}

inline std::vector<int> random_word(std::size_t strands, std::size_t length) {
    std::uniform_int_distribution<int> gen(1, static_cast<int>(strands) - 1), sign(0, 1);
    std::vector<int> w;
    for (std::size_t i = 0; i < length; ++i) w.push_back(sign(rng()) ? gen(rng()) : -gen(rng()));
    return w;
}

} // namespace test_support
