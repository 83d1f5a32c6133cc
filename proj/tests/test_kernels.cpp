#include "support.hpp"

#include "tqft/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace tqft::kernels;

namespace {

std::vector<cplx> random_vec(std::size_t n) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(n);
    for (auto& z : v) z = {g(test_support::rng()), g(test_support::rng())};
    return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("AVX2 kernels match the scalar reference") {
    const KernelTable& s = scalar_table();
    const KernelTable* v = avx2_table();
    if (!v) {
        MESSAGE("AVX2 variant unavailable on this machine; only the scalar table is exercised");
        return;
    }
    CHECK(&active() == v);

    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 16u, 33u}) {
        const auto a = random_vec(n * n), b = random_vec(n * n);
        std::vector<cplx> c1(n * n), c2(n * n);
        s.cgemm(a.data(), b.data(), c1.data(), n);
        v->cgemm(a.data(), b.data(), c2.data(), n);
        CHECK(max_diff(c1, c2) <= 1e-12 * static_cast<double>(n));

        for (std::size_t cols : {1u, 2u, 3u, 9u}) {
            const auto m = random_vec(n * cols), x = random_vec(cols);
            std::vector<cplx> y1(n), y2(n);
            s.cgemv(m.data(), x.data(), y1.data(), n, cols);
            v->cgemv(m.data(), x.data(), y2.data(), n, cols);
            CHECK(max_diff(y1, y2) <= 1e-12 * static_cast<double>(cols));
        }

        const auto x = random_vec(n), y = random_vec(n);
        CHECK(std::abs(s.dotu(x.data(), y.data(), n) - v->dotu(x.data(), y.data(), n)) <= 1e-12 * static_cast<double>(n));
        CHECK(std::abs(s.dotc(x.data(), y.data(), n) - v->dotc(x.data(), y.data(), n)) <= 1e-12 * static_cast<double>(n));
    }

    for (std::size_t strands = 2; strands <= 7; ++strands)
        for (std::size_t site = 0; site + 1 < strands; ++site) {
            const auto gate = random_vec(16);
            auto v1 = random_vec(std::size_t{1} << strands);
            auto v2 = v1;
            s.apply_two_site(v1.data(), strands, site, gate.data());
            v->apply_two_site(v2.data(), strands, site, gate.data());
            CHECK(max_diff(v1, v2) <= 1e-12);
        }
}

TEST_CASE("scalar dot products") {
    const std::vector<cplx> x = {{1, 2}, {3, -1}}, y = {{0, 1}, {2, 2}};
    CHECK(scalar_table().dotu(x.data(), y.data(), 2) == cplx(6, 5));
    CHECK(scalar_table().dotc(x.data(), y.data(), 2) == cplx(6, 9));
}
