#include "tqft/kernels.hpp"

#include <algorithm>
#include <vector>

namespace tqft::kernels {

namespace {

// Written out in components: std::complex operator* goes through the
// NaN/inf-recovering slow path under strict IEEE settings.
struct C {
    double re, im;
};

inline C load(const cplx& z) { return {z.real(), z.imag()}; }
inline void mac(C& acc, C a, C b) {
    acc.re += a.re * b.re - a.im * b.im;
    acc.im += a.re * b.im + a.im * b.re;
}

void cgemm(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
    std::vector<C> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(row.begin(), row.end(), C{0, 0});
        for (std::size_t k = 0; k < n; ++k) {
            C aik = load(a[i * n + k]);
            if (aik.re == 0 && aik.im == 0) continue;
            const cplx* bk = b + k * n;
            for (std::size_t j = 0; j < n; ++j) mac(row[j], aik, load(bk[j]));
        }
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] = cplx(row[j].re, row[j].im);
    }
}

void cgemv(const cplx* a, const cplx* x, cplx* y, std::size_t rows, std::size_t cols) {
    for (std::size_t i = 0; i < rows; ++i) {
        C acc{0, 0};
        const cplx* ai = a + i * cols;
        for (std::size_t j = 0; j < cols; ++j) mac(acc, load(ai[j]), load(x[j]));
        y[i] = cplx(acc.re, acc.im);
    }
}

cplx dotu(const cplx* x, const cplx* y, std::size_t n) {
    C acc{0, 0};
    for (std::size_t i = 0; i < n; ++i) mac(acc, load(x[i]), load(y[i]));
    return {acc.re, acc.im};
}

cplx dotc(const cplx* x, const cplx* y, std::size_t n) {
    C acc{0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        C xc = load(x[i]);
        xc.im = -xc.im;
        mac(acc, xc, load(y[i]));
    }
    return {acc.re, acc.im};
}

void apply_two_site(cplx* v, std::size_t strands, std::size_t site, const cplx* gate) {
    const std::size_t sl = std::size_t{1} << (strands - 2 - site);
    const std::size_t sh = 2 * sl;
    const std::size_t dim = std::size_t{1} << strands;
    C g[16];
    for (int i = 0; i < 16; ++i) g[i] = load(gate[i]);
    for (std::size_t block = 0; block < dim; block += 2 * sh) {
        for (std::size_t low = 0; low < sl; ++low) {
            const std::size_t idx[4] = {block + low, block + low + sl, block + low + sh, block + low + sh + sl};
            C in[4];
            for (int c = 0; c < 4; ++c) in[c] = load(v[idx[c]]);
            for (int r = 0; r < 4; ++r) {
                C acc{0, 0};
                for (int c = 0; c < 4; ++c) mac(acc, g[4 * r + c], in[c]);
                v[idx[r]] = cplx(acc.re, acc.im);
            }
        }
    }
}

} // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{"scalar", cgemm, cgemv, dotu, dotc, apply_two_site};
    return table;
}

} // namespace tqft::kernels
