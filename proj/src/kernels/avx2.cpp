// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "tqft/kernels.hpp"

#include <immintrin.h>

#include <vector>

namespace tqft::kernels {

namespace {

// A __m256d holds two complex numbers as [re0, im0, re1, im1].

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// x * (s_re + i s_im) with s broadcast into both lanes.
inline __m256d cmul_bcast(__m256d x, __m256d s_re, __m256d s_im) {
    __m256d x_sw = _mm256_permute_pd(x, 0x5);
    return _mm256_fmaddsub_pd(x, s_re, _mm256_mul_pd(x_sw, s_im));
}

inline cplx hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    double out[2];
    _mm_storeu_pd(out, s);
    return {out[0], out[1]};
}

inline void mac_scalar(double& re, double& im, const cplx& a, const cplx& b) {
    re += a.real() * b.real() - a.imag() * b.imag();
    im += a.real() * b.imag() + a.imag() * b.real();
}

void cgemm(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
    const std::size_t n2 = n & ~std::size_t{1};
    std::vector<cplx> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& z : row) z = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik.real() == 0 && aik.imag() == 0) continue;
            const __m256d s_re = _mm256_set1_pd(aik.real());
            const __m256d s_im = _mm256_set1_pd(aik.imag());
            const cplx* bk = b + k * n;
            std::size_t j = 0;
            for (; j < n2; j += 2) {
                __m256d acc = load2(&row[j]);
                acc = _mm256_add_pd(acc, cmul_bcast(load2(bk + j), s_re, s_im));
                store2(&row[j], acc);
            }
            for (; j < n; ++j) {
                double re = row[j].real(), im = row[j].imag();
                mac_scalar(re, im, aik, bk[j]);
                row[j] = {re, im};
            }
        }
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] = row[j];
    }
}

// sum x_i y_i, accumulated as x*Re(y) and swap(x)*Im(y), combined at the end.
template <bool Conj>
cplx dot_impl(const cplx* x, const cplx* y, std::size_t n) {
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    const std::size_t n2 = n & ~std::size_t{1};
    std::size_t i = 0;
    for (; i < n2; i += 2) {
        __m256d xv = load2(x + i);
        __m256d yv = load2(y + i);
        if constexpr (Conj) {
            // y * conj(x)
            acc1 = _mm256_fmadd_pd(yv, _mm256_movedup_pd(xv), acc1);
            acc2 = _mm256_fmadd_pd(_mm256_permute_pd(yv, 0x5), _mm256_permute_pd(xv, 0xF), acc2);
        } else {
            acc1 = _mm256_fmadd_pd(xv, _mm256_movedup_pd(yv), acc1);
            acc2 = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), _mm256_permute_pd(yv, 0xF), acc2);
        }
    }
    __m256d combined;
    if constexpr (Conj)
        combined = _mm256_addsub_pd(acc1, _mm256_sub_pd(_mm256_setzero_pd(), acc2));
    else
        combined = _mm256_addsub_pd(acc1, acc2);
    cplx s = hsum(combined);
    double re = s.real(), im = s.imag();
    for (; i < n; ++i) mac_scalar(re, im, Conj ? std::conj(x[i]) : x[i], y[i]);
    return {re, im};
}

cplx dotu(const cplx* x, const cplx* y, std::size_t n) { return dot_impl<false>(x, y, n); }
cplx dotc(const cplx* x, const cplx* y, std::size_t n) { return dot_impl<true>(x, y, n); }

void cgemv(const cplx* a, const cplx* x, cplx* y, std::size_t rows, std::size_t cols) {
    for (std::size_t i = 0; i < rows; ++i) y[i] = dotu(a + i * cols, x, cols);
}

void apply_two_site(cplx* v, std::size_t strands, std::size_t site, const cplx* gate) {
    const std::size_t sl = std::size_t{1} << (strands - 2 - site);
    const std::size_t sh = 2 * sl;
    const std::size_t dim = std::size_t{1} << strands;
    if (sl == 1) {
        // Last pair of factors: the four amplitudes are contiguous.
        for (std::size_t block = 0; block < dim; block += 4) {
            cplx in[4] = {v[block], v[block + 1], v[block + 2], v[block + 3]};
            for (int r = 0; r < 4; ++r) {
                double re = 0, im = 0;
                for (int c = 0; c < 4; ++c) mac_scalar(re, im, gate[4 * r + c], in[c]);
                v[block + r] = {re, im};
            }
        }
        return;
    }
    __m256d g_re[16], g_im[16];
    for (int i = 0; i < 16; ++i) {
        g_re[i] = _mm256_set1_pd(gate[i].real());
        g_im[i] = _mm256_set1_pd(gate[i].imag());
    }
    for (std::size_t block = 0; block < dim; block += 2 * sh) {
        for (std::size_t low = 0; low < sl; low += 2) {
            cplx* p[4] = {v + block + low, v + block + low + sl, v + block + low + sh, v + block + low + sh + sl};
            __m256d in[4];
            for (int c = 0; c < 4; ++c) in[c] = load2(p[c]);
            __m256d out[4];
            for (int r = 0; r < 4; ++r) {
                __m256d acc = cmul_bcast(in[0], g_re[4 * r], g_im[4 * r]);
                for (int c = 1; c < 4; ++c) acc = _mm256_add_pd(acc, cmul_bcast(in[c], g_re[4 * r + c], g_im[4 * r + c]));
                out[r] = acc;
            }
            for (int r = 0; r < 4; ++r) store2(p[r], out[r]);
        }
    }
}

} // namespace

const KernelTable& avx2_table_impl() {
    static const KernelTable table{"avx2", cgemm, cgemv, dotu, dotc, apply_two_site};
    return table;
}

} // namespace tqft::kernels
