#pragma once

#include <complex>
#include <cstddef>

namespace tqft::kernels {

using cplx = std::complex<double>;

// Inner loops of the dense representation code. Each entry has a scalar reference
// implementation and, on x86-64, an AVX2+FMA variant chosen at runtime.
// Matrices are row-major; outputs never alias inputs.
struct KernelTable {
    const char* name;
    // c = a * b for n x n matrices
    void (*cgemm)(const cplx* a, const cplx* b, cplx* c, std::size_t n);
    // y = a * x, a is rows x cols
    void (*cgemv)(const cplx* a, const cplx* x, cplx* y, std::size_t rows, std::size_t cols);
    // sum x_i y_i
    cplx (*dotu)(const cplx* x, const cplx* y, std::size_t n);
    // sum conj(x_i) y_i
    cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
    // In place: apply a 4x4 gate to tensor factors (site, site+1) of a 2^strands vector.
    // Factor 0 is the most significant bit of the index.
    void (*apply_two_site)(cplx* v, std::size_t strands, std::size_t site, const cplx* gate);
};

const KernelTable& scalar_table();
// nullptr when not compiled in or when the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();
// AVX2 when available, unless the environment sets TQFT_KERNELS=scalar.
const KernelTable& active();

} // namespace tqft::kernels
