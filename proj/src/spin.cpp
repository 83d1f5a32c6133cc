#include "tqft/spin.hpp"

#include "tqft/error.hpp"
#include "tqft/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tqft {

namespace {

void check_strands(std::size_t strands, std::size_t cap) {
    if (strands > cap)
        throw Error(ErrorCode::invalid_argument, std::to_string(strands) + " strands exceeds " + std::to_string(cap));
}

} // namespace

SpinVector::SpinVector(std::size_t strands) : strands_(strands) {
    check_strands(strands, max_strands);
    data_.assign(std::size_t{1} << strands, cplx{});
}

SpinVector::SpinVector(std::size_t strands, std::vector<cplx> entries) : strands_(strands), data_(std::move(entries)) {
    check_strands(strands, max_strands);
    if (data_.size() != (std::size_t{1} << strands))
        throw Error(ErrorCode::size_mismatch, "vector length " + std::to_string(data_.size()) + " is not 2^" + std::to_string(strands));
}

SpinVector SpinVector::basis(std::size_t strands, std::size_t index) {
    SpinVector v(strands);
    if (index >= v.size()) throw Error(ErrorCode::index_out_of_range, "basis index " + std::to_string(index));
    v.data_[index] = 1.0;
    return v;
}

SpinVector& SpinVector::operator+=(const SpinVector& o) {
    if (o.strands_ != strands_) throw Error(ErrorCode::size_mismatch, "vector strand counts differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

SpinVector& SpinVector::operator-=(const SpinVector& o) {
    if (o.strands_ != strands_) throw Error(ErrorCode::size_mismatch, "vector strand counts differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

SpinVector& SpinVector::operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
}

SpinVector SpinVector::kron(const SpinVector& right) const {
    SpinVector out(strands_ + right.strands_);
    const std::size_t m = right.size();
    for (std::size_t i = 0; i < data_.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) out.data_[i * m + j] = data_[i] * right.data_[j];
    return out;
}

cplx transpose_pairing(const SpinVector& v, const SpinVector& w) {
    if (v.size() != w.size()) throw Error(ErrorCode::size_mismatch, "pairing of vectors of different length");
    return kernels::active().dotu(v.data(), w.data(), v.size());
}

cplx hermitian_inner(const SpinVector& v, const SpinVector& w) {
    if (v.size() != w.size()) throw Error(ErrorCode::size_mismatch, "inner product of vectors of different length");
    return kernels::active().dotc(v.data(), w.data(), v.size());
}

double norm(const SpinVector& v) { return std::sqrt(hermitian_inner(v, v).real()); }

double max_abs_diff(const SpinVector& a, const SpinVector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::size_mismatch, "comparing vectors of different length");
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

RepMatrix::RepMatrix(std::size_t strands) : strands_(strands) {
    check_strands(strands, max_strands);
    dim_ = std::size_t{1} << strands;
    data_.assign(dim_ * dim_, cplx{});
}

RepMatrix::RepMatrix(std::size_t strands, std::vector<cplx> row_major) : RepMatrix(strands) {
    if (row_major.size() != data_.size())
        throw Error(ErrorCode::size_mismatch, "matrix needs " + std::to_string(data_.size()) + " entries");
    data_ = std::move(row_major);
}

RepMatrix RepMatrix::identity(std::size_t strands) {
    RepMatrix m(strands);
    for (std::size_t i = 0; i < m.dim_; ++i) m(i, i) = 1.0;
    return m;
}

RepMatrix& RepMatrix::operator+=(const RepMatrix& o) {
    if (o.strands_ != strands_) throw Error(ErrorCode::size_mismatch, "matrix strand counts differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

RepMatrix& RepMatrix::operator-=(const RepMatrix& o) {
    if (o.strands_ != strands_) throw Error(ErrorCode::size_mismatch, "matrix strand counts differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

RepMatrix& RepMatrix::operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
    if (a.strands_ != b.strands_) throw Error(ErrorCode::size_mismatch, "matrix strand counts differ");
    RepMatrix c(a.strands_);
    kernels::active().cgemm(a.data_.data(), b.data_.data(), c.data_.data(), a.dim_);
    return c;
}

SpinVector operator*(const RepMatrix& m, const SpinVector& v) {
    if (m.strands_ != v.strands()) throw Error(ErrorCode::size_mismatch, "matrix and vector strand counts differ");
    SpinVector out(v.strands());
    kernels::active().cgemv(m.data_.data(), v.data(), out.data(), m.dim_, m.dim_);
    return out;
}

RepMatrix RepMatrix::adjoint() const {
    RepMatrix r(strands_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

RepMatrix RepMatrix::transpose() const {
    RepMatrix r(strands_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

RepMatrix RepMatrix::kron(const RepMatrix& right) const {
    RepMatrix out(strands_ + right.strands_);
    const std::size_t m = right.dim_;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const cplx a = (*this)(i, j);
            if (a == cplx{}) continue;
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = a * right(k, l);
        }
    return out;
}

RepMatrix RepMatrix::inverse() const {
    const std::size_t n = dim_;
    RepMatrix lu = *this;
    RepMatrix inv = identity(strands_);
    double scale = 0;
    for (const auto& z : data_) scale = std::max(scale, std::abs(z));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(lu(r, col)) > std::abs(lu(piv, col))) piv = r;
        if (std::abs(lu(piv, col)) <= 1e-14 * scale) throw Error(ErrorCode::invalid_argument, "matrix is singular");
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(lu(piv, c), lu(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        const cplx p = 1.0 / lu(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            lu(col, c) *= p;
            inv(col, c) *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const cplx f = lu(r, col);
            if (f == cplx{}) continue;
            for (std::size_t c = 0; c < n; ++c) {
                lu(r, c) -= f * lu(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

cplx RepMatrix::trace() const {
    cplx t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double max_abs_diff(const RepMatrix& a, const RepMatrix& b) {
    if (a.strands() != b.strands()) throw Error(ErrorCode::size_mismatch, "comparing matrices of different size");
    double m = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

RepMatrix outer(const SpinVector& ket, const SpinVector& bra_source) {
    if (ket.strands() != bra_source.strands()) throw Error(ErrorCode::size_mismatch, "outer product of different sizes");
    RepMatrix m(ket.strands());
    for (std::size_t i = 0; i < ket.size(); ++i)
        for (std::size_t j = 0; j < bra_source.size(); ++j) m(i, j) = ket[i] * std::conj(bra_source[j]);
    return m;
}

} // namespace tqft
