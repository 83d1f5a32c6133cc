#pragma once

#include "tqft/params.hpp"

#include <cstddef>
#include <vector>

namespace tqft {

// Dense vector on (C^2)^{(x) strands}. Factor 0 is the most significant index bit.
class SpinVector {
public:
    static constexpr std::size_t max_strands = 24;

    SpinVector() = default;
    explicit SpinVector(std::size_t strands);
    SpinVector(std::size_t strands, std::vector<cplx> entries);
    static SpinVector basis(std::size_t strands, std::size_t index);

    std::size_t strands() const { return strands_; }
    std::size_t size() const { return data_.size(); }
    cplx& operator[](std::size_t i) { return data_[i]; }
    const cplx& operator[](std::size_t i) const { return data_[i]; }
    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }
    const std::vector<cplx>& entries() const { return data_; }

    SpinVector& operator+=(const SpinVector& o);
    SpinVector& operator-=(const SpinVector& o);
    SpinVector& operator*=(cplx s);
    friend SpinVector operator+(SpinVector a, const SpinVector& b) { return a += b; }
    friend SpinVector operator-(SpinVector a, const SpinVector& b) { return a -= b; }
    friend SpinVector operator*(cplx s, SpinVector v) { return v *= s; }

    SpinVector kron(const SpinVector& right) const;

private:
    std::size_t strands_ = 0;
    std::vector<cplx> data_;
};

// sum v_i w_i, no conjugation: the pairing used for diagram overlaps.
cplx transpose_pairing(const SpinVector& v, const SpinVector& w);
// sum conj(v_i) w_i
cplx hermitian_inner(const SpinVector& v, const SpinVector& w);
double norm(const SpinVector& v);
double max_abs_diff(const SpinVector& a, const SpinVector& b);

// Dense 2^n x 2^n complex matrix, row-major.
class RepMatrix {
public:
    static constexpr std::size_t max_strands = 10;

    RepMatrix() = default;
    explicit RepMatrix(std::size_t strands);
    RepMatrix(std::size_t strands, std::vector<cplx> row_major);
    static RepMatrix identity(std::size_t strands);

    std::size_t strands() const { return strands_; }
    std::size_t dim() const { return dim_; }
    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    const cplx* data() const { return data_.data(); }

    RepMatrix& operator+=(const RepMatrix& o);
    RepMatrix& operator-=(const RepMatrix& o);
    RepMatrix& operator*=(cplx s);
    friend RepMatrix operator+(RepMatrix a, const RepMatrix& b) { return a += b; }
    friend RepMatrix operator-(RepMatrix a, const RepMatrix& b) { return a -= b; }
    friend RepMatrix operator*(cplx s, RepMatrix m) { return m *= s; }
    friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
    friend SpinVector operator*(const RepMatrix& m, const SpinVector& v);

    RepMatrix adjoint() const;
    RepMatrix transpose() const;
    RepMatrix kron(const RepMatrix& right) const;
    // LU with partial pivoting; throws InvalidArgument when singular.
    RepMatrix inverse() const;
    cplx trace() const;

private:
    std::size_t strands_ = 0;
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

double max_abs_diff(const RepMatrix& a, const RepMatrix& b);
// |ket><bra_source|, the bra conjugated.
RepMatrix outer(const SpinVector& ket, const SpinVector& bra_source);

} // namespace tqft
