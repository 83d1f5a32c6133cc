#pragma once

#include "tqft/params.hpp"

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>

namespace tqft {

// Monomial A^a d^e s^r alpha^p beta^q with s = sqrt(d^2 - 1), so r is kept in {0, 1}.
// A and d are treated as independent symbols: identities proved here hold for every d,
// in particular for d = -A^2 - A^-2.
struct SymMonomial {
    int a = 0;
    int d = 0;
    int s = 0;
    int alpha = 0;
    int beta = 0;
    friend auto operator<=>(const SymMonomial&, const SymMonomial&) = default;
};

struct SymPoint {
    cplx A;
    double d;
    double s;
    cplx alpha;
    cplx beta;
};

class SymbolicPoly {
public:
    SymbolicPoly() = default;
    SymbolicPoly(long c); // NOLINT

    static SymbolicPoly A(int power = 1);
    static SymbolicPoly d(int power = 1);
    static SymbolicPoly sqrt_delta();
    static SymbolicPoly delta(); // d^2 - 1
    static SymbolicPoly alpha();
    static SymbolicPoly beta();

    const std::map<SymMonomial, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SymbolicPoly& operator+=(const SymbolicPoly& o);
    SymbolicPoly& operator-=(const SymbolicPoly& o);
    friend SymbolicPoly operator+(SymbolicPoly a, const SymbolicPoly& b) { return a += b; }
    friend SymbolicPoly operator-(SymbolicPoly a, const SymbolicPoly& b) { return a -= b; }
    friend SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b);
    SymbolicPoly operator-() const;
    friend bool operator==(const SymbolicPoly& a, const SymbolicPoly& b) { return a.terms_ == b.terms_; }

    cplx evaluate(const SymPoint& at) const;
    std::string to_string() const;

private:
    void add_term(SymMonomial m, const mpz_class& c);
    std::map<SymMonomial, mpz_class> terms_;
};

// numerator / (d^2 - 1)^delta_power
class SymbolicRatio {
public:
    SymbolicRatio() = default;
    SymbolicRatio(SymbolicPoly numerator, unsigned delta_power = 0); // NOLINT

    const SymbolicPoly& numerator() const { return num_; }
    unsigned delta_power() const { return pow_; }

    friend SymbolicRatio operator+(const SymbolicRatio& a, const SymbolicRatio& b);
    friend SymbolicRatio operator-(const SymbolicRatio& a, const SymbolicRatio& b);
    friend SymbolicRatio operator*(const SymbolicRatio& a, const SymbolicRatio& b);
    SymbolicRatio operator-() const { return {-num_, pow_}; }
    // 1/s = s/(d^2 - 1)
    SymbolicRatio over_sqrt_delta() const;
    // Equality by cross-multiplication.
    friend bool operator==(const SymbolicRatio& a, const SymbolicRatio& b);

    cplx evaluate(const SymPoint& at) const;

private:
    SymbolicPoly num_;
    unsigned pow_ = 0;
};

} // namespace tqft
