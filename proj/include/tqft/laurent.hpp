#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace tqft {

// Exact Laurent polynomial in A with arbitrary-precision integer coefficients.
// Zero coefficients are never stored, so structural equality is value equality.
class LaurentPoly {
public:
    using TermMap = std::map<int, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long constant); // NOLINT: integers promote naturally

    static LaurentPoly monomial(const mpz_class& coeff, int exponent);
    static LaurentPoly a_power(int exponent) { return monomial(1, exponent); }
    // d = -A^2 - A^-2, the value of a free loop.
    static LaurentPoly loop_value();

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coefficient(int exponent) const;
    int min_degree() const; // requires !is_zero()
    int max_degree() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly shifted(int by) const; // multiply by A^by
    LaurentPoly pow(unsigned e) const;
    LaurentPoly mirror() const; // A -> A^-1

    // "c_min*A^min + ... + c_max*A^max", or "0".
    std::string to_string() const;

private:
    void add_term(int exponent, const mpz_class& coeff);
    TermMap terms_;
};

} // namespace tqft
