#include "tqft/laurent.hpp"

#include <cassert>

namespace tqft {

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, int exponent) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::loop_value() {
    LaurentPoly p;
    p.terms_.emplace(-2, -1);
    p.terms_.emplace(2, -1);
    return p;
}

mpz_class LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_degree() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    mpz_class prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(ea + eb, prod);
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int by) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + by, c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e != 0) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::mirror() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += c.get_str();
        out += "*A^";
        out += std::to_string(e);
    }
    return out;
}

} // namespace tqft
