#include "tqft/symbolic.hpp"

#include <algorithm>
#include <cmath>

namespace tqft {

SymbolicPoly::SymbolicPoly(long c) {
    if (c != 0) terms_.emplace(SymMonomial{}, c);
}

SymbolicPoly SymbolicPoly::A(int power) {
    SymbolicPoly p;
    p.terms_.emplace(SymMonomial{power, 0, 0, 0, 0}, 1);
    return p;
}

SymbolicPoly SymbolicPoly::d(int power) {
    SymbolicPoly p;
    p.terms_.emplace(SymMonomial{0, power, 0, 0, 0}, 1);
    return p;
}

SymbolicPoly SymbolicPoly::sqrt_delta() {
    SymbolicPoly p;
    p.terms_.emplace(SymMonomial{0, 0, 1, 0, 0}, 1);
    return p;
}

SymbolicPoly SymbolicPoly::delta() { return d(2) - SymbolicPoly(1); }

SymbolicPoly SymbolicPoly::alpha() {
    SymbolicPoly p;
    p.terms_.emplace(SymMonomial{0, 0, 0, 1, 0}, 1);
    return p;
}

SymbolicPoly SymbolicPoly::beta() {
    SymbolicPoly p;
    p.terms_.emplace(SymMonomial{0, 0, 0, 0, 1}, 1);
    return p;
}

void SymbolicPoly::add_term(SymMonomial m, const mpz_class& c) {
    if (c == 0) return;
    if (m.s >= 2) {
        // s^2 = d^2 - 1
        SymMonomial high = m, low = m;
        high.s -= 2;
        high.d += 2;
        low.s -= 2;
        add_term(high, c);
        add_term(low, -c);
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymbolicPoly& SymbolicPoly::operator+=(const SymbolicPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SymbolicPoly& SymbolicPoly::operator-=(const SymbolicPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b) {
    SymbolicPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            SymMonomial m{ma.a + mb.a, ma.d + mb.d, ma.s + mb.s, ma.alpha + mb.alpha, ma.beta + mb.beta};
            r.add_term(m, ca * cb);
        }
    return r;
}

SymbolicPoly SymbolicPoly::operator-() const {
    SymbolicPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

cplx SymbolicPoly::evaluate(const SymPoint& at) const {
    cplx sum = 0;
    for (const auto& [m, c] : terms_) {
        cplx t = c.get_d();
        t *= std::pow(at.A, m.a);
        t *= std::pow(at.d, m.d);
        if (m.s) t *= at.s;
        if (m.alpha) t *= std::pow(at.alpha, m.alpha);
        if (m.beta) t *= std::pow(at.beta, m.beta);
        sum += t;
    }
    return sum;
}

std::string SymbolicPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.get_str();
        auto factor = [&](const char* name, int e) {
            if (e == 0) return;
            out += "*";
            out += name;
            if (e != 1) out += "^" + std::to_string(e);
        };
        factor("A", m.a);
        factor("d", m.d);
        factor("s", m.s);
        factor("alpha", m.alpha);
        factor("beta", m.beta);
    }
    return out;
}

SymbolicRatio::SymbolicRatio(SymbolicPoly numerator, unsigned delta_power)
    : num_(std::move(numerator)), pow_(delta_power) {}

namespace {

SymbolicPoly delta_pow(unsigned e) {
    SymbolicPoly r(1);
    for (unsigned i = 0; i < e; ++i) r = r * SymbolicPoly::delta();
    return r;
}

} // namespace

SymbolicRatio operator+(const SymbolicRatio& a, const SymbolicRatio& b) {
    const unsigned p = std::max(a.pow_, b.pow_);
    return {a.num_ * delta_pow(p - a.pow_) + b.num_ * delta_pow(p - b.pow_), p};
}

SymbolicRatio operator-(const SymbolicRatio& a, const SymbolicRatio& b) { return a + (-b); }

SymbolicRatio operator*(const SymbolicRatio& a, const SymbolicRatio& b) {
    return {a.num_ * b.num_, a.pow_ + b.pow_};
}

SymbolicRatio SymbolicRatio::over_sqrt_delta() const { return {num_ * SymbolicPoly::sqrt_delta(), pow_ + 1}; }

bool operator==(const SymbolicRatio& a, const SymbolicRatio& b) {
    return a.num_ * delta_pow(b.pow_) == b.num_ * delta_pow(a.pow_);
}

cplx SymbolicRatio::evaluate(const SymPoint& at) const {
    return num_.evaluate(at) / std::pow(at.d * at.d - 1.0, static_cast<int>(pow_));
}

} // namespace tqft
