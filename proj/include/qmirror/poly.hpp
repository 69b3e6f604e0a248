#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "qmirror/errors.hpp"
#include "qmirror/rational.hpp"

namespace qmirror {

// Dense univariate polynomial in h (the equivariant parameter hbar) over the
// rationals.  Trailing zeros are stripped; the zero polynomial has an empty
// coefficient vector.
class HPoly {
public:
    HPoly() = default;
    HPoly(long v) { if (v != 0) c_.push_back(rat(v)); }
    HPoly(const Rational& v) { if (!qmirror::is_zero(v)) c_.push_back(v); }
    explicit HPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static HPoly monomial(const Rational& coeff, int degree) {
        if (qmirror::is_zero(coeff)) return HPoly();
        std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
        c.back() = coeff;
        return HPoly(std::move(c));
    }
    // The linear polynomial a*h + b.
    static HPoly linear(const Rational& a, const Rational& b) {
        return HPoly(std::vector<Rational>{b, a});
    }
    static HPoly variable() { return linear(Rational(1), Rational(0)); }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int d) const {
        static const Rational zero(0);
        if (d < 0 || d > degree()) return zero;
        return c_[static_cast<size_t>(d)];
    }
    const Rational& leading() const {
        assert(!is_zero());
        return c_.back();
    }
    // Order of vanishing at h = 0 (degree+1 convention avoided: zero poly -> 0).
    int valuation() const {
        if (is_zero()) return 0;
        int v = 0;
        while (qmirror::is_zero(c_[static_cast<size_t>(v)])) ++v;
        return v;
    }
    bool is_one() const { return degree() == 0 && qmirror::is_one(c_[0]); }
    bool is_monomial() const {
        if (is_zero()) return false;
        return valuation() == degree();
    }

    friend HPoly operator+(const HPoly& a, const HPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return HPoly(std::move(c));
    }
    friend HPoly operator-(const HPoly& a, const HPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return HPoly(std::move(c));
    }
    friend HPoly operator-(const HPoly& a) {
        std::vector<Rational> c(a.c_);
        for (auto& x : c) x = -x;
        return HPoly(std::move(c));
    }
    friend HPoly operator*(const HPoly& a, const HPoly& b) {
        if (a.is_zero() || b.is_zero()) return HPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (qmirror::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return HPoly(std::move(c));
    }
    friend HPoly operator*(const Rational& s, const HPoly& a) {
        if (qmirror::is_zero(s)) return HPoly();
        std::vector<Rational> c(a.c_);
        for (auto& x : c) x *= s;
        return HPoly(std::move(c));
    }
    friend HPoly operator*(const HPoly& a, const Rational& s) { return s * a; }

    HPoly& operator+=(const HPoly& b) { return *this = *this + b; }
    HPoly& operator-=(const HPoly& b) { return *this = *this - b; }
    HPoly& operator*=(const HPoly& b) { return *this = *this * b; }

    friend bool operator==(const HPoly& a, const HPoly& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    HPoly monic() const {
        if (is_zero()) return HPoly();
        return (Rational(1) / leading()) * (*this);
    }

    // Multiplication by h^k.
    HPoly shifted_up(int k) const {
        if (is_zero()) return HPoly();
        std::vector<Rational> c(c_.size() + static_cast<size_t>(k), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) c[i + static_cast<size_t>(k)] = c_[i];
        return HPoly(std::move(c));
    }
    // Exact division by h^k; requires valuation >= k.
    HPoly shifted_down(int k) const {
        if (is_zero()) return HPoly();
        assert(valuation() >= k);
        std::vector<Rational> c(c_.begin() + k, c_.end());
        return HPoly(std::move(c));
    }

    std::string to_string(const std::string& var = "h") const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            const Rational& x = coeff(d);
            if (qmirror::is_zero(x)) continue;
            if (!out.empty()) out += sgn(x) < 0 ? " - " : " + ";
            else if (sgn(x) < 0) out += "-";
            Rational a = abs(x);
            if (!qmirror::is_one(a) || d == 0) out += qmirror::to_string(a);
            if (d > 0) {
                if (!qmirror::is_one(a)) out += "*";
                out += var;
                if (d > 1) out += "^" + std::to_string(d);
            }
        }
        return out;
    }

private:
    void strip() {
        while (!c_.empty() && qmirror::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Quotient and remainder; divisor must be nonzero.
inline std::pair<HPoly, HPoly> divrem(const HPoly& a, const HPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {HPoly(), a};
    std::vector<Rational> rem(static_cast<size_t>(a.degree()) + 1);
    for (int i = 0; i <= a.degree(); ++i) rem[static_cast<size_t>(i)] = a.coeff(i);
    int dq = a.degree() - b.degree();
    std::vector<Rational> quo(static_cast<size_t>(dq) + 1, Rational(0));
    Rational lead_inv = Rational(1) / b.leading();
    for (int k = dq; k >= 0; --k) {
        Rational c = rem[static_cast<size_t>(k + b.degree())] * lead_inv;
        if (qmirror::is_zero(c)) continue;
        quo[static_cast<size_t>(k)] = c;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= c * b.coeff(j);
    }
    return {HPoly(std::move(quo)), HPoly(std::move(rem))};
}

inline bool divides(const HPoly& b, const HPoly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    if (b.degree() > a.degree()) return false;
    if (b.degree() == 1) {
        // Linear divisor: root test.
        return qmirror::is_zero(a.eval(-b.coeff(0) / b.coeff(1)));
    }
    return divrem(a, b).second.is_zero();
}

// Monic gcd.  The hot paths in the localization formulas only ever reduce
// against monomials h^k and products of linear factors, so those cases get
// evaluation-based shortcuts before the Euclidean fallback.
inline HPoly poly_gcd(const HPoly& a, const HPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    int va = a.valuation(), vb = b.valuation();
    int v = std::min(va, vb);
    HPoly a0 = a.shifted_down(va);
    HPoly b0 = b.shifted_down(vb);
    HPoly core;
    if (a0.degree() == 0 || b0.degree() == 0) {
        core = HPoly(1L);
    } else if (a0.degree() == 1) {
        core = divides(a0, b0) ? a0.monic() : HPoly(1L);
    } else if (b0.degree() == 1) {
        core = divides(b0, a0) ? b0.monic() : HPoly(1L);
    } else {
        HPoly x = a0.monic(), y = b0.monic();
        if (x.degree() < y.degree()) std::swap(x, y);
        while (!y.is_zero()) {
            HPoly r = divrem(x, y).second;
            x = std::move(y);
            y = r.is_zero() ? HPoly() : r.monic();
        }
        core = x;
    }
    return core.shifted_up(v);
}

inline HPoly poly_lcm(const HPoly& a, const HPoly& b) {
    if (a.is_zero() || b.is_zero()) return HPoly();
    return (divrem(a, poly_gcd(a, b)).first * b).monic();
}

} // namespace qmirror
