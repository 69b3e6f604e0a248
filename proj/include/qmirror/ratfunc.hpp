#pragma once

#include <string>
#include <utility>

#include "qmirror/errors.hpp"
#include "qmirror/poly.hpp"
#include "qmirror/rational.hpp"
#include "qmirror/series.hpp"

namespace qmirror {

// Reduced rational function in h: num/den with den monic and gcd(num, den) = 1.
// The canonical form makes equality componentwise and "is a polynomial"
// testable as den = 1.
class RatFuncH {
public:
    RatFuncH() : num_(), den_(1L) {}
    RatFuncH(long v) : num_(v), den_(1L) {}
    RatFuncH(const Rational& v) : num_(v), den_(1L) {}
    RatFuncH(const HPoly& p) : num_(p), den_(1L) {}
    RatFuncH(HPoly num, HPoly den) { normalize(std::move(num), std::move(den)); }

    static RatFuncH variable() { return RatFuncH(HPoly::variable()); }

    const HPoly& num() const { return num_; }
    const HPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RatFuncH operator+(const RatFuncH& x, const RatFuncH& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        HPoly g = poly_gcd(x.den_, y.den_);
        if (g.is_one()) {
            HPoly num = x.num_ * y.den_ + y.num_ * x.den_;
            if (num.is_zero()) return RatFuncH();
            return reduced(std::move(num), x.den_ * y.den_);
        }
        HPoly xd = divrem(x.den_, g).first;
        HPoly yd = divrem(y.den_, g).first;
        HPoly t = x.num_ * yd + y.num_ * xd;
        if (t.is_zero()) return RatFuncH();
        HPoly h = poly_gcd(t, g);
        if (h.is_one()) return reduced(std::move(t), xd * y.den_);
        return reduced(divrem(t, h).first, xd * divrem(y.den_, h).first);
    }
    friend RatFuncH operator-(const RatFuncH& x) {
        RatFuncH r;
        r.num_ = -x.num_;
        r.den_ = x.den_;
        return r;
    }
    friend RatFuncH operator-(const RatFuncH& x, const RatFuncH& y) { return x + (-y); }
    friend RatFuncH operator*(const RatFuncH& x, const RatFuncH& y) {
        if (x.is_zero() || y.is_zero()) return RatFuncH();
        HPoly g1 = poly_gcd(x.num_, y.den_);
        HPoly g2 = poly_gcd(y.num_, x.den_);
        HPoly n1 = g1.is_one() ? x.num_ : divrem(x.num_, g1).first;
        HPoly d2 = g1.is_one() ? y.den_ : divrem(y.den_, g1).first;
        HPoly n2 = g2.is_one() ? y.num_ : divrem(y.num_, g2).first;
        HPoly d1 = g2.is_one() ? x.den_ : divrem(x.den_, g2).first;
        return reduced(n1 * n2, d1 * d2);
    }
    friend RatFuncH operator/(const RatFuncH& x, const RatFuncH& y) {
        if (y.is_zero()) throw DomainError("rational function division by zero");
        RatFuncH inv;
        inv.num_ = y.den_;
        inv.den_ = y.num_;
        Rational lead = inv.den_.leading();
        inv.den_ = inv.den_.monic();
        inv.num_ = (Rational(1) / lead) * inv.num_;
        return x * inv;
    }

    RatFuncH& operator+=(const RatFuncH& y) { return *this = *this + y; }
    RatFuncH& operator-=(const RatFuncH& y) { return *this = *this - y; }
    RatFuncH& operator*=(const RatFuncH& y) { return *this = *this * y; }

    friend bool operator==(const RatFuncH& x, const RatFuncH& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

    // Evaluation at a rational point.
    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (qmirror::is_zero(d)) throw GenericityError("rational function pole at evaluation point");
        return num_.eval(x) / d;
    }

    // Expansion in powers of w = 1/h around h = infinity, through w^order.
    // Requires deg num <= deg den.
    TruncSeries<Rational> expand_at_infinity(int order) const {
        if (is_zero()) return TruncSeries<Rational>(order);
        int dn = num_.degree(), dd = den_.degree();
        if (dn > dd) throw DomainError("rational function grows at infinity");
        // f(1/w) = w^(dd-dn) * rev(num)(w) / rev(den)(w) with rev(den)(0) != 0.
        std::vector<Rational> rn(static_cast<size_t>(order) + 1, Rational(0));
        std::vector<Rational> rd(static_cast<size_t>(order) + 1, Rational(0));
        for (int i = 0; i <= dn && i <= order; ++i) rn[static_cast<size_t>(i)] = num_.coeff(dn - i);
        for (int i = 0; i <= dd && i <= order; ++i) rd[static_cast<size_t>(i)] = den_.coeff(dd - i);
        TruncSeries<Rational> series_num(order, std::move(rn));
        TruncSeries<Rational> series_den(order, std::move(rd));
        return shift_up(series_num * inverse(series_den), dd - dn);
    }

    std::string to_string(const std::string& var = "h") const {
        if (is_polynomial()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    static RatFuncH reduced(HPoly num, HPoly den) {
        RatFuncH r;
        Rational lead = den.leading();
        r.den_ = den.monic();
        r.num_ = (Rational(1) / lead) * num;
        return r;
    }
    void normalize(HPoly num, HPoly den) {
        if (den.is_zero()) throw DomainError("rational function with zero denominator");
        if (num.is_zero()) {
            num_ = HPoly();
            den_ = HPoly(1L);
            return;
        }
        HPoly g = poly_gcd(num, den);
        if (!g.is_one()) {
            num = divrem(num, g).first;
            den = divrem(den, g).first;
        }
        Rational lead = den.leading();
        den_ = den.monic();
        num_ = (Rational(1) / lead) * num;
    }

    HPoly num_;
    HPoly den_;
};

} // namespace qmirror
