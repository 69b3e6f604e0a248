#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <vector>

#include "qmirror/errors.hpp"
#include "qmirror/rational.hpp"

namespace qmirror {

// Truncated formal power series over an exact coefficient ring R.
// Coefficients are known through q^order; binary operations on mismatched
// orders truncate to the minimum.  R must be an exact commutative ring with
// construction from long; inverse/exp/log additionally need division in R.
template <typename R>
class TruncSeries {
public:
    TruncSeries() : c_(1, R(0)) {}
    explicit TruncSeries(int order) : c_(static_cast<size_t>(order) + 1, R(0)) {
        assert(order >= 0);
    }
    TruncSeries(int order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
        assert(static_cast<size_t>(order) + 1 == c_.size());
    }

    static TruncSeries constant(const R& value, int order) {
        TruncSeries s(order);
        s.c_[0] = value;
        return s;
    }
    // The identity series q (requires order >= 1).
    static TruncSeries identity(int order) {
        TruncSeries s(order);
        s.c_[1] = R(1);
        return s;
    }
    static TruncSeries monomial(const R& value, int degree, int order) {
        TruncSeries s(order);
        if (degree <= order) s.c_[static_cast<size_t>(degree)] = value;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& coeff(int d) const {
        assert(d >= 0 && d <= order());
        return c_[static_cast<size_t>(d)];
    }
    void set_coeff(int d, const R& v) {
        assert(d >= 0 && d <= order());
        c_[static_cast<size_t>(d)] = v;
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!(x == R(0))) return false;
        return true;
    }

    TruncSeries truncated(int new_order) const {
        assert(new_order >= 0 && new_order <= order());
        std::vector<R> c(c_.begin(), c_.begin() + new_order + 1);
        return TruncSeries(new_order, std::move(c));
    }

    // Re-expands to a higher order, filling unknown coefficients with zero.
    // Only meaningful when the caller knows the series terminates.
    TruncSeries padded(int new_order) const {
        assert(new_order >= order());
        std::vector<R> c = c_;
        c.resize(static_cast<size_t>(new_order) + 1, R(0));
        return TruncSeries(new_order, std::move(c));
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        int d = std::min(a.order(), b.order());
        TruncSeries r(d);
        for (int i = 0; i <= d; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        int d = std::min(a.order(), b.order());
        TruncSeries r(d);
        for (int i = 0; i <= d; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a) {
        TruncSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        int d = std::min(a.order(), b.order());
        TruncSeries r(d);
        for (int i = 0; i <= d; ++i) {
            if (a.c_[i] == R(0)) continue;
            for (int j = 0; i + j <= d; ++j) {
                if (b.c_[j] == R(0)) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend TruncSeries operator*(const R& s, const TruncSeries& a) {
        TruncSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) r.c_[i] = s * a.c_[i];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const R& s) { return s * a; }

    TruncSeries& operator+=(const TruncSeries& b) { return *this = *this + b; }
    TruncSeries& operator-=(const TruncSeries& b) { return *this = *this - b; }
    TruncSeries& operator*=(const TruncSeries& b) { return *this = *this * b; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if (a.order() != b.order()) return false;
        for (int i = 0; i <= a.order(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

private:
    std::vector<R> c_;
};

// d/dq: coefficient of q^d in the output is (d+1) * coeff_{d+1}; order drops by one.
template <typename R>
TruncSeries<R> derivative(const TruncSeries<R>& s) {
    int d = std::max(s.order() - 1, 0);
    TruncSeries<R> r(d);
    for (int i = 0; i < s.order(); ++i) r.set_coeff(i, R(static_cast<long>(i + 1)) * s.coeff(i + 1));
    return r;
}

// q d/dq, order preserved.
template <typename R>
TruncSeries<R> euler_derivative(const TruncSeries<R>& s) {
    TruncSeries<R> r(s.order());
    for (int i = 1; i <= s.order(); ++i) r.set_coeff(i, R(static_cast<long>(i)) * s.coeff(i));
    return r;
}

// Multiplication by q^a.  Exact: coefficient k of the result only sees
// coefficient k-a of the input.
template <typename R>
TruncSeries<R> shift_up(const TruncSeries<R>& s, int a) {
    assert(a >= 0);
    TruncSeries<R> r(s.order());
    for (int i = a; i <= s.order(); ++i) r.set_coeff(i, s.coeff(i - a));
    return r;
}

// Multiplicative inverse through the truncation order.
template <typename R>
TruncSeries<R> inverse(const TruncSeries<R>& s) {
    if (s.coeff(0) == R(0)) throw NonInvertible("series has zero constant term");
    int d = s.order();
    TruncSeries<R> r(d);
    R b0 = R(1) / s.coeff(0);
    r.set_coeff(0, b0);
    for (int k = 1; k <= d; ++k) {
        R acc(0);
        for (int j = 1; j <= k; ++j) acc = acc + s.coeff(j) * r.coeff(k - j);
        r.set_coeff(k, -(b0 * acc));
    }
    return r;
}

template <typename R>
TruncSeries<R> exp(const TruncSeries<R>& s) {
    if (!(s.coeff(0) == R(0))) throw DomainError("exp needs zero constant term");
    int d = s.order();
    TruncSeries<R> r(d);
    r.set_coeff(0, R(1));
    // e' = s' e termwise: k e_k = sum_{j=1..k} j s_j e_{k-j}.
    for (int k = 1; k <= d; ++k) {
        R acc(0);
        for (int j = 1; j <= k; ++j) acc = acc + R(static_cast<long>(j)) * s.coeff(j) * r.coeff(k - j);
        r.set_coeff(k, acc / R(static_cast<long>(k)));
    }
    return r;
}

template <typename R>
TruncSeries<R> log(const TruncSeries<R>& s) {
    if (!(s.coeff(0) == R(1))) throw DomainError("log needs constant term 1");
    int d = s.order();
    TruncSeries<R> u = derivative(s) * inverse(s.truncated(std::max(d - 1, 0)));
    TruncSeries<R> r(d);
    for (int k = 1; k <= d; ++k) r.set_coeff(k, u.coeff(k - 1) / R(static_cast<long>(k)));
    return r;
}

// f(g(q)) through the common truncation order; requires g(0) = 0.
template <typename R>
TruncSeries<R> compose(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    if (!(g.coeff(0) == R(0))) throw DomainError("compose needs g(0) = 0");
    int d = std::min(f.order(), g.order());
    TruncSeries<R> gt = g.truncated(d);
    TruncSeries<R> r = TruncSeries<R>::constant(f.coeff(d), d);
    for (int i = d - 1; i >= 0; --i) r = r * gt + TruncSeries<R>::constant(f.coeff(i), d);
    return r;
}

// Compositional inverse: u(0) = 0, u'(0) a unit; returns v with u(v(Q)) = Q.
template <typename R>
TruncSeries<R> reversion(const TruncSeries<R>& u) {
    if (!(u.coeff(0) == R(0))) throw DomainError("reversion needs u(0) = 0");
    if (u.coeff(0) == R(0) && u.order() >= 1 && u.coeff(1) == R(0))
        throw DomainError("reversion needs invertible linear coefficient");
    int d = u.order();
    TruncSeries<R> v(d);
    if (d == 0) return v;
    R u1inv = R(1) / u.coeff(1);
    v.set_coeff(1, u1inv);
    for (int k = 2; k <= d; ++k) {
        // With v known below order k, [Q^k] u(v) = u_1 v_k + g where g is
        // determined by the lower-order part of v.
        TruncSeries<R> w = compose(u.truncated(k), v.truncated(k));
        v.set_coeff(k, -(u1inv * w.coeff(k)));
    }
    return v;
}

} // namespace qmirror
