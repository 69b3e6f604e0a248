#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "qmirror/errors.hpp"
#include "qmirror/rational.hpp"

namespace qmirror {

// The truncated cohomology ring R[P]/(P^(n+1)): coefficients of P^0..P^n.
// Values constructed from a bare scalar carry size 1 and broadcast against
// any dimension, so the type satisfies the coefficient-ring contract of
// TruncSeries.
template <typename R = Rational>
class NilpotentP {
public:
    NilpotentP() : c_(1, R(0)) {}
    NilpotentP(long v) : c_(1, R(v)) {}
    NilpotentP(const R& v) : c_(1, v) {}
    explicit NilpotentP(int n, std::vector<R> coeffs) : c_(std::move(coeffs)) {
        assert(static_cast<int>(c_.size()) == n + 1);
    }
    static NilpotentP zero(int n) { return NilpotentP(n, std::vector<R>(static_cast<size_t>(n) + 1, R(0))); }
    static NilpotentP one(int n) {
        auto r = zero(n);
        r.c_[0] = R(1);
        return r;
    }
    // The class P itself (requires n >= 1).
    static NilpotentP generator(int n) {
        auto r = zero(n);
        r.c_[1] = R(1);
        return r;
    }
    // a*P + b.
    static NilpotentP linear(int n, const R& a, const R& b) {
        auto r = zero(n);
        r.c_[0] = b;
        if (n >= 1) r.c_[1] = a;
        return r;
    }

    int dim() const { return static_cast<int>(c_.size()) - 1; }
    const R& coeff(int j) const {
        static const R zero_val = R(0);
        if (j < 0 || j > dim()) return zero_val;
        return c_[static_cast<size_t>(j)];
    }
    void set_coeff(int j, const R& v) {
        assert(j >= 0 && j <= dim());
        c_[static_cast<size_t>(j)] = v;
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!(x == R(0))) return false;
        return true;
    }

    friend NilpotentP operator+(const NilpotentP& a, const NilpotentP& b) {
        int n = aligned_dim(a, b);
        NilpotentP r = zero(n);
        for (int j = 0; j <= n; ++j) r.c_[j] = a.coeff(j) + b.coeff(j);
        return r;
    }
    friend NilpotentP operator-(const NilpotentP& a, const NilpotentP& b) {
        int n = aligned_dim(a, b);
        NilpotentP r = zero(n);
        for (int j = 0; j <= n; ++j) r.c_[j] = a.coeff(j) - b.coeff(j);
        return r;
    }
    friend NilpotentP operator-(const NilpotentP& a) {
        NilpotentP r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend NilpotentP operator*(const NilpotentP& a, const NilpotentP& b) {
        int n = aligned_dim(a, b);
        NilpotentP r = zero(n);
        for (int i = 0; i <= a.dim() && i <= n; ++i) {
            if (a.c_[i] == R(0)) continue;
            for (int j = 0; j <= b.dim() && i + j <= n; ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }
    NilpotentP& operator+=(const NilpotentP& b) { return *this = *this + b; }
    NilpotentP& operator-=(const NilpotentP& b) { return *this = *this - b; }
    NilpotentP& operator*=(const NilpotentP& b) { return *this = *this * b; }

    friend bool operator==(const NilpotentP& a, const NilpotentP& b) {
        int n = std::max(a.dim(), b.dim());
        for (int j = 0; j <= n; ++j)
            if (!(a.coeff(j) == b.coeff(j))) return false;
        return true;
    }

    // Inverse of a unit (P^0 coefficient invertible).
    NilpotentP inv() const {
        if (c_[0] == R(0)) throw NonInvertible("NilpotentP with nilpotent constant term");
        int n = dim();
        NilpotentP r = zero(n);
        R b0 = R(1) / c_[0];
        r.c_[0] = b0;
        for (int k = 1; k <= n; ++k) {
            R acc(0);
            for (int j = 1; j <= k; ++j) acc = acc + c_[j] * r.c_[k - j];
            r.c_[k] = -(b0 * acc);
        }
        return r;
    }
    friend NilpotentP operator/(const NilpotentP& a, const NilpotentP& b) { return a * b.inv(); }

private:
    static int aligned_dim(const NilpotentP& a, const NilpotentP& b) {
        if (a.dim() == b.dim()) return a.dim();
        if (a.dim() == 0 || b.dim() == 0) return std::max(a.dim(), b.dim());
        assert(false && "NilpotentP dimension mismatch");
        return std::max(a.dim(), b.dim());
    }
    std::vector<R> c_;
};

} // namespace qmirror
