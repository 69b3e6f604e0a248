#pragma once

#include <cassert>
#include <vector>

#include "qmirror/rational.hpp"
#include "qmirror/series.hpp"

namespace qmirror {

using QSeries = TruncSeries<Rational>;

// Polynomial in t whose coefficients are truncated q-series.  t and q = e^t
// are treated as independent: d/dt acts as d_t + q d_q.
class TPoly {
public:
    TPoly() : qorder_(0), tc_(1, QSeries(0)) {}
    explicit TPoly(int qorder, int tdeg = 0)
        : qorder_(qorder), tc_(static_cast<size_t>(tdeg) + 1, QSeries(qorder)) {}

    static TPoly from_series(const QSeries& s) {
        TPoly p(s.order());
        p.tc_[0] = s;
        return p;
    }
    static TPoly t_monomial(const Rational& c, int tdeg, int qorder) {
        TPoly p(qorder, tdeg);
        p.tc_[static_cast<size_t>(tdeg)] = QSeries::constant(c, qorder);
        return p;
    }

    int qorder() const { return qorder_; }
    int tdeg() const { return static_cast<int>(tc_.size()) - 1; }
    const QSeries& t_coeff(int k) const {
        static const QSeries zero(0);
        if (k < 0 || k > tdeg()) return zero;
        return tc_[static_cast<size_t>(k)];
    }
    void set_t_coeff(int k, const QSeries& s) {
        assert(s.order() == qorder_);
        if (k > tdeg()) tc_.resize(static_cast<size_t>(k) + 1, QSeries(qorder_));
        tc_[static_cast<size_t>(k)] = s;
    }

    bool is_zero() const {
        for (const auto& s : tc_)
            if (!s.is_zero()) return false;
        return true;
    }
    // Trims trailing zero t-coefficients (never below degree 0).
    TPoly trimmed() const {
        TPoly r = *this;
        while (r.tc_.size() > 1 && r.tc_.back().is_zero()) r.tc_.pop_back();
        return r;
    }
    TPoly truncated(int new_qorder) const {
        TPoly r(new_qorder, tdeg());
        for (int k = 0; k <= tdeg(); ++k) r.tc_[k] = tc_[k].truncated(new_qorder);
        return r;
    }

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        int qo = std::min(a.qorder_, b.qorder_);
        TPoly r(qo, std::max(a.tdeg(), b.tdeg()));
        for (int k = 0; k <= r.tdeg(); ++k)
            r.tc_[k] = a.t_coeff(k).truncated(std::min(qo, a.t_coeff(k).order())).padded(qo) +
                       b.t_coeff(k).truncated(std::min(qo, b.t_coeff(k).order())).padded(qo);
        return r.trimmed();
    }
    friend TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }
    friend TPoly operator-(const TPoly& a) {
        TPoly r = a;
        for (auto& s : r.tc_) s = -s;
        return r;
    }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        int qo = std::min(a.qorder_, b.qorder_);
        TPoly r(qo, a.tdeg() + b.tdeg());
        for (int i = 0; i <= a.tdeg(); ++i) {
            if (a.t_coeff(i).is_zero()) continue;
            for (int j = 0; j <= b.tdeg(); ++j)
                r.tc_[i + j] += a.t_coeff(i).truncated(qo) * b.t_coeff(j).truncated(qo);
        }
        return r.trimmed();
    }
    friend TPoly operator*(const QSeries& s, const TPoly& a) {
        int qo = std::min(s.order(), a.qorder_);
        TPoly r(qo, a.tdeg());
        for (int k = 0; k <= a.tdeg(); ++k) r.tc_[k] = s.truncated(qo) * a.t_coeff(k).truncated(qo);
        return r.trimmed();
    }
    friend TPoly operator*(const Rational& c, const TPoly& a) {
        TPoly r = a;
        for (auto& s : r.tc_) s = c * s;
        return r;
    }
    TPoly& operator+=(const TPoly& b) { return *this = *this + b; }
    TPoly& operator-=(const TPoly& b) { return *this = *this - b; }

    friend bool operator==(const TPoly& a, const TPoly& b) {
        if (a.qorder_ != b.qorder_) return false;
        int td = std::max(a.tdeg(), b.tdeg());
        for (int k = 0; k <= td; ++k) {
            const QSeries& x = a.t_coeff(k);
            const QSeries& y = b.t_coeff(k);
            for (int d = 0; d <= a.qorder_; ++d)
                if (!((d <= x.order() ? x.coeff(d) : Rational(0)) ==
                      (d <= y.order() ? y.coeff(d) : Rational(0))))
                    return false;
        }
        return true;
    }

    // theta = d/dt = d_t + q d_q: coefficient of t^k becomes
    // (k+1) tc[k+1] + q d_q tc[k].
    TPoly theta() const {
        TPoly r(qorder_, tdeg());
        for (int k = 0; k <= tdeg(); ++k) {
            QSeries s = euler_derivative(tc_[k]);
            if (k + 1 <= tdeg()) s += Rational(static_cast<long>(k + 1)) * tc_[k + 1];
            r.tc_[k] = s;
        }
        return r.trimmed();
    }

    // Multiplication by q^a = (e^t)^a.
    TPoly q_shift(int a) const {
        TPoly r(qorder_, tdeg());
        for (int k = 0; k <= tdeg(); ++k) r.tc_[k] = shift_up(tc_[k], a);
        return r;
    }

private:
    int qorder_;
    std::vector<QSeries> tc_;
};

// Element of the P-truncated cohomology ring with series coefficients:
// components[j] is the coefficient of P^j, a TPoly.
class CohomSeries {
public:
    CohomSeries() : n_(0), comps_(1) {}
    CohomSeries(int n, int qorder) : n_(n), comps_(static_cast<size_t>(n) + 1, TPoly(qorder)) {}

    int dim() const { return n_; }
    int qorder() const { return comps_[0].qorder(); }
    const TPoly& comp(int j) const {
        assert(j >= 0 && j <= n_);
        return comps_[static_cast<size_t>(j)];
    }
    void set_comp(int j, const TPoly& p) {
        assert(j >= 0 && j <= n_);
        comps_[static_cast<size_t>(j)] = p;
    }

    bool is_zero() const {
        for (const auto& p : comps_)
            if (!p.is_zero()) return false;
        return true;
    }

    CohomSeries truncated(int new_qorder) const {
        CohomSeries r(n_, new_qorder);
        for (int j = 0; j <= n_; ++j) r.comps_[j] = comps_[j].truncated(new_qorder);
        return r;
    }

    friend CohomSeries operator+(const CohomSeries& a, const CohomSeries& b) {
        assert(a.n_ == b.n_);
        CohomSeries r(a.n_, std::min(a.qorder(), b.qorder()));
        for (int j = 0; j <= a.n_; ++j) r.comps_[j] = a.comps_[j] + b.comps_[j];
        return r;
    }
    friend CohomSeries operator-(const CohomSeries& a, const CohomSeries& b) {
        assert(a.n_ == b.n_);
        CohomSeries r(a.n_, std::min(a.qorder(), b.qorder()));
        for (int j = 0; j <= a.n_; ++j) r.comps_[j] = a.comps_[j] - b.comps_[j];
        return r;
    }
    friend bool operator==(const CohomSeries& a, const CohomSeries& b) {
        if (a.n_ != b.n_) return false;
        for (int j = 0; j <= a.n_; ++j)
            if (!(a.comps_[j] == b.comps_[j])) return false;
        return true;
    }

private:
    int n_;
    std::vector<TPoly> comps_;
};

} // namespace qmirror
