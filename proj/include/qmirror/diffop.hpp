#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "qmirror/cohom.hpp"
#include "qmirror/errors.hpp"
#include "qmirror/poly.hpp"
#include "qmirror/relation.hpp"

namespace qmirror {

// Differential operator in theta = d/dt and e^t, stored in normal order:
// sum over a of (e^t)^a * c_a(theta), with coefficients polynomial in hbar.
// Composition uses the rewrite theta * e^t = e^t * (theta + 1).
class DiffOp {
public:
    DiffOp() = default;

    static DiffOp zero() { return DiffOp(); }
    static DiffOp constant(const HPoly& c) {
        DiffOp op;
        op.set_coeff(0, 0, c);
        return op;
    }
    static DiffOp identity() { return constant(HPoly(1L)); }
    static DiffOp theta() {
        DiffOp op;
        op.set_coeff(0, 1, HPoly(1L));
        return op;
    }
    static DiffOp exp_t() {
        DiffOp op;
        op.set_coeff(1, 0, HPoly(1L));
        return op;
    }

    // Coefficient of q^a theta^k.
    const HPoly& coeff(int a, int k) const {
        static const HPoly zero_poly;
        if (a < 0 || a >= static_cast<int>(terms_.size())) return zero_poly;
        const auto& row = terms_[static_cast<size_t>(a)];
        if (k < 0 || k >= static_cast<int>(row.size())) return zero_poly;
        return row[static_cast<size_t>(k)];
    }
    void set_coeff(int a, int k, const HPoly& c) {
        if (a >= static_cast<int>(terms_.size())) terms_.resize(static_cast<size_t>(a) + 1);
        auto& row = terms_[static_cast<size_t>(a)];
        if (k >= static_cast<int>(row.size())) row.resize(static_cast<size_t>(k) + 1);
        row[static_cast<size_t>(k)] = c;
    }

    int q_degree() const {
        for (int a = static_cast<int>(terms_.size()) - 1; a >= 0; --a)
            if (!row_zero(terms_[static_cast<size_t>(a)])) return a;
        return 0;
    }
    int theta_degree(int a) const {
        if (a < 0 || a >= static_cast<int>(terms_.size())) return -1;
        const auto& row = terms_[static_cast<size_t>(a)];
        for (int k = static_cast<int>(row.size()) - 1; k >= 0; --k)
            if (!row[static_cast<size_t>(k)].is_zero()) return k;
        return -1;
    }

    bool is_zero() const {
        for (const auto& row : terms_)
            if (!row_zero(row)) return false;
        return true;
    }

    friend DiffOp operator+(const DiffOp& A, const DiffOp& B) {
        DiffOp r = A;
        for (int b = 0; b < static_cast<int>(B.terms_.size()); ++b)
            for (int k = 0; k < static_cast<int>(B.terms_[b].size()); ++k)
                if (!B.terms_[b][k].is_zero())
                    r.set_coeff(b, k, r.coeff(b, k) + B.terms_[b][k]);
        return r;
    }
    friend DiffOp operator-(const DiffOp& A, const DiffOp& B) { return A + (HPoly(-1L) * B); }
    friend DiffOp operator*(const HPoly& s, const DiffOp& A) {
        DiffOp r;
        for (int a = 0; a < static_cast<int>(A.terms_.size()); ++a)
            for (int k = 0; k < static_cast<int>(A.terms_[a].size()); ++k)
                if (!A.terms_[a][k].is_zero()) r.set_coeff(a, k, s * A.terms_[a][k]);
        return r;
    }

    // Normal-ordered composition A.B:
    // (q^a A_a(theta)) (q^b B_b(theta)) = q^(a+b) A_a(theta + b) B_b(theta).
    friend DiffOp operator*(const DiffOp& A, const DiffOp& B) {
        DiffOp r;
        for (int a = 0; a < static_cast<int>(A.terms_.size()); ++a) {
            if (row_zero(A.terms_[a])) continue;
            for (int b = 0; b < static_cast<int>(B.terms_.size()); ++b) {
                if (row_zero(B.terms_[b])) continue;
                std::vector<HPoly> shifted = shift_theta(A.terms_[a], b);
                for (int i = 0; i < static_cast<int>(shifted.size()); ++i) {
                    if (shifted[i].is_zero()) continue;
                    for (int j = 0; j < static_cast<int>(B.terms_[b].size()); ++j) {
                        const HPoly& cb = B.terms_[b][j];
                        if (cb.is_zero()) continue;
                        r.set_coeff(a + b, i + j, r.coeff(a + b, i + j) + shifted[i] * cb);
                    }
                }
            }
        }
        return r;
    }

    DiffOp pow(unsigned e) const {
        DiffOp acc = identity();
        DiffOp b = *this;
        while (e) {
            if (e & 1u) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const DiffOp& A, const DiffOp& B) {
        int amax = std::max(A.terms_.size(), B.terms_.size());
        for (int a = 0; a < amax; ++a) {
            int kmax = std::max(A.theta_degree(a), B.theta_degree(a));
            for (int k = 0; k <= kmax; ++k)
                if (!(A.coeff(a, k) == B.coeff(a, k))) return false;
        }
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (int a = 0; a < static_cast<int>(terms_.size()); ++a) {
            for (int k = 0; k < static_cast<int>(terms_[a].size()); ++k) {
                const HPoly& c = terms_[a][k];
                if (c.is_zero()) continue;
                if (!out.empty()) out += " + ";
                out += "(" + c.to_string() + ")";
                if (a > 0) out += "*q" + (a > 1 ? "^" + std::to_string(a) : "");
                if (k > 0) out += "*theta" + (k > 1 ? "^" + std::to_string(k) : "");
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    static bool row_zero(const std::vector<HPoly>& row) {
        for (const auto& c : row)
            if (!c.is_zero()) return false;
        return true;
    }
    // c(theta) -> c(theta + b) via iterated Horner evaluation at (theta + b).
    static std::vector<HPoly> shift_theta(const std::vector<HPoly>& c, int b) {
        if (b == 0) return c;
        // result(theta) = sum_k c_k (theta+b)^k, computed by Horner:
        // acc = 0; for k from top: acc = acc*(theta+b) + c_k.
        std::vector<HPoly> acc;
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
            // acc * (theta + b)
            std::vector<HPoly> next(acc.size() + 1);
            for (size_t i = 0; i < acc.size(); ++i) {
                next[i + 1] += acc[i];
                next[i] += rat(b) * acc[i];
            }
            if (next.empty()) next.resize(1);
            next[0] += c[static_cast<size_t>(k)];
            acc = std::move(next);
        }
        return acc;
    }

    // terms_[a][k] = coefficient of q^a theta^k.
    std::vector<std::vector<HPoly>> terms_;
};

namespace detail {
inline Rational constant_value(const HPoly& c) {
    assert(c.degree() <= 0);
    return c.coeff(0);
}
} // namespace detail

// Applies a normal-ordered operator to a TPoly.  Requires coefficients
// constant in hbar (the non-equivariant pipelines run at hbar = 1).
inline TPoly apply_op(const DiffOp& A, const TPoly& s) {
    TPoly result(s.qorder());
    for (int a = 0; a <= A.q_degree(); ++a) {
        int kd = A.theta_degree(a);
        if (kd < 0) continue;
        // Horner in theta: acc = sum_k c_{a,k} theta^k applied to s.
        TPoly acc(s.qorder());
        for (int k = kd; k >= 0; --k) {
            acc = acc.theta();
            const HPoly& c = A.coeff(a, k);
            if (!c.is_zero()) acc += detail::constant_value(c) * s;
        }
        result += acc.q_shift(a);
    }
    return result;
}

inline CohomSeries apply_op(const DiffOp& A, const CohomSeries& s) {
    CohomSeries r(s.dim(), s.qorder());
    for (int j = 0; j <= s.dim(); ++j) r.set_comp(j, apply_op(A, s.comp(j)));
    return r;
}

// Quasiclassical limit: with the operator written in (hbar*theta, e^t, hbar),
// substitute hbar*theta -> p, e^t -> q and set hbar = 0.  The coefficient of
// q^a theta^k must have hbar-valuation >= k; the surviving part is the
// hbar^k-coefficient.
inline RelationPoly quasiclassical_limit(const DiffOp& A) {
    RelationPoly r;
    for (int a = 0; a <= A.q_degree(); ++a) {
        for (int k = 0; k <= A.theta_degree(a); ++k) {
            const HPoly& c = A.coeff(a, k);
            if (c.is_zero()) continue;
            if (c.valuation() < k)
                throw DomainError("negative powers of hbar remain in the quasiclassical limit");
            r.add_term(c.coeff(k), k, a);
        }
    }
    return r;
}

} // namespace qmirror
