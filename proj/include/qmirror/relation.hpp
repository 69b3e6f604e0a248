#pragma once

#include <map>
#include <string>
#include <utility>

#include "qmirror/rational.hpp"

namespace qmirror {

// Commutative polynomial in (p, q) with rational coefficients, canonical
// expanded form (no zero entries).  Keys are (p-power, q-power).
class RelationPoly {
public:
    RelationPoly() = default;

    static RelationPoly monomial(const Rational& c, int pdeg, int qdeg) {
        RelationPoly r;
        r.add_term(c, pdeg, qdeg);
        return r;
    }

    void add_term(const Rational& c, int pdeg, int qdeg) {
        if (is_zero(c)) return;
        auto key = std::make_pair(pdeg, qdeg);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Rational coeff(int pdeg, int qdeg) const {
        auto it = terms_.find({pdeg, qdeg});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int pdegree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first);
        return d;
    }

    friend RelationPoly operator+(const RelationPoly& a, const RelationPoly& b) {
        RelationPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(c, k.first, k.second);
        return r;
    }
    friend RelationPoly operator-(const RelationPoly& a, const RelationPoly& b) {
        RelationPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(-c, k.first, k.second);
        return r;
    }
    friend RelationPoly operator*(const RelationPoly& a, const RelationPoly& b) {
        RelationPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
        return r;
    }
    friend RelationPoly operator*(const Rational& s, const RelationPoly& a) {
        RelationPoly r;
        for (const auto& [k, c] : a.terms_) r.add_term(s * c, k.first, k.second);
        return r;
    }
    friend bool operator==(const RelationPoly& a, const RelationPoly& b) {
        return a.terms_ == b.terms_;
    }

    RelationPoly pow(unsigned e) const {
        RelationPoly acc = monomial(Rational(1), 0, 0);
        RelationPoly b = *this;
        while (e) {
            if (e & 1u) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        // Highest p-power first.
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            std::string mono = monomial_string(c, k.first, k.second, !out.empty());
            out += mono;
        }
        return out;
    }

    static std::string monomial_string(const Rational& c, int pdeg, int qdeg, bool with_sign) {
        std::string out;
        Rational a = abs(c);
        if (with_sign) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        bool unit = qmirror::is_one(a);
        bool has_var = pdeg > 0 || qdeg > 0;
        if (!unit || !has_var) out += qmirror::to_string(a);
        if (!unit && has_var) out += "*";
        if (qdeg > 0) {
            out += "q";
            if (qdeg > 1) out += "^" + std::to_string(qdeg);
            if (pdeg > 0) out += "*";
        }
        if (pdeg > 0) {
            out += "p";
            if (pdeg > 1) out += "^" + std::to_string(pdeg);
        }
        return out;
    }

private:
    std::map<std::pair<int, int>, Rational> terms_;
};

} // namespace qmirror
