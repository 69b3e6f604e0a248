#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qmirror/errors.hpp"

namespace qmirror {

// Exact rational numbers.  GMP keeps the canonical form for us:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// Exact integer power with rational base, non-negative exponent.
inline Rational pow_rat(const Rational& base, unsigned e) {
    Rational acc = 1;
    Rational b = base;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Harmonic number H_k = 1 + 1/2 + ... + 1/k (H_0 = 0).
inline Rational harmonic(unsigned k) {
    Rational h = 0;
    for (unsigned m = 1; m <= k; ++m) h += rat(1, static_cast<long>(m));
    return h;
}

// Canonical "numerator/denominator" form used by all machine-readable output.
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Human form: omits the denominator when it is 1.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace qmirror
