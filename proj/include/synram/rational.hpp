// rational.hpp — exact rational arithmetic (GMP-backed).
#pragma once

#include <gmpxx.h>

#include <string>

namespace synram {

// mpq_class keeps values in lowest terms with positive denominator once
// canonicalized; every constructor below canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

// gmpxx has no long long constructors; long is 64-bit on every platform we
// build for.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }

inline Rational make_rational(Integer num, Integer den = 1) {
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(to_integer(num), to_integer(den));
}

// Accepts "a/b" or "a"; canonicalizes.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace synram
