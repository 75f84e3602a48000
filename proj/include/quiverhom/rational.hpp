#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace quiverhom {

using Int = mpz_class;
using Rational = mpq_class;

/// Input/validation failures (bad presentation files, bad flags). CLI exit 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured resource cap was exceeded. CLI exit 3.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Canonicalized fraction; the raw two-argument mpq_class constructor does
/// not reduce.
inline Rational frac(const Int& num, const Int& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational frac(long num, long den) { return frac(Int(num), Int(den)); }

/// Exact integer part of a rational known to be integral.
inline Int to_integer(const Rational& q) {
    if (!is_integer(q))
        throw std::logic_error("expected integer rational, got " + q.get_str());
    return q.get_num();
}

/// Canonical text form: lowest terms, positive denominator, "p" when q == 1.
inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

/// Parse "p" or "p/q". Rejects empty/denormal input; result is canonicalized.
Rational rat_from_string(const std::string& s);

}  // namespace quiverhom
