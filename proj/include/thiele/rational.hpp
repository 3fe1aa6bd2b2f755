#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace thiele {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator. All arithmetic in this library is exact; no
/// floating point appears on any scoring or solving path.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Largest integer <= r.
inline Integer rational_floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.backend().data(), mpq_numref(r.backend().data()),
               mpq_denref(r.backend().data()));
    return q;
}

inline bool is_integer(const Rational& r) {
    return mpz_cmp_ui(mpq_denref(r.backend().data()), 1) == 0;
}

/// Serializes as "p/q", or just "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& r) { return r.str(); }

/// Parses "p" or "p/q" with optional leading '-' on the numerator.
/// Throws std::invalid_argument on any other shape (including q = 0).
Rational parse_rational(const std::string& text);

}  // namespace thiele
