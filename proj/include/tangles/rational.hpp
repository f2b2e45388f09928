#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

namespace tangles {

using Integer = mpz_class;
using Rational = mpq_class;

// Working type for the numeric modules; 50 decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

// Canonical "num/den" form, sign on the numerator.
std::string to_string(const Rational& r);

// Accepts "num/den" or a bare integer; the result is canonicalized.
Rational parse_rational(const std::string& s);

Real to_real(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace tangles
