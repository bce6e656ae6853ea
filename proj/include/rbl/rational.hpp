#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace rbl {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Always "num/den", also for integers.
std::string to_string(const Rational& r);

// Accepts "a/b", integers and plain decimals ("0.4", "-1.25e-3").
Rational parse_rational(const std::string& s);

double to_double(const Rational& r);

Rational pow(const Rational& base, unsigned e);

// Closest rational with the given denominator (round half up).
Rational round_to_denominator(double x, long den);

}  // namespace rbl
