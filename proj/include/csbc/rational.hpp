#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace csbc {

/// Exact rational number: normalized so that the denominator is positive and
/// gcd(|num|, den) == 1.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Prints "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return boost::multiprecision::numerator(r).str();
  }
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Exact conversion of a finite double (every finite double is a dyadic rational).
inline Rational exact_rational(double x) { return Rational(x); }

}  // namespace csbc
