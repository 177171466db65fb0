#ifndef TOBL_RATIONAL_HPP
#define TOBL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace tobl {

// Exact rational scalar. GMP-backed, always canonical (gcd 1, positive
// denominator), so equality is plain structural equality.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

// Parses "num", "num/den" or "-num/den". Non-canonical inputs like "3/12"
// are reduced. Throws std::invalid_argument on malformed input or zero
// denominator.
Rational parse_rational(const std::string& text);

// Canonical "num/den" form; integers render without the "/1".
std::string to_string(const Rational& value);

}  // namespace tobl

#endif
