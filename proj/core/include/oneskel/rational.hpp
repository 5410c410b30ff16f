#ifndef ONESKEL_RATIONAL_HPP
#define ONESKEL_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace oneskel {

using Int = std::int64_t;
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

/// Canonical text form: "p" for integers, "p/q" (q > 0, reduced) otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and finite decimals such as "-1.25"; parsing is exact.
/// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const RationalVector& v);

/// Narrows an exact integer to Int; throws InternalError on overflow.
Int to_int(const BigInt& z);

bool is_integer(const Rational& q);

/// p / q for machine integers of any sign; q must be nonzero.
inline Rational fraction(Int p, Int q) { return Rational(p) / Rational(q); }

} // namespace oneskel

#endif
