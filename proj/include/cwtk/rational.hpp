#ifndef CWTK_RATIONAL_HPP
#define CWTK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cwtk {

// All bound comparisons are exact; never route these through floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical lowest-terms rendering: "p/q" with q > 0, or just "p" when q == 1.
std::string rational_to_string(const Rational& r);

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input or q == 0.
Rational rational_from_string(const std::string& text);

BigInt rational_floor(const Rational& r);
BigInt rational_ceil(const Rational& r);

} // namespace cwtk

#endif
