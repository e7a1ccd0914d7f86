// Exact rational arithmetic helpers shared by every module.
// All weight, strength and width computations stay in exact rationals;
// floating point never enters the engine.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace thinpos {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Facet weights are the non-negative subset of Rational; the sign constraint
// is enforced at every ingestion point (parsing, constructions, catalog).
using Weight = Rational;

// Domain error raised by engine operations (bad input, violated precondition,
// exceeded cap). The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Parses "p" or "p/q" with optional leading '-' (q > 0). Anything else is
// rejected, in particular decimal points and exponents.
Rational parse_rational(const std::string& text);

// Formats as "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

}  // namespace thinpos
