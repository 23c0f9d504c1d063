#ifndef CMTK_NUMERIC_HPP
#define CMTK_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmtk {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for inputs outside a function's mathematical domain (CLI exit 2).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an enumeration or search would exceed its configured budget
/// (CLI exit 3). Budget exhaustion is never silent.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline Int ipow(const Int& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Int ipow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(Int(base), exponent);
}

inline std::string to_string(const Int& v) { return v.str(); }

/// Canonical "n/d" text, or "n" when the denominator is 1.
inline std::string to_string(const Rational& v) {
  const Int num = boost::multiprecision::numerator(v);
  const Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text);

inline bool is_integral(const Rational& v) {
  return boost::multiprecision::denominator(v) == 1;
}

/// Floating approximation for display only; never used in decisions.
inline double approx(const Rational& v) { return static_cast<double>(v); }

/// Moebius function for small positive integers.
int moebius(std::uint64_t n);

}  // namespace cmtk

#endif  // CMTK_NUMERIC_HPP
