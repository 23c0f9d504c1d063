#ifndef CMTK_POLY_HPP
#define CMTK_POLY_HPP

#include "cmtk/fq.hpp"
#include "cmtk/numeric.hpp"

#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace cmtk {

/// Element of A = F_q[T], coefficients constant-first and always trimmed so
/// that degree() is the index of the last nonzero coefficient (-1 for 0).
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly monomial(FieldPtr field, Elem c, int degree);
  static Poly variable(FieldPtr field) { return monomial(std::move(field), 1, 1); }
  static Poly one(FieldPtr field) { return constant(std::move(field), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Elem coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
  }
  Elem lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  /// |a| = q^deg(a); the norm of the ideal <a>.
  Int norm() const;

  /// Ordering: degree first, then coefficients compared from the leading
  /// coefficient down.
  std::strong_ordering operator<=>(const Poly& other) const;
  bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elem c);

struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// a / b, throwing if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// Monic associate (zero stays zero).
Poly monic(const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct Bezout {
  Poly gcd;  // monic
  Poly s;
  Poly t;    // s*a + t*b = gcd
};
Bezout xgcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& base, const Int& exponent, const Poly& m);
Poly pow(const Poly& base, unsigned exponent);

Poly derivative(const Poly& a);
Elem evaluate(const Poly& a, Elem x);

/// The polynomial whose p-th power is a (requires a' = 0).
Poly pth_root(const Poly& a);

/// Text form, e.g. "2*T^3+T+1"; coefficients are element codes.
std::string to_text(const Poly& a);

/// Parses the sparse text form. For e = 1 integer coefficients are reduced
/// mod p; for e > 1 each coefficient must be an element code in [0, q).
Poly parse_poly(const FieldPtr& field, const std::string& text);

/// Calls fn for every polynomial of exact degree d with leading coefficient
/// `lead`, in canonical order. Stops early when fn returns false.
void for_each_poly(const FieldPtr& field, int degree, Elem lead,
                   const std::function<bool(const Poly&)>& fn);

/// Number of polynomials enumerated by for_each_poly for given degree.
Int count_polys_of_degree(std::uint32_t q, int degree);

}  // namespace cmtk

#endif  // CMTK_POLY_HPP
