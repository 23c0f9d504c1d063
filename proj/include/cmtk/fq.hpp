#ifndef CMTK_FQ_HPP
#define CMTK_FQ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cmtk {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_q, q = p^e with p odd and q <= 2^16.
///
/// Elements are encoded as integers in [0, q): for e = 1 the residue itself,
/// for e > 1 the base-p digits of the coordinate vector in the power basis of
/// the field modulus. The prime subfield occupies codes [0, p). The modulus
/// for e > 1 is the first primitive monic polynomial of degree e over F_p in
/// the canonical polynomial order, so every run builds the same field.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Shared instance per q; identical q yields the identical pointer.
  static FieldPtr make(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    if (e_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const {
    if (a == 0) return 0;
    if (e_ == 1) return p_ - a;
    return neg_table_[a];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (e_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    const std::uint32_t s = log_[a] + log_[b];
    return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;

  bool is_square(Elem a) const { return square_[a] != 0; }
  /// Quadratic character on F_q: 0, +1, -1.
  int legendre(Elem a) const { return a == 0 ? 0 : (is_square(a) ? 1 : -1); }
  /// Some square root of a square, or throws DomainError.
  Elem sqrt(Elem a) const;
  /// Smallest non-square code; the canonical representative of F_q^x / F_q^x2.
  Elem nonsquare() const { return nonsquare_; }

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const;

  /// Coefficients over F_p (constant first) of the modulus; {0, 1} for e = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Text form of the modulus in the variable x, e.g. "x^2+2*x+2".
  std::string modulus_text() const;

  Field(std::uint32_t p, std::uint32_t e);

 private:
  Elem add_digits(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> inv_;
  std::vector<Elem> neg_table_;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint8_t> square_;
  std::vector<Elem> sqrt_;
  Elem nonsquare_ = 0;
};

}  // namespace cmtk

#endif  // CMTK_FQ_HPP
