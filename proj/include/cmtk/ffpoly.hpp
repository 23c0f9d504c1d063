#ifndef CMTK_FFPOLY_HPP
#define CMTK_FFPOLY_HPP

#include "cmtk/poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cmtk {

/// A monic irreducible polynomial; construction runs a full irreducibility
/// test, so holding a PrimePoly is the witness.
class PrimePoly {
 public:
  explicit PrimePoly(Poly p);

  /// For callers that already proved irreducibility (e.g. factor output).
  static PrimePoly trusted(Poly p) { return PrimePoly(std::move(p), 0); }

  const Poly& poly() const { return p_; }
  int degree() const { return p_.degree(); }
  Int norm() const { return p_.norm(); }

  auto operator<=>(const PrimePoly& other) const { return p_ <=> other.p_; }
  bool operator==(const PrimePoly& other) const { return p_ == other.p_; }

 private:
  PrimePoly(Poly p, int) : p_(std::move(p)) {}
  Poly p_;
};

struct Factor {
  PrimePoly prime;
  unsigned exponent;
  bool operator==(const Factor&) const = default;
};
using Factorization = std::vector<Factor>;

/// Rabin irreducibility test; f must be nonzero.
bool is_irreducible(const Poly& f);

bool is_squarefree(const Poly& f);

/// Factorization of the monic associate of f into monic irreducibles, sorted
/// canonically. Uses squarefree decomposition, distinct-degree splitting and
/// Cantor-Zassenhaus equal-degree splitting.
Factorization factor_monic(const Poly& f);

/// Product of prime^exponent over the factorization (monic).
Poly expand(const FieldPtr& field, const Factorization& factors);

struct EnumerationBudget {
  /// Upper bound on t * q^t for irreducible enumeration.
  Int max_work = Int(50'000'000);
};

/// (1/t) sum_{d | t} mu(d) q^(t/d).
Int count_irreducibles(std::uint32_t q, int t);

/// All monic irreducibles of degree t in canonical order; memoized per (q, t)
/// for the life of the process.
const std::vector<PrimePoly>& irreducibles(const FieldPtr& field, int t, const EnumerationBudget& budget = {});

/// Chi(m mod p): 0 if p | m, +1 if a nonzero square in A/p, -1 otherwise.
int quadratic_character(const Poly& m, const PrimePoly& p);

/// All b with deg b < deg a and b^2 = D (mod a), sorted canonically. a monic.
std::vector<Poly> sqrt_mod(const Poly& D, const Poly& a);

/// Square root of D modulo the prime p (D a nonzero square mod p).
Poly sqrt_mod_prime(const Poly& D, const PrimePoly& p);

/// x with x = r_i mod m_i for pairwise coprime moduli.
Poly crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli);

}  // namespace cmtk

#endif  // CMTK_FFPOLY_HPP
