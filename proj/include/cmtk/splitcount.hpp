#ifndef CMTK_SPLITCOUNT_HPP
#define CMTK_SPLITCOUNT_HPP

#include "cmtk/quadfield.hpp"

#include <string>
#include <vector>

namespace cmtk {

/// M = k(sqrt m_1, ..., sqrt m_r) for imaginary quadratic radicands.
struct SplittingSpec {
  FieldPtr field;
  std::vector<Poly> radicands;
  unsigned rank = 0;  // [M:k] = 2^rank
  Int n_g = 1;        // geometric degree
  Int n_c = 1;        // constant field degree
  std::vector<int> genera;
  /// Genus of M when it is known exactly (up to two radicands).
  std::optional<Int> g_M;
  /// Upper bound from iterating Castelnuovo over the radicands in input order.
  Int g_M_bound = 0;
  std::string g_M_method;

  static SplittingSpec make(const FieldPtr& field, const std::vector<Poly>& radicands);
  /// The genus entering the window radius: exact when known, else the bound.
  const Int& genus_for_window() const { return g_M ? *g_M : g_M_bound; }
};

/// n2 g1 + n1 g2 + (n1 - 1)(n2 - 1).
Int castelnuovo_bound(const Int& g1, const Int& n1, const Int& g2, const Int& n2);

/// Monic irreducibles of degree t at which every radicand is a nonzero square.
Int count_split_primes(const SplittingSpec& spec, int t, const EnumerationBudget& budget = {}, unsigned threads = 1);

/// The open interval center +- coeff * sqrt(q^(t mod 2)) with
/// center = q^t/(n_g t) and coeff sqrt(q^(t mod 2)) = 4(e^2 + g_M(e+1)/2 + g_k + 1) q^(t/2),
/// e = 1, g_k = 0.
struct CebotarevWindow {
  int t = 0;
  std::uint32_t q = 0;
  Int genus;
  Rational center;
  Int radius_coeff;
  unsigned radius_sqrt = 1;  // radius = radius_coeff * sqrt(radius_sqrt)

  bool contains(const Rational& x) const;  // strict
  double radius() const;
  double lower() const;
  double upper() const;
  std::string radius_text() const;
};

CebotarevWindow cebotarev_window(const SplittingSpec& spec, int t);

struct PiLowerBound {
  int t = 0;
  Rational C1;
  /// Error term 4(2 + G) q^(t/2); as C2 (g1 + g2) + C3 for two quadratics.
  Int error_coeff;
  std::optional<Int> C2, C3;
  Int g_M_bound;
  Rational value;
  std::vector<std::string> derivation;
};

/// q^t/(n_g t) - 4(2 + G) q^(t/2), with G the Castelnuovo genus bound; t even.
PiLowerBound pi_lower_bound(const SplittingSpec& spec, int t);

/// Two quadratics of genera g1, g2: q^t/(4t) - (8(g1 + g2) + 12) q^(t/2).
PiLowerBound pi_lower_bound(std::uint32_t q, const Int& g1, const Int& g2, int t);

/// Same with n quadratic coordinates: C1 = 2^-n, genus bound from iterated Castelnuovo.
PiLowerBound pi_lower_bound(std::uint32_t q, const std::vector<Int>& genera, int t);

}  // namespace cmtk

#endif  // CMTK_SPLITCOUNT_HPP
