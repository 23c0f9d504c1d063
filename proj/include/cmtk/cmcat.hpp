#ifndef CMTK_CMCAT_HPP
#define CMTK_CMCAT_HPP

#include "cmtk/quadfield.hpp"

#include <vector>

namespace cmtk {

/// A CM Drinfeld module, recorded by its endomorphism ring and its ideal
/// class in Pic(order).
struct CMPoint {
  QuadOrder order;
  FormClass cls;
  Int height;

  static CMPoint make(const QuadOrder& order, const FormClass& cls);
  bool operator==(const CMPoint& other) const {
    return order.radicand == other.order.radicand && order.field.m == other.order.field.m && cls == other.cls;
  }
};

/// q^g |f|.
Int cm_height(const QuadOrder& order);
Int cm_height(const CMPoint& x);
/// Maximum over the coordinates; 1 for the empty tuple.
Int cm_height(const std::vector<CMPoint>& tuple);

/// All points with endomorphism ring exactly `group.order`.
std::vector<CMPoint> cm_points(const ClassGroup& group);

struct CatalogueRow {
  ImagQuadField field;
  Poly conductor;
  Int h;
  Int height;
  std::string h_method;
};

struct CatalogueBudget {
  Int max_rows = Int(2'000'000);
  ClassGroupBudget class_group;
  unsigned threads = 1;
};

struct Catalogue {
  Int bound;
  std::vector<CatalogueRow> rows;  // sorted by (height, m, f)
  Int total;                       // sum of h over rows
};

/// Squarefree imaginary radicands of genus g up to F_q^x-square scaling:
/// odd degree 2g+1 with leading coefficient 1 or the canonical nonsquare,
/// and even degree 2g+2 with nonsquare leading coefficient. Canonical order.
std::vector<ImagQuadField> imaginary_fields_of_genus(const FieldPtr& field, int g);

/// Every (field, conductor) with q^g |f| < B, each with its class number.
Catalogue enumerate_cm_points(const FieldPtr& field, const Int& bound, const CatalogueBudget& budget = {});

/// The prime (p, b) above a split p, with b the smaller square root of D mod p
/// in canonical order, or the other root when `conjugate` is set.
FormClass prime_above(const QuadOrder& order, const PrimePoly& p, bool conjugate = false);

/// Unreduced product of canonical primes above the factors of n; its a-part
/// equals n exactly.
FormClass ideal_above(const QuadOrder& order, const Poly& n, bool conjugate = false);

/// sigma_n: x times [N]^{-1}.
CMPoint galois_isogeny_step(const CMPoint& x, const Poly& n, bool conjugate = false);

struct GaloisOrbit {
  std::vector<CMPoint> points;  // x, sigma x, sigma^2 x, ...
  std::size_t cycle_length = 0;
};

GaloisOrbit galois_orbit(const CMPoint& x, const PrimePoly& p, bool conjugate = false);

}  // namespace cmtk

#endif  // CMTK_CMCAT_HPP
