#ifndef CMTK_QUADFIELD_HPP
#define CMTK_QUADFIELD_HPP

#include "cmtk/ffpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cmtk {

enum class InfinityType { Ramified, Inert };

std::string to_string(InfinityType t);

/// K = k(sqrt m) with k = F_q(T), an imaginary geometric quadratic extension.
struct ImagQuadField {
  Poly m;
  int genus = 0;
  InfinityType infinity = InfinityType::Ramified;
  int constant_field_degree = 1;

  const FieldPtr& field() const { return m.field_ptr(); }
  std::uint32_t q() const { return m.field().q(); }
  /// Degree of the unique place of K above infinity.
  int infinity_degree() const { return infinity == InfinityType::Ramified ? 1 : 2; }
};

enum class QuadRejection { Zero, NotSquarefree, Real, ConstantExtension };

std::string to_string(QuadRejection r);

struct QuadAnalysis {
  std::optional<ImagQuadField> field;
  std::optional<QuadRejection> rejection;
};

QuadAnalysis classify_quadratic(const Poly& m);

/// classify_quadratic, throwing DomainError on rejection.
ImagQuadField analyze_quadratic(const Poly& m);

/// Genus of k(sqrt m) for any nonzero m that is not a constant times a
/// square (real fields included).
int quadratic_genus(const Poly& m);

/// The order R = A + f O_K = A[sqrt D] with D = f^2 m.
struct QuadOrder {
  ImagQuadField field;
  Poly conductor;
  Poly radicand;

  static QuadOrder make(const ImagQuadField& field, const Poly& conductor);
  static QuadOrder maximal(const ImagQuadField& field);

  bool is_maximal() const { return conductor.is_one(); }
  /// (deg D - 1) / 2 for odd deg D: the bound on deg a for reduced forms.
  int genus_parameter() const;
};

/// The lattice aA + (b + sqrt D)A with a monic and a | b^2 - D.
struct FormClass {
  Poly a;
  Poly b;

  auto operator<=>(const FormClass&) const = default;
  bool operator==(const FormClass&) const = default;
};

FormClass identity_form(const FieldPtr& field);
bool is_form(const FormClass& x, const Poly& D);
/// gcd(a, 2b, (b^2 - D)/a) = 1, i.e. the ideal is invertible.
bool is_primitive(const FormClass& x, const Poly& D);
bool is_reduced(const FormClass& x, const Poly& D);

/// Gauss/Cantor composition; the result is a form but is not reduced.
FormClass compose(const FormClass& x, const FormClass& y, const Poly& D);
/// Reduced representative of the class (deg D odd).
FormClass reduce(const FormClass& x, const Poly& D);
FormClass inverse(const FormClass& x, const Poly& D);
inline FormClass multiply(const FormClass& x, const FormClass& y, const Poly& D) {
  return reduce(compose(x, y, D), D);
}
FormClass power(const FormClass& x, const Int& n, const Poly& D);

struct ClassGroupBudget {
  /// Bound on the number of candidate moduli a scanned (sum over deg a of q^deg a).
  Int max_candidates = Int(5'000'000);
  /// Composition tables are only built up to this order.
  std::size_t max_table_order = 4096;
};

/// Pic(R): one reduced invertible form per class, canonically sorted
/// (identity first). For inert-type maximal orders only the order is known.
struct ClassGroup {
  QuadOrder order;
  Int h;
  std::vector<FormClass> reps;
  bool has_representatives = true;
  std::string method;

  std::optional<std::size_t> index_of(const FormClass& reduced) const;

 private:
  friend ClassGroup class_group(const QuadOrder&, const ClassGroupBudget&);
  std::map<FormClass, std::size_t> index_;
};

ClassGroup class_group(const QuadOrder& order, const ClassGroupBudget& budget = {});

/// table[i][j] = index of reps[i] * reps[j].
std::vector<std::vector<std::size_t>> composition_table(const ClassGroup& group,
                                                        const ClassGroupBudget& budget = {});

struct LocalFactor {
  PrimePoly prime;
  unsigned exponent;
  int chi;
  Rational factor;  // 1 - chi / |p|
};

struct ClassNumberAudit {
  Int h_max;
  std::string h_max_method;
  Int unit_index = 1;
  Int conductor_norm;
  std::vector<LocalFactor> local;
  Int value;
};

/// |Pic(R)| = |Pic(O_K)| / [O_K^x : R^x] * |f| * prod_{p | f} (1 - chi(p)/|p|).
ClassNumberAudit order_class_number(const ImagQuadField& field, const Poly& conductor,
                                    const ClassGroupBudget& budget = {});

/// Same formula with a caller-supplied |Pic(O_K)|.
ClassNumberAudit order_class_number_from(const ImagQuadField& field, const Poly& conductor, const Int& h_max,
                                         const std::string& method);

struct ClassNumberBound {
  Rational value;
  bool by_convention = false;  // g = 0
};

/// (q-1)(q^{2g} - 2g q^g + 1) / (2g (q^{g+1} - 1)); 1 for g = 0.
ClassNumberBound hK_lower_bound(std::uint32_t q, int g);

/// L-polynomial coefficients a_0..a_{2g} of the smooth model of y^2 = m,
/// assembled from point counts over F_{q^i}, i <= g.
std::vector<Int> l_polynomial(const ImagQuadField& field);

/// Point counts N_1..N_n of the smooth projective model of y^2 = m.
std::vector<Int> point_counts(const ImagQuadField& field, int n);

/// h(K) = L(1).
Int divisor_class_number(const ImagQuadField& field);

/// |Pic(O_K)| = h(K) * deg(infinity), by point counting.
Int maximal_pic_by_point_count(const ImagQuadField& field);

}  // namespace cmtk

#endif  // CMTK_QUADFIELD_HPP
