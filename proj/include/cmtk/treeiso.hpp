#ifndef CMTK_TREEISO_HPP
#define CMTK_TREEISO_HPP

#include "cmtk/ffpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmtk {

/// Vertices of the r-regular tree as reduced words from the origin: the
/// first letter is one of r edges, each later letter one of the r-1 edges
/// other than the one just walked.
using Address = std::vector<unsigned>;

class RegularTree {
 public:
  explicit RegularTree(unsigned arity);
  /// The Bruhat-Tits tree at p: arity |p| + 1.
  static RegularTree at_prime(const PrimePoly& p);

  unsigned arity() const { return r_; }
  bool valid(const Address& v) const;
  void check(const Address& v) const;
  /// Parent first (if any), then children in letter order.
  std::vector<Address> neighbors(const Address& v) const;

 private:
  unsigned r_;
};

/// "2.0.3"; the origin is "".
std::string to_string(const Address& v);
Address parse_address(const std::string& text);

std::size_t common_prefix(const Address& v, const Address& w);
std::size_t tree_distance(const RegularTree& tree, const Address& v, const Address& w);

struct Median {
  Address center;
  std::size_t n1, n2, n3;
};

Median median(const RegularTree& tree, const Address& v1, const Address& v2, const Address& v3);

/// Non-backtracking paths of length n from a vertex with the first edge
/// avoiding k of its r edges.
Int count_avoiding_geodesics(const RegularTree& tree, unsigned n, unsigned k_avoid);

enum class BigDegreeMode { Paper, Exact };

/// prod over p^n || N3 of (|p|-1) B^{n-1} / (2n+1), with B = |p|+1 (Paper mode)
/// or B = |p| (Exact mode, the geodesic count).
Rational bigdegree_bound(const Factorization& n3, BigDegreeMode mode);

/// (N1, N2, N3) up to F_q^x, stored monic.
struct SpecialTriple {
  Poly n1, n2, n3;
  static SpecialTriple make(const Poly& n1, const Poly& n2, const Poly& n3);
  const Poly& at(int i) const;
};

/// monic(N_i N_j), i != j in {1,2,3}.
Poly triple_project(const SpecialTriple& t, int i, int j);

/// Local vertex triples at distinct primes mapped to ideals prod p^{n_i}.
struct LocalTriple {
  PrimePoly prime;
  Address v1, v2, v3;
};
SpecialTriple triple_from_vertices(const FieldPtr& field, const std::vector<LocalTriple>& local);

struct HeckeCosetRep {
  Poly a, b, d;
  bool primitive = true;
};

/// (a b; 0 d) with a d = N, a monic, deg b < deg d and gcd(a, b, d) = 1.
std::vector<HeckeCosetRep> hecke_coset_reps(const Poly& N);

/// |N| prod_{p | N} (1 + 1/|p|).
Int psi(const Poly& N);

struct DegreeBounds {
  Int components;
  std::optional<Int> intersection;
  Int hecke_image;
};

DegreeBounds degree_bounds(unsigned n, const Int& psi_N, const Int& degY, std::optional<Int> degY2 = std::nullopt);

struct CoveringOrders {
  Int sl2;          // |SL2(A/N)|
  Int gal_full;     // |GL2^1(A/N) / Z(F_q)|
  Int gal_reduced;  // |PGL2^1(A/N)|
  std::optional<Int> psl2;
  bool brute_checked = false;
};

/// Group orders from the formulas; confirmed by enumerating 2x2 matrices
/// over A/N when |A/N| <= brute_limit (throws if they disagree).
CoveringOrders covering_group_orders(const Poly& N, std::uint64_t brute_limit = 81);

/// Direct enumeration; BudgetError when |A/N| > limit.
CoveringOrders covering_group_orders_brute(const Poly& N, std::uint64_t limit = 81);

}  // namespace cmtk

#endif  // CMTK_TREEISO_HPP
