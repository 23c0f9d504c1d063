#ifndef CMTK_CERTIFY_HPP
#define CMTK_CERTIFY_HPP

#include "cmtk/quadfield.hpp"
#include "cmtk/splitcount.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cmtk {

/// A curve Y of degree d in M^n defined over F with [F:k] = F_deg, together
/// with the endomorphism rings of the CM point being certified.
struct CurveHypothesis {
  std::uint32_t q = 3;
  Int d = 1;
  unsigned n = 2;
  Int F_deg = 1;
  std::vector<QuadOrder> points;
};

/// One recorded inequality; `relation` is ">" or ">=". The inputs are the raw
/// numbers both sides are computed from.
struct Inequality {
  std::string name;
  Rational lhs;
  Rational rhs;
  std::string relation = ">";
  bool holds = false;
  std::vector<std::pair<std::string, std::string>> inputs;
};

Inequality make_inequality(std::string name, Rational lhs, Rational rhs, std::string relation,
                           std::vector<std::pair<std::string, std::string>> inputs);

struct ChosenPrime {
  std::optional<Poly> prime;
  int degree;
  Int norm;
};

struct SearchTrace {
  int t;
  Int candidates;
  Int not_split;
  Int divides_conductor;
  std::optional<std::string> selected;
};

struct Certificate {
  std::string verdict = "inconclusive";  // or "certified"
  std::vector<ChosenPrime> primes;
  std::vector<Inequality> inequalities;
  std::vector<std::pair<std::string, std::string>> constants;
  std::vector<std::pair<std::string, std::string>> budget;
  std::vector<SearchTrace> trace;
  std::optional<std::string> failure;

  bool all_hold() const;
};

struct CertifyBudget {
  int max_prime_degree = 12;
  EnumerationBudget enumeration;
  ClassGroupBudget class_group;
  Int max_grid = ipow(Int(2), 40);  // largest B examined
  int max_t = 400;
  int stabilization_levels = 8;
};

struct AdmissiblePrime {
  std::optional<PrimePoly> prime;
  std::vector<SearchTrace> trace;
  int floor_t = 0;  // smallest even t with q^t >= max(13, d)
};

/// First canonical monic irreducible of even degree t (q^t >= max(13, d))
/// that splits in every coordinate field and divides no conductor.
AdmissiblePrime find_admissible_prime(const CurveHypothesis& hyp, const CertifyBudget& budget = {});

/// |Pic(R_i)|/[F:k] > 4(|p|+1)^2 d^2 for some i, recorded for the largest
/// |Pic(R_i)| with every coordinate listed among the inputs.
Inequality check_improper(const PrimePoly& p, const CurveHypothesis& hyp, const std::vector<Int>& pic_sizes);

/// Full pipeline: class numbers, admissible prime, improper-intersection test.
Certificate certify_point(const CurveHypothesis& hyp, const CertifyBudget& budget = {});

/// PicLB(g, f) = hK_lower_bound(q, g) |f| prod_{p | f} (1 - 1/|p|).
Rational pic_lower_bound(std::uint32_t q, int g, const Poly& conductor);
/// Same from the conductor degree and the norms of its distinct primes.
Rational pic_lower_bound(std::uint32_t q, int g, int conductor_degree, const std::vector<Int>& prime_norms);

/// Norms of the distinct primes of the degree-L conductor minimizing
/// prod (1 - 1/|p|): every prime of degree 1, then degree 2, ... while they fit.
std::vector<Int> worst_conductor_primes(std::uint32_t q, int L);

struct ConfigurationAudit {
  int g = 0;      // genus of the coordinate carrying the height
  int L = 0;      // its conductor degree
  std::optional<int> t;
  Rational pic_lb;
  Rational pi_lb;
  Rational rhs;
  bool holds = false;
  std::string failing;  // empty when it holds
};

struct LevelAudit {
  int h = 0;
  bool holds = false;
  std::vector<ConfigurationAudit> configurations;
};

struct HeightBound {
  std::uint32_t q = 0;
  Int d, F_deg;
  unsigned coordinates = 2;
  std::optional<Int> B;
  std::optional<int> level;  // B = q^level
  int grid_top = 0;
  std::vector<LevelAudit> levels;
  std::vector<int> failing_levels;
};

/// Smallest B = q^h0 such that every level h0 <= h <= grid top (at least
/// `stabilization_levels` of them) admits, for every genus split g + L = h of
/// the height-carrying coordinate, an even t with q^t >= max(13, d),
/// pi lower bound > L (other coordinates at the worst genus h, conductor 1)
/// and PicLB / F_deg > 4(q^t+1)^2 d^2. Throws BudgetError with the frontier if
/// the grid does not stabilize.
HeightBound minimal_height_bound(const Int& d, const Int& F_deg, std::uint32_t q, const CertifyBudget& budget = {},
                                 unsigned coordinates = 2);

/// For comparison with the eps-form class-number bound: the largest C with
/// C (q^h)^(1 - eps) <= PicLB over every genus split at each level h in [1, top].
double epsilon_constant(std::uint32_t q, double eps, int top);

struct LadderHeight {
  int g;
  Poly conductor;
};

struct Ladder {
  std::vector<int> t;
  Certificate certificate;
};

/// Greedy minimal even t_1 < ... < t_{d-1}.
Ladder step3_ladder(const Int& d, unsigned n, const Int& degY, const Int& F_deg, const std::vector<LadderHeight>& heights,
                    const CertifyBudget& budget = {});

/// degY^(2^j) prod_{m <= j} (2 q^{t_m} + 2)^(n 2^{j-m}).
Int ladder_growth_rhs(std::uint32_t q, const Int& degY, unsigned n, const std::vector<int>& t, int j);

}  // namespace cmtk

#endif  // CMTK_CERTIFY_HPP
