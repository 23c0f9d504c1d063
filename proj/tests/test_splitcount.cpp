#include "doctest.h"
#include "oracles.hpp"

#include "cmtk/splitcount.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace cmtk;

namespace {

Poly P(const FieldPtr& F, const char* text) { return parse_poly(F, text); }

long long brute_split(const SplittingSpec& s, int t) {
  long long n = 0;
  for (const auto& p : oracle::all_monic(s.field, t)) {
    if (!oracle::trial_irreducible(p)) continue;
    bool ok = true;
    for (const auto& m : s.radicands) ok = ok && oracle::brute_character(m, p) == 1;
    n += ok;
  }
  return n;
}

// Riemann-Hurwitz for a tame V4 extension: 2g - 2 = 4(-2) + sum over ramified
// places P of 2 deg P.
long long rh_genus(const Poly& m1, const Poly& m2) {
  std::set<Poly> ram;
  for (const auto* m : {&m1, &m2})
    for (const auto& [p, e] : oracle::trial_factor(monic(*m)))
      if (e % 2 == 1) ram.insert(p);
  long long s = 0;
  for (const auto& p : ram) s += p.degree();
  if (m1.degree() % 2 == 1 || m2.degree() % 2 == 1) s += 1;
  return s - 3;
}

std::vector<Poly> radicands_up_to(const FieldPtr& F, int max_degree) {
  std::vector<Poly> out;
  for (int d = 1; d <= max_degree; ++d)
    for (Elem lead : {Elem{1}, F->nonsquare()})
      for_each_poly(F, d, lead, [&](const Poly& m) {
        if (classify_quadratic(m).field) out.push_back(m);
        return true;
      });
  return out;
}

}  // namespace

TEST_CASE("spec structure") {
  auto F = Field::make(3);
  auto e = SplittingSpec::make(F, {});
  CHECK(e.n_g == 1);
  CHECK(*e.g_M == 0);
  auto s = SplittingSpec::make(F, {P(F, "T"), P(F, "T+1")});
  CHECK(s.rank == 2);
  CHECK(s.n_g == 4);
  CHECK(s.n_c == 1);
  CHECK(*s.g_M == 0);
  auto c = SplittingSpec::make(F, {P(F, "T"), P(F, "2*T")});
  CHECK(c.n_c == 2);
  CHECK(c.n_g == 2);
  CHECK(*c.g_M == 0);
  CHECK_THROWS_AS(cebotarev_window(c, 3), DomainError);
  auto same = SplittingSpec::make(F, {P(F, "T"), P(F, "T")});
  CHECK(same.rank == 1);
  CHECK_THROWS_AS(SplittingSpec::make(F, {P(F, "T^2+1")}), DomainError);
  auto three = SplittingSpec::make(F, {P(F, "T"), P(F, "T+1"), P(F, "T+2")});
  CHECK_FALSE(three.g_M);
  CHECK(three.g_M_bound == castelnuovo_bound(1, 4, 0, 2));
}

TEST_CASE("exact genus of biquadratic composita matches Riemann-Hurwitz") {
  for (std::uint32_t q : {3u, 5u}) {
    auto F = Field::make(q);
    auto rs = radicands_up_to(F, q == 3 ? 3 : 2);
    int checked = 0;
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = i + 1; j < rs.size(); ++j) {
        auto s = SplittingSpec::make(F, {rs[i], rs[j]});
        if (s.rank != 2 || s.n_c != 1) continue;
        CHECK(*s.g_M == rh_genus(rs[i], rs[j]));
        CHECK(*s.g_M <= s.g_M_bound);
        ++checked;
      }
    CHECK(checked > 100);
  }
}

TEST_CASE("split prime counts") {
  auto F = Field::make(3);
  auto e = SplittingSpec::make(F, {});
  CHECK(count_split_primes(e, 3) == count_irreducibles(3, 3));
  auto s1 = SplittingSpec::make(F, {P(F, "T")});
  CHECK(count_split_primes(s1, 2) == brute_split(s1, 2));
  auto s2 = SplittingSpec::make(F, {P(F, "T"), P(F, "T+1")});
  CHECK(count_split_primes(s2, 3) == brute_split(s2, 3));
  CHECK(count_split_primes(s2, 3, {}, 4) == count_split_primes(s2, 3, {}, 1));
  std::mt19937_64 rng(17);
  auto rs = radicands_up_to(F, 4);
  for (int k = 0; k < 15; ++k) {
    auto a = rs[rng() % rs.size()], b = rs[rng() % rs.size()];
    auto s = SplittingSpec::make(F, {a, b});
    for (int t = 1; t <= 4; ++t) CHECK(count_split_primes(s, t) == brute_split(s, t));
  }
}

TEST_CASE("density of split primes for one quadratic") {
  auto F = Field::make(3);
  std::mt19937_64 rng(23);
  auto rs = radicands_up_to(F, 3);
  for (int k = 0; k < 10; ++k) {
    auto s = SplittingSpec::make(F, {rs[rng() % rs.size()]});
    for (int t : {5, 6}) {
      const double n = static_cast<double>(count_irreducibles(3, t));
      const double x = static_cast<double>(count_split_primes(s, t));
      CHECK(std::abs(x - n / 2) <= 3 * std::sqrt(n / 4) + 1);
    }
  }
}

TEST_CASE("cebotarev window") {
  auto F = Field::make(3);
  auto w = cebotarev_window(SplittingSpec::make(F, {}), 2);
  CHECK(w.center == Rational(9, 2));
  CHECK(w.radius_coeff == 24);
  CHECK(w.radius_sqrt == 1);
  auto s = SplittingSpec::make(F, {P(F, "T^3+2*T+1"), P(F, "T")});
  for (int t = 1; t <= 5; ++t) {
    auto x = cebotarev_window(s, t);
    CHECK(x.upper() - x.lower() == doctest::Approx(8 * (2 + approx(Rational(*s.g_M))) * std::pow(3.0, t / 2.0)));
  }
  auto sT = SplittingSpec::make(F, {P(F, "T")});
  CHECK(cebotarev_window(sT, 4).contains(Rational(count_split_primes(sT, 4))));
  // strictness and odd-degree comparison by squaring
  auto w3 = cebotarev_window(SplittingSpec::make(F, {}), 3);  // 9 +- 24 sqrt 3
  CHECK(w3.contains(Rational(50)));
  CHECK_FALSE(w3.contains(Rational(51)));
}

TEST_CASE("castelnuovo") {
  CHECK(castelnuovo_bound(0, 2, 0, 2) == 1);
  CHECK(castelnuovo_bound(1, 2, 2, 2) == 7);
  CHECK(castelnuovo_bound(3, 2, 0, 1) == 3);
  CHECK_THROWS_AS(castelnuovo_bound(0, 0, 0, 1), DomainError);
}

TEST_CASE("prime count lower bound") {
  auto b = pi_lower_bound(3, 0, 0, 4);
  CHECK(b.value == Rational(81, 16) - 108);
  CHECK(b.C1 == Rational(1, 4));
  CHECK(*b.C2 == 8);
  CHECK(*b.C3 == 12);
  CHECK_THROWS_AS(pi_lower_bound(3, 0, 0, 5), DomainError);
  // eventually increasing
  int first_up = -1;
  Rational prev = pi_lower_bound(3, 1, 1, 2).value;
  for (int t = 4; t <= 20; t += 2) {
    auto v = pi_lower_bound(3, 1, 1, t).value;
    if (v > prev && first_up < 0) first_up = t;
    if (first_up > 0) CHECK(v > prev);
    prev = v;
  }
  CHECK(first_up > 0);

  std::mt19937_64 rng(29);
  int nonneg = 0;
  for (std::uint32_t q : {5u, 7u}) {
    auto F = Field::make(q);
    auto rs = radicands_up_to(F, 2);
    const int t = q == 5 ? 8 : 6;
    for (int k = 0; k < 10; ++k) {
      auto s = SplittingSpec::make(F, {rs[rng() % rs.size()], rs[rng() % rs.size()]});
      if (s.n_c != 1) continue;
      auto lb = pi_lower_bound(s, t);
      auto generic = pi_lower_bound(q, s.genera[0], s.genera[1], t);
      CHECK(generic.value <= lb.value);
      if (lb.value >= 0) {
        ++nonneg;
        CHECK(lb.value <= Rational(count_split_primes(s, t, {}, 4)));
      }
    }
  }
  CHECK(nonneg >= 5);
}
