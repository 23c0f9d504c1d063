#include "doctest.h"
#include "oracles.hpp"

#include "cmtk/cmcat.hpp"

#include <random>
#include <set>

using namespace cmtk;

namespace {

Poly P(const FieldPtr& F, const char* text) { return parse_poly(F, text); }

// smallest element of {c^2 m : c in F_q^x}
Poly square_class_rep(const Poly& m) {
  const auto& F = m.field();
  Poly best = m;
  for (Elem c = 1; c < F.q(); ++c) best = std::min(best, scale(m, F.mul(c, c)));
  return best;
}

// (m, f) pairs of a catalogue, as text
std::set<std::pair<std::string, std::string>> keys(const Catalogue& c) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& r : c.rows) out.insert({to_text(r.field.m), to_text(r.conductor)});
  return out;
}

std::vector<PrimePoly> split_primes(const QuadOrder& R, int max_degree) {
  std::vector<PrimePoly> out;
  for (int t = 1; t <= max_degree; ++t)
    for (const auto& p : irreducibles(R.field.field(), t))
      if (!divides(p.poly(), R.conductor) && quadratic_character(R.field.m, p) == 1) out.push_back(p);
  return out;
}

std::size_t element_order(const FormClass& x, const Poly& D) {
  const auto e = identity_form(D.field_ptr());
  FormClass y = x;
  std::size_t k = 1;
  while (y != e) {
    y = multiply(y, x, D);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("cm_height") {
  auto F = Field::make(3);
  auto K1 = analyze_quadratic(P(F, "T^3+2*T+1"));
  CHECK(cm_height(QuadOrder::make(K1, P(F, "T"))) == 9);
  auto K0 = analyze_quadratic(P(F, "T"));
  CHECK(cm_height(QuadOrder::maximal(K0)) == 1);
  auto x = CMPoint::make(QuadOrder::make(K1, P(F, "T")), identity_form(F));
  auto y = CMPoint::make(QuadOrder::make(K1, P(F, "T^3")), identity_form(F));
  CHECK(x.height == 9);
  CHECK(y.height == 81);
  CHECK(cm_height(std::vector<CMPoint>{x, y}) == 81);
  CHECK(cm_height(std::vector<CMPoint>{}) == 1);
}

TEST_CASE("catalogue at small bounds") {
  auto F = Field::make(3);
  CHECK(enumerate_cm_points(F, 1).rows.empty());

  auto c2 = enumerate_cm_points(F, 2);
  std::set<std::string> expected;
  for (int d = 1; d <= 2; ++d)
    for (Elem lead = 1; lead < 3; ++lead)
      for_each_poly(F, d, lead, [&](const Poly& m) {
        auto a = classify_quadratic(m);
        if (a.field && a.field->genus == 0) expected.insert(to_text(square_class_rep(m)));
        return true;
      });
  std::set<std::string> got;
  for (const auto& r : c2.rows) {
    CHECK(r.conductor.is_one());
    CHECK(r.field.genus == 0);
    CHECK(r.height == 1);
    got.insert(to_text(square_class_rep(r.field.m)));
  }
  CHECK(got == expected);
  CHECK(got.size() == c2.rows.size());

  auto c3 = enumerate_cm_points(F, 3);
  auto c9 = enumerate_cm_points(F, 9);
  auto k3 = keys(c3), k9 = keys(c9);
  CHECK(std::includes(k9.begin(), k9.end(), k3.begin(), k3.end()));
  CHECK(k9.size() > k3.size());

  Int sum = 0;
  for (const auto& r : c9.rows) {
    sum += r.h;
    CHECK(r.height < 9);
    CHECK(r.height == ipow(Int(3), r.field.genus) * r.conductor.norm());
  }
  CHECK(sum == c9.total);
  for (std::size_t i = 1; i < c9.rows.size(); ++i) CHECK(c9.rows[i - 1].height <= c9.rows[i].height);

  CatalogueBudget tiny;
  tiny.max_rows = 10;
  CHECK_THROWS_AS(enumerate_cm_points(F, 30, tiny), BudgetError);
}

TEST_CASE("catalogue is independent of thread count") {
  auto F = Field::make(3);
  CatalogueBudget b1, b4;
  b4.threads = 4;
  auto x = enumerate_cm_points(F, 28, b1), y = enumerate_cm_points(F, 28, b4);
  REQUIRE(x.rows.size() == y.rows.size());
  for (std::size_t i = 0; i < x.rows.size(); ++i) {
    CHECK(x.rows[i].field.m == y.rows[i].field.m);
    CHECK(x.rows[i].conductor == y.rows[i].conductor);
    CHECK(x.rows[i].h == y.rows[i].h);
  }
}

TEST_CASE("galois isogeny step") {
  auto F = Field::make(3);
  auto K = analyze_quadratic(P(F, "T"));
  auto R = QuadOrder::make(K, P(F, "T+2"));
  auto G = class_group(R);
  REQUIRE(G.h == 2);
  auto pts = cm_points(G);
  auto x = pts[0];
  CHECK(galois_isogeny_step(x, Poly::one(F)) == x);

  auto primes = split_primes(R, 3);
  REQUIRE(!primes.empty());
  bool saw_principal = false, saw_nonprincipal = false;
  for (const auto& p : primes) {
    auto N = reduce(prime_above(R, p), R.radicand);
    auto y = galois_isogeny_step(x, p.poly());
    if (N == identity_form(F)) {
      saw_principal = true;
      CHECK(y == x);
    } else {
      saw_nonprincipal = true;
      CHECK(y != x);
      CHECK(galois_isogeny_step(y, p.poly()) == x);
      CHECK(galois_orbit(x, p).cycle_length == 2);
    }
  }
  CHECK(saw_principal);
  CHECK(saw_nonprincipal);

  CHECK_THROWS_AS(galois_isogeny_step(x, P(F, "T+1")), DomainError);  // inert
  CHECK_THROWS_AS(galois_isogeny_step(x, P(F, "T")), DomainError);    // ramified
  CHECK_THROWS_AS(galois_isogeny_step(x, P(F, "T+2")), DomainError);  // divides f

  auto trivial = class_group(QuadOrder::maximal(K));
  auto z = cm_points(trivial)[0];
  for (const auto& p : split_primes(QuadOrder::maximal(K), 2)) CHECK(galois_orbit(z, p).cycle_length == 1);
}

TEST_CASE("action laws, norms and orbit lengths") {
  std::mt19937_64 rng(11);
  int cases = 0;
  for (std::uint32_t q : {3u, 5u}) {
    auto F = Field::make(q);
    for (const char* m : {"T^3+2*T+1", "T^3+T+1", "T^5+2*T+1", "T"}) {
      auto a = classify_quadratic(P(F, m));
      if (!a.field) continue;
      for (const char* f : {"1", "T+1", "T^2+1"}) {
        auto R = QuadOrder::make(*a.field, P(F, f));
        if (R.radicand.degree() > 9) continue;
        auto G = class_group(R);
        auto pts = cm_points(G);
        auto primes = split_primes(R, 2);
        if (primes.size() < 2) continue;
        std::uniform_int_distribution<std::size_t> pp(0, primes.size() - 1), px(0, pts.size() - 1);
        for (int k = 0; k < 4; ++k) {
          const auto& p1 = primes[pp(rng)];
          const auto& p2 = primes[pp(rng)];
          const auto& x = pts[px(rng)];
          const auto n = p1.poly() * p2.poly();
          CHECK(ideal_above(R, n).a == n);
          CHECK(galois_isogeny_step(galois_isogeny_step(x, p1.poly()), p2.poly()) ==
                galois_isogeny_step(x, n));
          auto orbit = galois_orbit(x, p1);
          CHECK(G.h % orbit.cycle_length == 0);
          CHECK(orbit.cycle_length == element_order(reduce(prime_above(R, p1), R.radicand), R.radicand));
          std::set<FormClass> seen;
          for (const auto& y : orbit.points) seen.insert(y.cls);
          CHECK(seen.size() == orbit.cycle_length);
          ++cases;
        }
      }
    }
  }
  CHECK(cases >= 20);
}
