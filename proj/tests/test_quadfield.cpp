#include "doctest.h"
#include "oracles.hpp"

#include "cmtk/quadfield.hpp"

#include <random>

using namespace cmtk;

namespace {

Poly P(const FieldPtr& F, const char* text) { return parse_poly(F, text); }

std::vector<Poly> imaginary_radicands(const FieldPtr& F, int degree) {
  std::vector<Poly> out;
  for (Elem lead : {Elem{1}, F->nonsquare()}) {
    for_each_poly(F, degree, lead, [&](const Poly& m) {
      if (classify_quadratic(m).field) out.push_back(m);
      return true;
    });
  }
  return out;
}

}  // namespace

TEST_CASE("analyze_quadratic examples") {
  auto F = Field::make(3);
  auto K = analyze_quadratic(P(F, "T^3+2*T+1"));
  CHECK(K.infinity == InfinityType::Ramified);
  CHECK(K.genus == 1);
  auto real = classify_quadratic(P(F, "T^2+1"));
  CHECK_FALSE(real.field);
  CHECK(*real.rejection == QuadRejection::Real);
  auto inert = analyze_quadratic(P(F, "2*T^2+T"));
  CHECK(inert.infinity == InfinityType::Inert);
  CHECK(inert.genus == 0);
  CHECK(*classify_quadratic(P(F, "T^3+T^2")).rejection == QuadRejection::NotSquarefree);
  CHECK(*classify_quadratic(P(F, "2")).rejection == QuadRejection::ConstantExtension);
  CHECK_THROWS_AS(analyze_quadratic(P(F, "T^2+1")), DomainError);
  CHECK(quadratic_genus(P(F, "T^2+1")) == 0);
  CHECK(quadratic_genus(P(F, "T^2") * P(F, "T^3+2*T+1")) == 1);
}

TEST_CASE("class_group examples") {
  auto F = Field::make(3);
  auto KT = analyze_quadratic(P(F, "T"));
  CHECK(class_group(QuadOrder::maximal(KT)).h == 1);
  auto K = analyze_quadratic(P(F, "T^3+2*T+1"));
  CHECK(class_group(QuadOrder::maximal(K)).h == 7);
  CHECK(oracle::brute_point_count(K.m, 1) == 7);

  // conductor T+1: chi = -1 (T = -1 = 2 mod T+1), conductor T+2: chi = +1
  CHECK(quadratic_character(KT.m, PrimePoly(P(F, "T+1"))) == -1);
  CHECK(quadratic_character(KT.m, PrimePoly(P(F, "T+2"))) == 1);
  for (const char* f : {"T+1", "T+2", "T"}) {
    auto R = QuadOrder::make(KT, P(F, f));
    CHECK(class_group(R).h == order_class_number(KT, P(F, f)).value);
    CHECK(class_group(R).h == oracle::brute_form_count(R.radicand));
  }
  CHECK(order_class_number(KT, P(F, "T+1")).value == 4);
  CHECK(order_class_number(KT, P(F, "T+2")).value == 2);
  CHECK(order_class_number(KT, P(F, "T")).value == 3);
  CHECK(order_class_number(KT, Poly::one(F)).value == 1);
  CHECK(order_class_number(KT, Poly::one(F)).local.empty());

  auto inert = analyze_quadratic(P(F, "2*T^2+T"));
  auto g = class_group(QuadOrder::maximal(inert));
  CHECK(g.h == 2);
  CHECK_FALSE(g.has_representatives);
  CHECK_THROWS_AS(class_group(QuadOrder::make(inert, P(F, "T+1"))), DomainError);

  ClassGroupBudget tiny;
  tiny.max_candidates = 3;
  CHECK_THROWS_AS(class_group(QuadOrder::maximal(K), tiny), BudgetError);
}

TEST_CASE("hK lower bound values") {
  CHECK(hK_lower_bound(3, 1).value == Rational(1, 2));
  CHECK(hK_lower_bound(3, 2).value == Rational(92, 104));
  CHECK(hK_lower_bound(5, 1).value == Rational(64, 48));
  CHECK(hK_lower_bound(3, 0).by_convention);
  CHECK(hK_lower_bound(3, 0).value == 1);
}

TEST_CASE("forms agree with brute point counts and the lower bound for g <= 2") {
  for (std::uint32_t q : {3u, 5u}) {
    auto F = Field::make(q);
    for (int d : {1, 3, 5}) {
      auto radicands = imaginary_radicands(F, d);
      std::size_t step = q == 5 && d == 5 ? 37 : 1;
      for (std::size_t i = 0; i < radicands.size(); i += step) {
        auto K = analyze_quadratic(radicands[i]);
        auto G = class_group(QuadOrder::maximal(K));
        CHECK(G.h == oracle::brute_class_number(K.m, K.genus));
        CHECK(G.h == divisor_class_number(K));
        CHECK(Rational(G.h) >= hK_lower_bound(q, K.genus).value);
      }
    }
  }
}

TEST_CASE("point counting path for inert fields") {
  auto F = Field::make(3);
  for (const auto& m : imaginary_radicands(F, 4)) {
    auto K = analyze_quadratic(m);
    REQUIRE(K.infinity == InfinityType::Inert);
    CHECK(divisor_class_number(K) == oracle::brute_point_count(m, 1));
    CHECK(maximal_pic_by_point_count(K) == 2 * divisor_class_number(K));
  }
}

TEST_CASE("class number formula matches direct enumeration") {
  for (std::uint32_t q : {3u, 5u}) {
    auto F = Field::make(q);
    std::vector<std::pair<Poly, int>> cases;  // radicand, max conductor degree
    cases.push_back({P(F, "T"), q == 3 ? 3 : 2});
    cases.push_back({P(F, "T^3+2*T+1"), q == 3 ? 2 : 1});
    cases.push_back({scale(P(F, "T^3+T+1"), F->nonsquare()), 1});
    for (auto& [m, maxdeg] : cases) {
      if (!classify_quadratic(m).field) continue;
      auto K = analyze_quadratic(m);
      for (int d = 0; d <= maxdeg; ++d) {
        for (const auto& f : oracle::all_monic(F, d)) {
          auto R = QuadOrder::make(K, f);
          auto G = class_group(R);
          CHECK(G.h == order_class_number(K, f).value);
          CHECK(G.h == oracle::brute_form_count(R.radicand));
        }
      }
    }
  }
}

TEST_CASE("group laws on reduced forms") {
  auto F = Field::make(3);
  std::mt19937_64 rng(5);
  for (const char* m : {"T^3+2*T+1", "T^5+2*T+1", "T"}) {
    auto K = analyze_quadratic(P(F, m));
    for (const char* f : {"1", "T^2+1", "T+1"}) {
      auto R = QuadOrder::make(K, P(F, f));
      auto G = class_group(R);
      const Poly& D = R.radicand;
      const auto e = identity_form(F);
      CHECK(G.reps.front() == e);
      for (const auto& x : G.reps) {
        CHECK(is_reduced(x, D));
        CHECK(is_primitive(x, D));
        CHECK(multiply(x, e, D) == x);
        CHECK(multiply(x, inverse(x, D), D) == e);
      }
      // pairwise inequivalent
      for (std::size_t i = 0; i < G.reps.size(); ++i)
        for (std::size_t j = i + 1; j < G.reps.size(); ++j)
          CHECK(multiply(G.reps[i], inverse(G.reps[j], D), D) != e);
      auto table = composition_table(G);
      for (const auto& row : table) {
        std::vector<std::size_t> sorted = row;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k) CHECK(sorted[k] == k);
      }
      std::uniform_int_distribution<std::size_t> pick(0, G.reps.size() - 1);
      for (int t = 0; t < 100; ++t) {
        auto i = pick(rng), j = pick(rng), k = pick(rng);
        CHECK(table[table[i][j]][k] == table[i][table[j][k]]);
      }
      const auto& x = G.reps.back();
      CHECK(power(x, G.h, D) == e);
    }
  }
}
