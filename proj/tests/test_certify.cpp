#include "doctest.h"
#include "oracles.hpp"

#include "cmtk/certify.hpp"

using namespace cmtk;

namespace {

Poly P(const FieldPtr& F, const char* text) { return parse_poly(F, text); }

QuadOrder order(const FieldPtr& F, const char* m, const Poly& f) {
  return QuadOrder::make(analyze_quadratic(parse_poly(F, m)), f);
}

void check_reaudit(const Certificate& c) {
  for (const auto& e : c.inequalities) {
    std::map<std::string, std::string> in(e.inputs.begin(), e.inputs.end());
    auto r = oracle::reaudit(e.name, e.relation, in);
    CHECK(r.lhs == e.lhs);
    CHECK(r.rhs == e.rhs);
    CHECK(r.holds == e.holds);
  }
  if (c.verdict == "certified") CHECK(c.all_hold());
}

// min prod (1 - 1/|p|) over all monic conductors of degree L
Rational brute_worst_factor(const FieldPtr& F, int L) {
  Rational best = 1;
  for (const auto& f : oracle::all_monic(F, L)) {
    Rational v = 1;
    for (const auto& [p, e] : oracle::trial_factor(f)) v *= 1 - Rational(Int(1), p.norm());
    best = std::min(best, v);
  }
  return best;
}

}  // namespace

TEST_CASE("admissible prime search") {
  auto F = Field::make(3);
  CurveHypothesis hyp;
  hyp.points = {order(F, "T", Poly::one(F)), order(F, "T+1", Poly::one(F))};
  auto found = find_admissible_prime(hyp);
  REQUIRE(found.prime);
  CHECK(found.floor_t == 4);
  CHECK(found.prime->degree() == 4);
  std::optional<Poly> expected;
  for (const auto& p : oracle::all_monic(F, 4)) {
    if (!oracle::trial_irreducible(p)) continue;
    if (oracle::brute_character(P(F, "T"), p) == 1 && oracle::brute_character(P(F, "T+1"), p) == 1) {
      if (!expected || p < *expected) expected = p;
    }
  }
  REQUIRE(expected);
  CHECK(found.prime->poly() == *expected);

  // conductor swallowing every degree-4 prime that splits in both fields
  Poly f = Poly::one(F);
  for (const auto& p : irreducibles(F, 4))
    if (quadratic_character(P(F, "T"), p) == 1 && quadratic_character(P(F, "T+1"), p) == 1) f = f * p.poly();
  CurveHypothesis adv;
  adv.points = {order(F, "T", f), order(F, "T+1", Poly::one(F))};
  auto moved = find_admissible_prime(adv);
  REQUIRE(moved.prime);
  CHECK(moved.prime->degree() == 6);
  REQUIRE(moved.trace.size() == 2);
  CHECK(moved.trace[0].divides_conductor > 0);
  CHECK_FALSE(moved.trace[0].selected);

  CurveHypothesis none;
  auto any = find_admissible_prime(none);
  REQUIRE(any.prime);
  CHECK(any.prime->poly() == irreducibles(F, 4).front().poly());

  CurveHypothesis big;
  big.d = 100;
  CHECK(find_admissible_prime(big).floor_t == 6);  // 3^4 = 81 < 100 <= 729

  CertifyBudget small;
  small.max_prime_degree = 4;
  CHECK_FALSE(find_admissible_prime(adv, small).prime);
}

TEST_CASE("improper intersection inequality") {
  auto F = Field::make(3);
  const PrimePoly p = irreducibles(F, 4).front();
  REQUIRE(p.norm() == 81);
  CurveHypothesis hyp;
  auto no = check_improper(p, hyp, {Int(1000)});
  CHECK_FALSE(no.holds);
  CHECK(no.rhs == 26896);
  auto yes = check_improper(p, hyp, {Int(1'000'000)});
  CHECK(yes.holds);
  CHECK(check_improper(p, hyp, {Int(10), Int(1'000'000)}).holds);
  // monotone in |Pic|
  bool seen = false;
  for (Int pic = 26000; pic < 27000; pic += 7) {
    bool h = check_improper(p, hyp, {pic}).holds;
    if (seen) CHECK(h);
    seen = seen || h;
  }
  CHECK(seen);
  hyp.F_deg = 2;
  CHECK_FALSE(check_improper(p, hyp, {Int(40000)}).holds);
}

TEST_CASE("pipeline") {
  auto F = Field::make(3);
  CurveHypothesis small;
  small.points = {order(F, "T^3+2*T+1", Poly::one(F)), order(F, "T", P(F, "T+1"))};
  auto c = certify_point(small);
  CHECK(c.verdict == "inconclusive");
  REQUIRE(c.failure);
  CHECK(*c.failure == "bigPic");
  check_reaudit(c);
  // the recorded class numbers are the enumerated ones
  CHECK(c.inequalities[1].inputs[0].second == class_group(small.points[0]).h.str());

  CurveHypothesis large;
  large.points = {order(F, "T", pow(P(F, "T+1"), 12)), order(F, "T+1", Poly::one(F))};
  auto d = certify_point(large);
  CHECK(d.verdict == "certified");
  CHECK(d.all_hold());
  check_reaudit(d);
}

TEST_CASE("class number lower bound and worst conductor") {
  auto F = Field::make(3);
  CHECK(pic_lower_bound(3, 1, Poly::one(F)) == Rational(1, 2));
  CHECK(pic_lower_bound(3, 0, P(F, "T^2")) == 6);  // 9 * 2/3
  for (std::uint32_t q : {3u, 5u}) {
    auto G = Field::make(q);
    for (int L = 0; L <= (q == 3 ? 5 : 3); ++L) {
      Rational v = 1;
      for (const auto& n : worst_conductor_primes(q, L)) v *= 1 - Rational(Int(1), n);
      CHECK(v == brute_worst_factor(G, L));
    }
  }
  // a genuine class number never falls below the bound
  for (const char* m : {"T^3+2*T+1", "T", "2*T^2+T"}) {
    auto K = analyze_quadratic(P(F, m));
    for (const auto& f : oracle::all_monic(F, 2))
      CHECK(Rational(order_class_number(K, f).value) >= pic_lower_bound(3, K.genus, f));
  }
}

TEST_CASE("minimal height bound") {
  CHECK_THROWS_AS(minimal_height_bound(1, 1, 3), BudgetError);
  CertifyBudget wide;
  wide.max_grid = ipow(Int(3), 70);
  auto r = minimal_height_bound(1, 1, 3, wide);
  REQUIRE(r.B);
  CHECK(*r.B == ipow(Int(3), 52));
  for (int h = *r.level; h <= r.grid_top; ++h) {
    for (const auto& a : r.levels[h].configurations) {
      REQUIRE(a.t);
      CHECK(*a.t % 2 == 0);
      CHECK(a.pic_lb > a.rhs);
      // the count bound at the witnessing t, recomputed
      const Int q = 3, G = 2 * a.g + 2 * h + 1;
      Rational pi = Rational(ipow(q, *a.t), 4 * Int(*a.t)) - Rational(4 * (2 + G) * ipow(q, *a.t / 2));
      CHECK(pi == a.pi_lb);
      CHECK(pi > a.L);
      if (*a.t > 4) CHECK(pi_lower_bound(3, Int(a.g), Int(h), *a.t - 2).value <= a.L);
    }
  }
  CHECK_FALSE(r.levels[*r.level - 1].holds);

  CertifyBudget b5;
  b5.max_grid = ipow(Int(5), 60);
  Int prev_d = 0;
  for (int d : {1, 2, 3, 5}) {
    Int prev_f = 0;
    for (int f : {1, 2, 3}) {
      Int B = *minimal_height_bound(d, f, 5, b5).B;
      CHECK(B >= prev_f);
      prev_f = B;
    }
    Int B1 = *minimal_height_bound(d, 1, 5, b5).B;
    CHECK(B1 >= prev_d);
    prev_d = B1;
  }
  CHECK(epsilon_constant(3, 0.5, 10) > 0);
}

TEST_CASE("step 3 ladder") {
  auto F = Field::make(3);
  CHECK_THROWS_AS(step3_ladder(1, 2, 1, 1, {{0, Poly::one(F)}}), DomainError);

  // d = 2 is the single-prime system
  std::vector<LadderHeight> big2{{1, pow(P(F, "T"), 80)}, {1, pow(P(F, "T+1"), 80)}};
  auto l2 = step3_ladder(2, 2, 1, 1, big2);
  REQUIRE(l2.t.size() == 1);
  int t = 4;
  while (pi_lower_bound(3, std::vector<Int>{1, 1}, t).value <= 160) t += 2;
  CHECK(l2.t[0] == t);
  CHECK(l2.certificate.verdict == "certified");
  check_reaudit(l2.certificate);

  std::vector<LadderHeight> big3{{2, pow(P(F, "T"), 300)}, {2, pow(P(F, "T+2"), 300)}, {2, pow(P(F, "T+1"), 300)}};
  auto l3 = step3_ladder(3, 3, 2, 1, big3);
  REQUIRE(l3.t.size() == 2);
  CHECK(l3.t[0] < l3.t[1]);
  CHECK(ipow(Int(3), l3.t[1]) >= ladder_growth_rhs(3, 2, 3, l3.t, 1));
  CHECK(ipow(Int(3), l3.t[1] - 2) < ladder_growth_rhs(3, 2, 3, l3.t, 1));
  CHECK(l3.certificate.verdict == "certified");
  check_reaudit(l3.certificate);

  auto tiny = step3_ladder(2, 2, 1, 1, {{0, Poly::one(F)}, {1, P(F, "T")}});
  CHECK(tiny.certificate.verdict == "inconclusive");
  REQUIRE(tiny.certificate.failure);
  CHECK(tiny.certificate.failure->rfind("ladder_class_number", 0) == 0);
  check_reaudit(tiny.certificate);

  CertifyBudget shallow;
  shallow.max_t = 6;
  auto cut = step3_ladder(2, 2, 1, 1, big2, shallow);
  REQUIRE(cut.certificate.failure);
  CHECK(cut.certificate.failure->rfind("ladder_cebotarev", 0) == 0);
}
