#include "doctest.h"
#include "oracles.hpp"

#include "cmtk/treeiso.hpp"

#include <random>
#include <set>

using namespace cmtk;

namespace {

Poly P(const FieldPtr& F, const char* text) { return parse_poly(F, text); }

Address random_address(const RegularTree& t, std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  Address v(len(rng));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::uniform_int_distribution<unsigned>(0, t.arity() - (i ? 2 : 1))(rng);
  return v;
}

}  // namespace

TEST_CASE("addresses and distances") {
  RegularTree t(4);
  CHECK(to_string(parse_address("2.0.3")) == "2.0.3");
  CHECK(parse_address("").empty());
  CHECK_THROWS_AS(parse_address("1..2"), DomainError);
  CHECK_THROWS_AS(parse_address("1.x"), DomainError);
  CHECK_THROWS_AS(tree_distance(t, parse_address("1.3"), {}), DomainError);  // later letters < 3
  CHECK(tree_distance(t, {2, 1}, {2, 1}) == 0);
  CHECK(tree_distance(t, {}, {3}) == 1);
  CHECK_THROWS_AS(RegularTree(2), DomainError);
  std::mt19937_64 rng(3);
  for (unsigned r : {3u, 4u, 10u}) {
    RegularTree tr(r);
    for (int i = 0; i < 60; ++i) {
      auto v = random_address(tr, rng, 4), w = random_address(tr, rng, 4);
      CHECK(tree_distance(tr, v, w) == oracle::bfs_distance(tr, v, w));
    }
  }
}

TEST_CASE("medians") {
  RegularTree t(3);
  Address v{1, 0, 1};
  auto m = median(t, v, v, v);
  CHECK(m.center == v);
  CHECK(m.n1 + m.n2 + m.n3 == 0);
  Address a{0, 1, 1}, b{0}, c{2, 0};
  m = median(t, a, b, c);  // b lies between a and c
  CHECK(m.center == b);
  std::mt19937_64 rng(7);
  for (unsigned r : {3u, 4u, 10u}) {
    RegularTree tr(r);
    for (int i = 0; i < 40; ++i) {
      Address v1 = random_address(tr, rng, 3), v2 = random_address(tr, rng, 3), v3 = random_address(tr, rng, 3);
      auto md = median(tr, v1, v2, v3);
      CHECK(md.n1 == oracle::bfs_distance(tr, md.center, v1));
      CHECK(md.n1 + md.n2 == oracle::bfs_distance(tr, v1, v2));
      CHECK(md.n1 + md.n3 == oracle::bfs_distance(tr, v1, v3));
      CHECK(md.n2 + md.n3 == oracle::bfs_distance(tr, v2, v3));
      auto e1 = oracle::path_edges(tr, md.center, v1), e2 = oracle::path_edges(tr, md.center, v2),
           e3 = oracle::path_edges(tr, md.center, v3);
      std::set<std::pair<Address, Address>> all(e1.begin(), e1.end());
      all.insert(e2.begin(), e2.end());
      all.insert(e3.begin(), e3.end());
      CHECK(all.size() == e1.size() + e2.size() + e3.size());
    }
  }
}

TEST_CASE("avoiding geodesic counts") {
  RegularTree t4(4);
  CHECK(count_avoiding_geodesics(t4, 0, 2) == 1);
  CHECK(count_avoiding_geodesics(t4, 1, 2) == 2);
  CHECK(count_avoiding_geodesics(t4, 2, 2) == 6);
  CHECK_THROWS_AS(count_avoiding_geodesics(t4, 1, 4), DomainError);
  for (unsigned r : {3u, 5u, 8u}) {
    RegularTree tr(r);
    for (unsigned n = 0; n <= 3; ++n)
      for (unsigned k = 0; k <= 2; ++k)
        CHECK(count_avoiding_geodesics(tr, n, k) == oracle::count_walks(tr, {1, 0}, n, k));
  }
}

TEST_CASE("bigdegree bound") {
  auto F = Field::make(3);
  PrimePoly p(P(F, "T"));
  CHECK(bigdegree_bound({{p, 1}}, BigDegreeMode::Paper) == Rational(2, 3));
  CHECK(bigdegree_bound({{p, 1}}, BigDegreeMode::Exact) == Rational(2, 3));
  CHECK(bigdegree_bound({{p, 2}}, BigDegreeMode::Paper) == Rational(8, 5));
  CHECK(bigdegree_bound({{p, 2}}, BigDegreeMode::Exact) == Rational(6, 5));
  CHECK(bigdegree_bound({}, BigDegreeMode::Paper) == 1);
  // exact mode equals the geodesic count divided by the endomorphism bound
  RegularTree t = RegularTree::at_prime(p);
  CHECK(Rational(count_avoiding_geodesics(t, 2, 2), 5) == bigdegree_bound({{p, 2}}, BigDegreeMode::Exact));
}

TEST_CASE("special triples") {
  auto F = Field::make(3);
  auto one = Poly::one(F);
  auto s = SpecialTriple::make(one, one, one);
  CHECK(triple_project(s, 1, 2).is_one());
  auto t = SpecialTriple::make(P(F, "2*T"), one, P(F, "T+1"));
  CHECK(t.n1 == P(F, "T"));
  CHECK(triple_project(t, 1, 3) == P(F, "T^2+T"));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) CHECK(triple_project(t, i, j) == triple_project(t, j, i));
  CHECK_THROWS_AS(triple_project(t, 2, 2), DomainError);

  PrimePoly p(P(F, "T")), r(P(F, "T+1"));
  auto u = triple_from_vertices(F, {{p, {0, 1}, {0, 2}, {1}}, {r, {}, {}, {2, 0, 0}}});
  CHECK(u.n1 == P(F, "T"));
  CHECK(u.n2 == P(F, "T"));
  CHECK(u.n3 == P(F, "T^2") * pow(P(F, "T+1"), 3));
}

TEST_CASE("hecke coset representatives and psi") {
  auto F = Field::make(3);
  auto reps = hecke_coset_reps(P(F, "T"));
  CHECK(reps.size() == 4);
  int top = 0;
  for (const auto& x : reps) {
    CHECK(x.a * x.d == P(F, "T"));
    CHECK(x.b.degree() < x.d.degree());
    top += x.a == P(F, "T") && x.b.is_zero();
  }
  CHECK(top == 1);
  CHECK(hecke_coset_reps(Poly::one(F)).size() == 1);
  CHECK(hecke_coset_reps(P(F, "T^2")).size() == 12);
  CHECK(psi(P(F, "T^2")) == 12);
  CHECK(psi(P(F, "T")) == 4);
  CHECK(psi(Poly::one(F)) == 1);
  CHECK(psi(P(F, "T^2+T")) == 16);
  CHECK(hecke_coset_reps(P(F, "T^2+T")).size() == 16);

  for (std::uint32_t q : {3u, 5u}) {
    auto G = Field::make(q);
    for (int d = 0; d <= 3; ++d)
      for (const auto& N : oracle::all_monic(G, d)) {
        auto rs = hecke_coset_reps(N);
        CHECK(Int(rs.size()) == psi(N));
        std::set<std::tuple<Poly, Poly>> distinct;
        for (const auto& x : rs) {
          CHECK(gcd(gcd(x.a, x.b), x.d).is_one());
          distinct.insert({x.a, x.b});
        }
        CHECK(distinct.size() == rs.size());
      }
  }
  // multiplicativity on coprime pairs
  for (const auto& a : oracle::all_monic(F, 2))
    for (const auto& b : oracle::all_monic(F, 2))
      if (gcd(a, b).is_one()) CHECK(psi(a * b) == psi(a) * psi(b));
}

TEST_CASE("degree bounds") {
  CHECK(degree_bounds(2, 4, 1).hecke_image == 64);
  CHECK(*degree_bounds(1, 1, 3, Int(5)).intersection == 15);
  CHECK(degree_bounds(1, 1, 7).hecke_image == 14);
  CHECK(degree_bounds(1, 1, 7).components == 7);
  CHECK_THROWS_AS(degree_bounds(1, 0, 7), DomainError);
}

TEST_CASE("covering group orders") {
  auto F = Field::make(3);
  auto c = covering_group_orders(P(F, "T"));
  CHECK(c.sl2 == 24);
  CHECK(c.gal_full == 24);
  CHECK(c.gal_reduced == 24);
  CHECK(c.brute_checked);
  auto e = covering_group_orders(P(F, "T^2+1"));
  CHECK(e.sl2 == 720);
  CHECK(e.gal_reduced == 360);
  REQUIRE(e.psl2);
  CHECK(*e.psl2 == 360);
  auto one = covering_group_orders(Poly::one(F));
  CHECK(one.sl2 == 1);
  CHECK(one.gal_reduced == 1);
  for (const char* n : {"T^2", "T^2+T", "T^3+2*T+1", "T^4", "T^4+2*T^3+T^2"}) {
    auto N = P(F, n);
    CHECK(covering_group_orders(N).brute_checked);
  }
  CHECK_FALSE(covering_group_orders(P(F, "T^5")).brute_checked);
  CHECK_THROWS_AS(covering_group_orders_brute(P(F, "T^5")), BudgetError);
}
