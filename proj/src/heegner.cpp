#include "cmtk/heegner.hpp"

#include <algorithm>
#include <set>

namespace cmtk {

namespace {

std::vector<PrimePoly> prime_divisors(const Poly& n) {
  std::vector<PrimePoly> out;
  for (const auto& f : factor_monic(monic(n))) out.push_back(f.prime);
  return out;
}

// representative of m modulo squares with leading coefficient 1 or nu
Poly canonical_radicand(const Poly& m) {
  const Field& F = m.field();
  const Elem lead = m.lead();
  const Elem target = F.is_square(lead) ? Elem{1} : F.nonsquare();
  // c^2 = target / lead
  const Elem c = F.sqrt(F.div(target, lead));
  return scale(m, F.mul(c, c));
}

bool lemma_faithful(const Poly& m, const Poly& n) {
  if (m.degree() % 2 == 0) return false;
  const Poly nm = monic(n);
  if (!(m % nm == Poly::one(m.field_ptr()) % nm)) return false;
  for (const auto& [q, e] : factor_monic(monic(m))) {
    if (e != 1 || q.degree() % 2 == 0) return false;
    if ((q.poly() % nm).degree() > 0) return false;  // some c q = 1 mod n needs q constant mod n
  }
  return true;
}

}  // namespace

bool satisfies_heegner(const ImagQuadField& K, const Poly& n) {
  auto check = classify_quadratic(K.m);
  if (!check.field) return false;
  for (const auto& q : prime_divisors(n))
    if (quadratic_character(K.m, q) != 1) return false;
  return true;
}

HeegnerSearch find_heegner_fields(const HeegnerSearchSpec& spec, const EnumerationBudget& budget) {
  if (spec.n.is_zero()) throw DomainError("level n must be nonzero");
  const FieldPtr& F = spec.n.field_ptr();
  const auto primes = prime_divisors(spec.n);
  if (spec.p && divides(spec.p->poly(), monic(spec.n)))
    throw DomainError("tower prime " + to_text(spec.p->poly()) + " divides n");
  HeegnerSearch out;
  for (int deg = 1; deg <= spec.max_degree && out.fields.size() < spec.count; ++deg) {
    out.searched_degree = deg;
    const Int work = ipow(Int(F->q()), static_cast<unsigned>(deg)) * (F->q() - 1);
    if (work > budget.max_work) throw BudgetError("Heegner search at degree " + std::to_string(deg) + " exceeds budget");
    std::set<Poly> found;
    auto consider = [&](const Poly& m) {
      auto a = classify_quadratic(m);
      if (!a.field) return true;
      if (spec.mode == HeegnerMode::LemmaFaithful) {
        if (!lemma_faithful(m, spec.n)) return true;
      } else {
        for (const auto& q : primes)
          if (quadratic_character(m, q) != 1) return true;
      }
      found.insert(canonical_radicand(m));
      return true;
    };
    if (spec.mode == HeegnerMode::LemmaFaithful) {
      for (Elem lead = 1; lead < F->q(); ++lead) for_each_poly(F, deg, lead, consider);
    } else {
      for_each_poly(F, deg, 1, consider);
      for_each_poly(F, deg, F->nonsquare(), consider);
    }
    for (const auto& m : found) {
      if (out.fields.size() >= spec.count) break;
      HeegnerField hf{analyze_quadratic(m), {}};
      for (const auto& q : primes) hf.checks.push_back({q, quadratic_character(m, q)});
      out.fields.push_back(std::move(hf));
    }
  }
  out.exhausted = out.fields.size() < spec.count;
  return out;
}

std::vector<TowerLevel> order_tower(const ImagQuadField& K, const PrimePoly& p, const Poly& n, unsigned levels,
                                    const ClassGroupBudget& budget) {
  if (n.is_zero()) throw DomainError("level n must be nonzero");
  const Poly nm = monic(n);
  const auto fac = factor_monic(nm);
  for (const auto& [q, e] : fac) {
    const int chi = quadratic_character(K.m, q);
    if (chi != 1)
      throw DomainError("Heegner hypothesis fails at " + to_text(q.poly()) + " (chi = " + std::to_string(chi) + ")");
    if (levels > 0 && q == p) throw DomainError("prime " + to_text(q.poly()) + " of n divides the tower conductor");
  }
  const Int h_max = class_group(QuadOrder::maximal(K), budget).h;
  const Int P = p.norm();
  const int chi_p = quadratic_character(K.m, p);
  std::vector<TowerLevel> out;
  for (unsigned j = 0; j <= levels; ++j) {
    const QuadOrder R = QuadOrder::make(K, pow(p.poly(), j));
    const Poly& D = R.radicand;
    FormClass N = identity_form(K.field());
    for (const auto& [q, e] : fac) {
      const FormClass Q{q.poly(), sqrt_mod(D, q.poly()).front()};
      for (unsigned k = 0; k < e; ++k) N = compose(N, Q, D);
    }
    if (N.a != nm) throw std::logic_error("tower ideal has the wrong norm");
    TowerLevel lvl{j, R, N, std::nullopt, nm.norm(), 0, "", std::nullopt, std::nullopt, true};
    Int moduli = 0;
    for (int k = 0; D.degree() % 2 == 1 && k <= (D.degree() - 1) / 2; ++k) moduli += ipow(Int(K.q()), k);
    if (D.degree() % 2 == 1 && moduli <= budget.max_candidates) {
      const auto G = class_group(R, budget);
      lvl.pic = G.h;
      lvl.pic_method = G.method;
    } else {
      lvl.pic = order_class_number_from(K, R.conductor, h_max, "").value;
      lvl.pic_method = "conductor-formula";
    }
    if (D.degree() % 2 == 1) lvl.reduced = reduce(N, D);
    if (j > 0) {
      lvl.step_factor = Rational(lvl.pic) / Rational(out.back().pic);
      lvl.expected_step = j == 1 ? Rational(P - chi_p) : Rational(P);
      lvl.recursion_holds = *lvl.step_factor == *lvl.expected_step;
    }
    out.push_back(std::move(lvl));
  }
  return out;
}

}  // namespace cmtk
