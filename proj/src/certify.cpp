#include "cmtk/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cmtk {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

std::string str(const Int& v) { return v.str(); }
std::string str(int v) { return std::to_string(v); }

Int qpow(std::uint32_t q, int t) { return ipow(Int(q), static_cast<unsigned>(t)); }

int floor_degree(std::uint32_t q, const Int& degY) {
  const Int need = std::max(Int(13), degY);
  int t = 2;
  while (qpow(q, t) < need) t += 2;
  return t;
}

// 4 F (q^t + 1)^2 d^2
Int big_pic_rhs(std::uint32_t q, int t, const Int& d) {
  const Int p1 = qpow(q, t) + 1;
  return 4 * p1 * p1 * d * d;
}

std::string join(const std::vector<Int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
  return s;
}

}  // namespace

Inequality make_inequality(std::string name, Rational lhs, Rational rhs, std::string relation, Inputs inputs) {
  Inequality e;
  e.name = std::move(name);
  e.holds = relation == ">=" ? lhs >= rhs : lhs > rhs;
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  e.relation = std::move(relation);
  e.inputs = std::move(inputs);
  return e;
}

bool Certificate::all_hold() const {
  return std::all_of(inequalities.begin(), inequalities.end(), [](const Inequality& e) { return e.holds; });
}

AdmissiblePrime find_admissible_prime(const CurveHypothesis& hyp, const CertifyBudget& budget) {
  const FieldPtr field = Field::make(hyp.q);
  for (const auto& R : hyp.points)
    if (R.field.q() != hyp.q) throw DomainError("CM point over a different constant field");
  AdmissiblePrime out;
  out.floor_t = floor_degree(hyp.q, hyp.d);
  for (int t = out.floor_t; t <= budget.max_prime_degree; t += 2) {
    SearchTrace tr{t, 0, 0, 0, std::nullopt};
    for (const auto& p : irreducibles(field, t, budget.enumeration)) {
      ++tr.candidates;
      bool ok = true;
      for (const auto& R : hyp.points) {
        if (divides(p.poly(), R.conductor)) {
          ++tr.divides_conductor;
          ok = false;
          break;
        }
        if (quadratic_character(R.field.m, p) != 1) {
          ++tr.not_split;
          ok = false;
          break;
        }
      }
      if (ok) {
        tr.selected = to_text(p.poly());
        out.trace.push_back(tr);
        out.prime = p;
        return out;
      }
    }
    out.trace.push_back(tr);
  }
  return out;
}

Inequality check_improper(const PrimePoly& p, const CurveHypothesis& hyp, const std::vector<Int>& pic_sizes) {
  if (pic_sizes.empty()) throw DomainError("no class numbers given");
  if (hyp.F_deg < 1 || hyp.d < 1) throw DomainError("degrees must be positive");
  Inputs inputs;
  Int best = 0;
  for (std::size_t i = 0; i < pic_sizes.size(); ++i) {
    inputs.push_back({"pic_" + std::to_string(i + 1), pic_sizes[i].str()});
    best = std::max(best, pic_sizes[i]);
  }
  inputs.push_back({"pic_max", best.str()});
  inputs.push_back({"F_deg", hyp.F_deg.str()});
  inputs.push_back({"p_norm", p.norm().str()});
  inputs.push_back({"d", hyp.d.str()});
  const Int p1 = p.norm() + 1;
  return make_inequality("bigPic", Rational(best) / Rational(hyp.F_deg), Rational(4 * p1 * p1 * hyp.d * hyp.d), ">",
                         std::move(inputs));
}

Certificate certify_point(const CurveHypothesis& hyp, const CertifyBudget& budget) {
  Certificate c;
  c.budget = {{"max_prime_degree", str(budget.max_prime_degree)},
              {"max_enumeration_work", budget.enumeration.max_work.str()},
              {"max_class_group_candidates", budget.class_group.max_candidates.str()}};
  c.constants = {{"d", hyp.d.str()}, {"F_deg", hyp.F_deg.str()}, {"n", std::to_string(hyp.n)}};
  if (hyp.points.empty()) throw DomainError("no CM coordinates to certify");
  std::vector<Int> pics;
  for (const auto& R : hyp.points) pics.push_back(order_class_number(R.field, R.conductor, budget.class_group).value);
  auto found = find_admissible_prime(hyp, budget);
  c.trace = found.trace;
  if (!found.prime) {
    c.failure = "no admissible prime of even degree <= " + std::to_string(budget.max_prime_degree);
    return c;
  }
  const PrimePoly& p = *found.prime;
  c.primes.push_back({p.poly(), p.degree(), p.norm()});
  c.inequalities.push_back(make_inequality("prime_norm_floor", Rational(p.norm()), Rational(std::max(Int(13), hyp.d)),
                                           ">=", {{"q", str(Int(hyp.q))}, {"t", str(p.degree())}, {"d", hyp.d.str()}}));
  c.inequalities.push_back(check_improper(p, hyp, pics));
  if (c.all_hold()) {
    c.verdict = "certified";
  } else {
    for (const auto& e : c.inequalities)
      if (!e.holds) {
        c.failure = e.name;
        break;
      }
  }
  return c;
}

Rational pic_lower_bound(std::uint32_t q, int g, int conductor_degree, const std::vector<Int>& prime_norms) {
  Rational v = hK_lower_bound(q, g).value * Rational(qpow(q, conductor_degree));
  for (const auto& n : prime_norms) v *= 1 - Rational(Int(1), n);
  return v;
}

Rational pic_lower_bound(std::uint32_t q, int g, const Poly& conductor) {
  std::vector<Int> norms;
  for (const auto& [p, e] : factor_monic(monic(conductor))) norms.push_back(p.norm());
  return pic_lower_bound(q, g, conductor.degree(), norms);
}

std::vector<Int> worst_conductor_primes(std::uint32_t q, int L) {
  std::vector<Int> out;
  int remaining = L;
  for (int k = 1; k <= remaining; ++k) {
    const Int available = count_irreducibles(q, k);
    const Int take = std::min(available, Int(remaining / k));
    for (Int i = 0; i < take; ++i) out.push_back(qpow(q, k));
    remaining -= static_cast<int>(take) * k;
  }
  return out;
}

namespace {

ConfigurationAudit audit_configuration(std::uint32_t q, const Int& d, const Int& F_deg, unsigned coordinates, int h,
                                       int g, const CertifyBudget& budget) {
  ConfigurationAudit a;
  a.g = g;
  a.L = h - g;
  a.pic_lb = pic_lower_bound(q, g, a.L, worst_conductor_primes(q, a.L));
  std::vector<Int> genera{Int(g)};
  for (unsigned i = 1; i < coordinates; ++i) genera.push_back(h);
  for (int t = floor_degree(q, d); t <= budget.max_t; t += 2) {
    const auto pi = pi_lower_bound(q, genera, t);
    if (pi.value > a.L) {
      a.t = t;
      a.pi_lb = pi.value;
      break;
    }
  }
  if (!a.t) {
    a.failing = "cebotarev_count";
    return a;
  }
  a.rhs = Rational(F_deg * big_pic_rhs(q, *a.t, d));
  a.holds = a.pic_lb > a.rhs;
  if (!a.holds) a.failing = "bigPic";
  return a;
}

}  // namespace

HeightBound minimal_height_bound(const Int& d, const Int& F_deg, std::uint32_t q, const CertifyBudget& budget,
                                 unsigned coordinates) {
  if (d < 1 || F_deg < 1) throw DomainError("d and [F:k] must be positive");
  if (coordinates < 1) throw DomainError("need at least one coordinate");
  HeightBound out;
  out.q = q;
  out.d = d;
  out.F_deg = F_deg;
  out.coordinates = coordinates;
  int top = 0;
  while (qpow(q, top + 1) <= budget.max_grid) ++top;
  out.grid_top = top;
  for (int h = 0; h <= top; ++h) {
    LevelAudit level{h, true, {}};
    for (int g = 0; g <= h; ++g) {
      auto a = audit_configuration(q, d, F_deg, coordinates, h, g, budget);
      level.holds = level.holds && a.holds;
      level.configurations.push_back(std::move(a));
    }
    if (!level.holds) out.failing_levels.push_back(h);
    out.levels.push_back(std::move(level));
  }
  int h0 = top + 1;
  while (h0 > 0 && out.levels[h0 - 1].holds) --h0;
  const int stable = top + 1 - h0;
  if (stable < budget.stabilization_levels) {
    std::ostringstream msg;
    msg << "height grid up to q^" << top << " did not stabilize: " << stable << " holding top levels, need "
        << budget.stabilization_levels;
    if (!out.failing_levels.empty()) {
      const auto& worst = out.levels[out.failing_levels.back()];
      for (const auto& a : worst.configurations)
        if (!a.holds) {
          msg << "; frontier level " << worst.h << " fails at g = " << a.g << " (" << a.failing << ")";
          break;
        }
    }
    throw BudgetError(msg.str());
  }
  out.level = h0;
  out.B = qpow(q, h0);
  return out;
}

double epsilon_constant(std::uint32_t q, double eps, int top) {
  double best = INFINITY;
  for (int h = 1; h <= top; ++h)
    for (int g = 0; g <= h; ++g) {
      const double lb = approx(pic_lower_bound(q, g, h - g, worst_conductor_primes(q, h - g)));
      best = std::min(best, lb / std::pow(double(q), h * (1 - eps)));
    }
  return best;
}

Int ladder_growth_rhs(std::uint32_t q, const Int& degY, unsigned n, const std::vector<int>& t, int j) {
  if (j < 1 || static_cast<std::size_t>(j) > t.size()) throw DomainError("ladder index out of range");
  Int v = ipow(degY, 1u << j);
  for (int m = 1; m <= j; ++m) v *= ipow(2 * qpow(q, t[m - 1]) + 2, n << (j - m));
  return v;
}

Ladder step3_ladder(const Int& d, unsigned n, const Int& degY, const Int& F_deg, const std::vector<LadderHeight>& heights,
                    const CertifyBudget& budget) {
  if (d < 2) throw DomainError("the prime ladder needs d >= 2");
  if (heights.empty()) throw DomainError("the prime ladder needs at least one coordinate height");
  if (d > 64) throw DomainError("ladder length too large");
  const std::uint32_t q = heights[0].conductor.field().q();
  Ladder out;
  Certificate& c = out.certificate;
  c.constants = {{"d", d.str()}, {"n", std::to_string(n)}, {"degY", degY.str()}, {"F_deg", F_deg.str()}};
  c.budget = {{"max_t", str(budget.max_t)}};

  std::vector<Int> genera;
  int log_cond = 0;
  for (const auto& hgt : heights) {
    genera.push_back(hgt.g);
    log_cond += hgt.conductor.degree();
  }
  auto cebotarev = [&](int t, int j) {
    const auto pi = pi_lower_bound(q, genera, t);
    return make_inequality("ladder_cebotarev[" + std::to_string(j) + "]", pi.value, Rational(log_cond), ">",
                           {{"q", str(Int(q))},
                            {"t", str(t)},
                            {"n_g", (ipow(Int(2), static_cast<unsigned>(genera.size()))).str()},
                            {"g_M_bound", pi.g_M_bound.str()},
                            {"log_conductor", str(log_cond)}});
  };

  const int steps = static_cast<int>(d) - 1;
  for (int j = 1; j <= steps; ++j) {
    Int need = j == 1 ? std::max(Int(13), degY) : ladder_growth_rhs(q, degY, n, out.t, j - 1);
    int t = 2;
    while (qpow(q, t) < need) t += 2;
    if (j > 1) t = std::max(t, out.t.back() + 2);
    std::optional<Inequality> ceb;
    for (; t <= budget.max_t; t += 2) {
      ceb = cebotarev(t, j);
      if (ceb->holds) break;
    }
    if (t > budget.max_t) {
      if (ceb) c.inequalities.push_back(*ceb);
      c.failure = "ladder_cebotarev[" + std::to_string(j) + "] unsolved for t <= " + std::to_string(budget.max_t);
      return out;
    }
    out.t.push_back(t);
    if (j == 1) {
      c.inequalities.push_back(make_inequality("ladder_floor", Rational(qpow(q, t)), Rational(need), ">=",
                                               {{"q", str(Int(q))}, {"t", str(t)}, {"degY", degY.str()}}));
    } else {
      Inputs in{{"q", str(Int(q))}, {"degY", degY.str()}, {"n", std::to_string(n)}, {"j", str(j - 1)}};
      for (std::size_t m = 0; m < out.t.size(); ++m) in.push_back({"t_" + std::to_string(m + 1), str(out.t[m])});
      c.inequalities.push_back(make_inequality("ladder_growth[" + std::to_string(j - 1) + "]", Rational(qpow(q, t)),
                                               Rational(need), ">=", std::move(in)));
    }
    c.inequalities.push_back(*ceb);
  }

  const int T = out.t.back();
  const Int rhs = F_deg * qpow(q, 2 * T) * ipow(2 * qpow(q, T) + 2, n);
  for (std::size_t i = 0; i < heights.size(); ++i) {
    const auto& hgt = heights[i];
    std::vector<Int> norms;
    for (const auto& [p, e] : factor_monic(monic(hgt.conductor))) norms.push_back(p.norm());
    const Rational lb = pic_lower_bound(q, hgt.g, hgt.conductor.degree(), norms);
    c.inequalities.push_back(make_inequality("ladder_class_number[" + std::to_string(i + 1) + "]", lb, Rational(rhs), ">",
                                             {{"q", str(Int(q))},
                                              {"g", str(hgt.g)},
                                              {"conductor_degree", str(hgt.conductor.degree())},
                                              {"prime_norms", join(norms)},
                                              {"F_deg", F_deg.str()},
                                              {"t", str(T)},
                                              {"n", std::to_string(n)}}));
  }
  const auto bad = std::find_if(c.inequalities.begin(), c.inequalities.end(), [](const Inequality& e) { return !e.holds; });
  if (bad != c.inequalities.end()) c.failure = bad->name;
  // the ladder fixes degrees only; the primes themselves come from the count bound
  for (int t : out.t) c.primes.push_back({std::nullopt, t, qpow(q, t)});
  if (c.all_hold()) c.verdict = "certified";
  return out;
}

}  // namespace cmtk
