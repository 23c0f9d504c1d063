#include "cmtk/json_io.hpp"

namespace cmtk {

Json to_json(const Int& v) { return v.str(); }
Json to_json(const Rational& v) { return to_string(v); }

Json to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (Elem c : p.coeffs()) coeffs.push_back(c);
  return {{"q", p.field().q()}, {"coeffs", coeffs}, {"text", to_text(p)}};
}

Poly poly_from_json(const Json& j) {
  auto F = Field::make(j.at("q").get<std::uint32_t>());
  std::vector<Elem> c;
  for (const auto& x : j.at("coeffs")) {
    const auto v = x.get<std::uint32_t>();
    if (v >= F->q()) throw DomainError("coefficient code out of range");
    c.push_back(static_cast<Elem>(v));
  }
  return Poly(F, c);
}

Json to_json(const PrimePoly& p) { return to_json(p.poly()); }

Json to_json(const Factorization& f) {
  Json out = Json::array();
  for (const auto& [p, e] : f) out.push_back({{"prime", to_json(p)}, {"exponent", e}});
  return out;
}

Json to_json(const ImagQuadField& K) {
  return {{"q", K.q()}, {"m", to_json(K.m)}, {"genus", K.genus}, {"infinity_type", to_string(K.infinity)}};
}

Json to_json(const FormClass& x) { return {{"a", to_json(x.a)}, {"b", to_json(x.b)}}; }

Json to_json(const ClassNumberAudit& a) {
  Json local = Json::array();
  for (const auto& l : a.local)
    local.push_back({{"prime", to_json(l.prime)}, {"exponent", l.exponent}, {"chi", l.chi}, {"factor", to_json(l.factor)}});
  return {{"h_max", to_json(a.h_max)},
          {"h_max_method", a.h_max_method},
          {"unit_index", to_json(a.unit_index)},
          {"conductor_norm", to_json(a.conductor_norm)},
          {"local", local},
          {"value", to_json(a.value)}};
}

Json to_json(const ClassGroup& g, bool with_reps) {
  Json j{{"field", to_json(g.order.field)},
         {"conductor", to_json(g.order.conductor)},
         {"radicand", to_json(g.order.radicand)},
         {"h", to_json(g.h)},
         {"method", g.method}};
  if (with_reps && g.has_representatives) {
    Json reps = Json::array();
    for (const auto& r : g.reps) reps.push_back(Json::array({to_json(r.a), to_json(r.b)}));
    j["representatives"] = reps;
  } else {
    j["representatives"] = nullptr;
  }
  return j;
}

Json to_json(const CatalogueRow& row, std::size_t id) {
  return {{"id", id},
          {"m", to_json(row.field.m)},
          {"f", to_json(row.conductor)},
          {"genus", row.field.genus},
          {"infinity_type", to_string(row.field.infinity)},
          {"h", to_json(row.h)},
          {"h_method", row.h_method},
          {"H_CM", to_json(row.height)}};
}

Json to_json(const Catalogue& c) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < c.rows.size(); ++i) rows.push_back(to_json(c.rows[i], i));
  return {{"bound", to_json(c.bound)}, {"count", c.rows.size()}, {"total", to_json(c.total)}, {"rows", rows}};
}

Json to_json(const GaloisOrbit& o) {
  Json pts = Json::array();
  for (const auto& x : o.points) pts.push_back(to_json(x.cls));
  return {{"cycle_length", o.cycle_length}, {"points", pts}};
}

Json to_json(const Median& m) {
  return {{"center", to_string(m.center)}, {"n1", m.n1}, {"n2", m.n2}, {"n3", m.n3}};
}

Json to_json(const HeckeCosetRep& r) {
  return {{"a", to_json(r.a)}, {"b", to_json(r.b)}, {"d", to_json(r.d)}, {"primitive", r.primitive}};
}

Json to_json(const CoveringOrders& c) {
  Json j{{"sl2", to_json(c.sl2)},
         {"gal_full", to_json(c.gal_full)},
         {"gal_reduced", to_json(c.gal_reduced)},
         {"brute_checked", c.brute_checked}};
  j["psl2"] = c.psl2 ? to_json(*c.psl2) : Json(nullptr);
  return j;
}

Json to_json(const DegreeBounds& b) {
  Json j{{"components", to_json(b.components)}, {"hecke_image", to_json(b.hecke_image)}};
  j["intersection"] = b.intersection ? to_json(*b.intersection) : Json(nullptr);
  return j;
}

Json to_json(const SpecialTriple& t) { return Json::array({to_json(t.n1), to_json(t.n2), to_json(t.n3)}); }

Json split_audit(const SplittingSpec& spec, int t, const Int& exact) {
  const auto w = cebotarev_window(spec, t);
  Json j{{"t", t},
         {"exact", to_json(exact)},
         {"center", to_json(w.center)},
         {"radius", w.radius_text()},
         {"inside_window", w.contains(Rational(exact))},
         {"n_g", to_json(spec.n_g)},
         {"n_c", to_json(spec.n_c)}};
  j["g_M"] = spec.g_M ? to_json(*spec.g_M) : Json(nullptr);
  Json constants{{"g_M_bound", to_json(spec.g_M_bound)}, {"g_M_method", spec.g_M_method}};
  if (t % 2 == 0 && spec.n_c == 1) {
    const auto lb = pi_lower_bound(spec, t);
    j["lower_bound"] = to_json(lb.value);
    constants["C1"] = to_json(lb.C1);
    constants["error_coeff"] = to_json(lb.error_coeff);
    if (spec.radicands.size() == 2) {
      const auto two = pi_lower_bound(spec.field->q(), spec.genera[0], spec.genera[1], t);
      constants["C2"] = to_json(*two.C2);
      constants["C3"] = to_json(*two.C3);
    } else {
      constants["C2"] = nullptr;
      constants["C3"] = nullptr;
    }
  } else {
    j["lower_bound"] = nullptr;
    constants["C1"] = nullptr;
    constants["error_coeff"] = nullptr;
    constants["C2"] = nullptr;
    constants["C3"] = nullptr;
  }
  j["constants"] = constants;
  return j;
}

namespace {

Json pairs(const std::vector<std::pair<std::string, std::string>>& kv) {
  Json j = Json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

}  // namespace

Json to_json(const Inequality& e) {
  return {{"name", e.name}, {"lhs", to_json(e.lhs)}, {"rhs", to_json(e.rhs)},
          {"relation", e.relation}, {"holds", e.holds}, {"inputs", pairs(e.inputs)}};
}

Json to_json(const Certificate& c) {
  Json primes = Json::array();
  for (const auto& p : c.primes)
    primes.push_back({{"prime", p.prime ? to_json(*p.prime) : Json(nullptr)}, {"degree", p.degree}, {"norm", to_json(p.norm)}});
  Json ineq = Json::array();
  for (const auto& e : c.inequalities) ineq.push_back(to_json(e));
  Json trace = Json::array();
  for (const auto& t : c.trace)
    trace.push_back({{"t", t.t},
                     {"candidates", to_json(t.candidates)},
                     {"not_split", to_json(t.not_split)},
                     {"divides_conductor", to_json(t.divides_conductor)},
                     {"selected", t.selected ? Json(*t.selected) : Json(nullptr)}});
  return {{"version", kSchemaVersion},
          {"verdict", c.verdict},
          {"primes", primes},
          {"inequalities", ineq},
          {"constants", pairs(c.constants)},
          {"budget", pairs(c.budget)},
          {"trace", trace},
          {"failure", c.failure ? Json(*c.failure) : Json(nullptr)}};
}

Json to_json(const HeightBound& b) {
  Json j{{"q", b.q},
         {"d", to_json(b.d)},
         {"F_deg", to_json(b.F_deg)},
         {"coordinates", b.coordinates},
         {"grid_top_level", b.grid_top},
         {"failing_levels", b.failing_levels}};
  j["B"] = b.B ? to_json(*b.B) : Json(nullptr);
  j["level"] = b.level ? Json(*b.level) : Json(nullptr);
  Json boundary = Json::array();
  if (b.level) {
    for (const auto& a : b.levels[*b.level].configurations)
      boundary.push_back({{"g", a.g},
                          {"L", a.L},
                          {"t", a.t ? Json(*a.t) : Json(nullptr)},
                          {"pic_lower_bound", to_json(a.pic_lb)},
                          {"pi_lower_bound", to_json(a.pi_lb)},
                          {"rhs", to_json(a.rhs)},
                          {"holds", a.holds}});
    if (*b.level > 0) {
      const auto& below = b.levels[*b.level - 1];
      for (const auto& a : below.configurations)
        if (!a.holds) {
          j["first_failure_below"] = {{"h", below.h}, {"g", a.g}, {"failing", a.failing}};
          break;
        }
    }
  }
  j["boundary"] = boundary;
  return j;
}

Json to_json(const Ladder& l) { return {{"t", l.t}, {"certificate", to_json(l.certificate)}}; }

Json to_json(const HeegnerField& f) {
  Json checks = Json::array();
  for (const auto& c : f.checks) checks.push_back({{"prime", to_json(c.prime)}, {"chi", c.chi}});
  return {{"m", to_json(f.field.m)}, {"genus", f.field.genus}, {"infinity_type", to_string(f.field.infinity)}, {"checks", checks}};
}

Json to_json(const HeegnerSearch& s) {
  Json fields = Json::array();
  for (const auto& f : s.fields) fields.push_back(to_json(f));
  return {{"fields", fields}, {"exhausted", s.exhausted}, {"searched_degree", s.searched_degree}};
}

Json to_json(const TowerLevel& l) {
  Json j{{"level", l.level},
         {"conductor", to_json(l.order.conductor)},
         {"ideal", to_json(l.ideal)},
         {"norm", to_json(l.norm)},
         {"pic", to_json(l.pic)},
         {"pic_method", l.pic_method},
         {"recursion_holds", l.recursion_holds}};
  j["reduced_ideal"] = l.reduced ? to_json(*l.reduced) : Json(nullptr);
  j["step_factor"] = l.step_factor ? to_json(*l.step_factor) : Json(nullptr);
  j["expected_step"] = l.expected_step ? to_json(*l.expected_step) : Json(nullptr);
  return j;
}

}  // namespace cmtk
