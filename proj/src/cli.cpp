#include "cmtk/cli.hpp"

#include "cmtk/json_io.hpp"

#include <CLI11.hpp>

#include <random>
#include <sstream>

namespace cmtk {

namespace {

struct RunConfig {
  std::uint32_t q = 3;
  unsigned threads = 1;
  std::string format = "json";
  std::uint64_t seed = 0x636d746b;
  std::string max_enumeration = "50000000";
  std::string max_class_candidates = "5000000";
  int max_prime_degree = 12;
  std::string max_grid = "2^40";
  std::string max_rows = "2000000";
};

Int parse_big(const std::string& text, const std::string& what) {
  try {
    const auto caret = text.find('^');
    Int v;
    if (caret == std::string::npos) {
      v = Int(text);
    } else {
      const Int base(text.substr(0, caret));
      const unsigned long e = std::stoul(text.substr(caret + 1));
      if (e > 100000) throw DomainError(what + " exponent too large");
      v = ipow(base, static_cast<unsigned>(e));
    }
    if (v <= 0) throw DomainError(what + " must be positive");
    return v;
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("cannot parse " + what + " \"" + text + "\"");
  }
}

// Text form or the JSON record {"q":..,"coeffs":[..]}.
Poly read_poly(const FieldPtr& F, const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw DomainError(std::string("malformed polynomial record: ") + e.what());
    }
    try {
      Poly p = poly_from_json(j);
      if (p.field().q() != F->q()) throw DomainError("polynomial record is over a different field");
      return Poly(F, p.coeffs());
    } catch (const Json::exception& e) {
      throw DomainError(std::string("malformed polynomial record: ") + e.what());
    }
  }
  return parse_poly(F, text);
}

PrimePoly read_prime(const FieldPtr& F, const std::string& text) {
  Poly p = read_poly(F, text);
  if (p.degree() < 1 || !p.is_monic()) throw DomainError("prime must be monic of positive degree");
  if (!is_irreducible(p)) throw DomainError(to_text(p) + " is not irreducible");
  return PrimePoly::trusted(p);
}

Address read_address(const std::string& text) { return parse_address(text == "root" ? std::string() : text); }

QuadOrder read_order(const FieldPtr& F, const std::string& m, const std::string& f) {
  const ImagQuadField K = analyze_quadratic(read_poly(F, m));
  Poly cond = read_poly(F, f);
  if (cond.is_zero()) throw DomainError("conductor must be nonzero");
  return QuadOrder::make(K, monic(cond));
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("text") && v.contains("coeffs")) return v["text"].get<std::string>();
  return v.dump();
}

bool is_scalarish(const Json& v) {
  return !v.is_structured() || (v.is_object() && v.contains("text") && v.contains("coeffs"));
}

// Objects as "key: value" lines; arrays of records as aligned columns.
void render_table(const Json& j, std::ostream& out, const std::string& indent = "") {
  if (j.is_object() && !is_scalarish(j)) {
    for (const auto& [k, v] : j.items()) {
      if (is_scalarish(v)) {
        out << indent << k << ": " << scalar_text(v) << "\n";
      } else {
        out << indent << k << ":\n";
        render_table(v, out, indent + "  ");
      }
    }
    return;
  }
  if (j.is_array()) {
    bool records = !j.empty();
    for (const auto& row : j) {
      records = records && row.is_object() && !is_scalarish(row);
      if (records)
        for (const auto& [k, v] : row.items()) records = records && is_scalarish(v);
    }
    if (!records) {
      for (const auto& v : j) {
        if (is_scalarish(v)) {
          out << indent << "- " << scalar_text(v) << "\n";
        } else {
          out << indent << "-\n";
          render_table(v, out, indent + "  ");
        }
      }
      return;
    }
    std::vector<std::string> cols;
    for (const auto& [k, v] : j.front().items())
      if (is_scalarish(v)) cols.push_back(k);
    std::vector<std::size_t> width(cols.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    for (const auto& row : j) {
      std::vector<std::string> line;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        line.push_back(row.contains(cols[c]) ? scalar_text(row[cols[c]]) : "");
        width[c] = std::max(width[c], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      out << indent;
      for (std::size_t c = 0; c < line.size(); ++c) {
        out << line[c];
        if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
      }
      out << "\n";
    };
    emit(cols);
    for (const auto& line : cells) emit(line);
    return;
  }
  out << indent << scalar_text(j) << "\n";
}

struct Options {
  // factor
  std::string factor_poly;
  // classgroup / cm-orbit / single orders
  std::string m, f = "1";
  bool reps = true;
  // cm-enumerate / certify
  std::string bound = "30";
  // cm-orbit
  std::string prime;
  std::size_t cls = 1;
  bool conjugate = false;
  // tree
  unsigned arity = 0;
  std::string tree_prime;
  std::vector<std::string> vertices;
  int geodesics = -1;
  unsigned avoid = 0;
  std::string n3;
  std::size_t triples = 0;
  unsigned depth = 6;
  // hecke
  std::string N;
  bool list = false;
  std::string degY;
  unsigned components = 0;
  // split-count
  std::vector<std::string> radicands;
  int t = 2;
  // certify / minimal-B
  std::string d = "1", F_deg = "1";
  unsigned n = 2;
  std::optional<std::size_t> point;
  std::vector<std::string> ms, fs;
  bool ladder = false;
  unsigned coordinates = 2;
  int stabilization = 8;
  // heegner
  std::string level;
  std::string tower_prime;
  int max_degree = 7;
  std::size_t count = 10;
  std::string mode = "conditions";
  unsigned tower_levels = 3;
};

Json cmd_factor(const RunConfig& cfg, const Options& o) {
  const auto F = Field::make(cfg.q);
  const Poly p = read_poly(F, o.factor_poly);
  if (p.is_zero()) throw DomainError("cannot factor zero");
  return {{"poly", to_json(p)}, {"unit", p.lead()}, {"factors", to_json(factor_monic(p))},
          {"squarefree", is_squarefree(p)}, {"irreducible", p.degree() >= 1 && is_irreducible(p)}};
}

ClassGroupBudget class_budget(const RunConfig& cfg) {
  ClassGroupBudget b;
  b.max_candidates = parse_big(cfg.max_class_candidates, "class-group budget");
  return b;
}

EnumerationBudget enum_budget(const RunConfig& cfg) {
  return EnumerationBudget{parse_big(cfg.max_enumeration, "enumeration budget")};
}

Json cmd_classgroup(const RunConfig& cfg, const Options& o) {
  const auto F = Field::make(cfg.q);
  const QuadOrder R = read_order(F, o.m, o.f);
  const auto budget = class_budget(cfg);
  const ClassNumberAudit audit = order_class_number(R.field, R.conductor, budget);
  Json j;
  try {
    j = to_json(class_group(R, budget), o.reps);
  } catch (const DomainError&) {
    // No form model for this order type; the formula still applies.
    if (R.field.infinity != InfinityType::Inert) throw;
    j = {{"field", to_json(R.field)}, {"conductor", to_json(R.conductor)}, {"radicand", to_json(R.radicand)},
         {"h", to_json(audit.value)}, {"method", "conductor-formula"}, {"representatives", nullptr}};
  }
  j["formula_audit"] = to_json(audit);
  j["H_CM"] = to_json(cm_height(R));
  const auto lb = hK_lower_bound(cfg.q, R.field.genus);
  j["hK_lower_bound"] = {{"value", to_json(lb.value)}, {"by_convention", lb.by_convention}};
  return j;
}

CatalogueBudget catalogue_budget(const RunConfig& cfg) {
  CatalogueBudget b;
  b.max_rows = parse_big(cfg.max_rows, "row budget");
  b.class_group = class_budget(cfg);
  b.threads = cfg.threads;
  return b;
}

Json cmd_enumerate(const RunConfig& cfg, const Options& o) {
  const auto F = Field::make(cfg.q);
  return to_json(enumerate_cm_points(F, parse_big(o.bound, "bound"), catalogue_budget(cfg)));
}

Json cmd_orbit(const RunConfig& cfg, const Options& o) {
  const auto F = Field::make(cfg.q);
  const QuadOrder R = read_order(F, o.m, o.f);
  const ClassGroup G = class_group(R, class_budget(cfg));
  if (!G.has_representatives) throw DomainError("class group has no form representatives for this order");
  if (o.cls >= G.reps.size()) throw DomainError("class index out of range (h = " + G.h.str() + ")");
  const PrimePoly p = read_prime(F, o.prime);
  const GaloisOrbit orbit = galois_orbit(CMPoint::make(R, G.reps[o.cls]), p, o.conjugate);
  Json j = to_json(orbit);
  j["h"] = to_json(G.h);
  j["start"] = o.cls;
  j["prime"] = to_json(p);
  j["acting_ideal"] = to_json(prime_above(R, p, o.conjugate));
  return j;
}

Json cmd_tree(const RunConfig& cfg, const Options& o) {
  const auto F = Field::make(cfg.q);
  std::optional<RegularTree> tree;
  if (!o.tree_prime.empty()) tree.emplace(RegularTree::at_prime(read_prime(F, o.tree_prime)));
  else if (o.arity) tree.emplace(o.arity);
  Json j = Json::object();
  if (tree) j["arity"] = tree->arity();
  const bool needs_tree = !o.vertices.empty() || o.geodesics >= 0 || o.triples > 0;
  if (needs_tree && !tree) throw DomainError("tree operations need --arity or --prime");
  if (!o.vertices.empty()) {
    if (o.vertices.size() != 3) throw DomainError("--vertex must be given exactly three times");
    std::vector<Address> v;
    for (const auto& s : o.vertices) v.push_back(read_address(s));
    Json med = to_json(median(*tree, v[0], v[1], v[2]));
    med["d12"] = tree_distance(*tree, v[0], v[1]);
    med["d13"] = tree_distance(*tree, v[0], v[2]);
    med["d23"] = tree_distance(*tree, v[1], v[2]);
    j["median"] = med;
  }
  if (o.geodesics >= 0) {
    j["avoiding_geodesics"] = {{"n", o.geodesics}, {"avoid", o.avoid},
                               {"count", to_json(count_avoiding_geodesics(*tree, static_cast<unsigned>(o.geodesics), o.avoid))}};
  }
  if (o.triples > 0) {
    // Sampled median identities; the seed is the only randomness source.
    std::mt19937_64 rng(cfg.seed);
    std::size_t passed = 0;
    auto random_vertex = [&] {
      Address v;
      const unsigned len = static_cast<unsigned>(rng() % (o.depth + 1));
      for (unsigned i = 0; i < len; ++i) v.push_back(static_cast<unsigned>(rng() % (i == 0 ? tree->arity() : tree->arity() - 1)));
      return v;
    };
    for (std::size_t i = 0; i < o.triples; ++i) {
      const Address a = random_vertex(), b = random_vertex(), c = random_vertex();
      const Median m = median(*tree, a, b, c);
      if (m.n1 + m.n2 == tree_distance(*tree, a, b) && m.n1 + m.n3 == tree_distance(*tree, a, c) &&
          m.n2 + m.n3 == tree_distance(*tree, b, c))
        ++passed;
    }
    j["sampled_triples"] = {{"count", o.triples}, {"passed", passed}, {"seed", std::to_string(cfg.seed)}};
  }
  if (!o.n3.empty()) {
    const Poly n3 = read_poly(F, o.n3);
    if (n3.is_zero()) throw DomainError("N3 must be nonzero");
    const Factorization fac = factor_monic(n3);
    j["bigdegree"] = {{"N3", to_json(monic(n3))},
                      {"paper", to_json(bigdegree_bound(fac, BigDegreeMode::Paper))},
                      {"exact", to_json(bigdegree_bound(fac, BigDegreeMode::Exact))}};
  }
  if (j.empty()) throw DomainError("nothing to compute: give --vertex, --geodesics, --triples or --n3");
  return j;
}

Json cmd_hecke(const RunConfig& cfg, const Options& o) {
  const auto F = Field::make(cfg.q);
  Poly N = read_poly(F, o.N);
  if (N.degree() < 0) throw DomainError("N must be nonzero");
  N = monic(N);
  const auto reps = hecke_coset_reps(N);
  Json j{{"N", to_json(N)}, {"psi", to_json(psi(N))}, {"rep_count", reps.size()}};
  if (o.list) {
    Json arr = Json::array();
    for (const auto& r : reps) arr.push_back(to_json(r));
    j["reps"] = arr;
  }
  if (N.degree() >= 1) j["covering"] = to_json(covering_group_orders(N));
  if (!o.degY.empty()) {
    if (o.components == 0) throw DomainError("--components must be positive with --degY");
    j["degree_bounds"] = to_json(degree_bounds(o.components, psi(N), parse_big(o.degY, "degY")));
  }
  return j;
}

Json cmd_split(const RunConfig& cfg, const Options& o) {
  const auto F = Field::make(cfg.q);
  std::vector<Poly> rad;
  for (const auto& r : o.radicands) rad.push_back(read_poly(F, r));
  if (rad.empty()) throw DomainError("give at least one --radicand");
  if (o.t < 1) throw DomainError("t must be positive");
  const SplittingSpec spec = SplittingSpec::make(F, rad);
  const Int exact = count_split_primes(spec, o.t, enum_budget(cfg), cfg.threads);
  Json j = split_audit(spec, o.t, exact);
  Json r = Json::array();
  for (const auto& p : spec.radicands) r.push_back(to_json(p));
  j["radicands"] = r;
  return j;
}

CertifyBudget certify_budget(const RunConfig& cfg, const Options& o) {
  CertifyBudget b;
  b.max_prime_degree = cfg.max_prime_degree;
  b.enumeration = enum_budget(cfg);
  b.class_group = class_budget(cfg);
  b.max_grid = parse_big(cfg.max_grid, "grid bound");
  b.stabilization_levels = o.stabilization;
  return b;
}

Json cmd_certify(const RunConfig& cfg, const Options& o) {
  const auto F = Field::make(cfg.q);
  const auto budget = certify_budget(cfg, o);
  const Int d = parse_big(o.d, "d");
  const Int Fd = parse_big(o.F_deg, "F-deg");
  std::vector<QuadOrder> orders;
  Json source;
  if (o.point) {
    if (!o.ms.empty()) throw DomainError("--point excludes --m/--f");
    const Catalogue cat = enumerate_cm_points(F, parse_big(o.bound, "bound"), catalogue_budget(cfg));
    if (*o.point >= cat.rows.size())
      throw DomainError("no catalogue point " + std::to_string(*o.point) + " below bound " + o.bound);
    const auto& row = cat.rows[*o.point];
    orders.push_back(QuadOrder::make(row.field, row.conductor));
    source = {{"catalogue_bound", o.bound}, {"point", to_json(row, *o.point)}};
  } else {
    if (o.ms.empty()) throw DomainError("give --point or at least one --m");
    if (!o.fs.empty() && o.fs.size() != o.ms.size()) throw DomainError("--f must match --m in number");
    Json pts = Json::array();
    for (std::size_t i = 0; i < o.ms.size(); ++i) {
      orders.push_back(read_order(F, o.ms[i], o.fs.empty() ? "1" : o.fs[i]));
      pts.push_back({{"m", to_json(orders.back().field.m)}, {"f", to_json(orders.back().conductor)}});
    }
    source = {{"points", pts}};
  }
  Json j;
  if (o.ladder) {
    std::vector<LadderHeight> heights;
    for (const auto& R : orders) heights.push_back({R.field.genus, R.conductor});
    const Int degY = o.degY.empty() ? d : parse_big(o.degY, "degY");
    const Ladder l = step3_ladder(d, o.n, degY, Fd, heights, budget);
    j = to_json(l);
  } else {
    CurveHypothesis hyp;
    hyp.q = cfg.q;
    hyp.d = d;
    hyp.n = o.n;
    hyp.F_deg = Fd;
    hyp.points = orders;
    j = to_json(certify_point(hyp, budget));
  }
  j["input"] = source;
  return j;
}

Json cmd_minimal_b(const RunConfig& cfg, const Options& o) {
  return to_json(minimal_height_bound(parse_big(o.d, "d"), parse_big(o.F_deg, "F-deg"), cfg.q, certify_budget(cfg, o),
                                      o.coordinates));
}

Json cmd_heegner(const RunConfig& cfg, const Options& o) {
  const auto F = Field::make(cfg.q);
  HeegnerSearchSpec spec;
  spec.n = read_poly(F, o.level);
  if (!o.tower_prime.empty()) spec.p = read_prime(F, o.tower_prime);
  spec.max_degree = o.max_degree;
  spec.count = o.count;
  spec.mode = o.mode == "lemma" ? HeegnerMode::LemmaFaithful : HeegnerMode::Conditions;
  const HeegnerSearch s = find_heegner_fields(spec, enum_budget(cfg));
  Json j = to_json(s);
  j["n"] = to_json(monic(spec.n));
  j["mode"] = o.mode;
  if (spec.p && o.tower_levels > 0) {
    Json towers = Json::array();
    for (const auto& hf : s.fields) {
      Json levels = Json::array();
      for (const auto& l : order_tower(hf.field, *spec.p, spec.n, o.tower_levels, class_budget(cfg)))
        levels.push_back(to_json(l));
      towers.push_back({{"m", to_json(hf.field.m)}, {"levels", levels}});
    }
    j["towers"] = towers;
    j["p"] = to_json(*spec.p);
  }
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  Options o;
  CLI::App app{"cmtk: exact arithmetic for CM points and special curves over F_q[T]", "cmtk"};
  app.set_config("--config", "", "Read options from a key=value file (sections [name] for subcommands)");
  app.require_subcommand(1, 1);
  app.failure_message(CLI::FailureMessage::help);

  app.add_option("--q", cfg.q, "Odd prime power q <= 65536")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads; output does not depend on it")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--max-enumeration", cfg.max_enumeration, "Work cap for prime enumeration (t * q^t)")
      ->capture_default_str();
  app.add_option("--max-class-candidates", cfg.max_class_candidates, "Moduli scanned per class group")
      ->capture_default_str();
  app.add_option("--max-prime-degree", cfg.max_prime_degree, "Largest admissible-prime degree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-grid", cfg.max_grid, "Largest height examined by minimal-B (integer or b^e)")
      ->capture_default_str();
  app.add_option("--max-rows", cfg.max_rows, "Catalogue row cap")->capture_default_str();

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  auto* factor = sub("factor", "Factor a polynomial into monic irreducibles");
  factor->add_option("--poly", o.factor_poly, "Polynomial (text or JSON record)")->required();

  auto* classgroup = sub("classgroup", "Class group of the order A + f O_K in k(sqrt m)");
  classgroup->add_option("--m", o.m, "Radicand m")->required();
  classgroup->add_option("--f", o.f, "Conductor f")->capture_default_str();
  classgroup->add_flag("--reps,!--no-reps", o.reps, "Emit reduced-form representatives");

  auto* enumerate = sub("cm-enumerate", "Catalogue of CM points with H_CM below a bound");
  enumerate->add_option("--bound", o.bound, "Height bound B (integer or b^e)")->capture_default_str();

  auto* orbit = sub("cm-orbit", "Orbit of a CM point under the action of a prime above p");
  orbit->add_option("--m", o.m, "Radicand m")->required();
  orbit->add_option("--f", o.f, "Conductor f")->capture_default_str();
  orbit->add_option("--prime", o.prime, "Split prime p coprime to f")->required();
  orbit->add_option("--class", o.cls, "Index of the starting class")->capture_default_str();
  orbit->add_flag("--conjugate", o.conjugate, "Use the conjugate prime");

  auto* tree = sub("tree", "Bruhat-Tits tree combinatorics");
  tree->add_option("--arity", o.arity, "Regular tree arity r >= 3");
  tree->add_option("--prime", o.tree_prime, "Use the tree at this prime (arity |p|+1)");
  tree->add_option("--vertex", o.vertices, "Vertex address for the median, e.g. 2.0.3 (three times)");
  tree->add_option("--geodesics", o.geodesics, "Count non-backtracking paths of this length");
  tree->add_option("--avoid", o.avoid, "Edges the first step avoids")->capture_default_str();
  tree->add_option("--triples", o.triples, "Check median identities on this many seeded random triples");
  tree->add_option("--depth", o.depth, "Maximum depth of sampled vertices")->capture_default_str();
  tree->add_option("--n3", o.n3, "Bound the special-curve degree for this N3");

  auto* hecke = sub("hecke", "Coset representatives of T_N and covering-group orders");
  hecke->add_option("--N", o.N, "Level N")->required();
  hecke->add_flag("--list", o.list, "Emit every representative");
  hecke->add_option("--degY", o.degY, "Degree of Y for intersection bounds");
  hecke->add_option("--components", o.components, "Ambient dimension for the bounds");

  auto* split = sub("split-count", "Count degree-t primes split in k(sqrt m_1, ..., sqrt m_r)");
  split->add_option("--radicand", o.radicands, "Radicand (repeatable)")->required();
  split->add_option("--t", o.t, "Prime degree")->capture_default_str();

  auto* certify = sub("certify", "Certify the improper-intersection inequality for a CM point");
  certify->add_option("--d", o.d, "Degree of the curve")->capture_default_str();
  certify->add_option("--F-deg", o.F_deg, "Degree of the field of definition")->capture_default_str();
  certify->add_option("--n", o.n, "Ambient dimension")->capture_default_str();
  certify->add_option("--point", o.point, "Catalogue row id at --bound");
  certify->add_option("--bound", o.bound, "Catalogue bound for --point")->capture_default_str();
  certify->add_option("--m", o.ms, "Radicand of a coordinate (repeatable)");
  certify->add_option("--f", o.fs, "Conductor of a coordinate (repeatable)");
  certify->add_flag("--ladder", o.ladder, "Solve the inequality ladder instead");
  certify->add_option("--degY", o.degY, "Degree of Y for the ladder (defaults to d)");

  auto* minb = sub("minimal-B", "Smallest height bound the certifier can guarantee");
  minb->add_option("--d", o.d, "Degree of the curve")->capture_default_str();
  minb->add_option("--F-deg", o.F_deg, "Degree of the field of definition")->capture_default_str();
  minb->add_option("--coordinates", o.coordinates, "Number of CM coordinates")->capture_default_str();
  minb->add_option("--stabilization", o.stabilization, "Levels that must hold above B")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* heegner = sub("heegner", "Fields satisfying the Heegner hypothesis and their order towers");
  heegner->add_option("--n", o.level, "Level n")->required();
  heegner->add_option("--p", o.tower_prime, "Tower prime p coprime to n");
  heegner->add_option("--max-degree", o.max_degree, "Largest deg m searched")->capture_default_str();
  heegner->add_option("--count", o.count, "Number of fields wanted")->capture_default_str();
  heegner->add_option("--mode", o.mode, "conditions or lemma")
      ->check(CLI::IsMember({"conditions", "lemma"}))
      ->capture_default_str();
  heegner->add_option("--levels", o.tower_levels, "Tower levels when --p is given")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  const std::vector<std::pair<CLI::App*, Json (*)(const RunConfig&, const Options&)>> handlers{
      {factor, cmd_factor},     {classgroup, cmd_classgroup}, {enumerate, cmd_enumerate}, {orbit, cmd_orbit},
      {tree, cmd_tree},         {hecke, cmd_hecke},           {split, cmd_split},         {certify, cmd_certify},
      {minb, cmd_minimal_b},    {heegner, cmd_heegner}};

  try {
    for (const auto& [app_ptr, handler] : handlers) {
      if (!app_ptr->parsed()) continue;
      Json env{{"schema", kSchemaVersion}, {"command", app_ptr->get_name()}, {"q", cfg.q}};
      env["result"] = handler(cfg, o);
      if (cfg.format == "table") render_table(env, out);
      else out << env.dump(2) << "\n";
      return 0;
    }
  } catch (const DomainError& e) {
    err << "cmtk: domain error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "cmtk: budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::out_of_range& e) {
    err << "cmtk: domain error: value out of range: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace cmtk
