#include "cmtk/quadfield.hpp"

#include <algorithm>

namespace cmtk {

std::string to_string(InfinityType t) { return t == InfinityType::Ramified ? "ramified" : "inert"; }

std::string to_string(QuadRejection r) {
  switch (r) {
    case QuadRejection::Zero: return "zero radicand";
    case QuadRejection::NotSquarefree: return "not squarefree";
    case QuadRejection::Real: return "real: infinity splits";
    case QuadRejection::ConstantExtension: return "constant field extension";
  }
  return "unknown";
}

QuadAnalysis classify_quadratic(const Poly& m) {
  QuadAnalysis out;
  if (m.is_zero()) {
    out.rejection = QuadRejection::Zero;
    return out;
  }
  if (m.degree() == 0) {
    out.rejection = QuadRejection::ConstantExtension;
    return out;
  }
  if (!is_squarefree(m)) {
    out.rejection = QuadRejection::NotSquarefree;
    return out;
  }
  ImagQuadField K;
  K.m = m;
  if (m.degree() % 2 == 1) {
    K.infinity = InfinityType::Ramified;
    K.genus = (m.degree() - 1) / 2;
  } else {
    if (m.field().is_square(m.lead())) {
      out.rejection = QuadRejection::Real;
      return out;
    }
    K.infinity = InfinityType::Inert;
    K.genus = m.degree() / 2 - 1;
  }
  out.field = K;
  return out;
}

ImagQuadField analyze_quadratic(const Poly& m) {
  auto a = classify_quadratic(m);
  if (!a.field) throw DomainError("k(sqrt(" + to_text(m) + ")) rejected: " + to_string(*a.rejection));
  return *a.field;
}

int quadratic_genus(const Poly& m) {
  if (m.is_zero()) throw DomainError("zero radicand");
  Poly kernel = Poly::constant(m.field_ptr(), m.lead());
  for (const auto& f : factor_monic(m))
    if (f.exponent % 2 == 1) kernel = kernel * f.prime.poly();
  const int d = kernel.degree();
  if (d == 0) return 0;
  return d % 2 == 1 ? (d - 1) / 2 : d / 2 - 1;
}

QuadOrder QuadOrder::make(const ImagQuadField& field, const Poly& conductor) {
  if (conductor.is_zero() || !conductor.is_monic()) throw DomainError("conductor must be monic and nonzero");
  return QuadOrder{field, conductor, conductor * conductor * field.m};
}

QuadOrder QuadOrder::maximal(const ImagQuadField& field) { return make(field, Poly::one(field.field())); }

int QuadOrder::genus_parameter() const {
  if (radicand.degree() % 2 == 0) throw DomainError("reduction theory needs a radicand of odd degree");
  return (radicand.degree() - 1) / 2;
}

FormClass identity_form(const FieldPtr& field) { return {Poly::one(field), Poly(field)}; }

bool is_form(const FormClass& x, const Poly& D) {
  return x.a.is_monic() && x.b.degree() < x.a.degree() && divides(x.a, x.b * x.b - D);
}

bool is_primitive(const FormClass& x, const Poly& D) {
  const Poly c = exact_div(x.b * x.b - D, x.a);
  return gcd(gcd(x.a, x.b), c).is_one();
}

bool is_reduced(const FormClass& x, const Poly& D) {
  return is_form(x, D) && x.a.degree() <= (D.degree() - 1) / 2;
}

FormClass compose(const FormClass& x, const FormClass& y, const Poly& D) {
  const Bezout first = xgcd(x.a, y.a);
  const Bezout second = xgcd(first.gcd, x.b + y.b);
  const Poly& d = second.gcd;
  const Poly s1 = second.s * first.s;
  const Poly s2 = second.s * first.t;
  const Poly& s3 = second.t;
  const Poly a = exact_div(x.a * y.a, d * d);
  const Poly numer = s1 * x.a * y.b + s2 * y.a * x.b + s3 * (x.b * y.b + D);
  const Poly b = exact_div(numer, d) % a;
  return {a, b};
}

FormClass reduce(const FormClass& x, const Poly& D) {
  const int g = (D.degree() - 1) / 2;
  if (D.degree() % 2 == 0) throw DomainError("reduction requires a radicand of odd degree");
  FormClass r{x.a, x.b % x.a};
  while (r.a.degree() > g) {
    Poly next = monic(exact_div(D - r.b * r.b, r.a));
    Poly b = (-r.b) % next;
    r = {std::move(next), std::move(b)};
  }
  r.b = r.b % r.a;
  return r;
}

FormClass inverse(const FormClass& x, const Poly& D) {
  (void)D;
  return {x.a, (-x.b) % x.a};
}

FormClass power(const FormClass& x, const Int& n, const Poly& D) {
  FormClass result = identity_form(D.field_ptr());
  FormClass base = n < 0 ? inverse(x, D) : x;
  Int e = n < 0 ? Int(-n) : n;
  while (e > 0) {
    if ((e & 1) != 0) result = multiply(result, base, D);
    e >>= 1;
    if (e > 0) base = multiply(base, base, D);
  }
  return result;
}

std::optional<std::size_t> ClassGroup::index_of(const FormClass& reduced) const {
  auto it = index_.find(reduced);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ClassGroup class_group(const QuadOrder& order, const ClassGroupBudget& budget) {
  ClassGroup group;
  group.order = order;
  const FieldPtr& field = order.field.field();
  if (order.field.infinity == InfinityType::Inert) {
    if (!order.is_maximal())
      throw DomainError("class groups of non-maximal orders in inert-type fields are unsupported");
    group.h = maximal_pic_by_point_count(order.field);
    group.has_representatives = false;
    group.method = "point-count";
    return group;
  }
  const Poly& D = order.radicand;
  const int g = order.genus_parameter();
  Int candidates = 0;
  for (int k = 0; k <= g; ++k) candidates += ipow(Int(field->q()), static_cast<unsigned>(k));
  if (candidates > budget.max_candidates)
    throw BudgetError("class group enumeration needs " + candidates.str() + " moduli, budget " +
                      budget.max_candidates.str());
  for (int k = 0; k <= g; ++k) {
    for_each_poly(field, k, 1, [&](const Poly& a) {
      for (auto& b : sqrt_mod(D, a)) {
        FormClass x{a, b};
        if (is_primitive(x, D)) group.reps.push_back(std::move(x));
      }
      return true;
    });
  }
  std::sort(group.reps.begin(), group.reps.end());
  for (std::size_t i = 0; i < group.reps.size(); ++i) group.index_[group.reps[i]] = i;
  group.h = Int(group.reps.size());
  group.method = "reduced-forms";
  return group;
}

std::vector<std::vector<std::size_t>> composition_table(const ClassGroup& group, const ClassGroupBudget& budget) {
  if (!group.has_representatives) throw DomainError("no form representatives for this class group");
  const std::size_t h = group.reps.size();
  if (h > budget.max_table_order) throw BudgetError("composition table too large: h = " + std::to_string(h));
  const Poly& D = group.order.radicand;
  std::vector<std::vector<std::size_t>> table(h, std::vector<std::size_t>(h));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i; j < h; ++j) {
      const auto k = group.index_of(multiply(group.reps[i], group.reps[j], D));
      if (!k) throw std::logic_error("composition left the set of reduced forms");
      table[i][j] = table[j][i] = *k;
    }
  }
  return table;
}

ClassNumberAudit order_class_number_from(const ImagQuadField& field, const Poly& conductor, const Int& h_max,
                                         const std::string& method) {
  if (conductor.is_zero() || !conductor.is_monic()) throw DomainError("conductor must be monic and nonzero");
  ClassNumberAudit audit;
  audit.h_max = h_max;
  audit.h_max_method = method;
  audit.conductor_norm = conductor.norm();
  Rational value = Rational(h_max) / audit.unit_index * audit.conductor_norm;
  if (!conductor.is_one()) {
    for (const auto& f : factor_monic(conductor)) {
      const int chi = quadratic_character(field.m, f.prime);
      const Rational factor = 1 - Rational(chi) / Rational(f.prime.norm());
      value *= factor;
      audit.local.push_back({f.prime, f.exponent, chi, factor});
    }
  }
  if (!is_integral(value)) throw std::logic_error("class number formula produced a non-integer");
  audit.value = boost::multiprecision::numerator(value);
  return audit;
}

ClassNumberAudit order_class_number(const ImagQuadField& field, const Poly& conductor,
                                    const ClassGroupBudget& budget) {
  const ClassGroup maximal = class_group(QuadOrder::maximal(field), budget);
  return order_class_number_from(field, conductor, maximal.h, maximal.method);
}

ClassNumberBound hK_lower_bound(std::uint32_t q, int g) {
  if (g < 0) throw DomainError("negative genus");
  if (g == 0) return {Rational(1), true};
  const Int Q = q;
  const Int qg = ipow(Q, static_cast<unsigned>(g));
  const Int num = (Q - 1) * (qg * qg - 2 * g * qg + 1);
  const Int den = 2 * g * (ipow(Q, static_cast<unsigned>(g + 1)) - 1);
  return {Rational(num, den), false};
}

namespace {

// F_{q^i} as A / P for the first monic irreducible P of degree i; elements are
// polynomials of degree < i, coded base q.
struct ExtensionField {
  Poly modulus;
  std::vector<Poly> elements;
  std::vector<std::uint8_t> square;  // by code

  std::size_t code(const Poly& x) const {
    std::size_t c = 0;
    const std::uint32_t q = modulus.field().q();
    for (int j = modulus.degree() - 1; j >= 0; --j) c = c * q + x.coeff(j);
    return c;
  }
};

ExtensionField make_extension(const FieldPtr& field, int degree) {
  ExtensionField ext;
  for_each_poly(field, degree, 1, [&](const Poly& f) {
    if (is_irreducible(f)) {
      ext.modulus = f;
      return false;
    }
    return true;
  });
  std::size_t count = 1;
  for (int j = 0; j < degree; ++j) count *= field->q();
  ext.elements.reserve(count);
  ext.square.assign(count, 0);
  ext.elements.push_back(Poly(field));
  for (int d = 0; d < degree; ++d)
    for (Elem lead = 1; lead < field->q(); ++lead)
      for_each_poly(field, d, lead, [&](const Poly& x) {
        ext.elements.push_back(x);
        return true;
      });
  for (const auto& x : ext.elements) ext.square[ext.code(mulmod(x, x, ext.modulus))] = 1;
  return ext;
}

}  // namespace

std::vector<Int> point_counts(const ImagQuadField& K, int n) {
  const FieldPtr& field = K.field();
  const Field& F = *field;
  std::vector<Int> counts;
  for (int i = 1; i <= n; ++i) {
    Int N = 0;
    if (i == 1) {
      for (Elem t = 0; t < F.q(); ++t) N += 1 + F.legendre(evaluate(K.m, t));
    } else {
      const ExtensionField ext = make_extension(field, i);
      for (const auto& t : ext.elements) {
        Poly acc(field);
        for (int j = K.m.degree(); j >= 0; --j)
          acc = (acc * t + Poly::constant(field, K.m.coeff(j))) % ext.modulus;
        if (acc.is_zero())
          N += 1;
        else
          N += ext.square[ext.code(acc)] ? 2 : 0;
      }
    }
    // Points above infinity.
    if (K.m.degree() % 2 == 1)
      N += 1;
    else
      N += (i % 2 == 0 || F.is_square(K.m.lead())) ? 2 : 0;
    counts.push_back(N);
  }
  return counts;
}

std::vector<Int> l_polynomial(const ImagQuadField& K) {
  const int g = K.genus;
  const Int q = K.q();
  std::vector<Int> a(static_cast<std::size_t>(2 * g) + 1, 0);
  a[0] = 1;
  if (g == 0) return a;
  const std::vector<Int> N = point_counts(K, g);
  std::vector<Int> S(static_cast<std::size_t>(g) + 1, 0);
  for (int i = 1; i <= g; ++i) S[i] = ipow(q, static_cast<unsigned>(i)) + 1 - N[i - 1];
  for (int k = 1; k <= g; ++k) {
    Int acc = 0;
    for (int i = 1; i <= k; ++i) acc += S[i] * a[k - i];
    if (acc % k != 0) throw std::logic_error("Newton identity produced a non-integer");
    a[k] = -acc / k;
  }
  for (int k = 0; k < g; ++k) a[2 * g - k] = ipow(q, static_cast<unsigned>(g - k)) * a[k];
  return a;
}

Int divisor_class_number(const ImagQuadField& K) {
  Int h = 0;
  for (const auto& c : l_polynomial(K)) h += c;
  return h;
}

Int maximal_pic_by_point_count(const ImagQuadField& K) { return divisor_class_number(K) * K.infinity_degree(); }

}  // namespace cmtk
