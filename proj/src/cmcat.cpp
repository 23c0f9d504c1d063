#include "cmtk/cmcat.hpp"

#include "cmtk/parallel.hpp"

#include <algorithm>
#include <tuple>

namespace cmtk {

namespace {

void require_forms(const QuadOrder& order) {
  if (order.field.infinity != InfinityType::Ramified)
    throw DomainError("form-class representatives need a field ramified at infinity");
}

}  // namespace

CMPoint CMPoint::make(const QuadOrder& order, const FormClass& cls) {
  require_forms(order);
  if (!is_reduced(cls, order.radicand) || !is_primitive(cls, order.radicand))
    throw DomainError("class representative is not a reduced invertible form");
  return CMPoint{order, cls, cm_height(order)};
}

Int cm_height(const QuadOrder& order) {
  return ipow(Int(order.field.q()), static_cast<unsigned>(order.field.genus)) * order.conductor.norm();
}

Int cm_height(const CMPoint& x) { return x.height; }

Int cm_height(const std::vector<CMPoint>& tuple) {
  Int best = 1;
  for (const auto& x : tuple) best = std::max(best, x.height);
  return best;
}

std::vector<CMPoint> cm_points(const ClassGroup& group) {
  if (!group.has_representatives) throw DomainError("class group has no form representatives");
  std::vector<CMPoint> out;
  const Int height = cm_height(group.order);
  for (const auto& r : group.reps) out.push_back(CMPoint{group.order, r, height});
  return out;
}

std::vector<ImagQuadField> imaginary_fields_of_genus(const FieldPtr& field, int g) {
  std::vector<ImagQuadField> out;
  auto scan = [&](int degree, Elem lead) {
    for_each_poly(field, degree, lead, [&](const Poly& m) {
      auto a = classify_quadratic(m);
      if (a.field) out.push_back(*a.field);
      return true;
    });
  };
  scan(2 * g + 1, 1);
  scan(2 * g + 1, field->nonsquare());
  scan(2 * g + 2, field->nonsquare());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.m < y.m; });
  return out;
}

Catalogue enumerate_cm_points(const FieldPtr& field, const Int& bound, const CatalogueBudget& budget) {
  if (bound < 1) throw DomainError("height bound must be at least 1");
  Catalogue cat;
  cat.bound = bound;
  cat.total = 0;
  const Int Q = field->q();
  int top = -1;  // largest level h with q^h < B
  while (ipow(Q, static_cast<unsigned>(top + 1)) < bound) ++top;
  if (top < 0) return cat;

  // row count: the number of fields of genus g is at most 3 q^{2g+2}
  Int estimate = 0;
  for (int h = 0; h <= top; ++h)
    for (int g = 0; g <= h; ++g)
      estimate += 3 * ipow(Q, static_cast<unsigned>(2 * g + 2)) * ipow(Q, static_cast<unsigned>(h - g));
  if (estimate > budget.max_rows)
    throw BudgetError("catalogue needs up to " + estimate.str() + " rows, budget " + budget.max_rows.str());

  for (int g = 0; g <= top; ++g) {
    const auto fields = imaginary_fields_of_genus(field, g);
    auto maxima = parallel_map(fields.size(), budget.threads, [&](std::size_t i) {
      return class_group(QuadOrder::maximal(fields[i]), budget.class_group);
    });
    for (std::size_t i = 0; i < fields.size(); ++i) {
      for (int fd = 0; g + fd <= top; ++fd) {
        for_each_poly(field, fd, 1, [&](const Poly& f) {
          auto audit = order_class_number_from(fields[i], f, maxima[i].h, maxima[i].method);
          CatalogueRow row{fields[i], f, audit.value, ipow(Q, static_cast<unsigned>(g + fd)),
                           fd == 0 ? maxima[i].method : "conductor-formula"};
          cat.total += row.h;
          cat.rows.push_back(std::move(row));
          return true;
        });
      }
    }
  }
  std::sort(cat.rows.begin(), cat.rows.end(), [](const CatalogueRow& x, const CatalogueRow& y) {
    return std::tie(x.height, x.field.m, x.conductor) < std::tie(y.height, y.field.m, y.conductor);
  });
  return cat;
}

FormClass prime_above(const QuadOrder& order, const PrimePoly& p, bool conjugate) {
  require_forms(order);
  if (divides(p.poly(), order.conductor))
    throw DomainError("prime " + to_text(p.poly()) + " divides the conductor");
  const int chi = quadratic_character(order.field.m, p);
  if (chi != 1)
    throw DomainError("prime " + to_text(p.poly()) + (chi == 0 ? " ramifies" : " is inert") + " in the order");
  auto roots = sqrt_mod(order.radicand, p.poly());
  return FormClass{p.poly(), roots.at(conjugate ? 1 : 0)};
}

FormClass ideal_above(const QuadOrder& order, const Poly& n, bool conjugate) {
  require_forms(order);
  if (n.is_zero() || !n.is_monic()) throw DomainError("isogeny degree must be monic and nonzero");
  FormClass acc = identity_form(order.field.field());
  for (const auto& [p, e] : factor_monic(n)) {
    const FormClass P = prime_above(order, p, conjugate);
    for (unsigned k = 0; k < e; ++k) acc = compose(acc, P, order.radicand);
  }
  if (acc.a != n) throw std::logic_error("norm of the ideal above n is not n");
  return acc;
}

CMPoint galois_isogeny_step(const CMPoint& x, const Poly& n, bool conjugate) {
  const Poly& D = x.order.radicand;
  const FormClass N = reduce(ideal_above(x.order, n, conjugate), D);
  return CMPoint{x.order, multiply(x.cls, inverse(N, D), D), x.height};
}

GaloisOrbit galois_orbit(const CMPoint& x, const PrimePoly& p, bool conjugate) {
  const Poly& D = x.order.radicand;
  const FormClass step = inverse(reduce(prime_above(x.order, p, conjugate), D), D);
  GaloisOrbit orbit;
  CMPoint y = x;
  do {
    orbit.points.push_back(y);
    y.cls = multiply(y.cls, step, D);
  } while (y.cls != x.cls);
  orbit.cycle_length = orbit.points.size();
  return orbit;
}

}  // namespace cmtk
