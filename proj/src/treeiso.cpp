#include "cmtk/treeiso.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cmtk {

RegularTree::RegularTree(unsigned arity) : r_(arity) {
  if (arity < 3) throw DomainError("tree arity must be at least 3");
}

RegularTree RegularTree::at_prime(const PrimePoly& p) {
  if (p.norm() > 1'000'000) throw DomainError("prime norm too large for an explicit tree");
  return RegularTree(static_cast<unsigned>(p.norm()) + 1);
}

bool RegularTree::valid(const Address& v) const {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] >= (i == 0 ? r_ : r_ - 1)) return false;
  return true;
}

void RegularTree::check(const Address& v) const {
  if (!valid(v)) throw DomainError("malformed address \"" + to_string(v) + "\" for arity " + std::to_string(r_));
}

std::vector<Address> RegularTree::neighbors(const Address& v) const {
  check(v);
  std::vector<Address> out;
  if (!v.empty()) out.emplace_back(v.begin(), v.end() - 1);
  const unsigned k = v.empty() ? r_ : r_ - 1;
  for (unsigned c = 0; c < k; ++c) {
    Address w = v;
    w.push_back(c);
    out.push_back(std::move(w));
  }
  return out;
}

std::string to_string(const Address& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(v[i]);
  }
  return s;
}

Address parse_address(const std::string& text) {
  Address v;
  if (text.empty()) return v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, '.')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 9)
      throw DomainError("malformed address \"" + text + "\"");
    v.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  if (text.back() == '.') throw DomainError("malformed address \"" + text + "\"");
  return v;
}

std::size_t common_prefix(const Address& v, const Address& w) {
  std::size_t n = 0;
  while (n < v.size() && n < w.size() && v[n] == w[n]) ++n;
  return n;
}

std::size_t tree_distance(const RegularTree& tree, const Address& v, const Address& w) {
  tree.check(v);
  tree.check(w);
  return v.size() + w.size() - 2 * common_prefix(v, w);
}

Median median(const RegularTree& tree, const Address& v1, const Address& v2, const Address& v3) {
  tree.check(v1);
  tree.check(v2);
  tree.check(v3);
  // the center is the deepest of the three pairwise meets
  const std::size_t l = std::max({common_prefix(v1, v2), common_prefix(v1, v3), common_prefix(v2, v3)});
  const Address& source = common_prefix(v1, v2) == l || common_prefix(v1, v3) == l ? v1 : v2;
  Median m{Address(source.begin(), source.begin() + static_cast<std::ptrdiff_t>(l)), 0, 0, 0};
  m.n1 = tree_distance(tree, m.center, v1);
  m.n2 = tree_distance(tree, m.center, v2);
  m.n3 = tree_distance(tree, m.center, v3);
  return m;
}

Int count_avoiding_geodesics(const RegularTree& tree, unsigned n, unsigned k_avoid) {
  const unsigned r = tree.arity();
  if (k_avoid >= r) throw DomainError("cannot avoid every edge");
  if (n == 0) return 1;
  return Int(r - k_avoid) * ipow(Int(r - 1), n - 1);
}

Rational bigdegree_bound(const Factorization& n3, BigDegreeMode mode) {
  Rational out = 1;
  for (const auto& [p, e] : n3) {
    const Int P = p.norm();
    const Int base = mode == BigDegreeMode::Paper ? P + 1 : P;
    out *= Rational((P - 1) * ipow(base, e - 1), Int(2 * e + 1));
  }
  return out;
}

SpecialTriple SpecialTriple::make(const Poly& n1, const Poly& n2, const Poly& n3) {
  for (const Poly* x : {&n1, &n2, &n3})
    if (x->is_zero()) throw DomainError("special triple entries must be nonzero");
  return {monic(n1), monic(n2), monic(n3)};
}

const Poly& SpecialTriple::at(int i) const {
  switch (i) {
    case 1: return n1;
    case 2: return n2;
    case 3: return n3;
    default: throw DomainError("triple index must be 1, 2 or 3");
  }
}

Poly triple_project(const SpecialTriple& t, int i, int j) {
  if (i == j) throw DomainError("projection indices must differ");
  return monic(t.at(i) * t.at(j));
}

SpecialTriple triple_from_vertices(const FieldPtr& field, const std::vector<LocalTriple>& local) {
  Poly n[3] = {Poly::one(field), Poly::one(field), Poly::one(field)};
  std::vector<PrimePoly> seen;
  for (const auto& l : local) {
    if (std::find(seen.begin(), seen.end(), l.prime) != seen.end()) throw DomainError("repeated prime");
    seen.push_back(l.prime);
    const auto tree = RegularTree::at_prime(l.prime);
    const Median m = median(tree, l.v1, l.v2, l.v3);
    n[0] *= pow(l.prime.poly(), static_cast<unsigned>(m.n1));
    n[1] *= pow(l.prime.poly(), static_cast<unsigned>(m.n2));
    n[2] *= pow(l.prime.poly(), static_cast<unsigned>(m.n3));
  }
  return SpecialTriple::make(n[0], n[1], n[2]);
}

namespace {

std::vector<Poly> monic_divisors(const Poly& N) {
  std::vector<Poly> out{Poly::one(N.field_ptr())};
  for (const auto& [p, e] : factor_monic(monic(N))) {
    std::vector<Poly> next;
    for (const auto& d : out) {
      Poly x = d;
      for (unsigned k = 0; k <= e; ++k) {
        next.push_back(x);
        x = x * p.poly();
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<HeckeCosetRep> hecke_coset_reps(const Poly& N) {
  if (N.is_zero()) throw DomainError("N must be nonzero");
  const Poly Nm = monic(N);
  const FieldPtr& F = N.field_ptr();
  std::vector<HeckeCosetRep> out;
  for (const auto& a : monic_divisors(Nm)) {
    const Poly d = exact_div(Nm, a);
    const Poly g = gcd(a, d);
    const int k = d.degree();
    if (k == 0) {
      out.push_back({a, Poly(F), d, true});
      continue;
    }
    for (int deg = -1; deg < k; ++deg) {
      auto emit = [&](const Poly& b) {
        if (gcd(g, b).is_one()) out.push_back({a, b, d, true});
        return true;
      };
      if (deg < 0) {
        emit(Poly(F));
      } else {
        for (Elem lead = 1; lead < F->q(); ++lead) for_each_poly(F, deg, lead, emit);
      }
    }
  }
  return out;
}

Int psi(const Poly& N) {
  if (N.is_zero()) throw DomainError("N must be nonzero");
  Int out = 1;
  for (const auto& [p, e] : factor_monic(monic(N))) out *= ipow(p.norm(), e - 1) * (p.norm() + 1);
  return out;
}

DegreeBounds degree_bounds(unsigned n, const Int& psi_N, const Int& degY, std::optional<Int> degY2) {
  if (n == 0 || psi_N < 1 || degY < 1 || (degY2 && *degY2 < 1)) throw DomainError("degree bound inputs must be positive");
  DegreeBounds b;
  b.components = degY;
  if (degY2) b.intersection = degY * *degY2;
  b.hecke_image = ipow(Int(2), n) * ipow(psi_N, n) * degY;
  return b;
}

namespace {

// number of lambda in (A/N)^x with lambda^2 in F_q^x, via CRT over p^e || N
Int scalar_centralizer(const Poly& N) {
  const auto& F = N.field();
  const auto fac = factor_monic(monic(N));
  Int total = 0;
  for (Elem c = 1; c < F.q(); ++c) {
    Int ways = 1;
    for (const auto& [p, e] : fac) {
      (void)e;
      const bool square = F.is_square(c) || p.degree() % 2 == 0;
      ways *= square ? 2 : 0;
    }
    total += ways;
  }
  return total;
}

}  // namespace

CoveringOrders covering_group_orders(const Poly& N, std::uint64_t brute_limit) {
  if (N.is_zero()) throw DomainError("N must be nonzero");
  CoveringOrders out;
  const Int q = N.field().q();
  if (N.degree() == 0) {
    out.sl2 = out.gal_full = out.gal_reduced = 1;
    return out;
  }
  const auto fac = factor_monic(monic(N));
  Rational sl2 = Rational(ipow(N.norm(), 3));
  for (const auto& [p, e] : fac) sl2 *= 1 - Rational(1, p.norm() * p.norm());
  out.sl2 = numerator(sl2);
  out.gal_full = out.sl2;
  out.gal_reduced = out.sl2 * (q - 1) / scalar_centralizer(N);
  if (fac.size() == 1 && fac[0].exponent == 1 && fac[0].prime.degree() % 2 == 0) {
    out.psl2 = out.sl2 / 2;
    if (*out.psl2 != out.gal_reduced) throw std::logic_error("PGL2^1 and PSL2 orders differ at an even-degree prime");
  }
  if (N.norm() <= brute_limit) {
    const CoveringOrders b = covering_group_orders_brute(N, brute_limit);
    if (b.sl2 != out.sl2 || b.gal_full != out.gal_full || b.gal_reduced != out.gal_reduced)
      throw std::logic_error("covering group formulas disagree with enumeration");
    out.brute_checked = true;
  }
  return out;
}

CoveringOrders covering_group_orders_brute(const Poly& N, std::uint64_t limit) {
  if (N.is_zero()) throw DomainError("N must be nonzero");
  if (N.norm() > limit) throw BudgetError("matrix enumeration over A/N needs |A/N| <= " + std::to_string(limit));
  CoveringOrders out;
  const FieldPtr& F = N.field_ptr();
  const Poly Nm = monic(N);
  const int k = Nm.degree();
  if (k == 0) {
    out.sl2 = out.gal_full = out.gal_reduced = 1;
    out.brute_checked = true;
    return out;
  }
  std::vector<Poly> res;
  for (int deg = -1; deg < k; ++deg) {
    if (deg < 0) {
      res.push_back(Poly(F));
      continue;
    }
    for (Elem lead = 1; lead < F->q(); ++lead)
      for_each_poly(F, deg, lead, [&](const Poly& b) {
        res.push_back(b);
        return true;
      });
  }
  const std::size_t n = res.size();
  std::map<Poly, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[res[i]] = i;
  std::vector<std::size_t> mul(n * n), sub(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = index.at(mulmod(res[i], res[j], Nm));
      sub[i * n + j] = index.at((res[i] - res[j]) % Nm);
    }
  std::vector<char> constant_unit(n, 0);
  for (std::size_t i = 0; i < n; ++i) constant_unit[i] = res[i].degree() == 0;
  const std::size_t one = index.at(Poly::one(F));
  std::uint64_t sl2 = 0, gl2_1 = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t d = 0; d < n; ++d) {
      const std::size_t ad = mul[a * n + d];
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const std::size_t det = sub[ad * n + mul[b * n + c]];
          sl2 += det == one;
          gl2_1 += constant_unit[det];
        }
    }
  std::uint64_t z1 = 0;
  for (std::size_t i = 0; i < n; ++i) z1 += constant_unit[mul[i * n + i]];
  const std::uint64_t q = F->q();
  out.sl2 = sl2;
  out.gal_full = Int(gl2_1 / (q - 1));
  out.gal_reduced = Int(gl2_1 / z1);
  out.brute_checked = true;
  return out;
}

}  // namespace cmtk
