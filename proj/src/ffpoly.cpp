#include "cmtk/ffpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

namespace cmtk {

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(q^k) mod f by repeated q-th powers.
Poly frobenius_power(const Poly& x_mod_f, const Poly& f, unsigned k) {
  const Int q = f.field().q();
  Poly h = x_mod_f;
  for (unsigned i = 0; i < k; ++i) h = powmod(h, q, f);
  return h;
}

// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with
// f = prod g_i^i and each g_i squarefree.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.degree() < 1) return out;
  const unsigned p = f.field().p();
  const Poly d = derivative(f);
  if (d.is_zero()) {
    for (auto& [g, e] : squarefree_decomposition(pth_root(f))) out.emplace_back(g, e * p);
    return out;
  }
  Poly c = gcd(f, d);
  Poly w = exact_div(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = exact_div(w, y);
    if (z.degree() > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (!c.is_one()) {
    for (auto& [g, e] : squarefree_decomposition(pth_root(c))) out.emplace_back(g, e * p);
  }
  return out;
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const FieldPtr& field = f.field_ptr();
  const Int q = field->q();
  Poly x = Poly::variable(field);
  Poly h = x % f;
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = powmod(h, q, f);
    Poly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = exact_div(f, g);
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FieldPtr& field = g.field_ptr();
  const std::uint32_t q = field->q();
  const Int exponent = (ipow(Int(q), static_cast<unsigned>(d)) - 1) / 2;
  std::uniform_int_distribution<std::uint32_t> coeff(0, q - 1);
  for (;;) {
    std::vector<Elem> v(static_cast<std::size_t>(g.degree()));
    for (auto& c : v) c = coeff(rng);
    Poly a(field, std::move(v));
    if (a.degree() < 1) continue;
    Poly b = powmod(a, exponent, g) - Poly::one(field);
    Poly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(exact_div(g, h), d, rng, out);
      return;
    }
  }
}

}  // namespace

PrimePoly::PrimePoly(Poly p) : p_(std::move(p)) {
  if (!p_.is_monic() || !is_irreducible(p_)) throw DomainError("not a monic irreducible: " + to_text(p_));
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero()) throw DomainError("irreducibility of the zero polynomial");
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly g = monic(f);
  const FieldPtr& field = g.field_ptr();
  const Poly x = Poly::variable(field);
  const Poly x_mod = x % g;
  if (!(frobenius_power(x_mod, g, static_cast<unsigned>(n)) - x_mod).is_zero()) return false;
  for (unsigned r : prime_divisors(static_cast<unsigned>(n))) {
    Poly h = frobenius_power(x_mod, g, static_cast<unsigned>(n) / r);
    if (!gcd(h - x_mod, g).is_one()) return false;
  }
  return true;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  if (f.degree() < 1) return true;
  const Poly d = derivative(f);
  if (d.is_zero()) return false;
  return gcd(f, d).is_one();
}

Factorization factor_monic(const Poly& f) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  const Poly g = monic(f);
  std::map<Poly, unsigned> acc;
  std::mt19937_64 rng(0x636d746bULL);
  for (auto& [part, mult] : squarefree_decomposition(g)) {
    for (auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) acc[piece] += mult;
    }
  }
  Factorization out;
  out.reserve(acc.size());
  for (auto& [p, e] : acc) out.push_back({PrimePoly::trusted(p), e});
  return out;
}

Poly expand(const FieldPtr& field, const Factorization& factors) {
  Poly out = Poly::one(field);
  for (const auto& f : factors) out = out * pow(f.prime.poly(), f.exponent);
  return out;
}

Int count_irreducibles(std::uint32_t q, int t) {
  if (t < 1) throw DomainError("degree must be positive");
  Int sum = 0;
  for (int d = 1; d <= t; ++d) {
    if (t % d != 0) continue;
    const int mu = moebius(static_cast<std::uint64_t>(d));
    if (mu == 0) continue;
    sum += mu * ipow(Int(q), static_cast<unsigned>(t / d));
  }
  return sum / t;
}

namespace {

// Ben-Or: reject as soon as gcd(x^(q^i) - x, f) != 1 for some i <= t/2, after
// a cheap scan for roots when q is small.
bool irreducible_for_scan(const Poly& f, const Poly& x_mod) {
  const int t = f.degree();
  const Field& F = f.field();
  if (t > 1 && F.q() <= 64)
    for (Elem a = 0; a < F.q(); ++a)
      if (evaluate(f, a) == 0) return false;
  const Int q = F.q();
  Poly h = x_mod;
  for (int i = 1; i <= t / 2; ++i) {
    h = powmod(h, q, f);
    if (!gcd(h - x_mod, f).is_one()) return false;
  }
  return true;
}

}  // namespace

const std::vector<PrimePoly>& irreducibles(const FieldPtr& field, int t, const EnumerationBudget& budget) {
  if (t < 1) throw DomainError("degree must be positive");
  const Int work = Int(t) * ipow(Int(field->q()), static_cast<unsigned>(t));
  if (work > budget.max_work)
    throw BudgetError("irreducible enumeration t*q^t = " + work.str() + " exceeds budget " + budget.max_work.str());
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, int>, std::vector<PrimePoly>> cache;
  const auto key = std::make_pair(field->q(), t);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<PrimePoly> out;
  const Poly x = Poly::variable(field);
  for_each_poly(field, t, 1, [&](const Poly& f) {
    if (t == 1 || irreducible_for_scan(f, x % f)) out.push_back(PrimePoly::trusted(f));
    return true;
  });
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

int quadratic_character(const Poly& m, const PrimePoly& p) {
  const Poly r = m % p.poly();
  if (r.is_zero()) return 0;
  if (r.is_constant() && p.degree() % 2 == 0) return 1;
  if (r.is_constant()) return r.field().legendre(r.lead());
  const Int exponent = (p.norm() - 1) / 2;
  const Poly e = powmod(r, exponent, p.poly());
  return e.is_one() ? 1 : -1;
}

Poly crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli) {
  if (residues.size() != moduli.size() || moduli.empty()) throw DomainError("crt: size mismatch");
  Poly x = residues[0] % moduli[0];
  Poly m = moduli[0];
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    // x + m * k = r_i (mod m_i)
    const Poly inv = inverse_mod(m, moduli[i]);
    const Poly k = mulmod(residues[i] - x, inv, moduli[i]);
    x = x + m * k;
    m = m * moduli[i];
    x = x % m;
  }
  return x;
}

Poly sqrt_mod_prime(const Poly& D, const PrimePoly& p) {
  const FieldPtr& field = p.poly().field_ptr();
  const Poly& P = p.poly();
  const Poly r = D % P;
  if (r.is_zero()) return r;
  if (p.degree() == 1) {
    const Elem v = r.lead();
    return Poly::constant(field, field->sqrt(v));
  }
  // Tonelli-Shanks in A/p of order Q = q^deg p.
  const Int Q = p.norm();
  Int s_odd = Q - 1;
  unsigned two_power = 0;
  while ((s_odd & 1) == 0) {
    s_odd >>= 1;
    ++two_power;
  }
  const Int half = (Q - 1) / 2;
  if (!powmod(r, half, P).is_one()) throw DomainError("not a square modulo " + to_text(P));
  Poly z;
  bool found = false;
  for (int d = 0; d < P.degree() && !found; ++d) {
    for (Elem lead = 1; lead < field->q() && !found; ++lead) {
      for_each_poly(field, d, lead, [&](const Poly& cand) {
        if (d == 0 && field->is_square(cand.lead()) && P.degree() % 2 == 0) return true;
        if (!powmod(cand, half, P).is_one()) {
          z = cand;
          found = true;
          return false;
        }
        return true;
      });
    }
  }
  if (!found) throw std::logic_error("no non-residue found");
  unsigned m = two_power;
  Poly c = powmod(z, s_odd, P);
  Poly t = powmod(r, s_odd, P);
  Poly x = powmod(r, (s_odd + 1) / 2, P);
  while (!t.is_one()) {
    unsigned i = 0;
    Poly t2 = t;
    while (!t2.is_one()) {
      t2 = mulmod(t2, t2, P);
      ++i;
    }
    Poly b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, P);
    m = i;
    c = mulmod(b, b, P);
    t = mulmod(t, c, P);
    x = mulmod(x, b, P);
  }
  return x;
}

namespace {

// Roots of b^2 = D modulo p^e.
std::vector<Poly> sqrt_mod_prime_power(const Poly& D, const PrimePoly& p, unsigned e) {
  const FieldPtr& field = p.poly().field_ptr();
  const Poly& P = p.poly();
  std::vector<Poly> roots;
  const Poly r = D % P;
  if (r.is_zero()) {
    roots.push_back(Poly(field));
  } else {
    if (quadratic_character(D, p) != 1) return {};
    Poly s = sqrt_mod_prime(D, p);
    roots.push_back(s);
    roots.push_back(-s % P);
  }
  Poly modulus = P;
  const bool unit = !r.is_zero();
  for (unsigned k = 1; k < e; ++k) {
    const Poly next = modulus * P;
    std::vector<Poly> lifted;
    if (unit) {
      // Hensel: b' = b - (b^2 - D) / (2b) mod p^(k+1)
      for (const auto& b : roots) {
        const Poly two_b = scale(b, field->from_int(2));
        const Poly f = (b * b - D) % next;
        const Poly corr = mulmod(f, inverse_mod(two_b, next), next);
        lifted.push_back((b - corr) % next);
      }
    } else {
      const Poly Dn = D % next;
      for (const auto& b : roots) {
        for (int d = -1; d < P.degree(); ++d) {
          auto try_lift = [&](const Poly& s) {
            const Poly cand = (b + s * modulus) % next;
            if (((cand * cand) % next) == Dn) lifted.push_back(cand);
            return true;
          };
          if (d < 0) {
            try_lift(Poly(field));
            continue;
          }
          for (Elem lead = 1; lead < field->q(); ++lead) for_each_poly(field, d, lead, try_lift);
        }
      }
    }
    std::sort(lifted.begin(), lifted.end());
    lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
    roots = std::move(lifted);
    modulus = next;
    if (roots.empty()) return {};
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::vector<Poly> sqrt_mod(const Poly& D, const Poly& a) {
  if (!a.is_monic()) throw DomainError("sqrt_mod requires a monic modulus");
  const FieldPtr& field = a.field_ptr();
  if (a.is_one()) return {Poly(field)};
  const Factorization fac = factor_monic(a);
  std::vector<std::vector<Poly>> local;
  std::vector<Poly> moduli;
  for (const auto& f : fac) {
    auto roots = sqrt_mod_prime_power(D, f.prime, f.exponent);
    if (roots.empty()) return {};
    local.push_back(std::move(roots));
    moduli.push_back(pow(f.prime.poly(), f.exponent));
  }
  std::vector<Poly> out;
  std::vector<std::size_t> idx(local.size(), 0);
  for (;;) {
    std::vector<Poly> residues;
    for (std::size_t i = 0; i < local.size(); ++i) residues.push_back(local[i][idx[i]]);
    out.push_back(crt(residues, moduli));
    std::size_t i = 0;
    while (i < idx.size()) {
      if (++idx[i] < local[i].size()) break;
      idx[i] = 0;
      ++i;
    }
    if (i == idx.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cmtk
