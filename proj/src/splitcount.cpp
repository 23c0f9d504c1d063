#include "cmtk/splitcount.hpp"

#include "cmtk/parallel.hpp"

#include <cmath>
#include <map>

namespace cmtk {

namespace {

// Gaussian elimination over F_2 on bit rows
unsigned f2_rank(std::vector<std::vector<bool>> rows) {
  unsigned rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i][c])
        for (std::size_t k = 0; k < cols; ++k) rows[i][k] = rows[i][k] != rows[rank][k];
    ++rank;
  }
  return rank;
}

Int iterated_castelnuovo(const std::vector<Int>& genera) {
  if (genera.empty()) return 0;
  Int g = genera[0], n = 2;
  for (std::size_t i = 1; i < genera.size(); ++i) {
    g = castelnuovo_bound(g, n, genera[i], 2);
    n *= 2;
  }
  return g;
}

Rational power_q(std::uint32_t q, int t) { return Rational(ipow(Int(q), static_cast<unsigned>(t))); }

}  // namespace

Int castelnuovo_bound(const Int& g1, const Int& n1, const Int& g2, const Int& n2) {
  if (n1 < 1 || n2 < 1) throw DomainError("Castelnuovo degrees must be positive");
  return n2 * g1 + n1 * g2 + (n1 - 1) * (n2 - 1);
}

SplittingSpec SplittingSpec::make(const FieldPtr& field, const std::vector<Poly>& radicands) {
  SplittingSpec s;
  s.field = field;
  s.radicands = radicands;
  std::map<Poly, std::size_t> column;
  std::vector<Factorization> facs;
  for (const auto& m : radicands) {
    const ImagQuadField K = analyze_quadratic(m);
    s.genera.push_back(K.genus);
    facs.push_back(factor_monic(monic(m)));
    for (const auto& f : facs.back()) column.try_emplace(f.prime.poly(), 0);
  }
  std::size_t c = 0;
  for (auto& [p, idx] : column) idx = c++;
  const std::size_t constant_col = c;
  std::vector<std::vector<bool>> rows;
  for (std::size_t i = 0; i < radicands.size(); ++i) {
    std::vector<bool> row(c + 1, false);
    for (const auto& f : facs[i]) row[column[f.prime.poly()]] = f.exponent % 2 == 1;
    row[constant_col] = !field->is_square(radicands[i].lead());
    rows.push_back(std::move(row));
  }
  s.rank = f2_rank(rows);
  std::vector<std::vector<bool>> with_constant = rows;
  std::vector<bool> e(c + 1, false);
  e[constant_col] = true;
  with_constant.push_back(e);
  const bool constant_inside = s.rank > 0 && f2_rank(with_constant) == s.rank;
  s.n_c = constant_inside ? 2 : 1;
  s.n_g = ipow(Int(2), s.rank) / s.n_c;

  std::vector<Int> gs(s.genera.begin(), s.genera.end());
  s.g_M_bound = iterated_castelnuovo(gs);
  if (radicands.empty()) {
    s.g_M = 0;
    s.g_M_method = "rational";
  } else if (radicands.size() == 1) {
    s.g_M = s.genera[0];
    s.g_M_method = "quadratic";
  } else if (radicands.size() == 2) {
    if (s.rank == 1) {
      s.g_M = s.genera[0];
      s.g_M_method = "same-field";
    } else if (constant_inside) {
      s.g_M = s.genera[0];
      s.g_M_method = "constant-extension";
    } else {
      s.g_M = Int(s.genera[0] + s.genera[1] + quadratic_genus(radicands[0] * radicands[1]));
      s.g_M_method = "biquadratic-sum";
    }
  } else {
    s.g_M_method = "castelnuovo-iterated";
  }
  return s;
}

Int count_split_primes(const SplittingSpec& spec, int t, const EnumerationBudget& budget, unsigned threads) {
  const auto primes = irreducibles(spec.field, t, budget);
  const std::size_t chunk = 256;
  const std::size_t chunks = (primes.size() + chunk - 1) / chunk;
  auto counts = parallel_map(chunks, threads, [&](std::size_t c) {
    std::uint64_t n = 0;
    for (std::size_t i = c * chunk; i < std::min(primes.size(), (c + 1) * chunk); ++i) {
      bool split = true;
      for (const auto& m : spec.radicands)
        if (quadratic_character(m, primes[i]) != 1) {
          split = false;
          break;
        }
      n += split;
    }
    return n;
  });
  Int total = 0;
  for (auto n : counts) total += n;
  return total;
}

bool CebotarevWindow::contains(const Rational& x) const {
  const Rational d = x - center;
  return d * d < Rational(radius_coeff * radius_coeff * radius_sqrt);
}

double CebotarevWindow::radius() const { return static_cast<double>(radius_coeff) * std::sqrt(double(radius_sqrt)); }
double CebotarevWindow::lower() const { return approx(center) - radius(); }
double CebotarevWindow::upper() const { return approx(center) + radius(); }

std::string CebotarevWindow::radius_text() const {
  return radius_sqrt == 1 ? radius_coeff.str() : radius_coeff.str() + "*sqrt(" + std::to_string(radius_sqrt) + ")";
}

CebotarevWindow cebotarev_window(const SplittingSpec& spec, int t) {
  if (t < 1) throw DomainError("prime degree must be positive");
  if (t % static_cast<int>(spec.n_c) != 0)
    throw DomainError("window needs n_c | t (n_c = " + spec.n_c.str() + ", t = " + std::to_string(t) + ")");
  CebotarevWindow w;
  w.t = t;
  w.q = spec.field->q();
  w.genus = spec.genus_for_window();
  w.center = power_q(w.q, t) / Rational(spec.n_g * t);
  // e = 1, g_k = 0: 4(1 + g_M + 0 + 1)
  w.radius_coeff = 4 * (2 + w.genus) * ipow(Int(w.q), static_cast<unsigned>(t / 2));
  w.radius_sqrt = t % 2 == 1 ? w.q : 1;
  return w;
}

namespace {

PiLowerBound assemble(std::uint32_t q, const Int& n_g, const Int& G, int t, std::vector<std::string> derivation) {
  if (t < 2 || t % 2 != 0) throw DomainError("the prime-count lower bound is used at even degree only");
  PiLowerBound b;
  b.t = t;
  b.C1 = Rational(1) / Rational(n_g);
  b.g_M_bound = G;
  b.error_coeff = 4 * (2 + G);
  b.value = b.C1 * power_q(q, t) / t - Rational(b.error_coeff) * power_q(q, t / 2);
  derivation.push_back("radius 4(e^2 + g_M(e+1)/2 + g_k + 1) q^(t/2) with e = 1, g_k = 0 gives 4(2 + g_M) q^(t/2)");
  derivation.push_back("g_M <= " + G.str() + ", n_g = " + n_g.str());
  b.derivation = std::move(derivation);
  return b;
}

}  // namespace

PiLowerBound pi_lower_bound(const SplittingSpec& spec, int t) {
  if (spec.n_c != 1) throw DomainError("the prime-count lower bound needs a geometric compositum");
  return assemble(spec.field->q(), spec.n_g, spec.g_M_bound, t, {spec.g_M_method});
}

PiLowerBound pi_lower_bound(std::uint32_t q, const Int& g1, const Int& g2, int t) {
  auto b = assemble(q, 4, castelnuovo_bound(g1, 2, g2, 2), t,
                    {"two quadratics: g_M <= 2 g1 + 2 g2 + 1, n_g <= 4, so C1 = 1/4, C2 = 8, C3 = 12"});
  b.C2 = 8;
  b.C3 = 12;
  return b;
}

PiLowerBound pi_lower_bound(std::uint32_t q, const std::vector<Int>& genera, int t) {
  const Int n_g = ipow(Int(2), static_cast<unsigned>(genera.size()));
  auto b = assemble(q, n_g, iterated_castelnuovo(genera), t,
                    {std::to_string(genera.size()) + " quadratics: iterated Castelnuovo, n_g <= 2^n"});
  return b;
}

}  // namespace cmtk
