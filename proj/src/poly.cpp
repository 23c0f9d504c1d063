#include "cmtk/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cmtk {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (a.field_ptr() && b.field_ptr() && a.field_ptr() != b.field_ptr())
    throw DomainError("polynomials over different fields");
}

const FieldPtr& pick_field(const Poly& a, const Poly& b) {
  return a.field_ptr() ? a.field_ptr() : b.field_ptr();
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (c >= field_->q()) throw DomainError("coefficient code out of range");
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Elem c, int degree) {
  std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int Poly::norm() const {
  if (is_zero()) throw DomainError("norm of the zero polynomial");
  return ipow(Int(field_->q()), static_cast<unsigned>(degree()));
}

std::strong_ordering Poly::operator<=>(const Poly& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  for (int i = degree(); i >= 0; --i) {
    if (auto c = coeffs_[i] <=> other.coeffs_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_field(*this, other);
  if (!field_) field_ = other.field_;
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = field_->add(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_field(*this, other);
  if (!field_) field_ = other.field_;
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = field_->sub(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator-(const Poly& a) {
  std::vector<Elem> v = a.coeffs();
  for (auto& c : v) c = a.field().neg(c);
  return Poly(a.field_ptr(), std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const FieldPtr& field = pick_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(field);
  const Field& F = *field;
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Elem> out(x.size() + y.size() - 1, 0);
  if (F.e() == 1) {
    const std::uint64_t p = F.p();
    std::vector<std::uint64_t> acc(out.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        acc[i + j] += static_cast<std::uint64_t>(x[i]) * y[j];
        if (acc[i + j] >= (1ull << 62)) acc[i + j] %= p;
      }
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<Elem>(acc[k] % p);
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(x[i], y[j]));
    }
  }
  return Poly(field, std::move(out));
}

Poly scale(const Poly& a, Elem c) {
  std::vector<Elem> v = a.coeffs();
  for (auto& x : v) x = a.field().mul(x, c);
  return Poly(a.field_ptr(), std::move(v));
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const Field& F = b.field();
  std::vector<Elem> r = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Poly(b.field_ptr()), a};
  std::vector<Elem> q(static_cast<std::size_t>(da - db) + 1, 0);
  const Elem inv_lead = F.inv(b.lead());
  const auto& bc = b.coeffs();
  for (int i = da; i >= db; --i) {
    const Elem c = r[i];
    if (c == 0) continue;
    const Elem factor = F.mul(c, inv_lead);
    q[i - db] = factor;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(factor, bc[j]));
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(b.field_ptr(), std::move(q)), Poly(b.field_ptr(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly monic(const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, a.field().inv(a.lead()));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Bezout xgcd(const Poly& a, const Poly& b) {
  const FieldPtr& field = pick_field(a, b);
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(field), s1(field);
  Poly t0(field), t1 = Poly::one(field);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem inv_lead = field->inv(r0.lead());
  return {scale(r0, inv_lead), scale(s0, inv_lead), scale(t0, inv_lead)};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  Bezout bz = xgcd(a % m, m);
  if (!bz.gcd.is_one()) throw DomainError("element is not invertible modulo " + to_text(m));
  return bz.s % m;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& base, const Int& exponent, const Poly& m) {
  if (exponent < 0) throw DomainError("negative exponent");
  Poly result = Poly::one(m.field_ptr()) % m;
  Poly b = base % m;
  const std::size_t bits = exponent == 0 ? 0 : boost::multiprecision::msb(exponent) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (boost::multiprecision::bit_test(exponent, static_cast<unsigned>(i))) result = mulmod(result, b, m);
  }
  return result;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::one(base.field_ptr());
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent) b = b * b;
  }
  return result;
}

Poly derivative(const Poly& a) {
  if (a.degree() < 1) return Poly(a.field_ptr());
  const Field& F = a.field();
  std::vector<Elem> v(static_cast<std::size_t>(a.degree()), 0);
  for (int i = 1; i <= a.degree(); ++i) v[i - 1] = F.mul(F.from_int(i), a.coeff(i));
  return Poly(a.field_ptr(), std::move(v));
}

Elem evaluate(const Poly& a, Elem x) {
  const Field& F = a.field();
  Elem acc = 0;
  for (int i = a.degree(); i >= 0; --i) acc = F.add(F.mul(acc, x), a.coeff(i));
  return acc;
}

Poly pth_root(const Poly& a) {
  const Field& F = a.field();
  const std::uint32_t p = F.p();
  if (a.is_zero()) return a;
  std::vector<Elem> v(static_cast<std::size_t>(a.degree() / static_cast<int>(p)) + 1, 0);
  // c -> c^(p^(e-1)) inverts the Frobenius on F_q.
  std::uint64_t root_exp = 1;
  for (std::uint32_t i = 1; i < F.e(); ++i) root_exp *= p;
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i) == 0) continue;
    if (i % static_cast<int>(p) != 0) throw DomainError("pth_root of a non-p-th power");
    v[static_cast<std::size_t>(i) / p] = F.pow(a.coeff(i), root_exp);
  }
  return Poly(a.field_ptr(), std::move(v));
}

std::string to_text(const Poly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    const Elem c = a.coeff(i);
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    out << 'T';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

Poly parse_poly(const FieldPtr& field, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw DomainError("empty polynomial text");
  const Field& F = *field;
  std::vector<Elem> coeffs;
  auto add_term = [&](Elem c, int deg) {
    if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(static_cast<std::size_t>(deg) + 1, 0);
    coeffs[deg] = F.add(coeffs[deg], c);
  };
  auto fail = [&]() { throw DomainError("malformed polynomial text: '" + text + "'"); };
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      fail();
    }
    if (i >= s.size()) fail();
    Elem c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      const std::string digits = s.substr(i, j - i);
      if (digits.size() > 12) fail();
      const long long v = std::stoll(digits);
      if (F.e() == 1) {
        c = F.from_int(v);
      } else {
        if (v >= static_cast<long long>(F.q())) throw DomainError("coefficient code out of range: " + digits);
        c = static_cast<Elem>(v);
      }
      have_coeff = true;
      i = j;
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || (s[i] != 'T' && s[i] != 't')) fail();
      }
    }
    int deg = 0;
    if (i < s.size() && (s[i] == 'T' || s[i] == 't')) {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i || j - i > 4) fail();
        deg = std::stoi(s.substr(i, j - i));
        i = j;
      }
    } else if (!have_coeff) {
      fail();
    }
    if (negative) c = F.neg(c);
    add_term(c, deg);
  }
  return Poly(field, std::move(coeffs));
}

void for_each_poly(const FieldPtr& field, int degree, Elem lead, const std::function<bool(const Poly&)>& fn) {
  const std::uint32_t q = field->q();
  if (degree < 0) return;
  std::vector<Elem> digits(static_cast<std::size_t>(degree) + 1, 0);
  digits[degree] = lead;
  for (;;) {
    if (!fn(Poly(field, digits))) return;
    int i = 0;
    while (i < degree) {
      if (++digits[i] < q) break;
      digits[i] = 0;
      ++i;
    }
    if (i == degree) return;
  }
}

Int count_polys_of_degree(std::uint32_t q, int degree) { return ipow(Int(q), static_cast<unsigned>(degree)); }

}  // namespace cmtk
