#include "cmtk/fq.hpp"

#include "cmtk/numeric.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace cmtk {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Base-p digit vector of a code, length e.
std::vector<std::uint32_t> digits_of(std::uint32_t code, std::uint32_t p, std::uint32_t e) {
  std::vector<std::uint32_t> d(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t code_of(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

// Multiplies the residue (digits, length e) by x modulo the monic modulus.
void times_x(std::vector<std::uint32_t>& r, const std::vector<std::uint32_t>& modulus,
             std::uint32_t p) {
  const std::size_t e = r.size();
  const std::uint32_t top = r[e - 1];
  for (std::size_t i = e - 1; i > 0; --i) r[i] = r[i - 1];
  r[0] = 0;
  if (top != 0) {
    for (std::size_t i = 0; i < e; ++i)
      r[i] = static_cast<std::uint32_t>((r[i] + static_cast<std::uint64_t>(p - modulus[i]) * top) % p);
  }
}

}  // namespace

FieldPtr Field::make(std::uint32_t q) {
  static std::mutex mutex;
  static std::map<std::uint32_t, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(q); it != cache.end()) return it->second;

  if (q < 3 || q > kMaxOrder) throw DomainError("q must lie in [3, 65536]");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t e = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1 || !is_prime_u32(p)) throw DomainError("q must be a prime power");
  if (p == 2) throw DomainError("q must be odd");
  auto field = std::make_shared<const Field>(p, e);
  cache.emplace(q, field);
  return field;
}

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
  inv_.assign(q_, 0);
  square_.assign(q_, 0);
  sqrt_.assign(q_, 0);

  if (e_ == 1) {
    modulus_ = {0, 1};
    for (Elem a = 1; a < q_; ++a)
      for (Elem b = 1; b < q_; ++b)
        if ((static_cast<std::uint64_t>(a) * b) % p_ == 1) {
          inv_[a] = b;
          break;
        }
  } else {
    // First monic degree-e polynomial (counting with the constant term as the
    // least significant digit) for which x has multiplicative order q - 1.
    const std::uint32_t count = q_;  // p^e candidate lower parts
    bool found = false;
    for (std::uint32_t lower = 1; lower < count && !found; ++lower) {
      std::vector<std::uint32_t> mod = digits_of(lower, p_, e_);
      if (mod[0] == 0) continue;
      std::vector<std::uint32_t> r(e_, 0);
      r[0] = 1;
      std::vector<Elem> table;
      table.reserve(q_ - 1);
      bool primitive = true;
      for (std::uint32_t k = 0; k < q_ - 1; ++k) {
        const std::uint32_t c = code_of(r, p_);
        if (k > 0 && c == 1) {
          primitive = false;
          break;
        }
        table.push_back(c);
        times_x(r, mod, p_);
      }
      if (primitive && code_of(r, p_) == 1) {
        mod.push_back(1);
        modulus_ = mod;
        exp_ = std::move(table);
        found = true;
      }
    }
    if (!found) throw std::logic_error("no primitive modulus found");
    log_.assign(q_, 0);
    for (std::uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
    for (Elem a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    neg_table_.assign(q_, 0);
    for (Elem a = 0; a < q_; ++a) {
      auto d = digits_of(a, p_, e_);
      for (auto& x : d) x = (p_ - x) % p_;
      neg_table_[a] = code_of(d, p_);
    }
    if (q_ <= 1024) {
      add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
      for (Elem a = 0; a < q_; ++a)
        for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
    }
  }

  for (Elem a = 0; a < q_; ++a) {
    const Elem s = mul(a, a);
    if (!square_[s]) {
      square_[s] = 1;
      sqrt_[s] = a;
    }
  }
  for (Elem a = 1; a < q_; ++a) {
    if (!square_[a]) {
      nonsquare_ = a;
      break;
    }
  }
}

Elem Field::add_digits(Elem a, Elem b) const {
  Elem out = 0;
  Elem scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("division by zero in F_q");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t n) const {
  Elem result = 1;
  Elem base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

Elem Field::sqrt(Elem a) const {
  if (!square_[a]) throw DomainError("element is not a square in F_q");
  return sqrt_[a];
}

Elem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::string Field::modulus_text() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const auto c = modulus_[i];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

}  // namespace cmtk
