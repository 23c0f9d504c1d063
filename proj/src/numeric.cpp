#include "cmtk/numeric.hpp"

namespace cmtk {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw DomainError("malformed rational: '" + text + "'");
  }
}

int moebius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace cmtk
