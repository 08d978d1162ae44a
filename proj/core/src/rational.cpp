#include "pseudomarket/rational.hpp"

#include <ostream>

namespace pseudomarket {

Rational Rational::from_string(std::string_view s) {
  const auto bad = [&] {
    return std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
  };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  const auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw bad();
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw bad();
    for (std::size_t k = start; k < part.size(); ++k) {
      if (part[k] < '0' || part[k] > '9') throw bad();
    }
    return BigInt(std::string(part));
  };
  if (slash == std::string_view::npos) {
    return Rational(parse_int(s), BigInt(1));
  }
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw bad();
  return Rational(std::move(num), std::move(den));
}

std::string Rational::to_string() const {
  std::string out = num_.str();
  if (den_ != 1) {
    out += '/';
    out += den_.str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const Rational& v : values) l = boost::multiprecision::lcm(l, v.denominator());
  return l;
}

Rational sum(const std::vector<Rational>& values) {
  Rational total;
  for (const Rational& v : values) total += v;
  return total;
}

}  // namespace pseudomarket
