#include "skewrank/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace skewrank {

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  std::size_t start = 0;
  while (start < s.size() && s[start] == ' ') ++start;
  std::size_t end = s.size();
  while (end > start && s[end - 1] == ' ') --end;
  s = s.substr(start, end - start);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto digits_ok = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s)) throw std::invalid_argument("bad rational literal: " + s);
    return Rational(mpz_class(s, 10));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den[0] == '-')
    throw std::invalid_argument("bad rational literal: " + s);
  return Rational(mpz_class(num, 10), mpz_class(den, 10));
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace skewrank
