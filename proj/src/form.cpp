#include "skewrank/form.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewrank {

Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::string ring_to_string(const Ring& r) {
  std::string s = "(";
  if (r)
    for (std::size_t i = 0; i < r->size(); ++i) s += (i ? "," : "") + (*r)[i];
  return s + ")";
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  std::vector<unsigned> e(nvars, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<unsigned> e(a.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
  return Monomial(std::move(e));
}

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

void normalize_terms(std::vector<Form::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Form::Term& x, const Form::Term& y) { return degrevlex_greater(x.first, y.first); });
  std::vector<Form::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  terms = std::move(out);
}

}  // namespace

Form::Form(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.first.size() != nvars()) throw std::invalid_argument("monomial length does not match ring");
  normalize_terms(terms_);
}

Form Form::constant(Ring ring, const Rational& c) {
  const std::size_t n = ring->size();
  Form f(std::move(ring));
  if (!c.is_zero()) f.terms_.emplace_back(Monomial::one(n), c);
  return f;
}

Form Form::variable(Ring ring, std::size_t i) {
  const std::size_t n = ring->size();
  if (i >= n) throw std::out_of_range("variable index out of range");
  Form f(std::move(ring));
  f.terms_.emplace_back(Monomial::variable(n, i), Rational(1));
  return f;
}

bool Form::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }

int Form::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().first.degree());
}

bool Form::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.first.degree() == d; });
}

bool Form::is_linear() const { return is_zero() || (is_homogeneous() && degree() == 1); }

Rational Form::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return Rational(0);
}

std::vector<Rational> Form::linear_coefficients() const {
  if (!is_linear()) throw std::invalid_argument("form is not linear: " + str());
  std::vector<Rational> c(nvars(), Rational(0));
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nvars(); ++i)
      if (t.first[i] == 1) c[i] = t.second;
  return c;
}

void Form::check_ring(const Form& o, const char* what) const {
  if (!same_ring(ring_, o.ring_))
    throw std::invalid_argument(std::string(what) + ": ring mismatch " + ring_to_string(ring_) + " vs " +
                                ring_to_string(o.ring_));
}

Form& Form::operator+=(const Form& o) {
  check_ring(o, "add");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && degrevlex_greater(terms_[i].first, o.terms_[j].first))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || degrevlex_greater(o.terms_[j].first, terms_[i].first)) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) merged.emplace_back(std::move(terms_[i].first), std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += (-o); }

Form& Form::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Form operator*(const Form& a, const Form& b) {
  a.check_ring(b, "mul");
  std::vector<Form::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.emplace_back(x.first * y.first, x.second * y.second);
  Form out(a.ring_);
  normalize_terms(prod);
  out.terms_ = std::move(prod);
  return out;
}

bool operator==(const Form& a, const Form& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Rational Form::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars())
    throw std::invalid_argument("evaluate: point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                std::to_string(nvars()));
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < m.size() && !v.is_zero(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Rational ac = c.abs();
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += (*ring_)[i];
      if (m[i] > 1) mono += '^' + std::to_string(m[i]);
    }
    if (mono.empty())
      os << ac;
    else if (ac.is_one())
      os << mono;
    else
      os << ac << '*' << mono;
  }
  return os.str();
}

Form pow(const Form& f, unsigned e) {
  Form result = Form::constant(f.ring(), Rational(1));
  Form base = f;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Form linear_substitute(const Form& f, std::span<const Form> images) {
  if (images.size() != f.nvars())
    throw std::invalid_argument("linear_substitute: need one image per variable");
  if (images.empty()) return f;
  const Ring& target = images[0].ring();
  for (const auto& img : images) {
    if (!same_ring(img.ring(), target)) throw std::invalid_argument("linear_substitute: images in different rings");
    if (!img.is_linear()) throw std::invalid_argument("linear_substitute: non-linear image " + img.str());
  }
  Form out(target);
  std::vector<std::vector<Form>> powers(images.size());
  for (const auto& [m, c] : f.terms()) {
    Form term = Form::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Form::constant(target, Rational(1)));
      while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[m[i]];
    }
    out += term;
  }
  return out;
}

Form embed(const Form& f, const Ring& target) {
  if (target->size() < f.nvars()) throw std::invalid_argument("embed: target ring too small");
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if ((*target)[i] != (*f.ring())[i]) throw std::invalid_argument("embed: variable names differ");
  std::vector<Form::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e = m.exponents();
    e.resize(target->size(), 0);
    terms.emplace_back(Monomial(std::move(e)), c);
  }
  return Form(target, std::move(terms));
}

namespace {

// Dense univariate polynomials over Q, index = power.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly umod(UPoly a, const UPoly& b) {
  trim(a);
  const Rational lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const Rational q = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

void require_binary(const Form& f) {
  if (f.nvars() != 2) throw std::invalid_argument("binary form expected, ring " + ring_to_string(f.ring()));
  if (!f.is_homogeneous()) throw std::invalid_argument("binary form must be homogeneous: " + f.str());
}

// f(a, 1) as a dense polynomial in a.
UPoly dehomogenize(const Form& f) {
  UPoly p(static_cast<std::size_t>(std::max(f.degree(), 0)) + 1, Rational(0));
  for (const auto& [m, c] : f.terms()) p[m[0]] += c;
  trim(p);
  return p;
}

}  // namespace

Form binary_gcd(std::span<const Form> forms) {
  if (forms.empty()) throw std::invalid_argument("binary_gcd: empty input");
  for (const auto& f : forms) require_binary(f);
  const Ring ring = forms[0].ring();
  for (const auto& f : forms)
    if (!same_ring(f.ring(), ring)) throw std::invalid_argument("binary_gcd: ring mismatch");

  UPoly g;
  bool any = false;
  unsigned b_power = 0;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    UPoly p = dehomogenize(f);
    const unsigned k = static_cast<unsigned>(f.degree()) - static_cast<unsigned>(p.size() - 1);
    if (!any) {
      g = p;
      b_power = k;
      any = true;
    } else {
      g = ugcd(g, p);
      b_power = std::min(b_power, k);
    }
  }
  if (!any) return Form(ring);
  g = ugcd(g, UPoly{});
  std::vector<Form::Term> terms;
  const unsigned deg_a = static_cast<unsigned>(g.size() - 1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero()) continue;
    terms.emplace_back(Monomial({static_cast<unsigned>(i), deg_a - static_cast<unsigned>(i) + b_power}), g[i]);
  }
  return Form(ring, std::move(terms));
}

Form divide_exact(const Form& f, const Form& g) {
  if (g.is_zero()) throw std::domain_error("divide_exact: division by zero form");
  if (!same_ring(f.ring(), g.ring())) throw std::invalid_argument("divide_exact: ring mismatch");
  Form rem = f;
  Form quot(f.ring());
  const auto& [gm, gc] = g.leading_term();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!gm.divides(rm)) throw std::domain_error("divide_exact: not divisible");
    std::vector<unsigned> e(rm.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = rm[i] - gm[i];
    Form q(f.ring(), {{Monomial(std::move(e)), rc / gc}});
    quot += q;
    rem -= q * g;
  }
  return quot;
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  const mpz_class a = abs(n);
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<mpz_class, mpz_class>> binary_rational_roots(const Form& f, long max_abs) {
  require_binary(f);
  if (f.is_zero()) throw std::invalid_argument("binary_rational_roots: zero form");
  std::vector<std::pair<mpz_class, mpz_class>> roots;
  UPoly p = dehomogenize(f);
  if (static_cast<int>(p.size()) - 1 < f.degree()) roots.emplace_back(1, 0);  // b divides f
  std::size_t low = 0;
  while (low < p.size() && p[low].is_zero()) ++low;
  if (low > 0) roots.emplace_back(0, 1);
  UPoly q(p.begin() + static_cast<long>(low), p.end());
  if (q.size() > 1) {
    mpz_class lcm_den = 1;
    for (const auto& c : q) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : q) ints.push_back((c * Rational(lcm_den)).numerator());
    const mpz_class& c0 = ints.front();
    const mpz_class& cn = ints.back();
    if (abs(c0) <= max_abs && abs(cn) <= max_abs) {
      for (const auto& num : positive_divisors(c0)) {
        for (const auto& den : positive_divisors(cn)) {
          mpz_class g;
          mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
          if (g != 1) continue;
          for (int s : {1, -1}) {
            const Rational x(mpz_class(s * num), den);
            Rational v(0);
            for (std::size_t i = ints.size(); i-- > 0;) v = v * x + Rational(ints[i]);
            if (v.is_zero()) {
              mpz_class pa = s * num, pb = den;
              if (pa < 0) {
                pa = -pa;
                pb = -pb;
              }
              roots.emplace_back(pa, pb);
            }
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, const Ring& ring) : s_(text), ring_(ring) {}

  Form parse() {
    Form f = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse_form: " + why + " at position " + std::to_string(pos_) + " in \"" +
                                std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Form expression() {
    Form acc(ring_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Form t = term();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Form term() {
    Form f = factor();
    while (accept('*')) f = f * factor();
    return f;
  }

  unsigned exponent() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  Form factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    Form base(ring_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = expression();
      if (!accept(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string lit(s_.substr(start, pos_ - start));
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        const std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected denominator");
        lit += "/" + std::string(s_.substr(ds, pos_ - ds));
      }
      base = Form::constant(ring_, Rational::parse(lit));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      const auto it = std::find(ring_->begin(), ring_->end(), name);
      if (it == ring_->end()) fail("unknown variable '" + name + "'");
      base = Form::variable(ring_, static_cast<std::size_t>(it - ring_->begin()));
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (accept('^')) base = pow(base, exponent());
    return base;
  }

  std::string_view s_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(std::string_view text, const Ring& ring) { return FormParser(text, ring).parse(); }

}  // namespace skewrank
