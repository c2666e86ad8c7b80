#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewrank/rational.hpp"

namespace skewrank {

/// Variable names of a polynomial ring. Shared between all forms that live in
/// the same ring; two rings are compatible when their name lists agree.
using Ring = std::shared_ptr<const std::vector<std::string>>;

Ring make_ring(std::vector<std::string> names);
bool same_ring(const Ring& a, const Ring& b);
std::string ring_to_string(const Ring& r);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned degree() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

/// Graded reverse lexicographic comparison: true when a > b.
bool degrevlex_greater(const Monomial& a, const Monomial& b);

/// Multivariate polynomial with exact rational coefficients. Terms are kept
/// sorted in decreasing degrevlex order with no zero coefficients, so equal
/// polynomials have identical term lists.
class Form {
 public:
  using Term = std::pair<Monomial, Rational>;

  Form() = default;
  explicit Form(Ring ring) : ring_(std::move(ring)) {}
  Form(Ring ring, std::vector<Term> terms);

  static Form constant(Ring ring, const Rational& c);
  static Form variable(Ring ring, std::size_t i);

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return ring_ ? ring_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero form.
  int degree() const;
  bool is_homogeneous() const;
  /// Homogeneous of degree one, or zero.
  bool is_linear() const;
  Rational coefficient(const Monomial& m) const;
  /// Coefficients of a linear form, one per variable.
  std::vector<Rational> linear_coefficients() const;
  const Term& leading_term() const { return terms_.front(); }

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Rational& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Form& a, const Form& b);
  friend Form operator*(Form a, const Rational& c) { return a *= c; }
  friend Form operator*(const Rational& c, Form a) { return a *= c; }
  friend Form operator-(Form a) { return a *= Rational(-1); }
  friend bool operator==(const Form& a, const Form& b);

  Rational evaluate(std::span<const Rational> point) const;
  std::string str() const;

 private:
  void check_ring(const Form& o, const char* what) const;

  Ring ring_;
  std::vector<Term> terms_;
};

/// Integer power.
Form pow(const Form& f, unsigned e);

/// Replaces variable i of f by images[i]; every image must be a linear form
/// in a common target ring.
Form linear_substitute(const Form& f, std::span<const Form> images);

/// Moves f into a ring with the same variables under a different handle,
/// or with extra trailing variables appended.
Form embed(const Form& f, const Ring& target);

/// GCD of binary forms (exactly two variables), normalized so the
/// coefficient of the highest power of the first variable is 1. Returns the
/// constant 1 for coprime input and zero when every input is zero.
Form binary_gcd(std::span<const Form> forms);

/// Exact quotient f / g; throws if g does not divide f.
Form divide_exact(const Form& f, const Form& g);

/// Rational points [s:t] of P^1 where a nonzero binary form vanishes, as
/// primitive integer pairs with the first nonzero coordinate positive,
/// sorted lexicographically. Candidates whose rational-root search would
/// need divisors of integers above `max_abs` are skipped.
std::vector<std::pair<mpz_class, mpz_class>> binary_rational_roots(const Form& f,
                                                                  long max_abs = 1000000);

/// Parses the text grammar `coef*var^exp*... +/- ...`, e.g. "2*a^2*b - 3/4*c + 1".
Form parse_form(std::string_view text, const Ring& ring);

}  // namespace skewrank
