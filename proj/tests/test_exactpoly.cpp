#include "doctest.h"
#include "helpers.hpp"

using namespace testutil;

TEST_SUITE("exactpoly") {

TEST_CASE("rationals are stored in lowest terms with a positive denominator") {
  const Rational q(mpz_class(4), mpz_class(-6));
  CHECK(q.str() == "-2/3");
  CHECK(q.denominator() == 3);
  CHECK(Rational::parse("-3/6") == Rational(mpz_class(-1), mpz_class(2)));
  CHECK(Rational(0).denominator() == 1);
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK_THROWS(Rational(mpz_class(1), mpz_class(0)));
  CHECK_THROWS(Rational(0).inverse());
  CHECK(Rational::parse("123456789012345678901234567890") * Rational(2) ==
        Rational::parse("246913578024691357802469135780"));
}

TEST_CASE("addition and multiplication") {
  const Ring r = ring_abc();
  CHECK(F("a+b", r) + F("a-b", r) == F("2*a", r));
  CHECK(F("a+b", r) * F("a-b", r) == F("a^2-b^2", r));
  CHECK(pow(F("a+b+c", r), 2) == F("a^2+b^2+c^2+2*a*b+2*a*c+2*b*c", r));
  CHECK((F("a", r) - F("a", r)).is_zero());
  CHECK(F("a+b", r).terms().size() == 2);
}

TEST_CASE("forms from different rings do not mix") {
  const Form f = F("a", ring_ab());
  const Form g = F("x", make_ring({"x", "y"}));
  CHECK_THROWS(f + g);
  CHECK_THROWS(f * g);
}

TEST_CASE("terms are kept in decreasing degrevlex order") {
  const Ring r = ring_abc();
  const Form f = F("c^2 + a*c + b^2 + a^2 + a*b + b*c", r);
  std::vector<std::string> order;
  for (const auto& [m, c] : f.terms()) order.push_back(Form(r, {{m, Rational(1)}}).str());
  CHECK(order == std::vector<std::string>{"a^2", "a*b", "b^2", "a*c", "b*c", "c^2"});
  CHECK(degrevlex_greater(Monomial({0, 2, 0}), Monomial({1, 0, 1})));
}

TEST_CASE("evaluation") {
  const Ring r2 = ring_ab();
  CHECK(F("a^2*b", r2).evaluate(pt({2, 3})) == Rational(12));
  CHECK(F("a+b+c", ring_abc()).evaluate(pt({1, 1, 1})) == Rational(3));
  CHECK(F("3*a^2 - 5*a*b", r2).evaluate(pt({0, 0})).is_zero());
  CHECK_THROWS(F("a", r2).evaluate(pt({1, 2, 3})));
}

TEST_CASE("linear substitution") {
  const Ring ab = ring_ab();
  const Ring st = make_ring({"s", "t"});
  const std::vector<Form> images{F("s+t", st), F("s-t", st)};
  CHECK(linear_substitute(F("a*b", ab), images) == F("s^2-t^2", st));

  const std::vector<Form> id{F("a", ab), F("b", ab)};
  const Form f = F("a^3 - 2*a*b^2 + 7*b^3", ab);
  CHECK(linear_substitute(f, id) == f);

  const std::vector<Form> kill{Form(ab), F("b", ab)};
  CHECK(linear_substitute(F("a*b", ab), kill).is_zero());

  const std::vector<Form> bad{F("a^2", ab), F("b", ab)};
  CHECK_THROWS(linear_substitute(f, bad));
  const std::vector<Form> mixed{F("s", st), F("b", ab)};
  CHECK_THROWS(linear_substitute(f, mixed));
}

TEST_CASE("binary gcd") {
  const Ring r = ring_ab();
  const std::vector<Form> x{F("a^2*b", r), F("a*b^2", r)};
  CHECK(binary_gcd(x) == F("a*b", r));
  const std::vector<Form> y{F("a^2", r), F("b^2", r)};
  CHECK(binary_gcd(y) == F("1", r));
  const std::vector<Form> z{F("a^2-b^2", r), F("a^2+2*a*b+b^2", r)};
  CHECK(binary_gcd(z) == F("a+b", r));
  const std::vector<Form> w{F("4*a*b - 2*b^2", r), F("6*a^2 - 3*a*b", r)};
  CHECK(binary_gcd(w) == F("a - 1/2*b", r));
  const std::vector<Form> pure_b{F("b^3", r), F("a*b^2", r)};
  CHECK(binary_gcd(pure_b) == F("b^2", r));

  CHECK_THROWS(binary_gcd(std::vector<Form>{}));
  const std::vector<Form> ternary{F("a", ring_abc())};
  CHECK_THROWS(binary_gcd(ternary));
}

TEST_CASE("exact division and rational roots of binary forms") {
  const Ring r = ring_ab();
  CHECK(divide_exact(F("a^2-b^2", r), F("a-b", r)) == F("a+b", r));
  CHECK_THROWS(divide_exact(F("a^2+b^2", r), F("a-b", r)));

  using P = std::pair<mpz_class, mpz_class>;
  const auto roots = binary_rational_roots(F("(a-2*b)*(3*a+b)*(a^2+b^2)", r));
  CHECK(roots == std::vector<P>{{1, -3}, {2, 1}});
  const auto at_infinity = binary_rational_roots(F("a*b", r));
  CHECK(at_infinity == std::vector<P>{{0, 1}, {1, 0}});
}

TEST_CASE("parser and printer round trip") {
  const Ring r = ring_abc();
  CHECK(F("2*a^2*b", r).str() == "2*a^2*b");
  CHECK(F("a - b", r).str() == "a - b");
  CHECK(F("3/4*c - (a+b)^2", r) == F("-a^2 - 2*a*b - b^2 + 3/4*c", r));
  CHECK_THROWS(F("a + d", r));
  CHECK_THROWS(F("a +", r));
  std::mt19937_64 g(7);
  for (int k = 0; k < 50; ++k) {
    const Form f = random_form(r, g);
    CHECK(F(f.str(), r) == f);
  }
}

TEST_CASE("ring axioms on random forms") {
  const Ring r = ring_abc();
  std::mt19937_64 g(11);
  for (int k = 0; k < 100; ++k) {
    const Form f = random_form(r, g), h = random_form(r, g), q = random_form(r, g);
    CHECK((f + h) + q == f + (h + q));
    CHECK((f * h) * q == f * (h * q));
    CHECK(f + h == h + f);
    CHECK(f * h == h * f);
    CHECK(f * (h + q) == f * h + f * q);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  const Ring r = ring_abc();
  std::mt19937_64 g(12);
  for (int k = 0; k < 100; ++k) {
    const Form f = random_form(r, g), h = random_form(r, g);
    const Point p = random_point(3, g);
    CHECK((f * h).evaluate(p) == f.evaluate(p) * h.evaluate(p));
    CHECK((f + h).evaluate(p) == f.evaluate(p) + h.evaluate(p));
  }
}

TEST_CASE("binary gcd divides its inputs and leaves coprime quotients") {
  const Ring r = ring_ab();
  std::mt19937_64 g(13);
  for (int k = 0; k < 60; ++k) {
    const Form common = random_binary(r, 1 + k % 3, g);
    std::vector<Form> inputs{common * random_binary(r, 2, g), common * random_binary(r, 3, g),
                             common * random_binary(r, 1, g)};
    const Form d = binary_gcd(inputs);
    CHECK(d.degree() >= common.degree());
    std::vector<Form> quotients;
    for (const auto& f : inputs) {
      const Form qf = divide_exact(f, d);
      CHECK(qf * d == f);
      quotients.push_back(qf);
    }
    CHECK(binary_gcd(quotients) == F("1", r));
  }
}

TEST_CASE("invertible substitution followed by its inverse is the identity") {
  const Ring r = ring_abc();
  std::mt19937_64 g(14);
  for (int k = 0; k < 30; ++k) {
    const RationalMatrix l = random_invertible(3, g);
    const RationalMatrix li = inverse(l);
    std::vector<Form> fwd, back;
    for (int i = 0; i < 3; ++i) {
      Form x(r), y(r);
      for (int j = 0; j < 3; ++j) {
        x += l(i, j) * Form::variable(r, j);
        y += li(i, j) * Form::variable(r, j);
      }
      fwd.push_back(x);
      back.push_back(y);
    }
    const Form f = random_form(r, g);
    const Form there = linear_substitute(f, fwd);
    CHECK(linear_substitute(there, back) == f);
  }
}

}  // TEST_SUITE
