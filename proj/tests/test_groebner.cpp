#include "doctest.h"
#include "helpers.hpp"

#include "skewrank/groebner.hpp"

using namespace testutil;

namespace {

Ideal ideal(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<Form> g;
  for (const char* s : gens) g.push_back(F(s, r));
  return Ideal(r, g);
}

std::vector<Form> substitute_all(const std::vector<Form>& forms, const RationalMatrix& l, const Ring& r) {
  std::vector<Form> images;
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    Form x(r);
    for (Eigen::Index j = 0; j < l.cols(); ++j) x += l(i, j) * Form::variable(r, j);
    images.push_back(x);
  }
  std::vector<Form> out;
  for (const auto& f : forms) out.push_back(linear_substitute(f, images));
  return out;
}

void check_s_pairs_reduce(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
      CHECK(normal_form(s_polynomial(gb.basis[i], gb.basis[j]), gb).is_zero());
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("small bases") {
  const Ring r2 = ring_ab();
  CHECK(buchberger(ideal(r2, {"a", "b"})).basis == std::vector<Form>{F("a", r2), F("b", r2)});
  CHECK(buchberger(ideal(r2, {"a^2-b^2", "a-b"})).basis == std::vector<Form>{F("a-b", r2)});
  CHECK(buchberger(ideal(r2, {"a*b", "a^2"})).basis == std::vector<Form>{F("a^2", r2), F("a*b", r2)});
  CHECK(buchberger(ideal(r2, {"2*a^2 + 4*a*b"})).basis == std::vector<Form>{F("a^2 + 2*a*b", r2)});
  CHECK_THROWS(buchberger(ideal(r2, {"a^2 + b"})));
}

TEST_CASE("reduced basis is canonical") {
  const Ring r = ring_abc();
  const auto g1 = buchberger(ideal(r, {"a^2 - b*c", "a*b - c^2", "b^2 - a*c"}));
  const auto g2 = buchberger(ideal(r, {"b^2 - a*c", "a^2 - b*c + (b^2 - a*c)", "a*b - c^2"}));
  CHECK(g1.basis == g2.basis);
  for (const auto& f : g1.basis) CHECK(f.leading_term().second == Rational(1));
  const auto lm = g1.leading_monomials();
  for (std::size_t i = 0; i < lm.size(); ++i)
    for (std::size_t j = 0; j < lm.size(); ++j)
      if (i != j) CHECK_FALSE(lm[i].divides(lm[j]));
}

TEST_CASE("normal form") {
  const Ring r = ring_abc();
  CHECK(normal_form(F("a-b", r), buchberger(ideal(r, {"a-b"}))).is_zero());
  CHECK(normal_form(F("c", r), buchberger(ideal(r, {"a", "b"}))) == F("c", r));
  CHECK(normal_form(F("a^2*b^2", r), buchberger(ideal(r, {"a*b"}))).is_zero());
  CHECK_THROWS(normal_form(F("a", ring_ab()), buchberger(ideal(r, {"a"}))));
}

TEST_CASE("projective emptiness") {
  const Ring r = ring_abc();
  CHECK(is_projectively_empty(ideal(r, {"a", "b", "c"})));
  CHECK_FALSE(is_projectively_empty(ideal(r, {"a", "b"})));
  CHECK_FALSE(is_projectively_empty(Ideal(r, {})));
  CHECK(is_projectively_empty(ideal(r, {"a^3", "b^2 - a*c", "c^4"})));

  const auto pi2 = get("pi2").matrix;
  CHECK(is_projectively_empty(Ideal(pi2.ring(), sub_pfaffians(pi2, 6))));
  const auto six = get("six_b").matrix;
  CHECK_FALSE(is_projectively_empty(Ideal(six.ring(), sub_pfaffians(six, 6))));
}

TEST_CASE("projective degree") {
  const Ring r = ring_abc();
  CHECK(projective_degree(ideal(r, {"a^2", "b"})) == 2);
  CHECK(projective_degree(ideal(r, {"a", "b"})) == 1);
  CHECK(projective_degree(ideal(r, {"a", "b", "c"})) == 0);
  CHECK(projective_degree(ideal(r, {"a*b", "c"})) == 2);
  CHECK(projective_degree(ideal(r, {"a^3 - b^3", "c^2 - a*b"})) == 6);
  CHECK_THROWS_AS(projective_degree(ideal(r, {"a*c - b^2"})), WrongDimension);

  const Ring r4 = make_ring({"a", "b", "c", "d"});
  // twisted cubic
  CHECK(projective_degree(ideal(r4, {"a*c - b^2", "a*d - b*c", "b*d - c^2"}), 1) == 3);
  CHECK(projective_degree(ideal(r4, {"a", "b^2 - c*d"}), 1) == 2);
  CHECK_THROWS_AS(projective_degree(ideal(r4, {"a", "b", "c"}), 1), WrongDimension);
}

TEST_CASE("hilbert data") {
  const Ring r = ring_abc();
  const auto h = hilbert_data(buchberger(ideal(r, {"a^2", "b"})));
  CHECK(h.dimension == 0);
  CHECK(h.degree == 2);
  CHECK(h.stabilized);
  CHECK(hilbert_function(buchberger(ideal(r, {"a^2", "b"})), 4) == std::vector<long>{1, 2, 2, 2, 2});
  CHECK(hilbert_function(buchberger(ideal(r, {"a"})), 3) == std::vector<long>{1, 2, 3, 4});
  CHECK(projective_dimension(buchberger(ideal(r, {"a*c - b^2"}))) == 1);
  CHECK(projective_dimension(buchberger(ideal(r, {"a", "b", "c"}))) == -1);
}

TEST_CASE("S-polynomials of a basis reduce to zero") {
  std::mt19937_64 g(31);
  const Ring r = ring_abc();
  for (int k = 0; k < 15; ++k) {
    std::vector<Form> gens;
    for (int i = 0; i < 3; ++i) {
      Form f(r);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a; b < 3; ++b) {
          std::vector<unsigned> e(3, 0);
          ++e[a];
          ++e[b];
          f += Form(r, {{Monomial(e), rand_rational(g, 3)}});
        }
      gens.push_back(f);
    }
    check_s_pairs_reduce(buchberger(Ideal(r, gens)));
  }
  for (const char* name : {"pi1", "pi4", "six_c"}) {
    const auto a = get(name).matrix;
    const auto gb = buchberger(Ideal(a.ring(), sub_pfaffians(a, static_cast<std::size_t>(generic_rank(a)))));
    check_s_pairs_reduce(gb);
  }
}

TEST_CASE("division remainder differs from the input by an ideal member") {
  std::mt19937_64 g(32);
  const Ring r = ring_abc();
  const auto gb = buchberger(ideal(r, {"a^2 - b*c", "b^3 - a*c^2"}));
  for (int k = 0; k < 40; ++k) {
    const Form f = random_form(r, g, 5, 4);
    const Form rem = normal_form(f, gb);
    CHECK(normal_form(f - rem, gb).is_zero());
    CHECK(normal_form(rem, gb) == rem);
  }
}

TEST_CASE("emptiness and degree are invariant under linear changes of variables") {
  std::mt19937_64 g(33);
  const Ring r = ring_abc();
  const std::vector<std::pair<Ideal, long>> cases{
      {ideal(r, {"a^2", "b"}), 2}, {ideal(r, {"a*b", "c"}), 2}, {ideal(r, {"a^3 - b^3", "c^2 - a*b"}), 6}};
  for (const auto& [id, deg] : cases)
    for (int k = 0; k < 5; ++k) {
      const Ideal moved(r, substitute_all(id.generators, random_invertible(3, g), r));
      CHECK(projective_degree(moved) == deg);
      CHECK_FALSE(is_projectively_empty(moved));
    }
  const auto pi2 = get("pi2").matrix;
  const auto pfs = sub_pfaffians(pi2, 6);
  for (int k = 0; k < 3; ++k)
    CHECK(is_projectively_empty(Ideal(pi2.ring(), substitute_all(pfs, random_invertible(3, g), pi2.ring()))));
}

TEST_CASE("ideals vanishing at a point are not empty") {
  std::mt19937_64 g(34);
  const Ring r = ring_abc();
  for (int k = 0; k < 20; ++k) {
    const Point p = random_point(3, g, 9);
    std::vector<Form> gens;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        const Form lin = p[j] * Form::variable(r, i) - p[i] * Form::variable(r, j);
        Form other(r);
        for (std::size_t v = 0; v < 3; ++v) other += rand_rational(g, 4) * Form::variable(r, v);
        gens.push_back(lin * other + lin * lin);
      }
    for (const auto& f : gens) REQUIRE(f.evaluate(p).is_zero());
    CHECK_FALSE(is_projectively_empty(Ideal(r, gens)));
  }
}

}  // TEST_SUITE
