#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "skewrank/form.hpp"

namespace skewrank {

/// Homogeneous ideal given by generators.
struct Ideal {
  Ring ring;
  std::vector<Form> generators;

  Ideal() = default;
  Ideal(Ring r, std::vector<Form> gens);
  bool is_zero() const;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis for degrevlex, monic, sorted by decreasing leading
/// monomial.
struct GroebnerBasis {
  Ideal ideal;
  std::vector<Form> basis;
  std::string order = "degrevlex";
  GroebnerStats stats;

  std::vector<Monomial> leading_monomials() const;
};

GroebnerBasis buchberger(const Ideal& ideal);

/// Remainder of f on division by G (zero iff f is in the ideal).
Form normal_form(const Form& f, const GroebnerBasis& g);

/// S-polynomial of two forms, monic leading terms assumed or not.
Form s_polynomial(const Form& f, const Form& g);

/// True iff the ideal has no zeros in projective space over the algebraic
/// closure. The zero ideal is never empty.
bool is_projectively_empty(const Ideal& ideal);
bool is_projectively_empty(const GroebnerBasis& g);

struct HilbertData {
  int dimension = -1;           // projective dimension; -1 for the empty scheme
  long degree = 0;              // leading coefficient of the Hilbert polynomial times dimension!
  bool stabilized = false;      // false when the window ended before stabilization
  std::vector<long> values;     // Hilbert function h(0), h(1), ...
};

/// Projective dimension read from the staircase of the leading-term ideal.
int projective_dimension(const GroebnerBasis& g);

/// Hilbert function of S/I in degrees 0..max_degree.
std::vector<long> hilbert_function(const GroebnerBasis& g, unsigned max_degree);

HilbertData hilbert_data(const GroebnerBasis& g);

class WrongDimension : public std::runtime_error {
 public:
  WrongDimension(int expected, int found);
  int expected;
  int found;
};

/// Degree of the scheme cut out by the ideal, which must have projective
/// dimension `expected_dim` (0 for points, 1 for curves). An empty scheme is
/// accepted in points mode and has degree 0.
long projective_degree(const Ideal& ideal, int expected_dim = 0);

}  // namespace skewrank
