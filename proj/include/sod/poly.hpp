#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sod/ring.hpp"

namespace sod {

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept sorted strictly descending in the ring's term order, with no zero
// coefficients, so equal polynomials have identical representations.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
  static Polynomial constant(const RingPtr& ring, const Rational& c);
  static Polynomial variable(const RingPtr& ring, std::size_t i);
  static Polynomial term(const RingPtr& ring, const Monomial& m,
                         const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }

  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  long total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(std::vector<long>* degree = nullptr) const;

  Rational coeff(const Monomial& m) const;
  bool depends_on(std::size_t var) const;
  int degree_in(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  Polynomial monic() const;
  // Integer-primitive normalization: clears denominators, divides by content,
  // and makes the leading coefficient positive.
  Polynomial primitive() const;

  // Maps variable i to images[i] (a polynomial over the target ring).
  Polynomial substitute(const RingPtr& target,
                        const std::vector<Polynomial>& images) const;

  Polynomial derivative(std::size_t var) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  // Exact quotient; throws if the divisor does not divide this exactly.
  Polynomial div_exact(const Polynomial& divisor) const;

  // Largest k with var^k dividing this (zero polynomial gives 0).
  int var_multiplicity(std::size_t var) const;
  Polynomial shift_var_down(std::size_t var, int k) const;

  // Same polynomial re-sorted for another ring with identical variables.
  Polynomial with_ring(const RingPtr& target) const;

  std::string str() const;

  // Appends a term without normalizing; call normalize() when done.
  void push_term(const Monomial& m, const Rational& c) {
    terms_.emplace_back(m, c);
  }
  void normalize();

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Parses an expression over the ring's variables: rational literals,
// parentheses, +, -, *, ^. Example: "x12*x34 - 1/2*x14^2".
Polynomial parse_poly(const RingPtr& ring, const std::string& text);

std::vector<Polynomial> parse_polys(const RingPtr& ring,
                                    const std::vector<std::string>& texts);

}  // namespace sod
