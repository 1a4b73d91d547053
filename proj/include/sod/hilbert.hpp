#pragma once

#include <vector>

#include "sod/ideal.hpp"

namespace sod {

// Hilbert series data of S/I for a homogeneous ideal I under the standard
// grading. The series is N(T)/(1-T)^n; the reduced form divides out every
// (1-T) factor of N.
struct HilbertData {
  std::vector<Rational> numerator;          // N(T), denominator (1-T)^nvars
  std::vector<Rational> reduced_numerator;  // N~(T) with N~(1) != 0
  int denominator_power = 0;  // D in HS = N~/(1-T)^D = affine cone dimension
  int proj_dim = -2;          // D - 1; -2 flags the empty scheme
  Rational degree;            // N~(1)
  bool is_zero = false;       // S/I = 0

  // Hilbert polynomial coefficients, hp[k] the coefficient of t^k.
  std::vector<Rational> hp;
  Rational hp_at(long t) const;
  Rational chi() const { return hp_at(0); }
  // 1 - P(0); for a projective curve this is the arithmetic genus.
  Rational arithmetic_genus() const { return Rational(1) - hp_at(0); }

  // First values of the Hilbert function, h[t] = dim (S/I)_t.
  std::vector<long> h_function(std::size_t tmax, std::size_t nvars) const;
};

// Numerator of the Hilbert series of S/(monomial ideal), via pivot recursion.
std::vector<Rational> hilbert_numerator(std::vector<Monomial> gens,
                                        std::size_t nvars);

HilbertData hilbert_data(const Ideal& I, long budget = -1);
HilbertData hilbert_data(const GroebnerBasis& gb);

Rational binomial(const Rational& top, long k);

}  // namespace sod
