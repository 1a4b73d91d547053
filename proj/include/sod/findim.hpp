#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sod/mat.hpp"
#include "sod/rational.hpp"

namespace sod {

using AlgVec = std::vector<Rational>;

// Finite-dimensional associative unital algebra over the rationals, given by
// structure constants on a labeled basis. All data is exact and immutable
// after construction.
struct FinDimAlgebra {
  std::vector<std::string> basis;
  // table[i][j] is the sparse expansion of basis[i] * basis[j] as
  // (basis index, coefficient) pairs with nonzero coefficients.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>>
      table;
  AlgVec unit;

  static FinDimAlgebra make(
      std::vector<std::string> basis,
      std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>>
          table,
      AlgVec unit);

  std::size_t dim() const { return basis.size(); }
  std::size_t index_of(const std::string& label) const;

  AlgVec zero_vec() const { return AlgVec(dim(), Rational(0)); }
  AlgVec basis_vec(std::size_t i) const;
  AlgVec mul(const AlgVec& x, const AlgVec& y) const;

  // Matrix of left (right) multiplication by x on coordinate columns.
  Mat left_mult(const AlgVec& x) const;
  Mat right_mult(const AlgVec& x) const;

  bool is_associative() const;
  bool satisfies_unit_laws() const;

  // Columns form the canonical basis of the center (the joint kernel of the
  // commutator maps with all basis elements).
  Mat center() const;

  // Columns form a basis of the Jacobson radical. Over a characteristic-zero
  // field this is the null space of the trace form (i, j) -> tr(L_i L_j) of
  // the left regular representation.
  Mat radical() const;

  // Basis labels, unit coordinates and the nonzero structure constants as
  // [i, j, k, "c"] quadruples (exact rationals rendered as strings).
  nlohmann::ordered_json to_json() const;
};

// Helpers for coordinate vectors.
AlgVec vec_add(const AlgVec& x, const AlgVec& y);
AlgVec vec_sub(const AlgVec& x, const AlgVec& y);
AlgVec vec_scale(const AlgVec& x, const Rational& c);
bool vec_is_zero(const AlgVec& x);
Mat col_of(const AlgVec& x);

// Quadratic space over the rationals: q(x) = x^T gram x with gram symmetric,
// so the polarization b(x, y) = x^T gram y satisfies q(x) = b(x, x) and
// x*y + y*x = 2 b(x, y) in the Clifford algebra below.
struct QuadraticSpace {
  Mat gram;
  std::vector<std::string> labels;

  static QuadraticSpace of(Mat gram, std::vector<std::string> labels);
  std::size_t n() const { return labels.size(); }
  Rational q_of(const AlgVec& x) const;
  Rational b_of(const AlgVec& x, const AlgVec& y) const;
};

// Clifford algebra of q, of dimension 2^n, with the PBW basis of strictly
// ascending products of the given (not necessarily orthogonal) generators.
// Basis order: subset bitmasks ascending; label of a subset concatenates the
// generator labels, the empty set is "1". Z/2-graded by subset parity.
FinDimAlgebra clifford_algebra(const QuadraticSpace& q);

// Even part of clifford_algebra(q): the span of the even-parity PBW basis
// monomials, of dimension 2^(n-1); the basis keeps the mask order.
FinDimAlgebra even_clifford_algebra(const QuadraticSpace& q);

// Subset masks indexing the basis of even_clifford_algebra, in basis order.
std::vector<unsigned> even_clifford_masks(std::size_t n);

// A basis of the space that is orthogonal for q (columns), found by symmetric
// elimination; degenerate directions come out with q = 0.
Mat orthogonal_basis(const QuadraticSpace& q);

// Right module over A: act[k] is the matrix of the right action of basis
// element k on coordinate columns, so acting by b_i then b_j composes as
// act[j] * act[i].
struct AlgebraModule {
  std::size_t dim = 0;
  std::vector<Mat> act;

  static AlgebraModule make(std::size_t dim, std::vector<Mat> act);
  Mat action_of(const FinDimAlgebra& A, const AlgVec& a) const;
  bool valid(const FinDimAlgebra& A) const;
};

AlgebraModule regular_module(const FinDimAlgebra& A);
AlgebraModule free_module(const FinDimAlgebra& A, std::size_t r);

// Submodule of M generated by the columns of gens. If embedding is non-null
// it receives the chosen basis of the submodule as columns in M's
// coordinates.
AlgebraModule submodule(const FinDimAlgebra& A, const AlgebraModule& M,
                        const Mat& gens, Mat* embedding = nullptr);

// Right ideal x·A inside the regular module.
AlgebraModule right_ideal(const FinDimAlgebra& A, const AlgVec& x,
                          Mat* embedding = nullptr);

// Dimension of Hom_A(M, N) by solving the intertwining linear system
// directly (independent of any resolution machinery).
long hom_dim(const FinDimAlgebra& A, const AlgebraModule& M,
             const AlgebraModule& N);

struct ExtResult {
  std::vector<long> dims;   // Ext^0 .. Ext^max_i
  bool stabilized = false;  // the resolution reached a zero kernel
  std::size_t steps = 0;    // index of the last free module built
};

// Ext^0..Ext^max_i via a free resolution of M with minimal generator counts
// (generators lift bases of the radical quotients, so ranks never inflate).
// Any projective resolution computes Ext exactly; depth caps the number of
// resolution steps and must be at least max_i + 1.
ExtResult module_ext(const FinDimAlgebra& A, const AlgebraModule& M,
                     const AlgebraModule& N, std::size_t max_i,
                     std::size_t depth = 12);

// Witness report for the 2x2 matrix-unit structure of the even Clifford
// algebra of q = x1x2 + h(x3, x4) on basis (v1, v2, e3, e4) with h nonzero.
// The hyperbolic pair produces idempotents eps1 = v1v2, eps2 = v2v1; the
// off-diagonal units use a vector w in span{e3, e4} with q(w) != 0. When a
// rational w with q(w) = 1 exists, the involution pair s = e1e2, t = e2w
// (e1 = v1+v2, e2 = v2-v1) is constructed and the four matrix-unit
// identities and the center-action spans are verified as well.
struct MatrixUnitReport {
  bool unit_mode_ok = false;   // matrix-unit identities for eps/E12/E21
  bool qfex_ran = false;       // a rational unit vector in span{e3,e4} exists
  std::vector<std::string> verified;  // identity names, in verification order
};

MatrixUnitReport verify_matrix_identification(const QuadraticSpace& q);

// Six-summand decomposition of the even Clifford algebra when the (e3, e4)
// part of q vanishes identically: with d the product of an orthogonal basis
// completing (v1+v2, v2-v1), the algebra splits as Z·v1v2 + Z·v2v1 (each of
// dimension 2) plus Z·v1e3, Z·v1e4, Z·v2e3, Z·v2e4 (each of dimension 1,
// killed by d), and the sum is direct. Returns the first failed stage name,
// or an empty string on success.
std::string verify_six_summand_decomposition(const QuadraticSpace& q);

}  // namespace sod
