#pragma once

#include <cstddef>
#include <vector>

#include "sod/rational.hpp"

namespace sod {

// Dense matrix over the rationals. All eliminations are exact; pivots are
// chosen deterministically (first nonzero entry scanning down a column), so
// every derived object (rref, kernel basis, solutions) is canonical for a
// given input.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Rational& c) const;

  // Stacks o below this matrix (column counts must agree).
  Mat vstack(const Mat& o) const;
  // Places o to the right of this matrix (row counts must agree).
  Mat hstack(const Mat& o) const;

  Mat col(std::size_t j) const;
  Mat row(std::size_t i) const;

  bool is_zero() const;

  // Reduced row echelon form; if pivots is non-null it receives the pivot
  // column indices in order.
  Mat rref(std::vector<std::size_t>* pivots = nullptr) const;

  std::size_t rank() const;

  // Columns form a basis of the right kernel {x : Ax = 0}. The basis is the
  // canonical one read off the rref (free variable loops in column order).
  Mat kernel() const;

  // Solves Ax = b for one particular solution. Returns false if inconsistent.
  bool solve(const Mat& b, Mat* x) const;

  Rational det() const;

  // Intersection of column spaces: returns a matrix whose columns span
  // colspace(*this) intersected with colspace(o).
  Mat colspace_intersection(const Mat& o) const;

  // True if v (a column vector) lies in the column space.
  bool colspace_contains(const Mat& v) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

}  // namespace sod
