#include "sod/mat.hpp"

namespace sod {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw SodError("matrix product shape mismatch");
  Mat p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (sgn(o.at(k, j)) != 0) p.at(i, j) += aik * o.at(k, j);
      }
    }
  return p;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw SodError("matrix sum shape mismatch");
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
  return s;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw SodError("matrix difference shape mismatch");
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
  return s;
}

Mat Mat::scaled(const Rational& c) const {
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * c;
  return s;
}

Mat Mat::vstack(const Mat& o) const {
  if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0)
    throw SodError("vstack column mismatch");
  const std::size_t c = rows_ ? cols_ : o.cols_;
  Mat s(rows_ + o.rows_, c);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) s.at(rows_ + i, j) = o.at(i, j);
  return s;
}

Mat Mat::hstack(const Mat& o) const {
  if (rows_ != o.rows_ && cols_ != 0 && o.cols_ != 0)
    throw SodError("hstack row mismatch");
  const std::size_t r = cols_ ? rows_ : o.rows_;
  Mat s(r, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) s.at(i, cols_ + j) = o.at(i, j);
  return s;
}

Mat Mat::col(std::size_t j) const {
  Mat c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

Mat Mat::row(std::size_t i) const {
  Mat r(1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Mat Mat::rref(std::vector<std::size_t>* pivots) const {
  Mat m = *this;
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (sgn(m.at(i, c)) != 0) {
        piv = i;
        break;
      }
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(m.at(i, c)) == 0) continue;
      const Rational f = m.at(i, c);
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t Mat::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

Mat Mat::kernel() const {
  std::vector<std::size_t> piv;
  const Mat r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(cols_, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const std::size_t fc = free_cols[f];
    k.at(fc, f) = 1;
    for (std::size_t p = 0; p < piv.size(); ++p) k.at(piv[p], f) = -r.at(p, fc);
  }
  return k;
}

bool Mat::solve(const Mat& b, Mat* x) const {
  if (b.rows() != rows_ || b.cols() != 1) throw SodError("solve shape mismatch");
  Mat aug = hstack(b);
  std::vector<std::size_t> piv;
  const Mat r = aug.rref(&piv);
  for (auto c : piv)
    if (c == cols_) return false;
  if (x) {
    *x = Mat(cols_, 1);
    for (std::size_t p = 0; p < piv.size(); ++p) x->at(piv[p], 0) = r.at(p, cols_);
  }
  return true;
}

Rational Mat::det() const {
  if (rows_ != cols_) throw SodError("det of non-square matrix");
  Mat m = *this;
  Rational d = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = rows_;
    for (std::size_t i = c; i < rows_; ++i)
      if (sgn(m.at(i, c)) != 0) {
        piv = i;
        break;
      }
    if (piv == rows_) return Rational(0);
    if (piv != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    const Rational inv = Rational(1) / m.at(c, c);
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (sgn(m.at(i, c)) == 0) continue;
      const Rational f = m.at(i, c) * inv;
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

Mat Mat::colspace_intersection(const Mat& o) const {
  if (rows_ != o.rows_) throw SodError("colspace intersection shape mismatch");
  // Solve [A | -B] (x, y)^T = 0; intersection vectors are A x.
  const Mat combined = hstack(o.scaled(Rational(-1)));
  const Mat k = combined.kernel();
  Mat xpart(cols_, k.cols());
  for (std::size_t i = 0; i < cols_; ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) xpart.at(i, j) = k.at(i, j);
  Mat span = (*this) * xpart;
  // Reduce to a basis.
  const Mat rr = span.transpose().rref();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rr.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < rr.cols(); ++j)
      if (sgn(rr.at(i, j)) != 0) nz = true;
    if (nz) keep.push_back(i);
  }
  Mat basis(rows_, keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) basis.at(i, j) = rr.at(keep[j], i);
  return basis;
}

bool Mat::colspace_contains(const Mat& v) const {
  Mat x;
  return solve(v, &x);
}

}  // namespace sod
