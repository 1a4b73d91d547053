#pragma once

#include <vector>

#include "sod/binform.hpp"
#include "sod/mat.hpp"

namespace sod {

// Symmetric 4x4 matrix of binary forms describing a family of quadratic
// forms over the line, with the degree pattern of a symmetric pairing on
// O + O(-1)^3 twisted by O(-1): the (0,0) entry vanishes identically (the
// distinguished first direction is isotropic), the remaining first-row
// entries are constants, and the lower-right 3x3 block is linear.
struct SigmaForm {
  std::vector<std::vector<BinForm>> entry;  // 4x4

  static SigmaForm of(std::vector<std::vector<BinForm>> entry);

  // Gram matrix of the fiber form at a point of the line.
  Mat eval(const LinePoint& p) const;

  // Substitute u -> a*u + b*v, v -> c*u + d*v (requires ad - bc != 0).
  SigmaForm reparametrize(const Rational& a, const Rational& b,
                          const Rational& c, const Rational& d) const;

  // Determinant of the matrix of forms; a binary quadratic by the degree
  // pattern.
  BinForm det_form() const;

  bool operator==(const SigmaForm& o) const { return entry == o.entry; }
};

// The m-th member (m = 1, 2, 3) of the standard family of symmetric forms
// shared across the toolkit: entry (0,3) is the constant 1/2 and the middle
// block degenerates in three ways (two simple roots, one double root of
// corank one, one double root of corank two). The geometry layer re-derives
// exactly these matrices from the quintic models, so they can serve as the
// canonical inputs of the bundle-level computations.
SigmaForm sigma_model(int m);

}  // namespace sod
