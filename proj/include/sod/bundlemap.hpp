#pragma once

#include "sod/binform.hpp"
#include "sod/mat.hpp"
#include "sod/splitbundle.hpp"

namespace sod {

// Map of split bundles on the line. Entry (i, j) is the component from the
// j-th source summand O(s_j) into the i-th target summand O(d_i), which is
// multiplication by a form of degree d_i - s_j (or zero; forced zero when
// that degree is negative).
struct BundleMap {
  SplitBundle src, dst;
  std::vector<std::vector<BinForm>> entry;

  static BundleMap make(SplitBundle src, SplitBundle dst,
                        std::vector<std::vector<BinForm>> entries);
  static BundleMap zero(SplitBundle src, SplitBundle dst);

  // The induced map H0(src(t)) -> H0(dst(t)) over the monomial bases
  // (u^{d-k} v^k in each summand, k ascending).
  Mat h0_matrix(int t) const;

  // Fiberwise evaluation at a point of the line.
  Mat eval(const LinePoint& p) const;

  BundleMap transpose() const;
  BundleMap twist(int b) const;

  // Composition (this after g).
  BundleMap compose(const BundleMap& g) const;
};

// Dimensions and offsets of the degree-t section space of each summand.
std::vector<long> summand_h0_dims(const SplitBundle& b, int t);

struct TorsionPoint {
  LinePoint pt;
  int length = 0;
};

struct MapAnalysis {
  std::size_t generic_rank = 0;
  SplitBundle kernel;      // the subsheaf ker(f), a subbundle
  SplitBundle coker_free;  // free part of coker(f)
  std::vector<TorsionPoint> torsion;  // torsion of coker(f) at rational points
  long torsion_length() const {
    long s = 0;
    for (const auto& t : torsion) s += t.length;
    return s;
  }
};

// Exact kernel/cokernel decomposition of a map of split bundles. The kernel
// twists come from second differences of exact section-space dimensions, the
// free cokernel part is the dual of the kernel of the transpose, and torsion
// lengths are vanishing orders of the gcd of the generic-rank minors.
// Torsion supported at irrational points raises UnsupportedError.
MapAnalysis map_kernel_cokernel(const BundleMap& f);

}  // namespace sod
