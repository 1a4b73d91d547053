#pragma once

#include <array>
#include <vector>

#include "sod/findim.hpp"
#include "sod/gclifford.hpp"
#include "sod/ideal.hpp"
#include "sod/poly.hpp"

namespace sod {

// ---------------------------------------------------------------------------
// Pointwise layer: one quadratic space, one isotropic subspace.
// ---------------------------------------------------------------------------

// A quadratic space together with a subspace on which the form vanishes
// identically (columns of w). Construction checks linear independence and
// isotropy exactly.
struct IsotropicData {
  QuadraticSpace q;
  Mat w;

  static IsotropicData of(QuadraticSpace q, Mat w);
};

// The right ideal of the Clifford algebra generated by the top product of a
// basis of the isotropic subspace, split into its even and odd halves. Both
// halves are right modules over the even Clifford algebra; the bases are
// columns in the coordinates of the full algebra. Construction verifies that
// tensoring the even half with the odd part of the algebra over the even
// part gives exactly the odd half (an isomorphism certified by exact linear
// algebra), recorded in parity_exchange_ok.
struct CliffordIdealModule {
  FinDimAlgebra cl;       // full Clifford algebra of q
  FinDimAlgebra even_cl;  // its even part
  Mat even_basis, odd_basis;
  AlgebraModule even, odd;
  bool parity_exchange_ok = false;
};

CliffordIdealModule clifford_ideal(const IsotropicData& d);

// Right multiplication by the generic vector sum x_i v_i maps each half of
// the ideal into the other; on the chosen bases this gives two matrices of
// linear forms whose products both ways equal the form times the identity.
// The factorization is verified symbolically during construction.
struct SpinorPresentation {
  IsotropicData data;
  CliffordIdealModule mod;
  RingPtr ring;       // one coordinate per generator of the space
  Polynomial q_poly;  // the quadratic form as a polynomial
  std::vector<std::vector<Polynomial>> d0;  // even half -> odd half
  std::vector<std::vector<Polynomial>> d1;  // odd half -> even half
};

SpinorPresentation delta_presentation(const IsotropicData& d);

// Hilbert data of the cokernel of d0 as a graded module over the coordinate
// ring of the quadric surface: graded dimensions over a window, the
// quadratic fit r*(t+1)^2 + d*(t+1) + e, the sheaf rank r, and the halved
// linear coefficient d/2 (the hyperplane degree of the determinant line
// bundle). Requires a four-generator space (a surface quadric).
struct SpinorRankData {
  long rank = 0;
  long det_degree = 0;
  std::vector<long> graded_dims;  // degrees 0..window
  bool fit_consistent = false;
};

SpinorRankData spinor_rank(const SpinorPresentation& p);

// Zero-locus and resolution checks for the section of the cokernel sheaf
// attached to a smooth point v of the quadric (q(v) = 0, gradient nonzero,
// corank at most two, four generators):
//  - in the original coordinates, the components of the section column cut
//    out exactly the point: the saturation of (q, components) equals the
//    ideal of v (column_matches_point);
//  - in the adapted basis T = [v | completion], the column is literally
//    (y2, y3, y4, 0) on the echelon basis of the ideal (column_normalized);
//  - the four-term complex
//      0 -> R(-1) --(.v)--> M(-1) --(top row)--> R -> R/I_point -> 0
//    over R = k[y]/(q) is exact in every degree <= bound, by exact rank
//    computations of the graded pieces (exact).
struct KoszulReport {
  int corank = 0;
  Mat base_change;                          // columns: v, then completion
  std::vector<Polynomial> section_column;   // original coordinates
  bool column_matches_point = false;
  bool column_normalized = false;
  std::vector<long> degrees_checked;
  bool exact = false;
};

KoszulReport koszul_check(const QuadraticSpace& q, const AlgVec& v,
                          int bound = 8);

// ---------------------------------------------------------------------------
// Relative layer: the graded Clifford algebra of a sigma form over the line.
// ---------------------------------------------------------------------------

// The right ideal generated by the first frame generator f0 (the isotropic
// direction of the distinguished section), split by parity: the masks of its
// PBW basis and the split bundles they span. Construction verifies the mask
// set is closed under right multiplication by every generator.
struct RelativeIdealData {
  std::vector<unsigned> even_masks, odd_masks;
  SplitBundle i0, i1;
};

RelativeIdealData relative_clifford_ideal(const GradedCliffordData& g);

// Right multiplication by the tautological odd element sum z_k f_k on the
// PBW basis, as the two parity blocks: d0[t][s][k] is the coefficient form
// of the odd mask t in (even mask s) * f_k, and d1 the other way. The
// construction verifies symbolically that squaring gives the quadratic form
// of sigma times the identity on both blocks.
struct RelativeDelta {
  std::vector<unsigned> even_masks, odd_masks;
  std::vector<std::vector<std::array<BinForm, 4>>> d0, d1;
};

RelativeDelta relative_delta(const GradedCliffordData& g);

// Fiberwise evaluation of a parity block at a point of the line and a
// fiber vector z (even-to-odd when even_to_odd, else odd-to-even).
Mat relative_delta_eval(const RelativeDelta& rd, const SigmaForm& s,
                        const LinePoint& p, const AlgVec& z, bool even_to_odd);

// Hypercohomology h^0..h^3 of the twisted two-term relative complex
//   O_rel(a-2) (x) part0 (x) O(b+l)  ->  O_rel(a-1) (x) part1 (x) O(b+l)
// on the m-th model, pushed to the line (requires a >= -1). With
// ideal_part the parts are the parity halves of the f0-ideal, otherwise the
// full even and odd halves of the algebra.
std::array<long, 4> spinor_twist_cohomology(int m, int a, int b, int l = 1,
                                            bool ideal_part = false);

}  // namespace sod
