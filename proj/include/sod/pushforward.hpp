#pragma once

#include <array>
#include <utility>
#include <vector>

#include "sod/bundlemap.hpp"
#include "sod/sigma.hpp"
#include "sod/splitbundle.hpp"

namespace sod {

// A sigma form cuts a family of quadric surfaces out of the projective
// bundle of O + O(-1)^3 over the line. Sections of the relative hyperplane
// twists of that family push down to the line through the two-term complex
//
//   S^{a-2}(O + O(1)^3) (x) O(b+1)  --(multiplication by sigma)-->
//   S^a(O + O(1)^3) (x) O(b),
//
// whose cokernel is the direct image of O_rel(a) (x) O(b) (symmetric powers
// of the dual frame; S^k = 0 for k < 0). For a >= -1 both terms have their
// fiberwise cohomology concentrated in degree zero, the complex is injective
// with locally free cokernel, and all higher direct images vanish.

// Degree-k monomial exponents of the dual frame with their twists, sorted by
// weakly decreasing twist (ties in lexicographic order). Exposed so relative
// complexes built elsewhere index symmetric powers the same way.
std::vector<std::pair<std::array<int, 4>, int>> dual_frame_monomials(int k);

// The multiplication-by-sigma complex itself, for a >= 2 (both terms
// nonzero).
BundleMap sigma_multiplication(const SigmaForm& s, int a, int b);

struct FibPushforward {
  SplitBundle r0, r1;
};

// Direct images R^0 and R^1 of O_rel(a) (x) O(b) along the family of s;
// requires a >= -1 (the window where the two-term complex computes them).
FibPushforward sigma_pushforward(const SigmaForm& s, int a, int b);

// The same for the m-th standard model.
FibPushforward pm_pushforward(int m, int a, int b);

// h^0..h^3 of O_rel(a) (x) O(b) on the total space of the m-th model,
// combining the direct images over the line degree by degree.
std::array<long, 4> ym_cohomology(int m, int a, int b);

}  // namespace sod
