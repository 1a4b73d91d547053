#pragma once

#include "sod/hilbert.hpp"
#include "sod/mat.hpp"

namespace sod {

std::vector<std::vector<Polynomial>> jacobian(const std::vector<Polynomial>& gens);

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

// All k x k minors of a polynomial matrix, zeros dropped.
std::vector<Polynomial> poly_minors(const std::vector<std::vector<Polynomial>>& m,
                                    std::size_t k);

// Ideal of the singular locus of V(I) for I of pure codimension `codim`:
// I plus the codim x codim Jacobian minors, saturated by the irrelevant
// ideal so that embedded irrelevant components do not pollute the answer.
Ideal singular_locus(const Ideal& I, std::size_t codim, long budget = -1);

struct TangentConeData {
  RingPtr chart_ring;       // affine chart coordinates around the point
  std::vector<std::size_t> chart_vars;  // ambient indices of the chart coords
  Ideal cone;               // ideal of the tangent cone at the origin
  int tangent_space_dim = 0;  // dimension of the embedded tangent space
  bool single_quadric = false;  // cone cut by one quadric after removing the
                                // linear forms
  int quadric_rank = 0;
  Polynomial quadric;  // the quadric in the free coordinates (when single)
};

// Tangent cone of the projective scheme V(I) at a rational point, computed in
// the affine chart of the first nonzero coordinate: dehomogenize, translate
// to the origin, re-homogenize a degrevlex basis, and run Buchberger under an
// order that makes the lowest-degree forms leading.
TangentConeData tangent_cone(const Ideal& I, const std::vector<Rational>& point,
                             long budget = -1);

// A node of a threefold: 4-dimensional tangent space and a rank-4 quadric
// tangent cone.
bool is_threefold_node(const TangentConeData& tc);

}  // namespace sod
