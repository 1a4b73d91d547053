#pragma once

#include <nlohmann/json.hpp>

#include "sod/loci.hpp"
#include "sod/sigma.hpp"
#include "sod/splitbundle.hpp"

namespace sod {

// The Grassmannian of 2-planes in 5-space in its quadric presentation: the
// ring on the ten pair coordinates x_{ij} (1 <= i < j <= 5) together with
// the five 3-term quadric relations, ordered by ascending index 4-tuple.
struct PluckerModel {
  RingPtr ring;
  std::vector<Polynomial> quadrics;

  Ideal ideal() const { return make_ideal(ring, quadrics); }
};

PluckerModel build_plucker();

// A nodal quintic threefold cut out of the Grassmannian by three independent
// hyperplanes, presented in the seven surviving coordinates
// (x12, x14, x24, x34, x15, x25, x35). The node list carries the declared
// singular points in those coordinates; build_quintic checks they lie on the
// threefold, and classify_nodes certifies they are exactly the singular
// locus.
struct QuinticModel {
  int m = 0;  // number of nodes (1, 2, or 3)
  RingPtr ring;
  Ideal ideal;
  std::vector<std::vector<Rational>> nodes;
};

QuinticModel build_quintic(int m);

// Tangent data of one singular point.
struct NodeClass {
  std::vector<Rational> point;
  int tangent_dim = 0;  // embedded Zariski tangent space dimension
  int cone_rank = 0;    // rank of the tangent-cone quadric (0 if not a
                        // single quadric)
  bool ordinary_double_point = false;
};

// Classifies one singular point; throws SodError when the point does not lie
// on the singular locus (or not on the threefold at all).
NodeClass classify_node(const QuinticModel& X, const std::vector<Rational>& p);

struct NodeReport {
  Ideal singular_ideal;   // saturated ideal of the singular locus
  int singular_dim = -2;  // projective dimension (-2 = empty)
  Rational singular_degree;
  bool nodes_match = false;  // declared nodes exhaust the singular locus
  std::vector<NodeClass> nodes;
};

NodeReport classify_nodes(const QuinticModel& X);

// The curve of lines through the distinguished node: the threefold cut by
// the base locus of the projection away from that node's tangent space and
// by the vanishing of the node's own coordinate, saturated.
struct LinesCurveReport {
  Ideal ideal;      // saturated, in the 7-variable ring
  Rational degree;  // 3 in every case
  Rational genus;   // arithmetic genus, 0 in every case
  std::vector<std::vector<Rational>> singular_points;
  // For a connected nodal curve of arithmetic genus 0 with rational
  // components, Euler-characteristic additivity gives
  // #components = #nodes + 1; the count is reported on that basis.
  int components = 0;
};

LinesCurveReport lines_curve(int m);

// The small resolution fibered over the line: the bigraded model in
// k[x12, x14, x24, x34, x15, x25, x35][u, v] whose ideal is generated by the
// three proportionality relations v*x_i4 - u*x_i5 and the two quadrics
// inherited from the threefold. Grading row 0 is the fiber degree (the seven
// x's), row 1 the base degree (u, v).
struct FibrationModel {
  int m = 0;
  RingPtr ring;
  Ideal ideal;  // generators in the fixed order r1, r2, r3, q1, q2
};

FibrationModel build_fibration(int m);

// Change of base coordinates u -> a*u + b*v, v -> c*u + d*v, applied
// compatibly to the fiber coordinates (each pair (x_i4, x_i5) transforms the
// same way) with the two quadric generators re-mixed so the model keeps its
// canonical shape. Requires ad - bc != 0.
FibrationModel reparametrize_fibration(const FibrationModel& Y,
                                       const Rational& a, const Rational& b,
                                       const Rational& c, const Rational& d);

// Rewrites the two quadric generators as a single relative quadratic form on
// the rank-4 bundle with fiber coordinates (z0, z1, z2, z3), glued by
// z0 = x12, x_i4 = u*z_i, x_i5 = v*z_i. Self-checks: the factorization
// exists and is consistent, substituting the form back reproduces the
// fibration ideal exactly, and the rewriting matches on both affine charts
// (u = 1 and v = 1) of the base. Throws SodError when any check fails.
SigmaForm derive_sigma(const FibrationModel& Y);

// The blowdown consistency check: saturating the fibration ideal by the base
// coordinates and eliminating them recovers the threefold ideal.
bool fibration_contracts_to(const FibrationModel& Y, const QuinticModel& X);

struct FiberPoint {
  LinePoint pt;
  int multiplicity = 0;  // multiplicity as a root of the determinant form
  int corank = 0;        // 4 - rank of the fiber Gram matrix
};

struct FiberProfile {
  std::vector<FiberPoint> degenerate;  // one entry per rational root
  LinePoint probe;                     // deterministic non-root sample
  int generic_corank = 0;
  int max_corank = 0;
  int total_multiplicity = 0;  // degree of the determinant form
};

// Corank of the family of quadrics at every root of its determinant plus a
// generic probe. Throws UnsupportedError when the determinant vanishes
// identically or has irrational roots.
FiberProfile fiber_profile(const SigmaForm& s);

// Data of the distinguished section {x_i4 = x_i5 = 0, i = 1, 2, 3} of the
// fibration.
struct SectionReport {
  Ideal ideal;        // of the section inside the fibration ring
  int h_degree = 0;   // degree on the section of the relative hyperplane
  int f_degree = 0;   // degree on the section of a base fiber (1: a section)
  Rational chi;       // Euler characteristic of the section's structure sheaf
  bool smooth_fiber_points = false;  // every fiber quadric is smooth along
                                     // the section (nonzero gradient)
  SplitBundle conormal;              // splitting type of the conormal sheaf
  bool conormal_torsion_free = false;

  // Degree on the section of the restriction of O(a) (relative hyperplane)
  // twisted by O(b) pulled back from the base.
  int restrict_degree(int a, int b) const {
    return a * h_degree + b * f_degree;
  }
};

SectionReport section_data(const FibrationModel& Y);

nlohmann::ordered_json plucker_to_json(const PluckerModel& g);
nlohmann::ordered_json quintic_to_json(const QuinticModel& x);
nlohmann::ordered_json fibration_to_json(const FibrationModel& y);

}  // namespace sod
