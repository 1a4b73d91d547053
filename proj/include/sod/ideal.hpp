#pragma once

#include <vector>

#include "sod/groebner.hpp"

namespace sod {

struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> gens;
};

Ideal make_ideal(const RingPtr& ring, std::vector<Polynomial> gens);
Ideal parse_ideal(const RingPtr& ring, const std::vector<std::string>& texts);

GroebnerBasis ideal_gb(const Ideal& I, long budget = -1);

bool ideal_contains(const Ideal& I, const Polynomial& f, long budget = -1);
bool ideal_equal(const Ideal& I, const Ideal& J, long budget = -1);
bool ideal_is_homogeneous(const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);

// Intersection via the tag-variable trick: t*I + (1-t)*J in a ring with a
// fresh elimination variable, then eliminate t.
Ideal ideal_intersection(const Ideal& I, const Ideal& J, long budget = -1);

// Colon ideal (I : f), computed as (I intersect (f)) / f.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f, long budget = -1);
Ideal ideal_quotient(const Ideal& I, const Ideal& J, long budget = -1);

// Saturation (I : f^infinity). Homogeneous ideals saturated by a single
// variable use the degrevlex trick (one Groebner run with that variable
// least); everything else iterates colon ideals until stable.
Ideal ideal_saturation(const Ideal& I, const Polynomial& f, long budget = -1);
Ideal ideal_saturation(const Ideal& I, const Ideal& J, long budget = -1);

// Saturation by the irrelevant ideal of all variables, computed as the
// intersection over single-variable saturations.
Ideal saturate_irrelevant(const Ideal& I, long budget = -1);

// Generators of I not involving the listed variables, obtained from a
// Groebner basis under an order eliminating them. Stays in the same ring.
std::vector<Polynomial> eliminate_vars(const Ideal& I,
                                       const std::vector<std::size_t>& elim,
                                       long budget = -1);

// Eliminates the complement of `keep` and rewrites the result in the subring
// on the kept variables.
Ideal eliminate_to_subring(const Ideal& I, const std::vector<std::size_t>& keep,
                           long budget = -1);

// Vanishing ideal of a projective point given by homogeneous coordinates.
Ideal point_ideal(const RingPtr& ring, const std::vector<Rational>& coords);

bool vanishes_at(const Ideal& I, const std::vector<Rational>& coords);

}  // namespace sod
