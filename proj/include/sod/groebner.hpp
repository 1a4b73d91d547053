#pragma once

#include <vector>

#include "sod/poly.hpp"

namespace sod {

// Mutable process-wide default for the Buchberger S-pair budget. A run that
// would process more pairs than the budget throws BudgetExceeded instead of
// spinning.
long& default_spair_budget();

// Fully reduces f against the given polynomials (leading term first, then
// tail terms), scanning the list in order for each reduction step, so the
// result is deterministic. The list need not be a Groebner basis.
Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct GroebnerBasis {
  RingPtr ring;  // carries the order the basis was computed under
  std::vector<Polynomial> polys;  // reduced: monic, minimal, sorted by
                                  // ascending leading term
  long spairs_processed = 0;

  bool contains(const Polynomial& f) const;
};

// Buchberger with sugar selection and the Gebauer-Moeller pair criteria.
// The generators' ring determines the term order. budget < 0 means the
// process-wide default.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens,
                             long budget = -1);

}  // namespace sod
