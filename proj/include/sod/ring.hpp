#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sod/monomial.hpp"

namespace sod {

// A polynomial ring context: variable names, a term order, and an integer
// multigrading (one weight row per grading component; the default is the
// standard grading where every variable has degree 1).
struct PolyRing {
  std::vector<std::string> names;
  MonomialOrder order;
  std::vector<std::vector<long>> grading;

  std::size_t nvars() const { return names.size(); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }

  std::vector<long> degree_vec(const Monomial& m) const {
    std::vector<long> d(grading.size(), 0);
    for (std::size_t r = 0; r < grading.size(); ++r)
      for (std::size_t i = 0; i < m.nvars(); ++i)
        d[r] += grading[r][i] * m.e[i];
    return d;
  }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names,
                  MonomialOrder order = MonomialOrder::degrevlex(),
                  std::vector<std::vector<long>> grading = {});

// The same variables and grading under a different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

// Appends fresh variables in front (used for elimination tags); grading rows
// are extended by the given weights (default 1 in every row).
RingPtr prepend_vars(const RingPtr& ring, std::vector<std::string> fresh,
                     MonomialOrder order);

// Ring on a subset of the variables (in the listed order), inheriting the
// matching grading columns; the order is degrevlex.
RingPtr subring(const RingPtr& ring, const std::vector<std::size_t>& keep);

}  // namespace sod
