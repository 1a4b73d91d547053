#pragma once

#include <string>
#include <vector>

#include "sod/rational.hpp"

namespace sod {

// A direct sum of line bundles on the projective line, recorded by its twist
// multiset in weakly decreasing order. Every vector bundle on the line splits
// this way, so the multiset is a complete isomorphism invariant.
struct SplitBundle {
  std::vector<int> tw;

  static SplitBundle of(std::vector<int> twists);
  static SplitBundle line(int twist) { return of({twist}); }
  static SplitBundle trivial(std::size_t rank) {
    return of(std::vector<int>(rank, 0));
  }

  std::size_t rank() const { return tw.size(); }
  long degree() const;
  long h0() const;
  long h1() const;
  long chi() const { return h0() - h1(); }

  SplitBundle dual() const;
  SplitBundle twist(int b) const;
  SplitBundle direct_sum(const SplitBundle& o) const;
  SplitBundle tensor(const SplitBundle& o) const;
  SplitBundle sym(int a) const;
  SplitBundle wedge(int k) const;
  SplitBundle det() const;

  bool operator==(const SplitBundle& o) const { return tw == o.tw; }
  bool operator!=(const SplitBundle& o) const { return tw != o.tw; }

  // Canonical rendering, e.g. "O ⊕ O(-1)^3" or "0" for the zero bundle.
  std::string str() const;
};

}  // namespace sod
