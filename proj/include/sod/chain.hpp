#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sod/binform.hpp"
#include "sod/mat.hpp"

namespace sod {

// Fixed coordinate model for a chain of n projective lines: component i is a
// standard P^1 and the node between components i and i+1 sits at [0:1] of
// component i and [1:0] of component i+1.
//
// Points are named by (component, point), normalized so the node between i
// and i+1 is always written {i, [0:1]}.
struct ChainPoint {
  int comp = 1;
  LinePoint pt;

  static ChainPoint of(int comp, const LinePoint& pt);
  bool operator==(const ChainPoint& o) const {
    return comp == o.comp && pt == o.pt;
  }
  bool operator<(const ChainPoint& o) const;
  std::string str() const;
};

// The node between components i and i+1.
ChainPoint chain_node(int i);

// A line bundle on the subchain [lo..hi], pushed forward to the chain.
// deg[k] is the degree on component lo+k.
struct SubchainBundle {
  int lo = 1, hi = 1;
  std::vector<int> deg;

  int len() const { return hi - lo + 1; }
  int deg_on(int comp) const { return deg[comp - lo]; }
  bool operator==(const SubchainBundle& o) const {
    return lo == o.lo && hi == o.hi && deg == o.deg;
  }
  bool operator<(const SubchainBundle& o) const;
};

// A finite direct sum of subchain line bundles and skyscrapers on a chain of
// n components.
struct SheafOnChain {
  int n = 1;
  std::vector<SubchainBundle> lines;
  std::vector<ChainPoint> points;  // one entry per skyscraper summand

  static SheafOnChain zero(int n);
  static SheafOnChain line_bundle(int n, std::vector<int> deg);
  static SheafOnChain subchain(int n, int lo, int hi, std::vector<int> deg);
  static SheafOnChain skyscraper(int n, const ChainPoint& p);

  SheafOnChain direct_sum(const SheafOnChain& o) const;
  bool is_zero() const { return lines.empty() && points.empty(); }
  long chi() const;

  bool operator==(const SheafOnChain& o) const;
  std::string str() const;
};

// (h0, h1), by exact linear algebra: sections are tuples of binary forms on
// the components matching at the nodes; h1 comes from the combinatorial
// Euler characteristic chi = sum (d_i + 1) - (#nodes of the support).
std::pair<long, long> chain_cohomology(const SheafOnChain& f);

// Contraction of a set of pairwise non-adjacent components; each contracted
// component maps to a point of the target chain.
struct ChainContraction {
  int source_n = 2;
  std::vector<int> contracted;  // strictly increasing

  int target_n() const {
    return source_n - static_cast<int>(contracted.size());
  }
};

struct ChainImage {
  SheafOnChain r0, r1;
};

// Direct image and first higher direct image under a contraction, computed
// summand-wise: a component of degree 0 glues across, positive degree splits
// the support and leaves behind sections of the contracted fiber, negative
// degree forces vanishing at the adjacent nodes, and degree <= -2 puts the
// fiber's h1 into R1. Skyscrapers map to skyscrapers.
ChainImage chain_pushforward(const SheafOnChain& f, const ChainContraction& c);

// Ext^0..Ext^max_i between sheaves in the supported class. A line bundle on
// the full chain is locally free, so Ext^i(F, G) = H^i(G tensor F^-1); other
// shapes (subchain bundles, skyscrapers) are resolved by the built-in
// two-term resolution 0 -> K -> P -> F -> 0 with P a full-chain line bundle,
// and Ext read off the induced map Hom(P, G) -> Hom(K, G). Inputs needing
// Ext^1(P, G) != 0 or depth beyond max_i = 1 raise UnsupportedError.
std::vector<long> chain_ext(const SheafOnChain& f, const SheafOnChain& g,
                            int max_i);

}  // namespace sod
