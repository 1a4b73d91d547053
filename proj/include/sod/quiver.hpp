#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sod/findim.hpp"

namespace sod {

// Quiver with monomial relations: a list of paths declared zero. Paths are
// written in traversal order, so a word (a, b) means "a then b" and needs
// target(a) == source(b).
struct QuiverPresentation {
  struct Arrow {
    std::size_t src = 0, dst = 0;  // 0-based vertex indices
    std::string label;
  };
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::size_t>> relations;  // arrow-index words

  static QuiverPresentation make(
      std::size_t vertices, std::vector<Arrow> arrows,
      std::vector<std::vector<std::size_t>> relations);
};

// Path algebra modulo the monomial relations. Basis: the trivial paths
// e1..en followed by the surviving composite paths in breadth-first order;
// a path survives when no contiguous subword is a relation. Multiplication
// concatenates composable paths and kills anything containing a relation.
// Throws UnsupportedError when a surviving path exceeds the length bound
// (default vertices * (arrows + 1)), which signals an infinite-dimensional
// algebra.
FinDimAlgebra path_algebra(const QuiverPresentation& q,
                           std::size_t length_bound = 0);

// Two-way chain quiver on n vertices: forward arrows a_i : i -> i+1 and
// backward arrows b_i : i+1 -> i with both round trips a_i b_i and b_i a_i
// declared zero. Its path algebra has the monotone paths as a basis, hence
// dimension n^2.
QuiverPresentation chain_quiver(std::size_t n);

// Simple right module at the given 0-based vertex: one-dimensional, the
// trivial path at the vertex acts by 1 and every other basis path by 0.
AlgebraModule quiver_simple(const FinDimAlgebra& pa, std::size_t vertex);

// Indecomposable projective right module e_v * A at the given vertex.
AlgebraModule quiver_projective(const FinDimAlgebra& pa, std::size_t vertex,
                                Mat* embedding = nullptr);

}  // namespace sod
