#include "sod/quiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace sod {

QuiverPresentation QuiverPresentation::make(
    std::size_t vertices, std::vector<Arrow> arrows,
    std::vector<std::vector<std::size_t>> relations) {
  std::set<std::string> labels;
  for (const auto& a : arrows) {
    if (a.src >= vertices || a.dst >= vertices)
      throw SodError("arrow endpoint out of range");
    if (!labels.insert(a.label).second)
      throw SodError("duplicate arrow label " + a.label);
  }
  for (const auto& rel : relations) {
    if (rel.empty()) throw SodError("empty relation path");
    for (std::size_t i = 0; i < rel.size(); ++i) {
      if (rel[i] >= arrows.size()) throw SodError("relation arrow index");
      if (i > 0 && arrows[rel[i - 1]].dst != arrows[rel[i]].src)
        throw SodError("relation path is not composable");
    }
  }
  QuiverPresentation q;
  q.vertices = vertices;
  q.arrows = std::move(arrows);
  q.relations = std::move(relations);
  return q;
}

namespace {

// True if some contiguous subword of w equals a relation.
bool word_dies(const QuiverPresentation& q, const std::vector<std::size_t>& w) {
  for (const auto& rel : q.relations) {
    if (rel.size() > w.size()) continue;
    for (std::size_t s = 0; s + rel.size() <= w.size(); ++s)
      if (std::equal(rel.begin(), rel.end(), w.begin() + s)) return true;
  }
  return false;
}

std::string word_label(const QuiverPresentation& q,
                       const std::vector<std::size_t>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[w[i]].label;
  }
  return s;
}

}  // namespace

FinDimAlgebra path_algebra(const QuiverPresentation& q,
                           std::size_t length_bound) {
  if (q.vertices == 0) throw SodError("path algebra needs a vertex");
  if (length_bound == 0) length_bound = q.vertices * (q.arrows.size() + 1);

  // Breadth-first enumeration of surviving paths. A trivial path is encoded
  // by an empty word plus its vertex.
  struct Path {
    std::size_t src, dst;
    std::vector<std::size_t> word;
  };
  std::vector<Path> paths;
  std::map<std::vector<std::size_t>, std::size_t> index_of_word;
  for (std::size_t v = 0; v < q.vertices; ++v)
    paths.push_back({v, v, {}});
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < paths.size(); ++i) queue.push_back(i);
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    const Path p = paths[at];
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].src != p.dst) continue;
      std::vector<std::size_t> w = p.word;
      w.push_back(a);
      if (word_dies(q, w)) continue;
      if (w.size() > length_bound)
        throw UnsupportedError(
            "path algebra has surviving paths beyond the length bound; "
            "it is likely infinite-dimensional");
      const std::size_t idx = paths.size();
      paths.push_back({p.src, q.arrows[a].dst, std::move(w)});
      index_of_word.emplace(paths.back().word, idx);
      queue.push_back(idx);
    }
  }

  const std::size_t n = paths.size();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < q.vertices; ++i)
    labels[i] = "e" + std::to_string(i + 1);
  for (std::size_t i = q.vertices; i < n; ++i)
    labels[i] = word_label(q, paths[i].word);

  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>>
      table(n, std::vector<std::vector<std::pair<std::size_t, Rational>>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (paths[i].dst != paths[j].src) continue;
      std::vector<std::size_t> w = paths[i].word;
      w.insert(w.end(), paths[j].word.begin(), paths[j].word.end());
      if (word_dies(q, w)) continue;
      std::size_t k;
      if (w.empty()) {
        k = paths[i].src;
      } else {
        const auto it = index_of_word.find(w);
        if (it == index_of_word.end())
          throw SodError("path product escaped the enumerated basis");
        k = it->second;
      }
      table[i][j].push_back({k, Rational(1)});
    }

  AlgVec unit(n, Rational(0));
  for (std::size_t v = 0; v < q.vertices; ++v) unit[v] = 1;
  return FinDimAlgebra::make(std::move(labels), std::move(table),
                             std::move(unit));
}

QuiverPresentation chain_quiver(std::size_t n) {
  if (n == 0) throw SodError("chain quiver needs a vertex");
  std::vector<QuiverPresentation::Arrow> arrows;
  for (std::size_t i = 0; i + 1 < n; ++i)
    arrows.push_back({i, i + 1, "a" + std::to_string(i + 1)});
  for (std::size_t i = 0; i + 1 < n; ++i)
    arrows.push_back({i + 1, i, "b" + std::to_string(i + 1)});
  std::vector<std::vector<std::size_t>> rels;
  const std::size_t m = n - 1;  // arrows a_* occupy [0, m), b_* occupy [m, 2m)
  for (std::size_t i = 0; i + 1 < n; ++i) {
    rels.push_back({i, m + i});      // a_i then b_i
    rels.push_back({m + i, i});      // b_i then a_i
  }
  return QuiverPresentation::make(n, std::move(arrows), std::move(rels));
}

AlgebraModule quiver_simple(const FinDimAlgebra& pa, std::size_t vertex) {
  const std::size_t idx = pa.index_of("e" + std::to_string(vertex + 1));
  std::vector<Mat> act(pa.dim(), Mat(1, 1));
  act[idx].at(0, 0) = 1;
  return AlgebraModule::make(1, std::move(act));
}

AlgebraModule quiver_projective(const FinDimAlgebra& pa, std::size_t vertex,
                                Mat* embedding) {
  const std::size_t idx = pa.index_of("e" + std::to_string(vertex + 1));
  return right_ideal(pa, pa.basis_vec(idx), embedding);
}

}  // namespace sod
