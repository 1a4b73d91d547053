#pragma once

#include <map>
#include <utility>
#include <vector>

namespace sod {

// Rewrites coeff * f_{w[0]} f_{w[1]} ... into the PBW basis of strictly
// ascending products, accumulating into out (keyed by subset bitmask), using
// the relations
//   f_i f_j = -f_j f_i + 2 gram(i, j)   for i != j,
//   f_i f_i = gram(i, i).
// K needs +, binary *, unary -, and value-semantics zero handling in +;
// gram(i, j) returns K.
template <typename K, typename GramFn>
void clifford_accumulate(std::vector<int> word, K coeff, const GramFn& gram,
                         std::map<unsigned, K>& out) {
  std::vector<std::pair<std::vector<int>, K>> work;
  work.emplace_back(std::move(word), std::move(coeff));
  while (!work.empty()) {
    auto item = std::move(work.back());
    work.pop_back();
    const std::vector<int>& w = item.first;
    const K& c = item.second;
    std::size_t t = 0;
    bool ascending = true;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] >= w[i + 1]) {
        t = i;
        ascending = false;
        break;
      }
    if (ascending) {
      unsigned mask = 0;
      for (int g : w) mask |= (1u << static_cast<unsigned>(g));
      auto it = out.find(mask);
      if (it == out.end())
        out.emplace(mask, c);
      else
        it->second = it->second + c;
      continue;
    }
    if (w[t] == w[t + 1]) {
      std::vector<int> shorter(w);
      shorter.erase(shorter.begin() + t, shorter.begin() + t + 2);
      work.emplace_back(std::move(shorter), c * gram(w[t], w[t]));
    } else {
      std::vector<int> swapped(w);
      std::swap(swapped[t], swapped[t + 1]);
      std::vector<int> shorter(w);
      shorter.erase(shorter.begin() + t, shorter.begin() + t + 2);
      const K g = gram(w[t], w[t + 1]);
      work.emplace_back(std::move(shorter), c * (g + g));
      work.emplace_back(std::move(swapped), -c);
    }
  }
}

}  // namespace sod
