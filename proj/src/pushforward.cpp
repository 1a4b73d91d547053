#include "sod/pushforward.hpp"

#include <algorithm>
#include <map>

#include "sod/rational.hpp"

namespace sod {

std::vector<std::pair<std::array<int, 4>, int>> dual_frame_monomials(int k) {
  std::vector<std::pair<std::array<int, 4>, int>> out;
  if (k < 0) return out;
  for (int a0 = k; a0 >= 0; --a0)
    for (int a1 = k - a0; a1 >= 0; --a1)
      for (int a2 = k - a0 - a1; a2 >= 0; --a2) {
        const int a3 = k - a0 - a1 - a2;
        out.push_back({{a0, a1, a2, a3}, a1 + a2 + a3});
      }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) {
                     return x.second > y.second;
                   });
  return out;
}

BundleMap sigma_multiplication(const SigmaForm& s, int a, int b) {
  if (a < 2) throw SodError("both complex terms need a >= 2");
  const auto lo = dual_frame_monomials(a - 2);
  const auto hi = dual_frame_monomials(a);
  std::vector<int> stw, dtw;
  for (const auto& [mono, w] : lo) stw.push_back(w + b + 1);
  for (const auto& [mono, w] : hi) dtw.push_back(w + b);
  std::map<std::array<int, 4>, std::size_t> pos;
  for (std::size_t i = 0; i < hi.size(); ++i) pos[hi[i].first] = i;
  std::vector<std::vector<BinForm>> entries(
      hi.size(), std::vector<BinForm>(lo.size(), BinForm::zero()));
  for (std::size_t j = 0; j < lo.size(); ++j)
    for (int p = 0; p < 4; ++p)
      for (int r = p; r < 4; ++r) {
        BinForm c = s.entry[p][r];
        if (c.is_zero()) continue;
        if (p != r) c = c * Rational(2);
        std::array<int, 4> t = lo[j].first;
        ++t[p];
        ++t[r];
        entries[pos.at(t)][j] = c;
      }
  return BundleMap::make(SplitBundle::of(std::move(stw)),
                         SplitBundle::of(std::move(dtw)), std::move(entries));
}

FibPushforward sigma_pushforward(const SigmaForm& s, int a, int b) {
  if (a < -1)
    throw SodError("direct images are computed only in the window a >= -1");
  const SplitBundle none = SplitBundle::of({});
  if (a == -1) return {none, none};
  if (a < 2) {
    std::vector<int> dtw;
    for (const auto& [mono, w] : dual_frame_monomials(a)) dtw.push_back(w + b);
    return {SplitBundle::of(std::move(dtw)), none};
  }
  const MapAnalysis an = map_kernel_cokernel(sigma_multiplication(s, a, b));
  if (an.kernel.rank() != 0)
    throw SodError("multiplication by the form has an unexpected kernel");
  if (!an.torsion.empty())
    throw SodError("multiplication by the form has unexpected torsion");
  return {an.coker_free, none};
}

FibPushforward pm_pushforward(int m, int a, int b) {
  return sigma_pushforward(sigma_model(m), a, b);
}

std::array<long, 4> ym_cohomology(int m, int a, int b) {
  const FibPushforward p = pm_pushforward(m, a, b);
  return {p.r0.h0(), p.r0.h1() + p.r1.h0(), p.r1.h1(), 0};
}

}  // namespace sod
