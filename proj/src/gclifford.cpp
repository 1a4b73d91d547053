#include "sod/gclifford.hpp"

#include <algorithm>
#include <array>
#include <iterator>

#include "sod/cliffmul.hpp"

namespace sod {

namespace {

constexpr std::array<int, 4> kFrameTwist = {0, -1, -1, -1};

int popcount(unsigned m) { return __builtin_popcount(m); }

std::vector<int> mask_word(unsigned mask) {
  std::vector<int> w;
  for (int i = 0; i < 4; ++i)
    if (mask & (1u << i)) w.push_back(i);
  return w;
}

int floordiv2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

void prune_zeros(std::map<unsigned, BinForm>& x) {
  for (auto it = x.begin(); it != x.end();)
    it = it->second.is_zero() ? x.erase(it) : std::next(it);
}

// The PBW expansion of the full antisymmetrization of f0 f1 f2 f3.
std::map<unsigned, BinForm> antisym_top(const GradedCliffordData& g) {
  std::array<int, 4> perm = {0, 1, 2, 3};
  std::map<unsigned, BinForm> acc;
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inv;
    std::map<unsigned, BinForm> term = {
        {1u << perm[0], BinForm::constant(1)}};
    for (int i = 1; i < 4; ++i) {
      const std::map<unsigned, BinForm> f = {
          {1u << perm[i], BinForm::constant(1)}};
      term = g.mul(term, f);
    }
    const Rational s = rat(inv % 2 == 0 ? 1 : -1, 24);
    for (const auto& [mask, c] : term) {
      const BinForm add = c * s;
      const auto it = acc.find(mask);
      if (it == acc.end())
        acc.emplace(mask, add);
      else
        it->second = it->second + add;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  prune_zeros(acc);
  return acc;
}

}  // namespace

std::map<unsigned, BinForm> GradedCliffordData::mul(
    const std::map<unsigned, BinForm>& x,
    const std::map<unsigned, BinForm>& y) const {
  std::map<unsigned, BinForm> out;
  for (const auto& [s, cx] : x)
    for (const auto& [t, cy] : y) {
      const BinForm c = cx * cy;
      if (c.is_zero()) continue;
      for (const auto& [u, m] : table[s][t]) {
        const BinForm add = c * m;
        const auto it = out.find(u);
        if (it == out.end())
          out.emplace(u, add);
        else
          it->second = it->second + add;
      }
    }
  prune_zeros(out);
  return out;
}

GradedCliffordData graded_clifford(const SigmaForm& sigma) {
  GradedCliffordData g;
  g.sigma = sigma;
  g.dtw.resize(16);
  g.twist.resize(16);
  for (unsigned m = 0; m < 16; ++m) {
    int wsum = 0;
    for (int i = 0; i < 4; ++i)
      if (m & (1u << i)) wsum += kFrameTwist[i];
    g.dtw[m] = 2 * wsum + popcount(m);
    g.twist[m] = floordiv2(g.dtw[m]);
  }
  const auto gram = [&sigma](int a, int b) { return sigma.entry[a][b]; };
  g.table.assign(16, std::vector<std::vector<std::pair<unsigned, BinForm>>>(
                         16));
  for (unsigned s = 0; s < 16; ++s)
    for (unsigned t = 0; t < 16; ++t) {
      std::vector<int> word = mask_word(s);
      const std::vector<int> wt = mask_word(t);
      word.insert(word.end(), wt.begin(), wt.end());
      std::map<unsigned, BinForm> out;
      clifford_accumulate(std::move(word), BinForm::constant(1), gram, out);
      prune_zeros(out);
      for (const auto& [u, c] : out) {
        const int need2 = g.dtw[u] - g.dtw[s] - g.dtw[t];
        if (need2 < 0 || need2 % 2 != 0 || c.deg != need2 / 2)
          throw SodError("graded clifford structure constant off-degree");
        g.table[s][t].push_back({u, c});
      }
    }

  std::vector<int> even, odd;
  for (unsigned m = 0; m < 16; ++m)
    (popcount(m) % 2 == 0 ? even : odd).push_back(g.twist[m]);
  g.b0 = SplitBundle::of(even);
  g.b1 = SplitBundle::of(odd);
  g.det = sigma.det_form();

  // Center of the even part: 1 and the antisymmetrized top product.
  g.center_element = antisym_top(g);
  const std::map<unsigned, BinForm> one = {{0u, BinForm::constant(1)}};
  for (unsigned m = 0; m < 16; ++m) {
    if (popcount(m) % 2 != 0) continue;
    const std::map<unsigned, BinForm> mono = {{m, BinForm::constant(1)}};
    if (g.mul(g.center_element, mono) != g.mul(mono, g.center_element))
      throw SodError("antisymmetrized top is not central in the even part");
  }
  std::map<unsigned, BinForm> dsq =
      g.mul(g.center_element, g.center_element);
  std::map<unsigned, BinForm> want;
  if (!g.det.is_zero()) want.emplace(0u, g.det);
  if (dsq != want)
    throw SodError("center element square differs from the determinant form");
  g.z = SplitBundle::of({g.twist[0], g.twist[15]});
  return g;
}

namespace {

// Even-part basis masks ordered to match the descending-twist order of the
// split bundle O^4 + O(-1)^4.
constexpr std::array<unsigned, 8> kEvenOrder = {0, 3, 5, 9, 6, 10, 12, 15};

std::map<unsigned, BinForm> scaled_mono(unsigned mask, const Rational& c) {
  return {{mask, BinForm::constant(c)}};
}

}  // namespace

CliffordBlockReport clifford_blocks(const GradedCliffordData& g) {
  const std::map<unsigned, BinForm> eps1 = scaled_mono(9, 1);  // f0 f3
  std::map<unsigned, BinForm> eps2 = scaled_mono(0, 1);
  eps2.emplace(9u, BinForm::constant(-1));
  if (g.mul(eps1, eps1) != eps1)
    throw UnsupportedError(
        "frame pair (f0, f3) is not hyperbolic; no Peirce decomposition");

  std::vector<int> twists;
  for (unsigned m : kEvenOrder) twists.push_back(g.twist[m]);
  const SplitBundle b0 = SplitBundle::of(twists);

  const auto projector = [&](const std::map<unsigned, BinForm>& l,
                             const std::map<unsigned, BinForm>& r) {
    std::vector<std::vector<BinForm>> e(
        8, std::vector<BinForm>(8, BinForm::zero()));
    for (std::size_t j = 0; j < 8; ++j) {
      const auto img =
          g.mul(l, g.mul(scaled_mono(kEvenOrder[j], 1), r));
      for (const auto& [mask, c] : img) {
        std::size_t i = 0;
        while (i < 8 && kEvenOrder[i] != mask) ++i;
        if (i == 8) throw SodError("Peirce image left the even part");
        e[i][j] = c;
      }
    }
    return BundleMap::make(b0, b0, std::move(e));
  };
  const auto fixes = [&](const BundleMap& p,
                         const std::map<unsigned, BinForm>& x) {
    std::map<unsigned, BinForm> img;
    for (const auto& [mask, c] : x) {
      std::size_t j = 0;
      while (j < 8 && kEvenOrder[j] != mask) ++j;
      if (j == 8) return false;
      for (std::size_t i = 0; i < 8; ++i) {
        const BinForm add = p.entry[i][j] * c;
        if (add.is_zero()) continue;
        const auto it = img.find(kEvenOrder[i]);
        if (it == img.end())
          img.emplace(kEvenOrder[i], add);
        else
          it->second = it->second + add;
      }
    }
    prune_zeros(img);
    std::map<unsigned, BinForm> want = x;
    prune_zeros(want);
    return img == want;
  };
  const auto block_of = [&](const BundleMap& p) {
    std::vector<std::vector<BinForm>> e(
        8, std::vector<BinForm>(8, BinForm::zero()));
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        const BinForm id = i == j ? BinForm::constant(1) : BinForm::zero();
        e[i][j] = id - p.entry[i][j];
      }
    const MapAnalysis an = map_kernel_cokernel(BundleMap::make(b0, b0, e));
    if (!an.torsion.empty())
      throw SodError("Peirce projector kernel acquired torsion");
    return an.kernel;
  };

  const BundleMap p11 = projector(eps1, eps1);
  const BundleMap p12 = projector(eps1, eps2);
  const BundleMap p21 = projector(eps2, eps1);
  const BundleMap p22 = projector(eps2, eps2);

  CliffordBlockReport rep;
  rep.e11 = block_of(p11);
  rep.e12 = block_of(p12);
  rep.e21 = block_of(p21);
  rep.e22 = block_of(p22);
  if (rep.e11.rank() + rep.e12.rank() + rep.e21.rank() + rep.e22.rank() != 8)
    throw SodError("Peirce blocks do not fill the even part");

  std::map<unsigned, BinForm> v2v1e = scaled_mono(6, 1);  // f1 f2
  v2v1e.emplace(15u, BinForm::constant(-1));              // - f0f1f2f3
  rep.generators_fixed =
      fixes(p11, eps1) && fixes(p11, scaled_mono(15, 1)) &&
      fixes(p12, scaled_mono(3, 1)) && fixes(p12, scaled_mono(5, 1)) &&
      fixes(p21, scaled_mono(10, 1)) && fixes(p21, scaled_mono(12, 1)) &&
      fixes(p22, eps2) && fixes(p22, v2v1e);
  return rep;
}

QuadraticSpace fiber_quadratic_space(const SigmaForm& s, const LinePoint& p) {
  return QuadraticSpace::of(s.eval(p), {"f0", "f1", "f2", "f3"});
}

QuadraticSpace fiber_qfex_space(const SigmaForm& s, const LinePoint& p) {
  const Mat a = s.eval(p);
  const std::array<std::size_t, 4> perm = {0, 3, 1, 2};
  Mat b(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      b.at(i, j) = a.at(perm[i], perm[j]);
  return QuadraticSpace::of(std::move(b), {"v1", "v2", "e3", "e4"});
}

FiberCliffordReport fiber_even_clifford_check(const SigmaForm& s,
                                              const LinePoint& p) {
  FiberCliffordReport rep;
  const Mat a = s.eval(p);
  rep.corank = static_cast<int>(4 - a.rank());
  const QuadraticSpace q = fiber_qfex_space(s, p);
  if (rep.corank <= 1) {
    const MatrixUnitReport mu = verify_matrix_identification(q);
    rep.matrix_units_ok = mu.unit_mode_ok;
    rep.qfex_ran = mu.qfex_ran;
  } else if (rep.corank == 2) {
    rep.six_summand_ok = verify_six_summand_decomposition(q).empty();
  } else {
    throw UnsupportedError(
        "fiber corank exceeds 2; not a hyperbolic-pair family");
  }
  return rep;
}

}  // namespace sod
