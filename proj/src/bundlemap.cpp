#include "sod/bundlemap.hpp"

#include <algorithm>
#include <functional>

namespace sod {

BundleMap BundleMap::make(SplitBundle src, SplitBundle dst,
                          std::vector<std::vector<BinForm>> entries) {
  if (entries.size() != dst.rank())
    throw SodError("bundle map row count mismatch");
  for (std::size_t i = 0; i < dst.rank(); ++i) {
    if (entries[i].size() != src.rank())
      throw SodError("bundle map column count mismatch");
    for (std::size_t j = 0; j < src.rank(); ++j) {
      const BinForm& f = entries[i][j];
      if (f.is_zero()) continue;
      if (f.deg != dst.tw[i] - src.tw[j])
        throw SodError("bundle map entry degree mismatch");
    }
  }
  return BundleMap{std::move(src), std::move(dst), std::move(entries)};
}

BundleMap BundleMap::zero(SplitBundle src, SplitBundle dst) {
  std::vector<std::vector<BinForm>> e(
      dst.rank(), std::vector<BinForm>(src.rank(), BinForm::zero()));
  return BundleMap{std::move(src), std::move(dst), std::move(e)};
}

std::vector<long> summand_h0_dims(const SplitBundle& b, int t) {
  std::vector<long> dims;
  for (int d : b.tw) dims.push_back(std::max(d + t + 1, 0));
  return dims;
}

Mat BundleMap::h0_matrix(int t) const {
  const auto sdims = summand_h0_dims(src, t);
  const auto ddims = summand_h0_dims(dst, t);
  long scols = 0, drows = 0;
  for (auto d : sdims) scols += d;
  for (auto d : ddims) drows += d;
  Mat m(drows, scols);
  long col0 = 0;
  for (std::size_t j = 0; j < src.rank(); ++j) {
    long row0 = 0;
    for (std::size_t i = 0; i < dst.rank(); ++i) {
      const BinForm& f = entry[i][j];
      if (!f.is_zero()) {
        // u^{a-k} v^k  |->  sum_l f_{l-k} u^{b-l} v^l with a = s_j + t,
        // b = d_i + t.
        for (long k = 0; k < sdims[j]; ++k)
          for (long l = 0; l < ddims[i]; ++l) {
            const Rational c = f.coeff(static_cast<int>(l - k));
            if (sgn(c) != 0) m.at(row0 + l, col0 + k) = c;
          }
      }
      row0 += ddims[i];
    }
    col0 += sdims[j];
  }
  return m;
}

Mat BundleMap::eval(const LinePoint& p) const {
  Mat m(dst.rank(), src.rank());
  for (std::size_t i = 0; i < dst.rank(); ++i)
    for (std::size_t j = 0; j < src.rank(); ++j)
      if (!entry[i][j].is_zero()) m.at(i, j) = entry[i][j].eval(p.u, p.v);
  return m;
}

BundleMap BundleMap::transpose() const {
  // Dualizing negates twists, so the descending summand order of each end
  // reverses; the entry indices reverse with it.
  const std::size_t sr = src.rank(), dr = dst.rank();
  std::vector<std::vector<BinForm>> e(
      sr, std::vector<BinForm>(dr, BinForm::zero()));
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t j = 0; j < sr; ++j)
      e[sr - 1 - j][dr - 1 - i] = entry[i][j];
  return make(dst.dual(), src.dual(), std::move(e));
}

BundleMap BundleMap::twist(int b) const {
  return make(src.twist(b), dst.twist(b), entry);
}

BundleMap BundleMap::compose(const BundleMap& g) const {
  if (g.dst != src) throw SodError("bundle map composition mismatch");
  std::vector<std::vector<BinForm>> e(
      dst.rank(), std::vector<BinForm>(g.src.rank(), BinForm::zero()));
  for (std::size_t i = 0; i < dst.rank(); ++i)
    for (std::size_t j = 0; j < g.src.rank(); ++j) {
      BinForm acc = BinForm::zero();
      for (std::size_t k = 0; k < src.rank(); ++k)
        acc = acc + entry[i][k] * g.entry[k][j];
      e[i][j] = acc;
    }
  return make(g.src, dst, std::move(e));
}

namespace {

int max_entry_degree(const BundleMap& f) {
  int d = 0;
  for (const auto& row : f.entry)
    for (const auto& e : row)
      if (!e.is_zero()) d = std::max(d, e.deg);
  return d;
}

std::size_t generic_rank_of(const BundleMap& f) {
  const std::size_t m = std::min(f.src.rank(), f.dst.rank());
  if (m == 0) return 0;
  // A nonzero minor of degree <= m * maxdeg survives at one of any
  // m*maxdeg + 2 distinct points.
  const int samples = static_cast<int>(m) * max_entry_degree(f) + 1;
  std::size_t best = 0;
  for (int k = 0; k < samples; ++k)
    best = std::max(best, f.eval(LinePoint{Rational(1), Rational(k)}).rank());
  best = std::max(best, f.eval(LinePoint{Rational(0), Rational(1)}).rank());
  return best;
}

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Kernel twists from second differences of exact section dimensions.
SplitBundle kernel_twists(const BundleMap& f, std::size_t rk) {
  if (rk == 0) return SplitBundle::of({});
  auto ker_dim = [&f](int t) -> long {
    const Mat m = f.h0_matrix(t);
    return static_cast<long>(m.cols()) - static_cast<long>(m.rank());
  };
  const int smax = *std::max_element(f.src.tw.begin(), f.src.tw.end());
  const int smin = *std::min_element(f.src.tw.begin(), f.src.tw.end());
  const int floor_tw =
      smin - (static_cast<int>(std::min(f.src.rank(), f.dst.rank())) *
                  max_entry_degree(f) +
              static_cast<int>(rk) + 8);
  std::vector<int> twists;
  for (int v = smax; v >= floor_tw; --v) {
    // With f(t) = h0(K(t)) and delta(t) = f(t) - f(t-1) counting twists
    // >= -t, the multiplicity of O(v) is delta(-v) - delta(-v-1).
    const long f0 = ker_dim(-v);
    const long f1 = ker_dim(-v - 1);
    const long f2 = ker_dim(-v - 2);
    const long mult = (f0 - f1) - (f1 - f2);
    if (mult < 0) throw SodError("kernel multiplicity went negative");
    for (long k = 0; k < mult; ++k) twists.push_back(v);
    long total = static_cast<long>(twists.size());
    if (total == static_cast<long>(rk)) return SplitBundle::of(twists);
    if (total > static_cast<long>(rk))
      throw SodError("kernel multiplicities exceeded the kernel rank");
  }
  throw SodError("kernel twist scan hit its floor");
}

}  // namespace

MapAnalysis map_kernel_cokernel(const BundleMap& f) {
  MapAnalysis out;
  if (f.src.rank() == 0) {
    out.kernel = SplitBundle::of({});
    out.coker_free = f.dst;
    return out;
  }
  if (f.dst.rank() == 0) {
    out.kernel = f.src;
    out.coker_free = SplitBundle::of({});
    return out;
  }
  const std::size_t r = generic_rank_of(f);
  out.generic_rank = r;
  out.kernel = kernel_twists(f, f.src.rank() - r);
  out.coker_free =
      kernel_twists(f.transpose(), f.dst.rank() - r).dual();

  if (r > 0) {
    BinForm g = BinForm::zero();
    combinations(f.dst.rank(), r, [&](const std::vector<std::size_t>& ri) {
      combinations(f.src.rank(), r, [&](const std::vector<std::size_t>& ci) {
        std::vector<std::vector<BinForm>> sub;
        for (auto i : ri) {
          std::vector<BinForm> row;
          for (auto j : ci) row.push_back(f.entry[i][j]);
          sub.push_back(std::move(row));
        }
        g = binform_gcd(g, form_det(sub));
      });
    });
    if (g.is_zero()) throw SodError("generic-rank minors all vanished");
    if (g.deg > 0) {
      const FormRoots roots = form_roots(g);
      if (roots.residual_degree > 0)
        throw UnsupportedError(
            "cokernel torsion supported at irrational points");
      for (const auto& [pt, mult] : roots.roots)
        out.torsion.push_back(TorsionPoint{pt, mult});
    }
  }

  // Euler characteristic bookkeeping across 0 -> K -> F -> G -> C -> 0.
  const long lhs = static_cast<long>(f.src.chi()) - f.dst.chi();
  const long rhs =
      out.kernel.chi() - out.coker_free.chi() - out.torsion_length();
  if (lhs != rhs) throw SodError("kernel/cokernel Euler bookkeeping failed");
  return out;
}

}  // namespace sod
