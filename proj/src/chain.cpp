#include "sod/chain.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace sod {

namespace {

const BinForm kFormU = BinForm::monomial(1, 0, Rational(1));
const BinForm kFormV = BinForm::monomial(1, 1, Rational(1));

long h0_of_degree(int d) { return d >= 0 ? d + 1 : 0; }

void validate_subchain(int n, const SubchainBundle& s) {
  if (s.lo < 1 || s.hi > n || s.lo > s.hi)
    throw SodError("subchain interval out of range");
  if (s.deg.size() != static_cast<std::size_t>(s.len()))
    throw SodError("subchain degree list has the wrong length");
}

}  // namespace

ChainPoint ChainPoint::of(int comp, const LinePoint& pt) {
  if (comp < 1) throw SodError("chain component index out of range");
  ChainPoint p{comp, LinePoint::of(pt.u, pt.v)};
  // The node between i and i+1 is [0:1] on i and [1:0] on i+1; normalize to
  // the lower-component name.
  if (p.comp > 1 && p.pt == LinePoint{Rational(1), Rational(0)}) {
    p.comp -= 1;
    p.pt = LinePoint{Rational(0), Rational(1)};
  }
  return p;
}

bool ChainPoint::operator<(const ChainPoint& o) const {
  return std::tie(comp, pt.u, pt.v) < std::tie(o.comp, o.pt.u, o.pt.v);
}

std::string ChainPoint::str() const {
  return std::to_string(comp) + ":" + pt.str();
}

ChainPoint chain_node(int i) {
  if (i < 1) throw SodError("chain node index out of range");
  return ChainPoint{i, LinePoint{Rational(0), Rational(1)}};
}

bool SubchainBundle::operator<(const SubchainBundle& o) const {
  return std::tie(lo, hi, deg) < std::tie(o.lo, o.hi, o.deg);
}

SheafOnChain SheafOnChain::zero(int n) {
  if (n < 1) throw SodError("chain needs at least one component");
  SheafOnChain f;
  f.n = n;
  return f;
}

SheafOnChain SheafOnChain::line_bundle(int n, std::vector<int> deg) {
  return subchain(n, 1, n, std::move(deg));
}

SheafOnChain SheafOnChain::subchain(int n, int lo, int hi,
                                    std::vector<int> deg) {
  SheafOnChain f = zero(n);
  SubchainBundle s{lo, hi, std::move(deg)};
  validate_subchain(n, s);
  f.lines.push_back(std::move(s));
  return f;
}

SheafOnChain SheafOnChain::skyscraper(int n, const ChainPoint& p) {
  SheafOnChain f = zero(n);
  ChainPoint q = ChainPoint::of(p.comp, p.pt);
  if (q.comp > n) throw SodError("chain component index out of range");
  f.points.push_back(q);
  return f;
}

SheafOnChain SheafOnChain::direct_sum(const SheafOnChain& o) const {
  if (n != o.n) throw SodError("direct sum across different chains");
  SheafOnChain f = *this;
  f.lines.insert(f.lines.end(), o.lines.begin(), o.lines.end());
  f.points.insert(f.points.end(), o.points.begin(), o.points.end());
  std::sort(f.lines.begin(), f.lines.end());
  std::sort(f.points.begin(), f.points.end());
  return f;
}

long SheafOnChain::chi() const {
  long c = 0;
  for (const auto& s : lines) {
    for (int d : s.deg) c += d + 1;
    c -= s.len() - 1;
  }
  c += static_cast<long>(points.size());
  return c;
}

bool SheafOnChain::operator==(const SheafOnChain& o) const {
  auto a = *this, b = o;
  std::sort(a.lines.begin(), a.lines.end());
  std::sort(b.lines.begin(), b.lines.end());
  std::sort(a.points.begin(), a.points.end());
  std::sort(b.points.begin(), b.points.end());
  return a.n == b.n && a.lines == b.lines && a.points == b.points;
}

std::string SheafOnChain::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " \xE2\x8A\x95 ";
    first = false;
  };
  for (const auto& s : lines) {
    sep();
    os << "O";
    if (!(s.lo == 1 && s.hi == n)) os << "[" << s.lo << ".." << s.hi << "]";
    os << "{";
    for (int k = 0; k < s.len(); ++k) os << (k ? "," : "") << s.deg[k];
    os << "}";
  }
  for (const auto& p : points) {
    sep();
    os << "k(" << p.str() << ")";
  }
  return os.str();
}

namespace {

// h0 of a single subchain line bundle: coefficients of the per-component
// forms, constrained to match at the nodes of the support.
long subchain_h0(const SubchainBundle& s) {
  std::vector<long> offset(s.len() + 1, 0);
  for (int k = 0; k < s.len(); ++k)
    offset[k + 1] = offset[k] + h0_of_degree(s.deg[k]);
  const long vars = offset[s.len()];
  const long nodes = s.len() - 1;
  if (nodes == 0) return vars;
  Mat m(nodes, vars);
  for (int k = 0; k + 1 < s.len(); ++k) {
    // Value of the left form at [0:1] equals value of the right at [1:0].
    if (s.deg[k] >= 0) m.at(k, offset[k] + s.deg[k]) = 1;
    if (s.deg[k + 1] >= 0) m.at(k, offset[k + 1]) = -1;
  }
  return vars - static_cast<long>(m.rank());
}

}  // namespace

std::pair<long, long> chain_cohomology(const SheafOnChain& f) {
  long h0 = static_cast<long>(f.points.size());
  for (const auto& s : f.lines) h0 += subchain_h0(s);
  const long h1 = h0 - f.chi();
  if (h1 < 0) throw SodError("negative h1 on a chain");
  return {h0, h1};
}

namespace {

ChainPoint image_of_contracted(int c) {
  if (c > 1) return ChainPoint{c - 1, LinePoint{Rational(0), Rational(1)}};
  return ChainPoint{1, LinePoint{Rational(1), Rational(0)}};
}

ChainPoint relabel_point(const ChainPoint& p, int c) {
  if (p.comp == c) return image_of_contracted(c);
  if (p.comp > c) return ChainPoint{p.comp - 1, p.pt};
  return p;
}

void add_points(SheafOnChain* f, const ChainPoint& p, long count) {
  for (long k = 0; k < count; ++k) f->points.push_back(p);
}

// Contract the single component c of an n-chain (n >= 2).
ChainImage push_one(const SheafOnChain& f, int c) {
  ChainImage out{SheafOnChain::zero(f.n - 1), SheafOnChain::zero(f.n - 1)};
  const ChainPoint img = image_of_contracted(c);
  for (const auto& p : f.points) out.r0.points.push_back(relabel_point(p, c));
  for (const auto& s : f.lines) {
    const int a = s.lo, b = s.hi;
    if (c < a) {
      out.r0.lines.push_back(SubchainBundle{a - 1, b - 1, s.deg});
    } else if (c > b) {
      out.r0.lines.push_back(s);
    } else if (a == b) {
      // Whole support contracted: cohomology of the fiber at the image point.
      add_points(&out.r0, img, h0_of_degree(s.deg[0]));
      add_points(&out.r1, img, h0_of_degree(-s.deg[0] - 2));
    } else if (c == a || c == b) {
      const int dc = s.deg_on(c);
      SubchainBundle rest =
          c == a ? SubchainBundle{c, b - 1,
                                  std::vector<int>(s.deg.begin() + 1,
                                                   s.deg.end())}
                 : SubchainBundle{a, c - 1,
                                  std::vector<int>(s.deg.begin(),
                                                   s.deg.end() - 1)};
      if (dc <= -1) {
        // No fiber sections: the rest must vanish at the shared node.
        (c == a ? rest.deg.front() : rest.deg.back()) -= 1;
      }
      out.r0.lines.push_back(rest);
      if (dc >= 1) add_points(&out.r0, img, dc);
      if (dc <= -2) add_points(&out.r1, img, -dc - 1);
    } else {
      // Interior: the support splits at the contracted component.
      const int dc = s.deg_on(c);
      SubchainBundle left{a, c - 1,
                          std::vector<int>(s.deg.begin(),
                                           s.deg.begin() + (c - a))};
      SubchainBundle right{c, b - 1,
                           std::vector<int>(s.deg.begin() + (c - a) + 1,
                                            s.deg.end())};
      if (dc == 0) {
        // Constant fiber: the two sides glue back together.
        std::vector<int> merged = left.deg;
        merged.insert(merged.end(), right.deg.begin(), right.deg.end());
        out.r0.lines.push_back(SubchainBundle{a, b - 1, std::move(merged)});
      } else {
        if (dc <= -1) {
          left.deg.back() -= 1;
          right.deg.front() -= 1;
        }
        out.r0.lines.push_back(left);
        out.r0.lines.push_back(right);
        if (dc >= 1) add_points(&out.r0, img, dc - 1);
        if (dc <= -2) add_points(&out.r1, img, -dc - 1);
      }
    }
  }
  std::sort(out.r0.lines.begin(), out.r0.lines.end());
  std::sort(out.r0.points.begin(), out.r0.points.end());
  std::sort(out.r1.points.begin(), out.r1.points.end());
  return out;
}

}  // namespace

ChainImage chain_pushforward(const SheafOnChain& f, const ChainContraction& c) {
  if (c.source_n != f.n) throw SodError("contraction source mismatch");
  int prev = 0;
  for (int k : c.contracted) {
    if (k < 1 || k > c.source_n) throw SodError("contracted index out of range");
    if (k == prev + 1 && prev != 0)
      throw UnsupportedError("adjacent components cannot both be contracted");
    if (k <= prev) throw SodError("contracted indices must increase");
    prev = k;
  }
  if (c.target_n() < 1)
    throw UnsupportedError("contraction must leave at least one component");
  ChainImage cur{f, SheafOnChain::zero(f.n)};
  for (auto it = c.contracted.rbegin(); it != c.contracted.rend(); ++it) {
    ChainImage step = push_one(cur.r0, *it);
    ChainImage torsion_step = push_one(cur.r1, *it);
    if (!torsion_step.r1.is_zero())
      throw SodError("skyscrapers acquired a higher direct image");
    cur.r0 = step.r0;
    cur.r1 = step.r1.direct_sum(torsion_step.r0);
  }
  return cur;
}

namespace {

// The space of sheaf maps O_A{a} -> O_B{b}: tuples of forms psi_i of degree
// b_i - a_i on the intersection of the supports, matching at interior nodes,
// and vanishing at boundary nodes where B continues but A stops.
struct HomSpace {
  int lo = 1, hi = 0;
  std::vector<int> deg;
  std::vector<long> offset;
  long vars = 0;
  Mat basis;  // vars x dim, columns form a basis

  long dim() const { return static_cast<long>(basis.cols()); }
  int deg_on(int comp) const { return deg[comp - lo]; }
  long offset_on(int comp) const { return offset[comp - lo]; }
};

HomSpace hom_space(const SubchainBundle& a, const SubchainBundle& b) {
  HomSpace h;
  h.lo = std::max(a.lo, b.lo);
  h.hi = std::min(a.hi, b.hi);
  if (h.hi < h.lo) {
    h.basis = Mat(0, 0);
    return h;
  }
  const int len = h.hi - h.lo + 1;
  h.offset.assign(len + 1, 0);
  h.deg.resize(len);
  for (int k = 0; k < len; ++k) {
    h.deg[k] = b.deg_on(h.lo + k) - a.deg_on(h.lo + k);
    h.offset[k + 1] = h.offset[k] + h0_of_degree(h.deg[k]);
  }
  h.vars = h.offset[len];
  std::vector<std::vector<Rational>> rows;
  auto new_row = [&]() -> std::vector<Rational>& {
    rows.emplace_back(h.vars, Rational(0));
    return rows.back();
  };
  for (int k = 0; k + 1 < len; ++k) {
    auto& r = new_row();
    if (h.deg[k] >= 0) r[h.offset[k] + h.deg[k]] = 1;
    if (h.deg[k + 1] >= 0) r[h.offset[k + 1]] = -1;
  }
  // Boundary vanishing where B extends past the support and A does not.
  if (b.lo < h.lo && h.deg[0] >= 0) new_row()[h.offset[0]] = 1;
  if (b.hi > h.hi && h.deg[len - 1] >= 0)
    new_row()[h.offset[len - 1] + h.deg[len - 1]] = 1;
  Mat m(rows.size(), h.vars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (long j = 0; j < h.vars; ++j) m.at(i, j) = rows[i][j];
  h.basis = m.kernel();
  return h;
}

// One piece of a built-in resolution kernel: a subchain bundle included into
// the full-chain bundle P by componentwise multiplication.
struct ResPiece {
  SubchainBundle k;
  std::vector<BinForm> mult;  // per component of k's support
};

struct Resolution {
  SubchainBundle p;  // full-chain line bundle mapping onto F
  std::vector<ResPiece> pieces;
};

Resolution resolve_subchain(int n, const SubchainBundle& a) {
  Resolution res;
  res.p.lo = 1;
  res.p.hi = n;
  res.p.deg.assign(n, 0);
  for (int i = a.lo; i <= a.hi; ++i) res.p.deg[i - 1] = a.deg_on(i);
  if (a.lo > 1) {
    ResPiece left;
    left.k = SubchainBundle{1, a.lo - 1,
                            std::vector<int>(res.p.deg.begin(),
                                             res.p.deg.begin() + a.lo - 1)};
    left.k.deg.back() -= 1;
    left.mult.assign(a.lo - 1, BinForm::constant(Rational(1)));
    left.mult.back() = kFormU;  // vanishes at the node toward the support
    res.pieces.push_back(std::move(left));
  }
  if (a.hi < n) {
    ResPiece right;
    right.k = SubchainBundle{a.hi + 1, n,
                             std::vector<int>(res.p.deg.begin() + a.hi,
                                              res.p.deg.end())};
    right.k.deg.front() -= 1;
    right.mult.assign(n - a.hi, BinForm::constant(Rational(1)));
    right.mult.front() = kFormV;
    res.pieces.push_back(std::move(right));
  }
  return res;
}

Resolution resolve_node_point(int n, int k) {
  Resolution res;
  res.p = SubchainBundle{1, n, std::vector<int>(n, 0)};
  ResPiece left;
  left.k = SubchainBundle{1, k, std::vector<int>(k, 0)};
  left.k.deg.back() = -1;
  left.mult.assign(k, BinForm::constant(Rational(1)));
  left.mult.back() = kFormU;
  res.pieces.push_back(std::move(left));
  ResPiece right;
  right.k = SubchainBundle{k + 1, n, std::vector<int>(n - k, 0)};
  right.k.deg.front() = -1;
  right.mult.assign(n - k, BinForm::constant(Rational(1)));
  right.mult.front() = kFormV;
  res.pieces.push_back(std::move(right));
  return res;
}

BinForm form_from_slice(const Mat& column, long offset, int deg) {
  if (deg < 0) return BinForm::zero();
  std::vector<Rational> c(deg + 1);
  for (int i = 0; i <= deg; ++i) c[i] = column.at(offset + i, 0);
  return BinForm::from_coeffs(deg, std::move(c));
}

// Ext^0..1 of a sheaf with built-in resolution 0 -> K -> P -> F -> 0 against
// a direct sum of subchain line bundles.
void ext_by_resolution(const Resolution& res, const SheafOnChain& g, int max_i,
                       std::vector<long>* out) {
  if (!g.points.empty())
    throw UnsupportedError(
        "Ext against skyscraper summands is outside the supported class");
  if (max_i > 1)
    throw UnsupportedError("Ext beyond degree 1 needs a longer resolution");
  if (max_i >= 1) {
    // Exactness of the two-term recipe needs Ext^1(P, G) = H^1(G (-P)) = 0.
    SheafOnChain twisted = SheafOnChain::zero(g.n);
    for (const auto& b : g.lines) {
      SubchainBundle t = b;
      for (int i = b.lo; i <= b.hi; ++i)
        t.deg[i - b.lo] -= res.p.deg_on(i);
      twisted.lines.push_back(std::move(t));
    }
    if (chain_cohomology(twisted).second != 0)
      throw UnsupportedError(
          "resolving bundle has Ext^1 against the target; not covered by the "
          "two-term recipe");
  }
  std::vector<HomSpace> hp;
  long cols = 0;
  for (const auto& b : g.lines) {
    hp.push_back(hom_space(res.p, b));
    cols += hp.back().dim();
  }
  std::vector<std::vector<HomSpace>> hk(res.pieces.size());
  long rows = 0;
  for (std::size_t al = 0; al < res.pieces.size(); ++al)
    for (const auto& b : g.lines) {
      hk[al].push_back(hom_space(res.pieces[al].k, b));
      rows += hk[al].back().dim();
    }
  Mat m(rows, cols);
  long col0 = 0;
  for (std::size_t be = 0; be < g.lines.size(); ++be) {
    for (long j = 0; j < hp[be].dim(); ++j) {
      const Mat phi = hp[be].basis.col(j);
      long row0 = 0;
      for (std::size_t al = 0; al < res.pieces.size(); ++al) {
        for (std::size_t b2 = 0; b2 < g.lines.size(); ++b2) {
          const HomSpace& tgt = hk[al][b2];
          if (b2 == be && tgt.vars > 0) {
            Mat tvec(tgt.vars, 1);
            for (int i = tgt.lo; i <= tgt.hi; ++i) {
              const BinForm psi =
                  form_from_slice(phi, hp[be].offset_on(i), hp[be].deg_on(i));
              const BinForm prod =
                  psi * res.pieces[al].mult[i - res.pieces[al].k.lo];
              for (int d = 0; d <= tgt.deg_on(i); ++d)
                tvec.at(tgt.offset_on(i) + d, 0) = prod.coeff(d);
            }
            Mat x;
            if (!tgt.basis.solve(tvec, &x))
              throw SodError("composed hom left the hom space");
            for (long r = 0; r < tgt.dim(); ++r)
              m.at(row0 + r, col0 + j) = x.at(r, 0);
          }
          row0 += tgt.dim();
        }
      }
    }
    col0 += hp[be].dim();
  }
  const long rank = static_cast<long>(m.rank());
  (*out)[0] += cols - rank;
  if (max_i >= 1) (*out)[1] += rows - rank;
}

}  // namespace

std::vector<long> chain_ext(const SheafOnChain& f, const SheafOnChain& g,
                            int max_i) {
  if (max_i < 0) throw SodError("Ext range must be nonnegative");
  if (f.n != g.n) throw SodError("Ext across different chains");
  std::vector<long> out(max_i + 1, 0);
  for (const auto& a : f.lines) {
    if (a.lo == 1 && a.hi == f.n) {
      // Locally free: Ext^i(O{a}, G) = H^i(G{-a}), zero beyond degree 1.
      SheafOnChain twisted = SheafOnChain::zero(g.n);
      twisted.points = g.points;
      for (const auto& b : g.lines) {
        SubchainBundle t = b;
        for (int i = b.lo; i <= b.hi; ++i) t.deg[i - b.lo] -= a.deg_on(i);
        twisted.lines.push_back(std::move(t));
      }
      const auto [h0, h1] = chain_cohomology(twisted);
      out[0] += h0;
      if (max_i >= 1) out[1] += h1;
    } else {
      ext_by_resolution(resolve_subchain(f.n, a), g, max_i, &out);
    }
  }
  for (const auto& p : f.points) {
    const bool is_node = p.comp < f.n &&
                         p.pt == LinePoint{Rational(0), Rational(1)};
    if (!is_node)
      throw UnsupportedError("skyscraper Ext is supported at nodes only");
    ext_by_resolution(resolve_node_point(f.n, p.comp), g, max_i, &out);
  }
  return out;
}

}  // namespace sod
