#include "sod/spinor.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "sod/groebner.hpp"
#include "sod/pushforward.hpp"

namespace sod {

namespace {

AlgVec mat_col(const Mat& m, std::size_t j) {
  AlgVec v(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

AlgVec solve_in_span(const Mat& basis, const AlgVec& target,
                     const char* what) {
  Mat x;
  if (!basis.solve(col_of(target), &x))
    throw SodError(std::string("not in the expected span: ") + what);
  return mat_col(x, 0);
}

// A plain vector of the space as an element of the Clifford algebra.
AlgVec vector_element(const FinDimAlgebra& cl, const AlgVec& v) {
  AlgVec e = cl.zero_vec();
  for (std::size_t i = 0; i < v.size(); ++i) e[1u << i] = v[i];
  return e;
}

// The canonical (reduced column echelon) basis of the column space, so that
// downstream bases do not depend on the discovery order of a spanning set.
Mat canonical_colspace(const Mat& m) {
  const Mat r = m.transpose().rref();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (sgn(r.at(i, j)) != 0) nonzero = true;
    if (nonzero) ++rank;
  }
  Mat out(m.rows(), rank);
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out.at(i, k) = r.at(k, i);
  return out;
}

// Monomials of total degree t in a deterministic order (first variable
// exponent descending, then recursively).
std::vector<Monomial> degree_monomials(const RingPtr& ring, long t) {
  std::vector<Monomial> out;
  if (t < 0) return out;
  const std::size_t n = ring->nvars();
  Monomial m(n);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == n) {
      m.e[i] = static_cast<int32_t>(left);
      out.push_back(m);
      m.e[i] = 0;
      return;
    }
    for (long k = left; k >= 0; --k) {
      m.e[i] = static_cast<int32_t>(k);
      rec(i + 1, left - k);
    }
    m.e[i] = 0;
  };
  rec(0, t);
  return out;
}

}  // namespace

IsotropicData IsotropicData::of(QuadraticSpace q, Mat w) {
  if (w.rows() != q.n() || w.cols() == 0 || w.cols() > q.n())
    throw SodError("subspace basis must be nonempty columns of full height");
  if (w.rank() != w.cols())
    throw SodError("subspace basis columns must be independent");
  for (std::size_t a = 0; a < w.cols(); ++a)
    for (std::size_t b = a; b < w.cols(); ++b)
      if (sgn(q.b_of(mat_col(w, a), mat_col(w, b))) != 0)
        throw SodError("the subspace is not isotropic for the form");
  return IsotropicData{std::move(q), std::move(w)};
}

namespace {

// The tensor product of the even half with the odd part of the algebra over
// the even part must be the odd half: the quotient of I0 (x) Cl1 by the
// balancing relations has the dimension of I1, the multiplication map kills
// every relation, and it surjects onto I1. Exact linear algebra throughout.
bool parity_exchange(const CliffordIdealModule& mod, std::size_t n) {
  const FinDimAlgebra& cl = mod.cl;
  std::vector<unsigned> modd;
  for (unsigned mask = 0; mask < cl.dim(); ++mask)
    if (std::popcount(mask) & 1u) modd.push_back(mask);
  const std::vector<unsigned> masks0 = even_clifford_masks(n);
  const std::size_t d0 = mod.even_basis.cols();
  const std::size_t d1 = mod.odd_basis.cols();
  const std::size_t no = modd.size();
  const std::size_t N = d0 * no;

  Mat rels(N, d0 * masks0.size() * no);
  std::size_t cidx = 0;
  for (std::size_t i = 0; i < d0; ++i)
    for (std::size_t ai = 0; ai < masks0.size(); ++ai) {
      const Mat& act = mod.even.act[ai];
      for (std::size_t bi = 0; bi < no; ++bi, ++cidx) {
        for (std::size_t k = 0; k < d0; ++k)
          rels.at(k * no + bi, cidx) = rels.at(k * no + bi, cidx) + act.at(k, i);
        const AlgVec ab =
            cl.mul(cl.basis_vec(masks0[ai]), cl.basis_vec(modd[bi]));
        for (std::size_t l = 0; l < no; ++l)
          rels.at(i * no + l, cidx) = rels.at(i * no + l, cidx) - ab[modd[l]];
      }
    }

  Mat mu(d1, N);
  for (std::size_t i = 0; i < d0; ++i)
    for (std::size_t bi = 0; bi < no; ++bi) {
      const AlgVec img =
          cl.mul(mat_col(mod.even_basis, i), cl.basis_vec(modd[bi]));
      const AlgVec c = solve_in_span(mod.odd_basis, img,
                                     "even half times odd part stays in the "
                                     "odd half of the ideal");
      for (std::size_t k = 0; k < d1; ++k) mu.at(k, i * no + bi) = c[k];
    }

  if (rels.rank() + d1 != N) return false;
  if (mu.rank() != d1) return false;
  return (mu * rels).is_zero();
}

}  // namespace

CliffordIdealModule clifford_ideal(const IsotropicData& d) {
  const std::size_t n = d.q.n();
  CliffordIdealModule out{clifford_algebra(d.q), even_clifford_algebra(d.q),
                          Mat(),                 Mat(),
                          AlgebraModule{},       AlgebraModule{},
                          false};

  AlgVec top = out.cl.unit;
  for (std::size_t j = 0; j < d.w.cols(); ++j)
    top = out.cl.mul(top, vector_element(out.cl, mat_col(d.w, j)));
  if (vec_is_zero(top))
    throw SodError("the top product of the subspace basis vanishes");

  Mat embed;
  right_ideal(out.cl, top, &embed);

  std::vector<std::size_t> evens, odds;
  for (std::size_t j = 0; j < embed.cols(); ++j) {
    int par = -1;
    for (std::size_t mask = 0; mask < out.cl.dim(); ++mask) {
      if (sgn(embed.at(mask, j)) == 0) continue;
      const int p = static_cast<int>(std::popcount(mask) & 1u);
      if (par == -1)
        par = p;
      else if (par != p)
        throw SodError("an ideal basis vector mixes parities");
    }
    (par == 1 ? odds : evens).push_back(j);
  }
  if (evens.size() != odds.size())
    throw SodError("the parity halves of the ideal differ in dimension");

  auto take = [&](const std::vector<std::size_t>& cols) {
    Mat b(out.cl.dim(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < out.cl.dim(); ++i)
        b.at(i, j) = embed.at(i, cols[j]);
    return b;
  };
  out.even_basis = canonical_colspace(take(evens));
  out.odd_basis = canonical_colspace(take(odds));

  const std::vector<unsigned> masks0 = even_clifford_masks(n);
  auto module_on = [&](const Mat& bas) {
    std::vector<Mat> act;
    for (unsigned m : masks0) {
      Mat a(bas.cols(), bas.cols());
      for (std::size_t j = 0; j < bas.cols(); ++j) {
        const AlgVec img = out.cl.mul(mat_col(bas, j), out.cl.basis_vec(m));
        const AlgVec c = solve_in_span(
            bas, img, "the even part acts within each half of the ideal");
        for (std::size_t i = 0; i < bas.cols(); ++i) a.at(i, j) = c[i];
      }
      act.push_back(std::move(a));
    }
    AlgebraModule M = AlgebraModule::make(bas.cols(), std::move(act));
    if (!M.valid(out.even_cl))
      throw SodError("an ideal half is not a module over the even part");
    return M;
  };
  out.even = module_on(out.even_basis);
  out.odd = module_on(out.odd_basis);
  out.parity_exchange_ok = parity_exchange(out, n);
  return out;
}

namespace {

void check_factorization(const std::vector<std::vector<Polynomial>>& a,
                         const std::vector<std::vector<Polynomial>>& b,
                         const Polynomial& q, const RingPtr& ring) {
  const std::size_t rows = a.size(), mid = b.size(), cols = b[0].size();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Polynomial s = Polynomial::zero(ring);
      for (std::size_t k = 0; k < mid; ++k) s = s + a[i][k] * b[k][j];
      const Polynomial want =
          (i == j) ? q : Polynomial::zero(ring);
      if (s != want)
        throw SodError(
            "the presentation does not factor the form as delta * delta");
    }
}

}  // namespace

SpinorPresentation delta_presentation(const IsotropicData& d) {
  SpinorPresentation p{d, clifford_ideal(d), nullptr, Polynomial(), {}, {}};
  const std::size_t n = d.q.n();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("x" + std::to_string(i + 1));
  p.ring = make_ring(std::move(names));

  Polynomial q = Polynomial::zero(p.ring);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Rational c =
          (i == j) ? d.q.gram.at(i, i) : Rational(2) * d.q.gram.at(i, j);
      if (sgn(c) == 0) continue;
      q = q + Polynomial::variable(p.ring, i) *
                  Polynomial::variable(p.ring, j) * c;
    }
  p.q_poly = q;

  auto build = [&](const Mat& src, const Mat& dst) {
    std::vector<std::vector<Polynomial>> m(
        dst.cols(),
        std::vector<Polynomial>(src.cols(), Polynomial::zero(p.ring)));
    for (std::size_t j = 0; j < src.cols(); ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const AlgVec img =
            p.mod.cl.mul(mat_col(src, j), p.mod.cl.basis_vec(1u << k));
        if (vec_is_zero(img)) continue;
        const AlgVec c = solve_in_span(
            dst, img, "multiplication by a vector swaps the ideal halves");
        for (std::size_t i = 0; i < dst.cols(); ++i)
          if (sgn(c[i]) != 0)
            m[i][j] = m[i][j] + Polynomial::variable(p.ring, k) * c[i];
      }
    return m;
  };
  p.d0 = build(p.mod.even_basis, p.mod.odd_basis);
  p.d1 = build(p.mod.odd_basis, p.mod.even_basis);
  check_factorization(p.d1, p.d0, p.q_poly, p.ring);
  check_factorization(p.d0, p.d1, p.q_poly, p.ring);
  return p;
}

namespace {

// Graded dimension of coker(d0) in degree t: d1-many copies of the degree-t
// monomials modulo the columns of d0 times the degree-(t-1) monomials.
long coker_dim(const SpinorPresentation& p, long t) {
  const std::size_t d0 = p.mod.even_basis.cols();
  const std::size_t d1 = p.mod.odd_basis.cols();
  const auto tgt = degree_monomials(p.ring, t);
  const auto src = degree_monomials(p.ring, t - 1);
  if (src.empty()) return static_cast<long>(d1 * tgt.size());
  std::map<std::vector<int32_t>, std::size_t> pos;
  for (std::size_t i = 0; i < tgt.size(); ++i) pos[tgt[i].e] = i;
  Mat f(d1 * tgt.size(), d0 * src.size());
  for (std::size_t g = 0; g < src.size(); ++g)
    for (std::size_t j = 0; j < d0; ++j)
      for (std::size_t i = 0; i < d1; ++i)
        for (const auto& [mon, c] : p.d0[i][j].terms()) {
          const Monomial mm = mon * src[g];
          f.at(i * tgt.size() + pos.at(mm.e), g * d0 + j) = c;
        }
  return static_cast<long>(d1 * tgt.size() - f.rank());
}

}  // namespace

SpinorRankData spinor_rank(const SpinorPresentation& p) {
  if (p.data.q.n() != 4)
    throw UnsupportedError(
        "sheaf rank is computed only for surface quadrics (four generators)");
  const long window = 5;
  SpinorRankData out;
  for (long t = 0; t <= window; ++t)
    out.graded_dims.push_back(coker_dim(p, t));

  // Fit r*(t+1)^2 + d*(t+1) + e through the last three window points and
  // demand the fit extends one degree lower with integral r and even d.
  Mat a(3, 3), b(3, 1);
  for (int row = 0; row < 3; ++row) {
    const long t = window - 2 + row;
    a.at(row, 0) = Rational(static_cast<long>((t + 1) * (t + 1)));
    a.at(row, 1) = Rational(t + 1);
    a.at(row, 2) = Rational(1);
    b.at(row, 0) = Rational(out.graded_dims[t]);
  }
  Mat x;
  if (!a.solve(b, &x)) return out;
  const Rational r = x.at(0, 0), dd = x.at(1, 0), e = x.at(2, 0);
  auto is_int = [](const Rational& v) { return v.get_den() == 1; };
  bool ok = is_int(r) && is_int(dd) && is_int(e) && sgn(r) >= 0;
  if (ok) {
    for (long t = window - 3; t <= window; ++t) {
      const Rational want =
          r * Rational(static_cast<long>((t + 1) * (t + 1))) +
          dd * Rational(t + 1) + e;
      if (want != Rational(out.graded_dims[t])) ok = false;
    }
    if (dd.get_num() % 2 != 0) ok = false;
  }
  out.fit_consistent = ok;
  if (ok) {
    out.rank = r.get_num().get_si();
    out.det_degree = dd.get_num().get_si() / 2;
  }
  return out;
}

KoszulReport koszul_check(const QuadraticSpace& q, const AlgVec& v,
                          int bound) {
  const std::size_t n = q.n();
  if (n != 4)
    throw UnsupportedError(
        "the resolution check supports only surface quadrics");
  if (bound < 2) throw SodError("the degree bound must be at least 2");
  if (v.size() != n)
    throw SodError("the point has the wrong number of coordinates");
  if (sgn(q.q_of(v)) != 0)
    throw SodError("the point does not lie on the quadric");
  bool singular = true;
  for (std::size_t i = 0; i < n && singular; ++i) {
    Rational g(0);
    for (std::size_t j = 0; j < n; ++j) g += q.gram.at(i, j) * v[j];
    if (sgn(g) != 0) singular = false;
  }
  if (singular) throw SodError("the point is singular on the quadric");

  KoszulReport rep;
  rep.corank = static_cast<int>(n - q.gram.rank());
  if (rep.corank > 2)
    throw SodError("the form must have corank at most two");

  // (a) In the original coordinates: the section column of the point cuts
  // out exactly the point on the quadric.
  const SpinorPresentation orig =
      delta_presentation(IsotropicData::of(q, col_of(v)));
  const AlgVec ws =
      solve_in_span(orig.mod.odd_basis, vector_element(orig.mod.cl, v),
                    "the point vector lies in the odd half of its ideal");
  const std::size_t d0 = orig.mod.even_basis.cols();
  const std::size_t d1 = orig.mod.odd_basis.cols();
  rep.section_column.assign(d0, Polynomial::zero(orig.ring));
  for (std::size_t i = 0; i < d0; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      if (sgn(ws[j]) != 0)
        rep.section_column[i] = rep.section_column[i] + orig.d1[i][j] * ws[j];
  std::vector<Polynomial> gens{orig.q_poly};
  for (const Polynomial& f : rep.section_column)
    if (!f.is_zero()) gens.push_back(f);
  rep.column_matches_point =
      ideal_equal(saturate_irrelevant(make_ideal(orig.ring, gens)),
                  point_ideal(orig.ring, v));

  // Adapted basis: the point first, completed greedily by coordinate
  // vectors.
  Mat T(n, 1);
  for (std::size_t i = 0; i < n; ++i) T.at(i, 0) = v[i];
  for (std::size_t i = 0; i < n && T.cols() < n; ++i) {
    Mat cand(n, 1);
    cand.at(i, 0) = Rational(1);
    Mat ext = T.hstack(cand);
    if (ext.rank() == ext.cols()) T = ext;
  }
  if (T.cols() != n) throw SodError("could not complete the point to a basis");
  rep.base_change = T;

  const Mat g2 = T.transpose() * q.gram * T;
  std::vector<std::string> ylabels;
  for (std::size_t i = 0; i < n; ++i)
    ylabels.push_back("y" + std::to_string(i + 1));
  const QuadraticSpace q2 = QuadraticSpace::of(g2, ylabels);
  Mat e1(n, 1);
  e1.at(0, 0) = Rational(1);
  const SpinorPresentation pres =
      delta_presentation(IsotropicData::of(q2, e1));

  // In the adapted coordinates the ideal bases should be unit vectors on
  // fixed masks and the section column should be literally
  // (y2, ..., yn, 0) against them.
  auto unit_mask = [&](const Mat& bas, std::size_t j) -> int {
    int found = -1;
    for (std::size_t i = 0; i < bas.rows(); ++i) {
      if (sgn(bas.at(i, j)) == 0) continue;
      if (found != -1 || bas.at(i, j) != Rational(1)) return -1;
      found = static_cast<int>(i);
    }
    return found;
  };
  std::map<int, std::size_t> even_col_of_mask;
  bool units_ok = true;
  for (std::size_t j = 0; j < d0; ++j) {
    const int m = unit_mask(pres.mod.even_basis, j);
    if (m < 0)
      units_ok = false;
    else
      even_col_of_mask[m] = j;
  }
  AlgVec e1elt = pres.mod.cl.zero_vec();
  e1elt[1] = Rational(1);
  const AlgVec ws2 = solve_in_span(pres.mod.odd_basis, e1elt,
                                   "the adapted point generates the ideal");
  std::vector<Polynomial> column2(d0, Polynomial::zero(pres.ring));
  for (std::size_t i = 0; i < d0; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      if (sgn(ws2[j]) != 0) column2[i] = column2[i] + pres.d1[i][j] * ws2[j];
  bool normalized = units_ok;
  if (normalized) {
    for (std::size_t k = 1; k < n; ++k) {
      const int mask = 1 | (1 << k);
      auto it = even_col_of_mask.find(mask);
      if (it == even_col_of_mask.end() ||
          column2[it->second] != Polynomial::variable(pres.ring, k))
        normalized = false;
    }
    const int full = (1 << n) - 1;
    auto it = even_col_of_mask.find(full);
    if (it == even_col_of_mask.end() || !column2[it->second].is_zero())
      normalized = false;
  }
  rep.column_normalized = normalized;

  // The distinguished output coordinate: the even basis vector whose leading
  // mask is the full product. Its row of d1 carries the pairing row of the
  // resolution.
  std::size_t top = d0;
  for (std::size_t j = 0; j < d0; ++j) {
    int lead = -1;
    for (std::size_t i = 0; i < pres.mod.even_basis.rows(); ++i)
      if (sgn(pres.mod.even_basis.at(i, j)) != 0) lead = static_cast<int>(i);
    if (lead == (1 << n) - 1) top = j;
  }
  if (top == d0)
    throw SodError("the ideal has no full-product component");

  std::vector<Polynomial> tau;
  for (std::size_t j = 0; j < d1; ++j) tau.push_back(pres.d1[top][j]);

  // Prerequisites for the four-term complex: the pairing row must vanish on
  // the section generator and lie in the ideal of the point.
  bool prereq = true;
  {
    Polynomial comp = Polynomial::zero(pres.ring);
    for (std::size_t j = 0; j < d1; ++j) comp = comp + tau[j] * ws2[j];
    if (!comp.is_zero()) prereq = false;
    const Monomial y1 = Monomial::var(n, 0, 1);
    for (const Polynomial& f : tau)
      if (sgn(f.coeff(y1)) != 0) prereq = false;
  }

  // Exact rank computations of the graded pieces over R = k[y]/(q).
  const std::vector<Polynomial> qgb{pres.q_poly.monic()};
  const Monomial lm = qgb[0].leading_monomial();
  auto r_basis = [&](long t) {
    std::vector<Monomial> out;
    for (const Monomial& m : degree_monomials(pres.ring, t))
      if (!lm.divides(m)) out.push_back(m);
    return out;
  };

  bool exact = prereq;
  std::vector<Monomial> prev;         // R-basis in degree t-1
  Mat vprev(0, 0);                    // image of d0 in degree t-1
  std::size_t vprev_rank = 0;
  for (long t = 0; t <= bound; ++t) {
    const std::vector<Monomial> cur = r_basis(t);
    std::map<std::vector<int32_t>, std::size_t> cpos;
    for (std::size_t i = 0; i < cur.size(); ++i) cpos[cur[i].e] = i;
    auto nf_coords = [&](const Polynomial& f, AlgVec& out_coords) {
      const Polynomial r = normal_form(f, qgb);
      for (const auto& [mon, c] : r.terms()) out_coords[cpos.at(mon.e)] = c;
    };

    // Image of d0 on the degree-(t-1) monomials, in degree-t coordinates.
    Mat vcur(d1 * cur.size(), d0 * prev.size());
    for (std::size_t g = 0; g < prev.size(); ++g)
      for (std::size_t j = 0; j < d0; ++j)
        for (std::size_t i = 0; i < d1; ++i) {
          const Polynomial f =
              pres.d0[i][j] * Polynomial::term(pres.ring, prev[g], Rational(1));
          AlgVec coords(cur.size(), Rational(0));
          nf_coords(f, coords);
          for (std::size_t rr = 0; rr < cur.size(); ++rr)
            vcur.at(i * cur.size() + rr, g * d0 + j) = coords[rr];
        }
    const std::size_t vcur_rank = vcur.rank();

    const long a_t = static_cast<long>(prev.size());
    const long b_t = static_cast<long>(d1 * prev.size() - vprev_rank);
    const long c_t = static_cast<long>(cur.size());

    // alpha: multiplication by the section generator, R_{t-1} -> M_{t-1}.
    long ralpha = 0;
    if (!prev.empty()) {
      Mat am(d1 * prev.size(), prev.size());
      for (std::size_t g = 0; g < prev.size(); ++g)
        for (std::size_t j = 0; j < d1; ++j)
          am.at(j * prev.size() + g, g) = ws2[j];
      ralpha = static_cast<long>(am.hstack(vprev).rank() - vprev_rank);
    }

    // beta: the pairing row, M_{t-1} -> R_t.
    long rbeta = 0;
    if (!prev.empty()) {
      Mat bm(cur.size(), d1 * prev.size());
      for (std::size_t g = 0; g < prev.size(); ++g)
        for (std::size_t j = 0; j < d1; ++j) {
          const Polynomial f =
              tau[j] * Polynomial::term(pres.ring, prev[g], Rational(1));
          AlgVec coords(cur.size(), Rational(0));
          nf_coords(f, coords);
          for (std::size_t rr = 0; rr < cur.size(); ++rr)
            bm.at(rr, j * prev.size() + g) = coords[rr];
        }
      rbeta = static_cast<long>(bm.rank());
    }

    if (ralpha != a_t) exact = false;                // injectivity
    if (ralpha + rbeta != b_t) exact = false;        // middle homology
    if (rbeta != c_t - 1) exact = false;             // kernel of evaluation
    rep.degrees_checked.push_back(t);

    prev = cur;
    vprev = std::move(vcur);
    vprev_rank = vcur_rank;
  }
  rep.exact = exact;
  return rep;
}

RelativeIdealData relative_clifford_ideal(const GradedCliffordData& g) {
  RelativeIdealData r;
  std::vector<int> tw0, tw1;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (!(mask & 1u)) continue;
    if (std::popcount(mask) % 2 == 0) {
      r.even_masks.push_back(mask);
      tw0.push_back(g.twist[mask]);
    } else {
      r.odd_masks.push_back(mask);
      tw1.push_back(g.twist[mask]);
    }
  }
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (!(mask & 1u)) continue;
    for (unsigned k = 0; k < 4; ++k)
      for (const auto& [t, c] : g.table[mask][1u << k])
        if (!(t & 1u))
          throw SodError(
              "the masks of the first generator do not close under right "
              "multiplication");
  }
  r.i0 = SplitBundle::of(std::move(tw0));
  r.i1 = SplitBundle::of(std::move(tw1));
  return r;
}

namespace {

using ZQuadratic = std::map<std::pair<int, int>, BinForm>;

void accumulate_square(
    const GradedCliffordData& g, const std::vector<unsigned>& from,
    const std::vector<unsigned>& mid,
    std::vector<std::vector<std::array<BinForm, 4>>>& first,
    std::vector<std::vector<std::array<BinForm, 4>>>& second) {
  // (second * first) must be sigma(z) times the identity on `from`.
  for (std::size_t s = 0; s < from.size(); ++s)
    for (std::size_t e = 0; e < from.size(); ++e) {
      ZQuadratic acc;
      for (std::size_t t = 0; t < mid.size(); ++t)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) {
            const BinForm prod = first[t][s][k] * second[e][t][l];
            if (prod.is_zero()) continue;
            const auto key = std::minmax(k, l);
            auto it = acc.find(key);
            if (it == acc.end())
              acc.emplace(key, prod);
            else
              it->second = it->second + prod;
          }
      for (int k = 0; k < 4; ++k)
        for (int l = k; l < 4; ++l) {
          BinForm want = BinForm::zero();
          if (s == e) {
            want = g.sigma.entry[k][l];
            if (k != l) want = want * Rational(2);
          }
          BinForm got = BinForm::zero();
          auto it = acc.find({k, l});
          if (it != acc.end()) got = it->second;
          if (got != want)
            throw SodError(
                "the relative presentation does not square to the family "
                "form");
        }
    }
}

}  // namespace

RelativeDelta relative_delta(const GradedCliffordData& g) {
  RelativeDelta rd;
  for (unsigned mask = 0; mask < 16; ++mask)
    (std::popcount(mask) % 2 == 0 ? rd.even_masks : rd.odd_masks)
        .push_back(mask);
  std::map<unsigned, std::size_t> epos, opos;
  for (std::size_t i = 0; i < rd.even_masks.size(); ++i)
    epos[rd.even_masks[i]] = i;
  for (std::size_t i = 0; i < rd.odd_masks.size(); ++i)
    opos[rd.odd_masks[i]] = i;

  auto block = [&](const std::vector<unsigned>& src,
                   std::map<unsigned, std::size_t>& dstpos,
                   std::size_t dstdim) {
    std::vector<std::vector<std::array<BinForm, 4>>> d(
        dstdim, std::vector<std::array<BinForm, 4>>(src.size()));
    for (std::size_t s = 0; s < src.size(); ++s)
      for (unsigned k = 0; k < 4; ++k)
        for (const auto& [t, c] : g.table[src[s]][1u << k]) {
          auto it = dstpos.find(t);
          if (it == dstpos.end())
            throw SodError("a vector multiple landed in the wrong parity");
          d[it->second][s][k] = d[it->second][s][k] + c;
        }
    return d;
  };
  rd.d0 = block(rd.even_masks, opos, rd.odd_masks.size());
  rd.d1 = block(rd.odd_masks, epos, rd.even_masks.size());

  accumulate_square(g, rd.even_masks, rd.odd_masks, rd.d0, rd.d1);
  accumulate_square(g, rd.odd_masks, rd.even_masks, rd.d1, rd.d0);
  return rd;
}

Mat relative_delta_eval(const RelativeDelta& rd, const SigmaForm& s,
                        const LinePoint& p, const AlgVec& z,
                        bool even_to_odd) {
  (void)s;
  const auto& d = even_to_odd ? rd.d0 : rd.d1;
  const std::size_t rows = d.size(), cols = d[0].size();
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Rational acc(0);
      for (int k = 0; k < 4; ++k)
        if (!d[i][j][k].is_zero()) acc += z[k] * d[i][j][k].eval(p.u, p.v);
      m.at(i, j) = acc;
    }
  return m;
}

std::array<long, 4> spinor_twist_cohomology(int m, int a, int b, int l,
                                            bool ideal_part) {
  if (a < -1)
    throw SodError("the relative complex is computed only for a >= -1");
  const GradedCliffordData g = graded_clifford(sigma_model(m));
  std::vector<unsigned> masks0, masks1;
  if (ideal_part) {
    const RelativeIdealData r = relative_clifford_ideal(g);
    masks0 = r.even_masks;
    masks1 = r.odd_masks;
  } else {
    for (unsigned mask = 0; mask < 16; ++mask)
      (std::popcount(mask) % 2 == 0 ? masks0 : masks1).push_back(mask);
  }
  const auto lo = dual_frame_monomials(a - 2);
  const auto hi = dual_frame_monomials(a - 1);

  struct Sum {
    std::array<int, 4> mono;
    unsigned mask;
    int tw;
  };
  auto build = [&](const auto& monos, const std::vector<unsigned>& masks) {
    std::vector<Sum> out;
    for (const auto& [mono, w] : monos)
      for (unsigned mask : masks)
        out.push_back({mono, mask, w + g.twist[mask] + b + l});
    std::stable_sort(out.begin(), out.end(),
                     [](const Sum& x, const Sum& y) { return x.tw > y.tw; });
    return out;
  };
  const std::vector<Sum> src = build(lo, masks0);
  const std::vector<Sum> dst = build(hi, masks1);
  if (dst.empty()) return {0, 0, 0, 0};
  std::vector<int> dtw;
  for (const Sum& s : dst) dtw.push_back(s.tw);
  const SplitBundle B = SplitBundle::of(std::move(dtw));
  if (src.empty()) return {B.h0(), B.h1(), 0, 0};
  std::vector<int> stw;
  for (const Sum& s : src) stw.push_back(s.tw);
  const SplitBundle A = SplitBundle::of(std::move(stw));

  std::map<std::pair<std::array<int, 4>, unsigned>, std::size_t> pos;
  for (std::size_t i = 0; i < dst.size(); ++i)
    pos[{dst[i].mono, dst[i].mask}] = i;
  std::vector<std::vector<BinForm>> entries(
      dst.size(), std::vector<BinForm>(src.size(), BinForm::zero()));
  for (std::size_t j = 0; j < src.size(); ++j)
    for (unsigned k = 0; k < 4; ++k)
      for (const auto& [t, c] : g.table[src[j].mask][1u << k]) {
        std::array<int, 4> mono = src[j].mono;
        ++mono[k];
        const auto it = pos.find({mono, t});
        if (it == pos.end())
          throw SodError("a product of the relative complex left its target");
        entries[it->second][j] = entries[it->second][j] + c;
      }
  const BundleMap phi = BundleMap::make(A, B, std::move(entries));

  // Certify that the map is injective as a sheaf map: its rank at a single
  // point is a lower bound for the generic rank, and if the rank stays below
  // the source rank at more sample points than the degree of any maximal
  // minor, every maximal minor vanishes identically.
  long degree_bound = 1;
  for (std::size_t j = 0; j < src.size(); ++j) {
    int dmax = 0;
    for (std::size_t i = 0; i < dst.size(); ++i)
      dmax = std::max(dmax, phi.entry[i][j].deg);
    degree_bound += dmax;
  }
  bool injective = phi.eval(LinePoint::of(Rational(0), Rational(1))).rank() ==
                   src.size();
  for (long k = 0; k <= degree_bound + 1 && !injective; ++k)
    injective = phi.eval(LinePoint::of(Rational(1), Rational(k))).rank() ==
                src.size();
  if (!injective) throw SodError("the relative complex is not injective");

  // Cohomology of the cokernel from the long exact sequence: on global
  // sections the map is injective, and the rank of the induced map on first
  // cohomology equals (by duality) the rank of the transposed map twisted by
  // -2 on global sections.
  const long r0 = static_cast<long>(phi.h0_matrix(0).rank());
  if (r0 != A.h0())
    throw SodError("the relative complex is not injective on sections");
  const long r1 = static_cast<long>(phi.transpose().twist(-2).h0_matrix(0).rank());
  return {B.h0() - A.h0() + A.h1() - r1, B.h1() - r1, 0, 0};
}

}  // namespace sod
