#include "sod/loci.hpp"

#include <algorithm>
#include <functional>

namespace sod {

std::vector<std::vector<Polynomial>> jacobian(
    const std::vector<Polynomial>& gens) {
  if (gens.empty()) return {};
  const RingPtr ring = gens.front().ring();
  std::vector<std::vector<Polynomial>> j;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < ring->nvars(); ++v)
      row.push_back(g.derivative(v));
    j.push_back(std::move(row));
  }
  return j;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw SodError("determinant of empty matrix");
  const RingPtr ring = m[0][0].ring();
  if (n == 1) return m[0][0];
  Polynomial acc(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    const Polynomial cof = m[0][j] * poly_det(sub);
    acc = (j % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

namespace {

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Polynomial> poly_minors(
    const std::vector<std::vector<Polynomial>>& m, std::size_t k) {
  std::vector<Polynomial> out;
  if (m.empty()) return out;
  const std::size_t rows = m.size(), cols = m[0].size();
  combinations(rows, k, [&](const std::vector<std::size_t>& ri) {
    combinations(cols, k, [&](const std::vector<std::size_t>& ci) {
      std::vector<std::vector<Polynomial>> sub;
      for (auto i : ri) {
        std::vector<Polynomial> row;
        for (auto j : ci) row.push_back(m[i][j]);
        sub.push_back(std::move(row));
      }
      Polynomial d = poly_det(sub);
      if (!d.is_zero()) out.push_back(std::move(d));
    });
  });
  return out;
}

Ideal singular_locus(const Ideal& I, std::size_t codim, long budget) {
  const auto jac = jacobian(I.gens);
  std::vector<Polynomial> gens = I.gens;
  const GroebnerBasis base = ideal_gb(I, budget);
  for (auto& minor : poly_minors(jac, codim)) {
    // Reduce against the ideal first; duplicates and members drop out.
    Polynomial r = normal_form(minor.with_ring(base.ring), base.polys);
    if (r.is_zero()) continue;
    r = r.primitive().with_ring(I.ring);
    if (std::find(gens.begin(), gens.end(), r) == gens.end())
      gens.push_back(std::move(r));
  }
  // One basis first so the saturations start from a small reduced set.
  const GroebnerBasis gb = ideal_gb(Ideal{I.ring, gens}, budget);
  std::vector<Polynomial> reduced;
  for (const auto& g : gb.polys) reduced.push_back(g.with_ring(I.ring));
  return saturate_irrelevant(Ideal{I.ring, reduced}, budget);
}

namespace {

Polynomial lowest_form(const Polynomial& f) {
  long d = -1;
  for (const auto& t : f.terms()) {
    const long td = t.first.total_degree();
    if (d < 0 || td < d) d = td;
  }
  Polynomial out(f.ring());
  for (const auto& t : f.terms())
    if (t.first.total_degree() == d) out.push_term(t.first, t.second);
  out.normalize();
  return out;
}

}  // namespace

TangentConeData tangent_cone(const Ideal& I,
                             const std::vector<Rational>& point,
                             long budget) {
  const RingPtr ring = I.ring;
  const std::size_t n = ring->nvars();
  if (!vanishes_at(I, point))
    throw SodError("tangent_cone: point is not on the scheme");
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(point[i]) != 0) {
      pivot = i;
      break;
    }
  if (pivot == n) throw SodError("tangent_cone: zero point");

  TangentConeData out;
  for (std::size_t i = 0; i < n; ++i)
    if (i != pivot) out.chart_vars.push_back(i);
  RingPtr chart = subring(ring, out.chart_vars);
  out.chart_ring = chart;

  // Dehomogenize at the pivot and translate the point to the origin.
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == pivot) {
      images.push_back(Polynomial::constant(chart, Rational(1)));
      continue;
    }
    std::size_t k =
        std::find(out.chart_vars.begin(), out.chart_vars.end(), i) -
        out.chart_vars.begin();
    images.push_back(Polynomial::variable(chart, k) +
                     Polynomial::constant(chart, point[i] / point[pivot]));
  }
  std::vector<Polynomial> affine;
  for (const auto& g : I.gens) {
    Polynomial a = g.substitute(chart, images);
    if (!a.is_zero()) affine.push_back(a.primitive());
  }
  if (affine.empty()) {
    out.cone = Ideal{chart, {}};
    out.tangent_space_dim = static_cast<int>(n - 1);
    return out;
  }
  // A degrevlex basis of the affine ideal homogenizes to a basis of the
  // homogenized ideal.
  const GroebnerBasis agb = groebner_basis(affine, budget);

  const std::size_t na = n - 1;
  std::vector<std::string> hnames = chart->names;
  hnames.push_back("@h");
  std::vector<long> row_total(na + 1, 1);
  std::vector<long> row_h(na + 1, 0);
  row_h[na] = 1;
  const RingPtr hring = make_ring(
      hnames, MonomialOrder::weights_then_degrevlex({row_total, row_h}));

  std::vector<Polynomial> hgens;
  for (const auto& g : agb.polys) {
    const long d = g.total_degree();
    Polynomial h(hring);
    for (const auto& t : g.terms()) {
      Monomial m(na + 1);
      for (std::size_t i = 0; i < na; ++i) m.e[i] = t.first.e[i];
      m.e[na] = static_cast<int32_t>(d - t.first.total_degree());
      h.push_term(m, t.second);
    }
    h.normalize();
    hgens.push_back(std::move(h));
  }
  const GroebnerBasis hgb = groebner_basis(hgens, budget);

  std::vector<Polynomial> cone_gens;
  for (const auto& g : hgb.polys) {
    Polynomial dh(chart);
    for (const auto& t : g.terms()) {
      Monomial m(na);
      for (std::size_t i = 0; i < na; ++i) m.e[i] = t.first.e[i];
      dh.push_term(m, t.second);
    }
    dh.normalize();
    if (dh.is_zero()) continue;
    cone_gens.push_back(lowest_form(dh));
  }
  const GroebnerBasis cgb = groebner_basis(cone_gens, budget);
  out.cone = Ideal{chart, cgb.polys};

  // Linear part of the cone: its rank cuts the tangent space.
  std::vector<Polynomial> linear, higher;
  for (const auto& g : cgb.polys)
    (g.total_degree() == 1 ? linear : higher).push_back(g);
  Mat lin(linear.size(), na);
  for (std::size_t i = 0; i < linear.size(); ++i)
    for (const auto& t : linear[i].terms())
      for (std::size_t v = 0; v < na; ++v)
        if (t.first.e[v] == 1) lin.at(i, v) = t.second;
  std::vector<std::size_t> piv;
  const Mat lr = lin.rref(&piv);
  out.tangent_space_dim = static_cast<int>(na - piv.size());

  // Substitute the linear constraints away and look at what is left.
  std::vector<Polynomial> images_free;
  std::vector<bool> is_pivot(na, false);
  for (auto c : piv) is_pivot[c] = true;
  for (std::size_t v = 0; v < na; ++v)
    images_free.push_back(Polynomial::variable(chart, v));
  for (std::size_t p = 0; p < piv.size(); ++p) {
    Polynomial expr(chart);
    for (std::size_t v = 0; v < na; ++v) {
      if (v == piv[p] || sgn(lr.at(p, v)) == 0) continue;
      expr = expr - Polynomial::variable(chart, v) * lr.at(p, v);
    }
    images_free[piv[p]] = expr;
  }
  std::vector<Polynomial> reduced;
  for (const auto& g : higher) {
    Polynomial r = g.substitute(chart, images_free);
    if (!r.is_zero()) reduced.push_back(r.primitive());
  }
  if (reduced.empty()) {
    out.single_quadric = false;
    return out;
  }
  const GroebnerBasis rgb = groebner_basis(reduced, budget);
  if (rgb.polys.size() == 1 && rgb.polys.front().total_degree() == 2) {
    out.single_quadric = true;
    out.quadric = rgb.polys.front().with_ring(chart);
    Mat gram(na, na);
    for (const auto& t : out.quadric.terms()) {
      int vi = -1, vj = -1;
      for (std::size_t v = 0; v < na; ++v) {
        if (t.first.e[v] == 2) vi = vj = static_cast<int>(v);
        if (t.first.e[v] == 1) (vi < 0 ? vi : vj) = static_cast<int>(v);
      }
      if (vi == vj)
        gram.at(vi, vi) = t.second;
      else {
        gram.at(vi, vj) = t.second / 2;
        gram.at(vj, vi) = t.second / 2;
      }
    }
    out.quadric_rank = static_cast<int>(gram.rank());
  }
  return out;
}

bool is_threefold_node(const TangentConeData& tc) {
  return tc.tangent_space_dim == 4 && tc.single_quadric &&
         tc.quadric_rank == 4;
}

}  // namespace sod
