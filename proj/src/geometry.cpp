#include "sod/geometry.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sod/bundlemap.hpp"

namespace sod {

namespace {

const std::array<std::pair<int, int>, 10> kPairs = {{{1, 2},
                                                     {1, 3},
                                                     {1, 4},
                                                     {1, 5},
                                                     {2, 3},
                                                     {2, 4},
                                                     {2, 5},
                                                     {3, 4},
                                                     {3, 5},
                                                     {4, 5}}};

std::size_t pair_index(int i, int j) {
  for (std::size_t k = 0; k < kPairs.size(); ++k)
    if (kPairs[k].first == i && kPairs[k].second == j) return k;
  throw SodError("no such pair coordinate");
}

std::string pair_name(int i, int j) {
  return "x" + std::to_string(i) + std::to_string(j);
}

Polynomial var_poly(const RingPtr& ring, std::size_t i) {
  return Polynomial::variable(ring, i);
}

// Order of the seven coordinates surviving the linear sections, as indices
// into the ten pair coordinates.
const std::array<std::size_t, 7> kKeep = {
    pair_index(1, 2), pair_index(1, 4), pair_index(2, 4), pair_index(3, 4),
    pair_index(1, 5), pair_index(2, 5), pair_index(3, 5)};

// The coordinates the linear sections are solved for.
const std::array<std::size_t, 3> kElim = {pair_index(1, 3), pair_index(2, 3),
                                          pair_index(4, 5)};

// The three hyperplane sections for each number of nodes, as coefficient
// vectors over the ten pair coordinates.
std::vector<Polynomial> section_forms(const PluckerModel& g, int m) {
  const auto x = [&](int i, int j) { return var_poly(g.ring, pair_index(i, j)); };
  switch (m) {
    case 1:
      return {x(4, 5), x(2, 3) + x(1, 4), x(1, 3) + x(2, 5)};
    case 2:
      return {x(4, 5), x(2, 3), x(1, 3) + x(1, 4) + x(2, 5)};
    case 3:
      return {x(4, 5), x(2, 3), x(1, 3) + x(1, 4)};
    default:
      throw SodError("the node count must be 1, 2, or 3");
  }
}

std::vector<std::vector<Rational>> declared_nodes(int m) {
  // Coordinate points of the ambient projective 9-space: only x12, x15, x25
  // is nonzero, respectively.
  std::vector<std::vector<Rational>> pts;
  const std::array<std::size_t, 3> axis = {pair_index(1, 2), pair_index(1, 5),
                                           pair_index(2, 5)};
  for (int k = 0; k < m; ++k) {
    std::vector<Rational> p(10, Rational(0));
    p[axis[k]] = 1;
    pts.push_back(std::move(p));
  }
  return pts;
}

Rational linear_coeff(const Polynomial& f, std::size_t var) {
  Monomial mono(f.ring()->nvars());
  mono.e[var] = 1;
  return f.coeff(mono);
}

}  // namespace

PluckerModel build_plucker() {
  std::vector<std::string> names;
  for (const auto& [i, j] : kPairs) names.push_back(pair_name(i, j));
  RingPtr ring = make_ring(names);

  const auto x = [&](int i, int j) { return var_poly(ring, pair_index(i, j)); };
  std::vector<Polynomial> quadrics;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (int k = j + 1; k <= 5; ++k)
        for (int l = k + 1; l <= 5; ++l)
          quadrics.push_back(x(i, j) * x(k, l) - x(i, k) * x(j, l) +
                             x(i, l) * x(j, k));
  return PluckerModel{ring, std::move(quadrics)};
}

QuinticModel build_quintic(int m) {
  const PluckerModel g = build_plucker();
  const std::vector<Polynomial> forms = section_forms(g, m);

  // Independence of the three sections, and solvability for the designated
  // coordinates.
  Mat coeffs(3, 10);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 10; ++c)
      coeffs.at(r, c) = linear_coeff(forms[r], c);
  if (coeffs.rank() != 3) throw SodError("the linear sections are dependent");

  // Row-reduce the system [A | B] where A holds the solved-for columns.
  Mat aug(3, 3 + kKeep.size());
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) aug.at(r, c) = coeffs.at(r, kElim[c]);
    for (std::size_t c = 0; c < kKeep.size(); ++c)
      aug.at(r, 3 + c) = coeffs.at(r, kKeep[c]);
  }
  std::vector<std::size_t> pivots;
  Mat red = aug.rref(&pivots);
  if (pivots.size() != 3 || pivots[0] != 0 || pivots[1] != 1 || pivots[2] != 2)
    throw SodError("cannot solve the sections for the designated coordinates");

  std::vector<std::size_t> keep(kKeep.begin(), kKeep.end());
  RingPtr target = subring(g.ring, keep);

  std::vector<Polynomial> images(10, Polynomial::zero(target));
  for (std::size_t c = 0; c < kKeep.size(); ++c)
    images[kKeep[c]] = var_poly(target, c);
  for (std::size_t r = 0; r < 3; ++r) {
    Polynomial img = Polynomial::zero(target);
    for (std::size_t c = 0; c < kKeep.size(); ++c)
      img = img - var_poly(target, c) * red.at(r, 3 + c);
    images[kElim[r]] = img;
  }

  std::vector<Polynomial> quadrics;
  for (const auto& q : g.quadrics) {
    Polynomial s = q.substitute(target, images);
    if (s.is_zero()) throw SodError("a quadric collapsed under the sections");
    quadrics.push_back(std::move(s));
  }

  QuinticModel X;
  X.m = m;
  X.ring = target;
  X.ideal = make_ideal(target, quadrics);
  for (const auto& p : declared_nodes(m)) {
    for (const auto& f : forms)
      if (sgn(f.evaluate(p)) != 0)
        throw SodError("a declared node misses the linear sections");
    for (std::size_t e : kElim)
      if (sgn(p[e]) != 0)
        throw SodError("a declared node has a nonzero solved coordinate");
    std::vector<Rational> proj;
    for (std::size_t k : kKeep) proj.push_back(p[k]);
    if (!vanishes_at(X.ideal, proj))
      throw SodError("a declared node does not lie on the threefold");
    X.nodes.push_back(std::move(proj));
  }
  return X;
}

namespace {

NodeClass classify_at(const QuinticModel& X, const std::vector<Rational>& p) {
  TangentConeData tc = tangent_cone(X.ideal, p);
  NodeClass n;
  n.point = p;
  n.tangent_dim = tc.tangent_space_dim;
  n.cone_rank = tc.single_quadric ? tc.quadric_rank : 0;
  n.ordinary_double_point = is_threefold_node(tc);
  return n;
}

}  // namespace

NodeClass classify_node(const QuinticModel& X, const std::vector<Rational>& p) {
  if (!vanishes_at(X.ideal, p))
    throw SodError("the point does not lie on the threefold");
  Ideal sing = singular_locus(X.ideal, 3);
  if (!vanishes_at(sing, p))
    throw SodError("the point is not a singular point of the threefold");
  return classify_at(X, p);
}

NodeReport classify_nodes(const QuinticModel& X) {
  NodeReport rep;
  rep.singular_ideal = singular_locus(X.ideal, 3);
  HilbertData hd = hilbert_data(rep.singular_ideal);
  rep.singular_dim = hd.proj_dim;
  rep.singular_degree = hd.is_zero ? Rational(0) : hd.degree;
  bool all_on = true;
  for (const auto& p : X.nodes) {
    if (!vanishes_at(rep.singular_ideal, p)) all_on = false;
    rep.nodes.push_back(classify_at(X, p));
  }
  rep.nodes_match = all_on && rep.singular_dim == 0 &&
                    rep.singular_degree == Rational(X.nodes.size());
  return rep;
}

LinesCurveReport lines_curve(int m) {
  const QuinticModel X = build_quintic(m);
  const RingPtr& ring = X.ring;

  std::vector<Polynomial> gens = X.ideal.gens;
  // The base locus of the projection away from the distinguished node is
  // x34 = x35 = 0 (the third solved coordinate is already gone), and the
  // curve of lines is its further section by x12 = 0.
  gens.push_back(var_poly(ring, 0));  // x12
  gens.push_back(var_poly(ring, 3));  // x34
  gens.push_back(var_poly(ring, 6));  // x35
  Ideal cut = saturate_irrelevant(make_ideal(ring, gens));

  HilbertData hd = hilbert_data(cut);
  if (hd.proj_dim != 1) throw SodError("the lines locus is not a curve");

  LinesCurveReport rep;
  rep.ideal = cut;
  rep.degree = hd.degree;
  rep.genus = hd.arithmetic_genus();

  Ideal sing = singular_locus(cut, 5);
  HilbertData sd = hilbert_data(sing);
  Rational sing_degree = sd.is_zero ? Rational(0) : sd.degree;
  const QuinticModel X3 = m == 3 ? X : build_quintic(3);
  for (std::size_t k = 1; k < X3.nodes.size(); ++k)
    if (vanishes_at(sing, X3.nodes[k]))
      rep.singular_points.push_back(X3.nodes[k]);
  if (!sd.is_zero && sd.proj_dim != 0)
    throw SodError("the singular locus of the lines curve is not finite");
  if (sing_degree != Rational(rep.singular_points.size()))
    throw SodError("unaccounted singular points on the lines curve");
  rep.components = static_cast<int>(rep.singular_points.size()) + 1;
  return rep;
}

FibrationModel build_fibration(int m) {
  const QuinticModel X = build_quintic(m);

  std::vector<std::string> names;
  for (std::size_t k : kKeep)
    names.push_back(pair_name(kPairs[k].first, kPairs[k].second));
  names.push_back("u");
  names.push_back("v");
  std::vector<std::vector<long>> grading = {{1, 1, 1, 1, 1, 1, 1, 0, 0},
                                            {0, 0, 0, 0, 0, 0, 0, 1, 1}};
  RingPtr ring = make_ring(names, MonomialOrder::degrevlex(), grading);

  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 7; ++i) images.push_back(var_poly(ring, i));
  const Polynomial u = var_poly(ring, 7), v = var_poly(ring, 8);

  // Proportionality relations pairing x_i4 (indices 1, 2, 3) with x_i5
  // (indices 4, 5, 6).
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < 3; ++i)
    gens.push_back(v * var_poly(ring, 1 + i) - u * var_poly(ring, 4 + i));
  gens.push_back(X.ideal.gens[0].substitute(ring, images));
  gens.push_back(X.ideal.gens[1].substitute(ring, images));

  for (const auto& g : gens) {
    std::vector<long> d;
    if (!g.is_homogeneous(&d))
      throw SodError("fibration generator is not bihomogeneous");
  }
  return FibrationModel{m, ring, make_ideal(ring, gens)};
}

FibrationModel reparametrize_fibration(const FibrationModel& Y,
                                       const Rational& a, const Rational& b,
                                       const Rational& c, const Rational& d) {
  const Rational det = a * d - b * c;
  if (sgn(det) == 0) throw SodError("reparametrization must be invertible");
  const RingPtr& ring = Y.ring;

  std::vector<Polynomial> images(9, Polynomial::zero(ring));
  images[0] = var_poly(ring, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    images[1 + i] = var_poly(ring, 1 + i) * a + var_poly(ring, 4 + i) * b;
    images[4 + i] = var_poly(ring, 1 + i) * c + var_poly(ring, 4 + i) * d;
  }
  images[7] = var_poly(ring, 7) * a + var_poly(ring, 8) * b;
  images[8] = var_poly(ring, 7) * c + var_poly(ring, 8) * d;

  const auto& g = Y.ideal.gens;
  for (std::size_t i = 0; i < 3; ++i)
    if (g[i].substitute(ring, images) != g[i] * det)
      throw SodError("reparametrization breaks the proportionality relations");
  Polynomial q1 = g[3].substitute(ring, images);
  Polynomial q2 = g[4].substitute(ring, images);
  const Rational inv = Rational(1) / det;
  std::vector<Polynomial> gens = {g[0], g[1], g[2],
                                  (q1 * d - q2 * b) * inv,
                                  (q2 * a - q1 * c) * inv};
  return FibrationModel{Y.m, ring, make_ideal(ring, gens)};
}

namespace {

// Finds the monomial of the fibration ring that the gluing substitution maps
// to u^pu v^pv z_i z_j. Fiber variables: z0 = x12 at index 0, z_i glued by
// x_i4 = u z_i (index i), x_i5 = v z_i (index 3 + i).
Polynomial lift_monomial(const RingPtr& ring, int i, int j, int pu, int pv,
                         const Rational& coeff) {
  Monomial mono(9);
  const auto take_z = [&](int k) {
    if (k == 0) {
      mono.e[0] += 1;  // x12 costs no base coordinate
      return;
    }
    if (pu > 0) {
      mono.e[k] += 1;  // x_k4 consumes one u
      --pu;
    } else if (pv > 0) {
      mono.e[3 + k] += 1;  // x_k5 consumes one v
      --pv;
    } else {
      throw UnsupportedError("cannot lift the fiber form to the fibration");
    }
  };
  take_z(i);
  take_z(j);
  if (pu < 0 || pv < 0)
    throw UnsupportedError("cannot lift the fiber form to the fibration");
  mono.e[7] = pu;
  mono.e[8] = pv;
  return Polynomial::term(ring, mono, coeff);
}

}  // namespace

SigmaForm derive_sigma(const FibrationModel& Y) {
  const RingPtr& ring = Y.ring;
  RingPtr zring = make_ring({"z0", "z1", "z2", "z3", "u", "v"});
  const Polynomial zu = var_poly(zring, 4), zv = var_poly(zring, 5);

  std::vector<Polynomial> glue(9, Polynomial::zero(zring));
  glue[0] = var_poly(zring, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    glue[1 + i] = zu * var_poly(zring, 1 + i);
    glue[4 + i] = zv * var_poly(zring, 1 + i);
  }
  glue[7] = zu;
  glue[8] = zv;

  const auto& g = Y.ideal.gens;
  if (g.size() != 5) throw SodError("unexpected fibration generator count");
  for (std::size_t i = 0; i < 3; ++i)
    if (!g[i].substitute(zring, glue).is_zero())
      throw SodError("fibration relations do not glue the fiber coordinates");

  Polynomial G1 = g[3].substitute(zring, glue);
  Polynomial G2 = g[4].substitute(zring, glue);
  if (G1.var_multiplicity(4) < 1 || G2.var_multiplicity(5) < 1)
    throw SodError("the quadrics do not factor through the base coordinates");
  Polynomial Q = G1.div_exact(zu);
  if (G2.div_exact(zv) != Q)
    throw SodError("the two quadrics do not share a common fiber form");

  // Read the symmetric matrix of binary forms off the common fiber form.
  std::vector<std::vector<BinForm>> full(4, std::vector<BinForm>(4));
  for (const auto& [mono, coeff] : Q.terms()) {
    int zi = -1, zj = -1;
    for (int k = 0; k < 4; ++k) {
      for (int rep = 0; rep < mono.e[k]; ++rep) {
        if (zi < 0)
          zi = k;
        else if (zj < 0)
          zj = k;
        else
          throw SodError("the fiber form is not quadratic");
      }
    }
    if (zj < 0) throw SodError("the fiber form is not quadratic");
    BinForm add = BinForm::monomial(mono.e[4] + mono.e[5], mono.e[5], coeff);
    if (!full[zi][zj].is_zero() && full[zi][zj].deg != add.deg)
      throw SodError("a fiber form entry mixes base degrees");
    full[zi][zj] = full[zi][zj] + add;
  }
  std::vector<std::vector<BinForm>> entry(4, std::vector<BinForm>(4));
  const Rational half(1, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      entry[i][j] = i == j ? full[i][j] : full[i][j] * half;
      entry[j][i] = entry[i][j];
    }
  SigmaForm s = SigmaForm::of(entry);

  // Substituting the form back must reproduce the fibration ideal.  The lift
  // of a monomial with a mixed u*v coefficient must pick one of the two
  // column variables for each row, and the two choices differ by a
  // proportionality minor that lies in the ideal only after saturating by
  // the base coordinates, so the reconstruction is compared at the level of
  // base-saturated ideals (the same subscheme of the product space).
  Polynomial h1 = Polynomial::zero(ring), h2 = Polynomial::zero(ring);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const BinForm& f = full[i][j];
      if (f.is_zero()) continue;
      for (int k = 0; k <= f.deg; ++k) {
        const Rational c = f.coeff(k);
        if (sgn(c) == 0) continue;
        h1 = h1 + lift_monomial(ring, i, j, f.deg - k + 1, k, c);
        h2 = h2 + lift_monomial(ring, i, j, f.deg - k, k + 1, c);
      }
    }
  if (h1.substitute(zring, glue) != zu * Q ||
      h2.substitute(zring, glue) != zv * Q)
    throw SodError("the lifted quadrics do not glue back to the fiber form");
  const Ideal rebuilt = make_ideal(ring, {g[0], g[1], g[2], h1, h2});
  const Ideal base = make_ideal(
      ring, {Polynomial::variable(ring, 7), Polynomial::variable(ring, 8)});
  if (!ideal_equal(ideal_saturation(rebuilt, base),
                   ideal_saturation(Y.ideal, base)))
    throw SodError("the fiber form does not reproduce the fibration ideal");

  // Chart checks: on each affine chart the fibration ideal dehomogenizes to
  // the principal ideal of the fiber form written in that chart.
  for (int chart = 0; chart < 2; ++chart) {
    RingPtr cring = make_ring({"y0", "y1", "y2", "y3", "w"});
    const Polynomial w = var_poly(cring, 4);
    std::vector<Polynomial> ch(9, Polynomial::zero(cring));
    ch[0] = var_poly(cring, 0);
    for (std::size_t i = 0; i < 3; ++i) {
      const Polynomial zi = var_poly(cring, 1 + i);
      ch[1 + i] = chart == 0 ? zi : w * zi;  // x_i4
      ch[4 + i] = chart == 0 ? w * zi : zi;  // x_i5
    }
    ch[7] = chart == 0 ? Polynomial::constant(cring, 1) : w;  // u
    ch[8] = chart == 0 ? w : Polynomial::constant(cring, 1);  // v
    std::vector<Polynomial> zch = {var_poly(cring, 0), var_poly(cring, 1),
                                   var_poly(cring, 2), var_poly(cring, 3),
                                   ch[7], ch[8]};
    Polynomial Qc = Q.substitute(cring, zch);
    for (std::size_t i = 0; i < 3; ++i)
      if (!g[i].substitute(cring, ch).is_zero())
        throw SodError("chart rewriting breaks the proportionality relations");
    Polynomial c1 = g[3].substitute(cring, ch);
    Polynomial c2 = g[4].substitute(cring, ch);
    bool ok = chart == 0 ? (c1 == Qc && c2 == w * Qc)
                         : (c1 == w * Qc && c2 == Qc);
    if (!ok) throw SodError("chart rewriting mismatch for the fiber form");
  }
  return s;
}

bool fibration_contracts_to(const FibrationModel& Y, const QuinticModel& X) {
  Ideal base = make_ideal(Y.ring, {var_poly(Y.ring, 7), var_poly(Y.ring, 8)});
  Ideal sat = ideal_saturation(Y.ideal, base);
  Ideal elim = eliminate_to_subring(sat, {0, 1, 2, 3, 4, 5, 6});
  std::vector<Polynomial> gens;
  for (const auto& f : elim.gens) gens.push_back(f.with_ring(X.ring));
  return ideal_equal(make_ideal(X.ring, gens), X.ideal);
}

FiberProfile fiber_profile(const SigmaForm& s) {
  BinForm det = s.det_form();
  if (det.is_zero())
    throw UnsupportedError("the determinant of the family vanishes");
  FormRoots fr = form_roots(det);
  if (fr.residual_degree > 0)
    throw UnsupportedError("the determinant has irrational roots");

  FiberProfile prof;
  prof.total_multiplicity = det.deg;
  for (const auto& [pt, mult] : fr.roots) {
    FiberPoint fp;
    fp.pt = pt;
    fp.multiplicity = mult;
    fp.corank = 4 - static_cast<int>(s.eval(pt).rank());
    prof.max_corank = std::max(prof.max_corank, fp.corank);
    prof.degenerate.push_back(fp);
  }
  for (int n = 1;; ++n) {
    bool found = false;
    for (const LinePoint& cand :
         {LinePoint::of(1, n), LinePoint::of(n, 1)}) {
      bool is_root = false;
      for (const auto& [pt, mult] : fr.roots)
        if (pt == cand) is_root = true;
      if (!is_root) {
        prof.probe = cand;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  prof.generic_corank = 4 - static_cast<int>(s.eval(prof.probe).rank());
  prof.max_corank = std::max(prof.max_corank, prof.generic_corank);
  return prof;
}

SectionReport section_data(const FibrationModel& Y) {
  const RingPtr& ring = Y.ring;
  std::vector<Polynomial> tforms;
  for (std::size_t i = 1; i <= 6; ++i) tforms.push_back(var_poly(ring, i));

  for (const auto& g : Y.ideal.gens)
    if (!normal_form(g, tforms).is_zero())
      throw SodError("the section does not lie on the fibration");

  SectionReport rep;
  std::vector<Polynomial> sgens = tforms;
  for (const auto& g : Y.ideal.gens) sgens.push_back(g);
  rep.ideal = make_ideal(ring, sgens);

  // Bigraded Hilbert counts over a grid, fitted to chi(a, b) = h a + f b + c.
  GroebnerBasis gb = ideal_gb(rep.ideal);
  std::vector<Monomial> leads;
  for (const auto& p : gb.polys) leads.push_back(p.leading_monomial());
  const auto standard_count = [&](int a, int b) {
    long count = 0;
    std::vector<int> xexp(7, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == 6) {
        xexp[6] = left;
        for (int i = 0; i <= b; ++i) {
          Monomial mono(9);
          for (int k = 0; k < 7; ++k) mono.e[k] = xexp[k];
          mono.e[7] = b - i;
          mono.e[8] = i;
          bool reduced = true;
          for (const auto& lm : leads)
            if (lm.divides(mono)) {
              reduced = false;
              break;
            }
          if (reduced) ++count;
        }
        return;
      }
      for (int e = 0; e <= left; ++e) {
        xexp[pos] = e;
        rec(pos + 1, left - e);
      }
      xexp[pos] = 0;
    };
    rec(0, a);
    return count;
  };
  long grid[4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) grid[a][b] = standard_count(a, b);
  const long c0 = grid[0][0], h = grid[1][0] - c0, f = grid[0][1] - c0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (grid[a][b] != h * a + f * b + c0)
        throw SodError("section Hilbert data is not affine-linear");
  rep.h_degree = static_cast<int>(h);
  rep.f_degree = static_cast<int>(f);
  rep.chi = Rational(c0);

  // The distinguished coordinate x12 must be nonvanishing along the section
  // (it trivializes the relative hyperplane bundle there). Emptiness of a
  // biprojective locus means the unit ideal after saturating by both
  // irrelevant ideals.
  std::vector<Polynomial> cutgens = sgens;
  cutgens.push_back(var_poly(ring, 0));
  std::vector<Polynomial> xs;
  for (std::size_t i = 0; i < 7; ++i) xs.push_back(var_poly(ring, i));
  Ideal cut = ideal_saturation(make_ideal(ring, cutgens),
                               make_ideal(ring, xs));
  cut = ideal_saturation(
      cut, make_ideal(ring, {var_poly(ring, 7), var_poly(ring, 8)}));
  if (!ideal_contains(cut, Polynomial::constant(ring, 1)))
    throw SodError("the section meets the distinguished coordinate plane");

  // Conormal sheaf: generators are the six cut coordinates; relations are
  // the first-order parts of the fibration generators along the section,
  // with x12 set to 1. Columns ordered by descending twist: the two base
  // degree-0 quadric rows first, then the three degree-1 relations.
  const std::array<std::size_t, 5> order = {3, 4, 0, 1, 2};
  std::vector<std::vector<BinForm>> entries(6, std::vector<BinForm>(5));
  for (std::size_t col = 0; col < order.size(); ++col) {
    const Polynomial& g = Y.ideal.gens[order[col]];
    for (const auto& [mono, coeff] : g.terms()) {
      int tdeg = 0, tvar = -1;
      for (int k = 1; k <= 6; ++k) {
        tdeg += mono.e[k];
        if (mono.e[k] > 0) tvar = k;
      }
      if (tdeg == 0)
        throw SodError("a fibration term avoids the section coordinates");
      if (tdeg != 1) continue;  // in the square of the section ideal
      BinForm add =
          BinForm::monomial(mono.e[7] + mono.e[8], mono.e[8], coeff);
      entries[tvar - 1][col] = entries[tvar - 1][col] + add;
    }
  }
  SplitBundle dst = SplitBundle::of({0, 0, 0, 0, 0, 0});
  SplitBundle src = SplitBundle::of({0, 0, -1, -1, -1});
  MapAnalysis ma = map_kernel_cokernel(BundleMap::make(src, dst, entries));
  rep.conormal = ma.coker_free;
  rep.conormal_torsion_free = ma.torsion.empty();

  // Every fiber quadric passes through the section point with nonzero
  // gradient exactly when the first row of the fiber form has a nonzero
  // constant beyond the vanishing corner entry.
  SigmaForm s = derive_sigma(Y);
  rep.smooth_fiber_points = !s.entry[0][1].is_zero() ||
                            !s.entry[0][2].is_zero() ||
                            !s.entry[0][3].is_zero();
  return rep;
}

namespace {

nlohmann::ordered_json ring_json(const RingPtr& ring) {
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (const auto& n : ring->names) names.push_back(n);
  return names;
}

nlohmann::ordered_json gens_json(const std::vector<Polynomial>& gens) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& g : gens) out.push_back(g.str());
  return out;
}

}  // namespace

nlohmann::ordered_json plucker_to_json(const PluckerModel& g) {
  nlohmann::ordered_json j;
  j["ring"] = ring_json(g.ring);
  j["generators"] = gens_json(g.quadrics);
  return j;
}

nlohmann::ordered_json quintic_to_json(const QuinticModel& x) {
  nlohmann::ordered_json j;
  j["nodes"] = x.m;
  j["ring"] = ring_json(x.ring);
  j["generators"] = gens_json(x.ideal.gens);
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const auto& p : x.nodes) {
    nlohmann::ordered_json pt = nlohmann::ordered_json::array();
    for (const auto& c : p) pt.push_back(c.get_str());
    pts.push_back(pt);
  }
  j["node_points"] = pts;
  return j;
}

nlohmann::ordered_json fibration_to_json(const FibrationModel& y) {
  nlohmann::ordered_json j;
  j["nodes"] = y.m;
  j["ring"] = ring_json(y.ring);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : y.ring->grading) rows.push_back(row);
  j["gradings"] = rows;
  j["generators"] = gens_json(y.ideal.gens);
  return j;
}

}  // namespace sod
