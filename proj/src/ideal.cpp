#include "sod/ideal.hpp"

#include <algorithm>

namespace sod {

Ideal make_ideal(const RingPtr& ring, std::vector<Polynomial> gens) {
  for (const auto& g : gens)
    if (g.ring() != ring) throw SodError("ideal generator from wrong ring");
  return Ideal{ring, std::move(gens)};
}

Ideal parse_ideal(const RingPtr& ring, const std::vector<std::string>& texts) {
  return make_ideal(ring, parse_polys(ring, texts));
}

GroebnerBasis ideal_gb(const Ideal& I, long budget) {
  std::vector<Polynomial> gens = I.gens;
  if (gens.empty()) gens.push_back(Polynomial::zero(I.ring));
  bool all_zero = true;
  for (const auto& g : gens)
    if (!g.is_zero()) all_zero = false;
  if (all_zero) {
    GroebnerBasis gb;
    gb.ring = I.ring;
    return gb;
  }
  return groebner_basis(gens, budget);
}

bool ideal_contains(const Ideal& I, const Polynomial& f, long budget) {
  const GroebnerBasis gb = ideal_gb(I, budget);
  return normal_form(f.with_ring(gb.ring ? gb.ring : I.ring), gb.polys)
      .is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J, long budget) {
  if (I.ring->nvars() != J.ring->nvars())
    throw SodError("ideal comparison across rings");
  const GroebnerBasis gi = ideal_gb(I, budget);
  const GroebnerBasis gj = ideal_gb(J, budget);
  if (gi.polys.size() != gj.polys.size()) return false;
  for (std::size_t k = 0; k < gi.polys.size(); ++k)
    if (gi.polys[k].terms() != gj.polys[k].with_ring(gi.ring).terms())
      return false;
  return true;
}

bool ideal_is_homogeneous(const Ideal& I) {
  for (const auto& g : I.gens)
    if (!g.is_homogeneous()) return false;
  return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> gens = I.gens;
  for (const auto& g : J.gens) gens.push_back(g.with_ring(I.ring));
  return Ideal{I.ring, std::move(gens)};
}

namespace {

// Moves a polynomial into the t-extended ring (variable 0 is the tag).
Polynomial lift_shift(const Polynomial& f, const RingPtr& ext) {
  Polynomial out(ext);
  for (const auto& t : f.terms()) {
    Monomial m(ext->nvars());
    for (std::size_t i = 0; i < t.first.nvars(); ++i) m.e[i + 1] = t.first.e[i];
    out.push_term(m, t.second);
  }
  out.normalize();
  return out;
}

Polynomial drop_tag(const Polynomial& f, const RingPtr& ring) {
  Polynomial out(ring);
  for (const auto& t : f.terms()) {
    if (t.first.e[0] != 0) throw SodError("tag variable survived elimination");
    Monomial m(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) m.e[i] = t.first.e[i + 1];
    out.push_term(m, t.second);
  }
  out.normalize();
  return out;
}

}  // namespace

Ideal ideal_intersection(const Ideal& I, const Ideal& J, long budget) {
  const RingPtr ext =
      prepend_vars(I.ring, {"@t"}, MonomialOrder::block(1));
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens) gens.push_back(t * lift_shift(g, ext));
  for (const auto& g : J.gens)
    gens.push_back(one_minus_t * lift_shift(g.with_ring(I.ring), ext));
  if (gens.empty()) return Ideal{I.ring, {}};
  const GroebnerBasis gb = groebner_basis(gens, budget);
  std::vector<Polynomial> out;
  for (const auto& g : gb.polys)
    if (!g.depends_on(0)) out.push_back(drop_tag(g, I.ring));
  return Ideal{I.ring, std::move(out)};
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f, long budget) {
  if (f.is_zero()) throw SodError("ideal quotient by zero");
  const Ideal fI = make_ideal(I.ring, {f.with_ring(I.ring)});
  const Ideal meet = ideal_intersection(I, fI, budget);
  std::vector<Polynomial> out;
  for (const auto& g : meet.gens) out.push_back(g.div_exact(f.with_ring(I.ring)));
  return Ideal{I.ring, std::move(out)};
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, long budget) {
  if (J.gens.empty()) throw SodError("ideal quotient by zero ideal");
  Ideal acc = ideal_quotient(I, J.gens.front(), budget);
  for (std::size_t k = 1; k < J.gens.size(); ++k)
    acc = ideal_intersection(acc, ideal_quotient(I, J.gens[k], budget), budget);
  return acc;
}

namespace {

// Saturation by one variable for a homogeneous ideal: a degrevlex basis with
// that variable least stays a basis after dividing out its powers.
Ideal saturate_by_variable_graded(const Ideal& I, std::size_t var,
                                  long budget) {
  std::vector<std::size_t> seq;
  for (std::size_t i = 0; i < I.ring->nvars(); ++i)
    if (i != var) seq.push_back(i);
  seq.push_back(var);
  const RingPtr ordered =
      with_order(I.ring, MonomialOrder::permuted_degrevlex(seq));
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens) gens.push_back(g.with_ring(ordered));
  const GroebnerBasis gb = ideal_gb(Ideal{ordered, gens}, budget);
  std::vector<Polynomial> out;
  for (const auto& g : gb.polys) {
    const int k = g.var_multiplicity(var);
    out.push_back(g.shift_var_down(var, k).with_ring(I.ring));
  }
  return Ideal{I.ring, std::move(out)};
}

bool is_single_variable(const Polynomial& f, std::size_t* var) {
  if (f.nterms() != 1) return false;
  const Monomial& m = f.terms().front().first;
  int found = -1;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.e[i] == 1 && found < 0)
      found = static_cast<int>(i);
    else if (m.e[i] != 0)
      return false;
  }
  if (found < 0) return false;
  *var = static_cast<std::size_t>(found);
  return true;
}

}  // namespace

Ideal ideal_saturation(const Ideal& I, const Polynomial& f, long budget) {
  std::size_t var = 0;
  const bool graded_total = [&] {
    for (const auto& g : I.gens) {
      Polynomial h = g;
      long d = -1;
      for (const auto& t : h.terms()) {
        if (d < 0) d = t.first.total_degree();
        if (t.first.total_degree() != d) return false;
      }
    }
    return true;
  }();
  if (graded_total && is_single_variable(f, &var))
    return saturate_by_variable_graded(I, var, budget);
  Ideal cur = I;
  for (;;) {
    Ideal next = ideal_quotient(cur, f, budget);
    if (ideal_equal(next, cur, budget)) return next;
    cur = std::move(next);
  }
}

Ideal ideal_saturation(const Ideal& I, const Ideal& J, long budget) {
  Ideal cur = I;
  for (;;) {
    Ideal next = ideal_quotient(cur, J, budget);
    if (ideal_equal(next, cur, budget)) return next;
    cur = std::move(next);
  }
}

Ideal saturate_irrelevant(const Ideal& I, long budget) {
  Ideal acc = ideal_saturation(I, Polynomial::variable(I.ring, 0), budget);
  for (std::size_t v = 1; v < I.ring->nvars(); ++v) {
    const Ideal sv =
        ideal_saturation(I, Polynomial::variable(I.ring, v), budget);
    acc = ideal_intersection(acc, sv, budget);
  }
  return acc;
}

std::vector<Polynomial> eliminate_vars(const Ideal& I,
                                       const std::vector<std::size_t>& elim,
                                       long budget) {
  const RingPtr ordered =
      with_order(I.ring, MonomialOrder::subset_elim(elim));
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens) gens.push_back(g.with_ring(ordered));
  const GroebnerBasis gb = ideal_gb(Ideal{ordered, gens}, budget);
  std::vector<Polynomial> out;
  for (const auto& g : gb.polys) {
    bool uses = false;
    for (auto v : elim)
      if (g.depends_on(v)) uses = true;
    if (!uses) out.push_back(g.with_ring(I.ring));
  }
  return out;
}

Ideal eliminate_to_subring(const Ideal& I, const std::vector<std::size_t>& keep,
                           long budget) {
  std::vector<bool> kept(I.ring->nvars(), false);
  for (auto v : keep) kept[v] = true;
  std::vector<std::size_t> elim;
  for (std::size_t v = 0; v < I.ring->nvars(); ++v)
    if (!kept[v]) elim.push_back(v);
  const std::vector<Polynomial> gens = eliminate_vars(I, elim, budget);
  const RingPtr sub = subring(I.ring, keep);
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial p(sub);
    for (const auto& t : g.terms()) {
      Monomial m(sub->nvars());
      for (std::size_t k = 0; k < keep.size(); ++k) m.e[k] = t.first.e[keep[k]];
      p.push_term(m, t.second);
    }
    p.normalize();
    out.push_back(std::move(p));
  }
  return Ideal{sub, std::move(out)};
}

Ideal point_ideal(const RingPtr& ring, const std::vector<Rational>& coords) {
  if (coords.size() != ring->nvars())
    throw SodError("point coordinate count mismatch");
  std::size_t pivot = coords.size();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) {
      pivot = i;
      break;
    }
  if (pivot == coords.size()) throw SodError("zero vector is not a point");
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (j == pivot) continue;
    gens.push_back(Polynomial::variable(ring, j) * coords[pivot] -
                   Polynomial::variable(ring, pivot) * coords[j]);
  }
  return Ideal{ring, std::move(gens)};
}

bool vanishes_at(const Ideal& I, const std::vector<Rational>& coords) {
  for (const auto& g : I.gens)
    if (sgn(g.evaluate(coords)) != 0) return false;
  return true;
}

}  // namespace sod
