#include "sod/groebner.hpp"

#include <algorithm>
#include <list>

namespace sod {

long& default_spair_budget() {
  static long budget = 200000;
  return budget;
}

Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& basis) {
  if (f.is_zero()) return f;
  const RingPtr ring = f.ring();
  Polynomial rem(ring);
  while (!f.is_zero()) {
    const Monomial& lm = f.leading_monomial();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      const Monomial q = lm / divisor->leading_monomial();
      const Rational c = f.leading_coeff() / divisor->leading_coeff();
      f = f - divisor->mul_term(q, c);
    } else {
      rem.push_term(lm, f.leading_coeff());
      f = f - Polynomial::term(ring, lm, f.leading_coeff());
    }
  }
  rem.normalize();
  return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial L =
      Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial a =
      f.mul_term(L / f.leading_monomial(), Rational(1) / f.leading_coeff());
  const Polynomial b =
      g.mul_term(L / g.leading_monomial(), Rational(1) / g.leading_coeff());
  return a - b;
}

bool GroebnerBasis::contains(const Polynomial& f) const {
  return normal_form(f.with_ring(ring), polys).is_zero();
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  long sugar;
};

long sugar_of_pair(const std::vector<Polynomial>& basis,
                   const std::vector<long>& sugar, std::size_t i,
                   std::size_t j, const Monomial& lcm) {
  const long si =
      sugar[i] + (lcm / basis[i].leading_monomial()).total_degree();
  const long sj =
      sugar[j] + (lcm / basis[j].leading_monomial()).total_degree();
  return std::max(si, sj);
}

// Gebauer-Moeller update: forms the pairs of the new element t against the
// existing basis, pruning with the multiple/equal-lcm/product criteria, and
// drops old pairs made redundant by t.
void update_pairs(std::vector<Pair>& pairs,
                  const std::vector<Polynomial>& basis,
                  const std::vector<long>& sugar, std::size_t t) {
  const Monomial& lt_t = basis[t].leading_monomial();
  std::vector<Pair> fresh;
  for (std::size_t i = 0; i < t; ++i) {
    if (basis[i].is_zero()) continue;
    Pair p{i, t, Monomial::lcm(basis[i].leading_monomial(), lt_t), 0};
    p.sugar = sugar_of_pair(basis, sugar, i, t, p.lcm);
    fresh.push_back(std::move(p));
  }
  // Multiple criterion: drop (i,t) when another new pair's lcm properly
  // divides it.
  std::vector<bool> drop(fresh.size(), false);
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    for (std::size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || drop[b]) continue;
      if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm) {
        drop[a] = true;
        break;
      }
    }
  }
  // Equal-lcm criterion: keep the first of each lcm class.
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    for (std::size_t b = 0; b < a; ++b) {
      if (!drop[b] && fresh[b].lcm == fresh[a].lcm) {
        drop[a] = true;
        break;
      }
    }
  }
  // Product criterion: coprime leading terms reduce to zero.
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    const Monomial prod =
        basis[fresh[a].i].leading_monomial() * lt_t;
    if (prod == fresh[a].lcm) drop[a] = true;
  }
  // Chain criterion against old pairs.
  std::vector<Pair> kept;
  for (auto& p : pairs) {
    const bool divisible = lt_t.divides(p.lcm);
    if (divisible) {
      const Monomial l_it =
          Monomial::lcm(basis[p.i].leading_monomial(), lt_t);
      const Monomial l_jt =
          Monomial::lcm(basis[p.j].leading_monomial(), lt_t);
      if (l_it != p.lcm && l_jt != p.lcm) continue;
    }
    kept.push_back(std::move(p));
  }
  for (std::size_t a = 0; a < fresh.size(); ++a)
    if (!drop[a]) kept.push_back(std::move(fresh[a]));
  pairs = std::move(kept);
}

std::size_t select_pair(const std::vector<Pair>& pairs,
                        const MonomialOrder& order) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const Pair& a = pairs[k];
    const Pair& b = pairs[best];
    if (a.sugar != b.sugar) {
      if (a.sugar < b.sugar) best = k;
      continue;
    }
    const int c = order.compare(a.lcm, b.lcm);
    if (c != 0) {
      if (c < 0) best = k;
      continue;
    }
    if (a.i < b.i || (a.i == b.i && a.j < b.j)) best = k;
  }
  return best;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> g,
                                    const RingPtr& ring) {
  // Minimalize: drop elements whose leading term another element divides.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      const Monomial& li = g[i].leading_monomial();
      const Monomial& lj = g[j].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Tail reduce each element against the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(minimal[i], others).monic();
  }
  std::sort(minimal.begin(), minimal.end(),
            [&ring](const Polynomial& a, const Polynomial& b) {
              return ring->order.less(a.leading_monomial(),
                                      b.leading_monomial());
            });
  return minimal;
}

}  // namespace

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens,
                             long budget) {
  if (gens.empty()) throw SodError("groebner_basis needs the ambient ring");
  const RingPtr ring = gens.front().ring();
  if (budget < 0) budget = default_spair_budget();

  std::vector<Polynomial> basis;
  std::vector<long> sugar;
  std::vector<Pair> pairs;
  long processed = 0;

  auto add_element = [&](Polynomial p, long sug) {
    basis.push_back(std::move(p));
    sugar.push_back(sug);
    update_pairs(pairs, basis, sugar, basis.size() - 1);
  };

  for (const auto& g0 : gens) {
    if (g0.ring() != ring) throw SodError("generators from different rings");
    const Polynomial g = normal_form(g0, basis).primitive();
    if (!g.is_zero()) add_element(g, g.total_degree());
  }

  while (!pairs.empty()) {
    if (processed >= budget)
      throw BudgetExceeded("S-pair budget exhausted after " +
                           std::to_string(processed) + " pairs");
    const std::size_t k = select_pair(pairs, ring->order);
    const Pair p = pairs[k];
    pairs.erase(pairs.begin() + static_cast<long>(k));
    ++processed;
    const Polynomial s = s_polynomial(basis[p.i], basis[p.j]);
    const Polynomial r = normal_form(s, basis).primitive();
    if (!r.is_zero()) {
      const long sug = std::max(p.sugar, r.total_degree());
      add_element(r, sug);
    }
  }

  GroebnerBasis out;
  out.ring = ring;
  out.polys = interreduce(std::move(basis), ring);
  out.spairs_processed = processed;
  return out;
}

}  // namespace sod
