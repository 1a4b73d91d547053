#include "sod/hilbert.hpp"

#include <algorithm>
#include <map>

namespace sod {

namespace {

using Series = std::vector<Rational>;  // coefficient k belongs to T^k

Series mul(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) return {};
  Series c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  return c;
}

Series add(const Series& a, const Series& b) {
  Series c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  return c;
}

Series shift(const Series& a, long e) {
  if (a.empty()) return {};
  Series c(a.size() + static_cast<std::size_t>(e), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i + e] = a[i];
  return c;
}

Series one_minus_power(long d) {
  Series s(static_cast<std::size_t>(d) + 1, Rational(0));
  s[0] = 1;
  s[d] = -1;
  return s;
}

Rational eval_at_one(const Series& a) {
  Rational s = 0;
  for (const auto& c : a) s += c;
  return s;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && (gens[j] != gens[i] || j < i))
        redundant = true;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

bool support_single_var(const Monomial& m, std::size_t* var) {
  int found = -1;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (found >= 0) return false;
    found = static_cast<int>(i);
  }
  if (found < 0) return false;
  *var = static_cast<std::size_t>(found);
  return true;
}

Series numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return Series{Rational(1)};
  for (const auto& g : gens)
    if (g.is_one()) return Series{};
  // Pure-power base case: distinct single variables.
  bool pure = true;
  for (const auto& g : gens) {
    std::size_t v;
    if (!support_single_var(g, &v)) {
      pure = false;
      break;
    }
  }
  if (pure) {
    Series s{Rational(1)};
    for (const auto& g : gens) s = mul(s, one_minus_power(g.total_degree()));
    return s;
  }
  // Pivot: among variables appearing in some mixed-support generator, the one
  // hitting the most generators, raised to the median exponent it attains.
  // The exponent is clamped below any pure power of that variable already in
  // the ideal, so the branch I + (pivot) strictly grows and recursion
  // terminates.
  std::vector<bool> in_mixed(nvars, false);
  for (const auto& g : gens) {
    std::size_t support = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (g.e[v] > 0) ++support;
    if (support >= 2)
      for (std::size_t v = 0; v < nvars; ++v)
        if (g.e[v] > 0) in_mixed[v] = true;
  }
  std::size_t best_var = 0, best_count = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (!in_mixed[v]) continue;
    std::size_t count = 0;
    for (const auto& g : gens)
      if (g.e[v] > 0) ++count;
    if (count > best_count) {
      best_count = count;
      best_var = v;
    }
  }
  std::vector<int32_t> exps;
  for (const auto& g : gens)
    if (g.e[best_var] > 0) exps.push_back(g.e[best_var]);
  std::sort(exps.begin(), exps.end());
  int32_t e = exps[exps.size() / 2];
  for (const auto& g : gens) {
    std::size_t v;
    if (support_single_var(g, &v) && v == best_var && g.e[v] <= e)
      e = g.e[v] - 1;
  }
  if (e < 1) throw SodError("hilbert pivot degenerated");
  const Monomial pivot = Monomial::var(nvars, best_var, e);

  // HS(S/I) = HS(S/(I + p)) + T^deg(p) * HS(S/(I : p)).
  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial q(g);
    q.e[best_var] = std::max<int32_t>(0, q.e[best_var] - e);
    colon.push_back(q);
  }
  return add(numerator_rec(std::move(plus), nvars),
             shift(numerator_rec(std::move(colon), nvars), e));
}

// Coefficients of the polynomial binomial(t + offset, k) in t.
Series binom_poly(long offset, long k) {
  Series p{Rational(1)};
  for (long i = 0; i < k; ++i) {
    // multiply by (t + offset - i)
    Series q(p.size() + 1, Rational(0));
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j + 1] += p[j];
      q[j] += p[j] * Rational(offset - i);
    }
    p = std::move(q);
  }
  Rational fact = 1;
  for (long i = 2; i <= k; ++i) fact *= i;
  for (auto& c : p) c /= fact;
  return p;
}

}  // namespace

Rational binomial(const Rational& top, long k) {
  if (k < 0) return Rational(0);
  Rational acc = 1;
  for (long i = 0; i < k; ++i) acc *= (top - i) / Rational(i + 1);
  return acc;
}

std::vector<Rational> hilbert_numerator(std::vector<Monomial> gens,
                                        std::size_t nvars) {
  return numerator_rec(std::move(gens), nvars);
}

Rational HilbertData::hp_at(long t) const {
  Rational acc = 0;
  Rational p = 1;
  for (const auto& c : hp) {
    acc += c * p;
    p *= t;
  }
  return acc;
}

std::vector<long> HilbertData::h_function(std::size_t tmax,
                                          std::size_t nvars) const {
  // Expand N(T) / (1-T)^n as a power series.
  std::vector<long> h(tmax + 1, 0);
  for (std::size_t t = 0; t <= tmax; ++t) {
    Rational acc = 0;
    for (std::size_t j = 0; j < numerator.size() && j <= t; ++j)
      acc += numerator[j] *
             binomial(Rational(static_cast<long>(nvars + t - j) - 1),
                      static_cast<long>(nvars) - 1);
    if (acc.get_den() != 1)
      throw SodError("hilbert function value is not an integer");
    h[t] = static_cast<long>(acc.get_num().get_si());
  }
  return h;
}

HilbertData hilbert_data(const GroebnerBasis& gb) {
  for (const auto& g : gb.polys) {
    Polynomial p = g;
    long d = -1;
    for (const auto& t : p.terms()) {
      if (d < 0) d = t.first.total_degree();
      if (t.first.total_degree() != d)
        throw UnsupportedError("hilbert_data needs a homogeneous ideal");
    }
  }
  const std::size_t n = gb.ring ? gb.ring->nvars() : 0;
  std::vector<Monomial> lts;
  for (const auto& g : gb.polys) lts.push_back(g.leading_monomial());

  HilbertData out;
  out.numerator = hilbert_numerator(lts, n);
  if (out.numerator.empty()) {
    out.is_zero = true;
    out.degree = 0;
    out.proj_dim = -2;
    out.denominator_power = 0;
    return out;
  }
  Series reduced = out.numerator;
  int cancelled = 0;
  while (sgn(eval_at_one(reduced)) == 0) {
    // Divide by (1 - T): Q_i = sum of coefficients up to i.
    Series q(reduced.size() - 1, Rational(0));
    Rational acc = 0;
    for (std::size_t i = 0; i + 1 < reduced.size(); ++i) {
      acc += reduced[i];
      q[i] = acc;
    }
    reduced = std::move(q);
    ++cancelled;
    if (reduced.empty()) throw SodError("hilbert numerator collapsed");
  }
  out.reduced_numerator = reduced;
  out.denominator_power = static_cast<int>(n) - cancelled;
  out.proj_dim = out.denominator_power - 1;
  out.degree = eval_at_one(reduced);

  // P(t) = sum_j N~_j * binomial(t - j + D - 1, D - 1).
  const long D = out.denominator_power;
  Series hp;
  if (D > 0) {
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      if (sgn(reduced[j]) == 0) continue;
      Series term = binom_poly(D - 1 - static_cast<long>(j), D - 1);
      for (auto& c : term) c *= reduced[j];
      hp = add(hp, term);
    }
  }
  out.hp = hp;
  return out;
}

HilbertData hilbert_data(const Ideal& I, long budget) {
  if (!ideal_is_homogeneous(I))
    throw UnsupportedError("hilbert_data needs a homogeneous ideal");
  return hilbert_data(ideal_gb(I, budget));
}

}  // namespace sod
