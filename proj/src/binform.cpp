#include "sod/binform.hpp"

#include <algorithm>
#include <sstream>

namespace sod {

BinForm BinForm::constant(const Rational& a) {
  if (sgn(a) == 0) return zero();
  BinForm f;
  f.deg = 0;
  f.c = {a};
  return f;
}

BinForm BinForm::from_coeffs(int deg, std::vector<Rational> coeffs) {
  if (deg < 0 || coeffs.size() != static_cast<std::size_t>(deg) + 1)
    throw SodError("binform coefficient count mismatch");
  bool all_zero = true;
  for (const auto& x : coeffs)
    if (sgn(x) != 0) all_zero = false;
  if (all_zero) return zero();
  BinForm f;
  f.deg = deg;
  f.c = std::move(coeffs);
  return f;
}

BinForm BinForm::monomial(int deg, int vpow, const Rational& coeff) {
  if (vpow < 0 || vpow > deg) throw SodError("binform monomial out of range");
  std::vector<Rational> c(deg + 1, Rational(0));
  c[vpow] = coeff;
  return from_coeffs(deg, std::move(c));
}

Rational BinForm::coeff(int vpow) const {
  if (is_zero() || vpow < 0 || vpow > deg) return Rational(0);
  return c[vpow];
}

BinForm BinForm::operator+(const BinForm& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (deg != o.deg) throw SodError("binform sum of unequal degrees");
  std::vector<Rational> s(c);
  for (int i = 0; i <= deg; ++i) s[i] += o.c[i];
  return from_coeffs(deg, std::move(s));
}

BinForm BinForm::operator-(const BinForm& o) const { return *this + (-o); }

BinForm BinForm::operator-() const {
  if (is_zero()) return *this;
  BinForm f(*this);
  for (auto& x : f.c) x = -x;
  return f;
}

BinForm BinForm::operator*(const BinForm& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Rational> p(deg + o.deg + 1, Rational(0));
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; j <= o.deg; ++j) p[i + j] += c[i] * o.c[j];
  return from_coeffs(deg + o.deg, std::move(p));
}

BinForm BinForm::operator*(const Rational& a) const {
  if (is_zero() || sgn(a) == 0) return zero();
  BinForm f(*this);
  for (auto& x : f.c) x *= a;
  return f;
}

bool BinForm::operator==(const BinForm& o) const {
  return deg == o.deg && c == o.c;
}

Rational BinForm::eval(const Rational& u, const Rational& v) const {
  if (is_zero()) return Rational(0);
  Rational acc = 0;
  for (int i = 0; i <= deg; ++i)
    acc += c[i] * pow(u, static_cast<unsigned long>(deg - i)) *
           pow(v, static_cast<unsigned long>(i));
  return acc;
}

std::string BinForm::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= deg; ++i) {
    Rational a = c[i];
    if (sgn(a) == 0) continue;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      a = abs(a);
    }
    std::string mono;
    const int up = deg - i;
    if (up > 0) mono += "u" + (up > 1 ? "^" + std::to_string(up) : "");
    if (i > 0) {
      if (!mono.empty()) mono += "*";
      mono += "v" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (mono.empty())
      os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

LinePoint LinePoint::of(const Rational& u, const Rational& v) {
  if (sgn(u) != 0) return LinePoint{Rational(1), v / u};
  if (sgn(v) == 0) throw SodError("zero vector is not a point on the line");
  return LinePoint{Rational(0), Rational(1)};
}

std::string LinePoint::str() const {
  return "[" + u.get_str() + ":" + v.get_str() + "]";
}

namespace {

std::vector<Integer> divisors_of(const Integer& n0) {
  Integer n = abs(n0);
  if (n == 0) throw SodError("divisors of zero");
  if (n > Integer(1000000000000L))
    throw UnsupportedError("root search constant too large");
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Divides x - alpha out of p (coefficients low-to-high); caller guarantees
// alpha is a root.
std::vector<Rational> deflate(const std::vector<Rational>& p,
                              const Rational& alpha) {
  std::vector<Rational> q(p.size() - 1, Rational(0));
  Rational carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * alpha;
    q[i - 1] = carry;
  }
  return q;
}

Rational eval_poly(const std::vector<Rational>& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

}  // namespace

FormRoots form_roots(const BinForm& f) {
  if (f.is_zero()) throw SodError("roots of the zero form");
  FormRoots out;
  // v^a divides f  <=>  [1:0] is a root of order a;
  // u^b divides f  <=>  [0:1] is a root of order b.
  int lo = 0;
  while (lo <= f.deg && sgn(f.c[lo]) == 0) ++lo;
  int hi = f.deg;
  while (hi >= 0 && sgn(f.c[hi]) == 0) --hi;
  if (lo > 0)
    out.roots.emplace_back(LinePoint{Rational(1), Rational(0)}, lo);
  if (hi < f.deg)
    out.roots.emplace_back(LinePoint{Rational(0), Rational(1)}, f.deg - hi);
  if (lo == hi) {
    out.residual_degree = 0;
    return out;
  }
  // Middle factor as a univariate in x = v/u with nonzero ends.
  std::vector<Rational> p(f.c.begin() + lo, f.c.begin() + hi + 1);
  // Clear to primitive integers for the rational root theorem.
  Integer den = 1;
  for (const auto& a : p)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den().get_mpz_t());
  std::vector<Integer> ip;
  Integer content = 0;
  for (const auto& a : p) {
    Integer v = a.get_num() * (den / a.get_den());
    ip.push_back(v);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  for (auto& v : ip) v /= content;
  const auto ps = divisors_of(ip.front());
  const auto qs = divisors_of(ip.back());
  std::vector<Rational> cur(p);
  for (const auto& pn : ps) {
    for (const auto& qn : qs) {
      for (int s : {1, -1}) {
        Rational alpha(pn * s, qn);
        alpha.canonicalize();
        int mult = 0;
        while (cur.size() > 1 && sgn(eval_poly(cur, alpha)) == 0) {
          cur = deflate(cur, alpha);
          ++mult;
        }
        if (mult > 0)
          out.roots.emplace_back(LinePoint{Rational(1), alpha}, mult);
      }
    }
  }
  out.residual_degree = static_cast<int>(cur.size()) - 1;
  return out;
}

BinForm binform_gcd(const BinForm& a, const BinForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Split off u/v powers, run Euclid on the univariate middles.
  auto split = [](const BinForm& f, int* vpow, int* upow) {
    int lo = 0;
    while (sgn(f.c[lo]) == 0) ++lo;
    int hi = f.deg;
    while (sgn(f.c[hi]) == 0) --hi;
    *vpow = lo;
    *upow = f.deg - hi;
    return std::vector<Rational>(f.c.begin() + lo, f.c.begin() + hi + 1);
  };
  int av, au, bv, bu;
  std::vector<Rational> pa = split(a, &av, &au);
  std::vector<Rational> pb = split(b, &bv, &bu);
  auto strip = [](std::vector<Rational>& p) {
    while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
  };
  while (!(pb.size() == 1 && sgn(pb[0]) == 0)) {
    // pa mod pb
    while (pa.size() >= pb.size()) {
      const Rational f = pa.back() / pb.back();
      const std::size_t off = pa.size() - pb.size();
      for (std::size_t i = 0; i < pb.size(); ++i) pa[off + i] -= f * pb[i];
      strip(pa);
      if (pa.size() == 1 && sgn(pa[0]) == 0) break;
    }
    std::swap(pa, pb);
  }
  // pa is the univariate gcd; monicize.
  const Rational lead = pa.back();
  for (auto& x : pa) x /= lead;
  const int gv = std::min(av, bv), gu = std::min(au, bu);
  const int gdeg = static_cast<int>(pa.size()) - 1 + gv + gu;
  std::vector<Rational> coeffs(gdeg + 1, Rational(0));
  for (std::size_t i = 0; i < pa.size(); ++i) coeffs[gv + i] = pa[i];
  return BinForm::from_coeffs(gdeg, std::move(coeffs));
}

int form_ord_at(const BinForm& f, const LinePoint& p) {
  if (f.is_zero()) throw SodError("vanishing order of the zero form");
  // Repeatedly divide by the linear form vanishing at p: l = v0*u - u0*v...
  // l(p) = 0 requires l = p.v * u - p.u * v up to scale.
  BinForm l = BinForm::from_coeffs(1, {p.v, -p.u});
  int ord = 0;
  BinForm cur = f;
  for (;;) {
    if (sgn(cur.eval(p.u, p.v)) != 0) return ord;
    // Exact division cur / l via long division in v (or u).
    if (cur.deg == 0) return ord;
    std::vector<Rational> q(cur.deg, Rational(0));
    std::vector<Rational> rem = cur.c;
    if (sgn(l.c[0]) != 0) {
      // leading in u: divide front-first
      for (int i = 0; i < cur.deg; ++i) {
        const Rational f0 = rem[i] / l.c[0];
        q[i] = f0;
        rem[i] -= f0 * l.c[0];
        rem[i + 1] -= f0 * l.c[1];
      }
    } else {
      for (int i = cur.deg; i > 0; --i) {
        const Rational f0 = rem[i] / l.c[1];
        q[i - 1] = f0;
        rem[i] -= f0 * l.c[1];
        rem[i - 1] -= f0 * l.c[0];
      }
    }
    for (const auto& r : rem)
      if (sgn(r) != 0) return ord;
    cur = BinForm::from_coeffs(cur.deg - 1, q);
    ++ord;
    if (cur.is_zero()) throw SodError("vanishing order went degenerate");
  }
}

BinForm form_det(const std::vector<std::vector<BinForm>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BinForm acc = BinForm::zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<BinForm>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BinForm> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    const BinForm cof = m[0][j] * form_det(sub);
    acc = (j % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

BinForm binform_substitute(const BinForm& f, const Rational& a,
                           const Rational& b, const Rational& c,
                           const Rational& d) {
  if (f.is_zero()) return f;
  const BinForm nu = BinForm::from_coeffs(1, {a, b});
  const BinForm nv = BinForm::from_coeffs(1, {c, d});
  BinForm acc = BinForm::zero();
  for (int i = 0; i <= f.deg; ++i) {
    if (sgn(f.c[i]) == 0) continue;
    BinForm term = BinForm::constant(f.c[i]);
    for (int k = 0; k < f.deg - i; ++k) term = term * nu;
    for (int k = 0; k < i; ++k) term = term * nv;
    acc = acc + term;
  }
  if (acc.is_zero()) return acc;
  return acc;
}

}  // namespace sod
