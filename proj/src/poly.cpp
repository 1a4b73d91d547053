#include "sod/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace sod {

Polynomial Polynomial::constant(const RingPtr& ring, const Rational& c) {
  Polynomial p(ring);
  if (sgn(c) != 0) p.terms_.emplace_back(Monomial(ring->nvars()), c);
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t i) {
  Polynomial p(ring);
  p.terms_.emplace_back(Monomial::var(ring->nvars(), i), Rational(1));
  return p;
}

Polynomial Polynomial::term(const RingPtr& ring, const Monomial& m,
                            const Rational& c) {
  Polynomial p(ring);
  if (sgn(c) != 0) p.terms_.emplace_back(m, c);
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw SodError("leading monomial of zero polynomial");
  return terms_.front().first;
}

const Rational& Polynomial::leading_coeff() const {
  if (terms_.empty()) throw SodError("leading coefficient of zero polynomial");
  return terms_.front().second;
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

bool Polynomial::is_homogeneous(std::vector<long>* degree) const {
  if (terms_.empty()) {
    if (degree) degree->assign(ring_->grading.size(), 0);
    return true;
  }
  const auto d0 = ring_->degree_vec(terms_.front().first);
  for (const auto& t : terms_)
    if (ring_->degree_vec(t.first) != d0) return false;
  if (degree) *degree = d0;
  return true;
}

Rational Polynomial::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return Rational(0);
}

bool Polynomial::depends_on(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.first.e[var] != 0) return true;
  return false;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.first.e[var]);
  return d;
}

void Polynomial::normalize() {
  const auto& ord = ring_->order;
  std::sort(terms_.begin(), terms_.end(),
            [&ord](const Term& a, const Term& b) {
              return ord.greater(a.first, b.first);
            });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (ring_ != o.ring_) throw SodError("polynomial sum across rings");
  Polynomial out(ring_);
  const auto& ord = ring_->order;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() &&
         ord.greater(terms_[i].first, o.terms_[j].first))) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() ||
               ord.greater(o.terms_[j].first, terms_[i].first)) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (sgn(c) != 0) out.terms_.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (ring_ != o.ring_) throw SodError("polynomial product across rings");
  const auto& ord = ring_->order;
  auto cmp = [&ord](const Monomial& a, const Monomial& b) {
    return ord.greater(a, b);
  };
  std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.first * b.first] += a.second * b.second;
  Polynomial out(ring_);
  for (auto& kv : acc)
    if (sgn(kv.second) != 0) out.terms_.emplace_back(kv.first, kv.second);
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(ring_);
  Polynomial p(*this);
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return ring_ == o.ring_ && terms_ == o.terms_;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(ring_);
  Polynomial p(*this);
  for (auto& t : p.terms_) {
    t.first = t.first * m;
    t.second *= c;
  }
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = constant(ring_, 1);
  Polynomial b = *this;
  while (e) {
    if (e & 1) out = out * b;
    b = b * b;
    e >>= 1;
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * (Rational(1) / leading_coeff());
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Integer den_lcm = 1;
  for (const auto& t : terms_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.second.get_den().get_mpz_t());
  Integer content = 0;
  for (const auto& t : terms_) {
    Integer num = t.second.get_num() * (den_lcm / t.second.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den_lcm, content);
  scale.canonicalize();
  if (sgn(leading_coeff()) < 0) scale = -scale;
  return *this * scale;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars())
    throw SodError("substitute: one image per variable required");
  Polynomial out(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.second);
    for (std::size_t i = 0; i < images.size(); ++i)
      for (int32_t k = 0; k < t.first.e[i]; ++k) prod = prod * images[i];
    out = out + prod;
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(ring_);
  for (const auto& t : terms_) {
    if (t.first.e[var] == 0) continue;
    Monomial m = t.first;
    const Rational c = t.second * Rational(m.e[var]);
    m.e[var] -= 1;
    out.terms_.emplace_back(m, c);
  }
  out.normalize();
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->nvars())
    throw SodError("evaluate: wrong point dimension");
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.second;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int32_t k = 0; k < t.first.e[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::div_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw SodError("division by zero polynomial");
  Polynomial rem = *this;
  Polynomial quo(ring_);
  const Monomial& dl = divisor.leading_monomial();
  while (!rem.is_zero()) {
    const Monomial& rl = rem.leading_monomial();
    if (!dl.divides(rl)) throw SodError("inexact polynomial division");
    const Monomial q = rl / dl;
    const Rational c = rem.leading_coeff() / divisor.leading_coeff();
    quo.terms_.emplace_back(q, c);
    rem = rem - divisor.mul_term(q, c);
  }
  quo.normalize();
  return quo;
}

int Polynomial::var_multiplicity(std::size_t var) const {
  if (terms_.empty()) return 0;
  int m = INT32_MAX;
  for (const auto& t : terms_) m = std::min<int>(m, t.first.e[var]);
  return m;
}

Polynomial Polynomial::shift_var_down(std::size_t var, int k) const {
  Polynomial p(*this);
  for (auto& t : p.terms_) {
    t.first.e[var] -= k;
    if (t.first.e[var] < 0) throw SodError("shift_var_down underflow");
  }
  p.normalize();
  return p;
}

Polynomial Polynomial::with_ring(const RingPtr& target) const {
  if (target->nvars() != ring_->nvars())
    throw SodError("with_ring: variable count mismatch");
  Polynomial p(target);
  p.terms_ = terms_;
  p.normalize();
  return p;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.second;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    std::string mono;
    for (std::size_t i = 0; i < t.first.nvars(); ++i) {
      if (t.first.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->names[i];
      if (t.first.e[i] > 1) mono += "^" + std::to_string(t.first.e[i]);
    }
    if (mono.empty()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const RingPtr& ring;
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  Polynomial expr() {
    Polynomial acc = eat('-') ? -product() : product();
    for (;;) {
      if (eat('+'))
        acc = acc + product();
      else if (eat('-'))
        acc = acc - product();
      else
        break;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      const std::string digits = read_digits();
      if (digits.empty()) throw SodError("exponent expected in: " + s);
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    skip();
    std::string d;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      d += s[pos++];
    return d;
  }

  Polynomial atom() {
    skip();
    if (eat('(')) {
      Polynomial inner = expr();
      if (!eat(')')) throw SodError("missing ')' in: " + s);
      return inner;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::string num = read_digits();
      if (eat('/')) {
        const std::string den = read_digits();
        if (den.empty()) throw SodError("denominator expected in: " + s);
        return Polynomial::constant(ring, rat_from_string(num + "/" + den));
      }
      return Polynomial::constant(ring, rat_from_string(num));
    }
    std::string name;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      name += s[pos++];
    if (name.empty()) throw SodError("parse error at '" +
                                     s.substr(pos, 8) + "' in: " + s);
    const int idx = ring->var_index(name);
    if (idx < 0) throw SodError("unknown variable '" + name + "' in: " + s);
    return Polynomial::variable(ring, static_cast<std::size_t>(idx));
  }
};

}  // namespace

Polynomial parse_poly(const RingPtr& ring, const std::string& text) {
  Parser p{ring, text};
  Polynomial out = p.expr();
  p.skip();
  if (p.pos != text.size())
    throw SodError("trailing input in polynomial: " + text);
  return out;
}

std::vector<Polynomial> parse_polys(const RingPtr& ring,
                                    const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_poly(ring, t));
  return out;
}

}  // namespace sod
