#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sod {

// Exact rational scalar used everywhere. mpq_class keeps values canonical:
// gcd(num, den) = 1, den > 0, and zero is 0/1, which is exactly the invariant
// the kernel requires. No floating point exists anywhere in this library.
using Rational = mpq_class;
using Integer = mpz_class;

struct SodError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a Groebner computation exceeds its S-pair budget.
struct BudgetExceeded : SodError {
  explicit BudgetExceeded(const std::string& what) : SodError(what) {}
};

// Raised when an input is outside the class an operation supports.
struct UnsupportedError : SodError {
  explicit UnsupportedError(const std::string& what) : SodError(what) {}
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw SodError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "a" or "a/b" with optional sign.
inline Rational rat_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw SodError("bad rational literal: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw SodError("rational with zero denominator: " + s);
  return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
  Rational out = 1;
  Rational b = base;
  while (e) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

inline int sign(const Rational& r) { return sgn(r); }

inline bool is_square(const Rational& r, Rational* root = nullptr) {
  if (sgn(r) < 0) return false;
  const Integer num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  if (root) {
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = Rational(rn, rd);
    root->canonicalize();
  }
  return true;
}

}  // namespace sod
