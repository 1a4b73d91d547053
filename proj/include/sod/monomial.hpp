#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "sod/rational.hpp"

namespace sod {

// Exponent vector of a monomial in a fixed polynomial ring.
struct Monomial {
  std::vector<int32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}

  std::size_t nvars() const { return e.size(); }
  long total_degree() const {
    return std::accumulate(e.begin(), e.end(), 0L);
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  Monomial operator*(const Monomial& o) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] += o.e[i];
    return m;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // Quotient this / o; caller guarantees o divides this.
  Monomial operator/(const Monomial& o) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < e.size(); ++i) {
      m.e[i] -= o.e[i];
      if (m.e[i] < 0) throw SodError("monomial quotient is not a monomial");
    }
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a);
    for (std::size_t i = 0; i < m.e.size(); ++i)
      if (b.e[i] > m.e[i]) m.e[i] = b.e[i];
    return m;
  }

  static Monomial var(std::size_t nvars, std::size_t i, int32_t power = 1) {
    Monomial m(nvars);
    m.e[i] = power;
    return m;
  }
};

// Term orders. All of them are global monomial orders (1 is smallest), so
// Buchberger terminates and leading terms are well defined.
class MonomialOrder {
 public:
  enum class Kind {
    kDegrevlex,
    kLex,
    // Compares degrevlex on a leading block of variables, then degrevlex on
    // the rest; eliminates the leading block.
    kBlock,
    // Same, but the leading block is an arbitrary variable subset.
    kSubsetElim,
    // Degrevlex in a permuted variable sequence (seq[0] most significant).
    kPermutedDegrevlex,
    // Compares a list of integer weight rows first, then degrevlex.
    kWeightsThenDegrevlex,
  };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::kDegrevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::kLex); }
  static MonomialOrder block(std::size_t first_block_size) {
    MonomialOrder o(Kind::kBlock);
    o.block_ = first_block_size;
    return o;
  }
  static MonomialOrder subset_elim(std::vector<std::size_t> eliminated) {
    MonomialOrder o(Kind::kSubsetElim);
    o.subset_ = std::move(eliminated);
    return o;
  }
  static MonomialOrder permuted_degrevlex(std::vector<std::size_t> seq) {
    MonomialOrder o(Kind::kPermutedDegrevlex);
    o.subset_ = std::move(seq);
    return o;
  }
  static MonomialOrder weights_then_degrevlex(
      std::vector<std::vector<long>> rows) {
    MonomialOrder o(Kind::kWeightsThenDegrevlex);
    o.weights_ = std::move(rows);
    return o;
  }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& subset() const { return subset_; }

  // Returns +1 if a > b, -1 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const;

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && block_ == o.block_ && subset_ == o.subset_ &&
           weights_ == o.weights_;
  }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_;
  std::size_t block_ = 0;
  std::vector<std::size_t> subset_;
  std::vector<std::vector<long>> weights_;
};

}  // namespace sod
