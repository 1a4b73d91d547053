#include "sod/monomial.hpp"

#include <algorithm>

namespace sod {

namespace {

// Degrevlex over an index sequence: higher total degree wins; on ties, scan
// the sequence from its least significant end, and the monomial with the
// larger exponent there is the smaller one.
int degrevlex_on(const Monomial& a, const Monomial& b,
                 const std::vector<std::size_t>& seq) {
  long da = 0, db = 0;
  for (auto i : seq) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    const int32_t xa = a.e[*it], xb = b.e[*it];
    if (xa != xb) return xa > xb ? -1 : 1;
  }
  return 0;
}

std::vector<std::size_t> iota_seq(std::size_t from, std::size_t to) {
  std::vector<std::size_t> s;
  for (std::size_t i = from; i < to; ++i) s.push_back(i);
  return s;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  if (n != b.nvars()) throw SodError("monomial comparison across rings");
  switch (kind_) {
    case Kind::kDegrevlex:
      return degrevlex_on(a, b, iota_seq(0, n));
    case Kind::kLex: {
      for (std::size_t i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    }
    case Kind::kBlock: {
      const int c = degrevlex_on(a, b, iota_seq(0, block_));
      if (c) return c;
      return degrevlex_on(a, b, iota_seq(block_, n));
    }
    case Kind::kSubsetElim: {
      const int c = degrevlex_on(a, b, subset_);
      if (c) return c;
      std::vector<bool> in(n, false);
      for (auto i : subset_) in[i] = true;
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < n; ++i)
        if (!in[i]) rest.push_back(i);
      return degrevlex_on(a, b, rest);
    }
    case Kind::kPermutedDegrevlex:
      return degrevlex_on(a, b, subset_);
    case Kind::kWeightsThenDegrevlex: {
      for (const auto& w : weights_) {
        long wa = 0, wb = 0;
        for (std::size_t i = 0; i < n; ++i) {
          wa += w[i] * a.e[i];
          wb += w[i] * b.e[i];
        }
        if (wa != wb) return wa < wb ? -1 : 1;
      }
      return degrevlex_on(a, b, iota_seq(0, n));
    }
  }
  throw SodError("unreachable monomial order kind");
}

}  // namespace sod
