#include "sod/splitbundle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace sod {

SplitBundle SplitBundle::of(std::vector<int> twists) {
  std::sort(twists.begin(), twists.end(), std::greater<int>());
  return SplitBundle{std::move(twists)};
}

long SplitBundle::degree() const {
  return std::accumulate(tw.begin(), tw.end(), 0L);
}

long SplitBundle::h0() const {
  long s = 0;
  for (int d : tw)
    if (d >= 0) s += d + 1;
  return s;
}

long SplitBundle::h1() const {
  long s = 0;
  for (int d : tw)
    if (d <= -2) s += -d - 1;
  return s;
}

SplitBundle SplitBundle::dual() const {
  std::vector<int> d;
  for (int t : tw) d.push_back(-t);
  return of(std::move(d));
}

SplitBundle SplitBundle::twist(int b) const {
  std::vector<int> d;
  for (int t : tw) d.push_back(t + b);
  return of(std::move(d));
}

SplitBundle SplitBundle::direct_sum(const SplitBundle& o) const {
  std::vector<int> d = tw;
  d.insert(d.end(), o.tw.begin(), o.tw.end());
  return of(std::move(d));
}

SplitBundle SplitBundle::tensor(const SplitBundle& o) const {
  std::vector<int> d;
  for (int a : tw)
    for (int b : o.tw) d.push_back(a + b);
  return of(std::move(d));
}

SplitBundle SplitBundle::sym(int a) const {
  if (a < 0) return of({});
  if (a == 0) return trivial(1);
  std::vector<int> out;
  // Weakly increasing index tuples of length a.
  std::vector<std::size_t> idx(a, 0);
  const std::size_t r = rank();
  if (r == 0) return of({});
  for (;;) {
    int sum = 0;
    for (auto i : idx) sum += tw[i];
    out.push_back(sum);
    int pos = a - 1;
    while (pos >= 0 && idx[pos] == r - 1) --pos;
    if (pos < 0) break;
    const std::size_t next = idx[pos] + 1;
    for (int k = pos; k < a; ++k) idx[k] = next;
  }
  return of(std::move(out));
}

SplitBundle SplitBundle::wedge(int k) const {
  if (k < 0 || k > static_cast<int>(rank())) return of({});
  if (k == 0) return trivial(1);
  std::vector<int> out;
  std::vector<std::size_t> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    int sum = 0;
    for (auto i : idx) sum += tw[i];
    out.push_back(sum);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == rank() - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return of(std::move(out));
}

SplitBundle SplitBundle::det() const {
  return of({static_cast<int>(degree())});
}

std::string SplitBundle::str() const {
  if (tw.empty()) return "0";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < tw.size()) {
    std::size_t j = i;
    while (j < tw.size() && tw[j] == tw[i]) ++j;
    if (!first) os << " \xE2\x8A\x95 ";  // ⊕
    first = false;
    if (tw[i] == 0)
      os << "O";
    else
      os << "O(" << tw[i] << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

}  // namespace sod
