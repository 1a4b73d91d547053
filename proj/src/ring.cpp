#include "sod/ring.hpp"

namespace sod {

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order,
                  std::vector<std::vector<long>> grading) {
  auto r = std::make_shared<PolyRing>(
      PolyRing{std::move(names), order, std::move(grading)});
  if (r->grading.empty())
    r->grading.push_back(std::vector<long>(r->names.size(), 1));
  for (const auto& row : r->grading)
    if (row.size() != r->names.size())
      throw SodError("grading row length mismatch");
  return r;
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return make_ring(ring->names, order, ring->grading);
}

RingPtr prepend_vars(const RingPtr& ring, std::vector<std::string> fresh,
                     MonomialOrder order) {
  std::vector<std::string> names = fresh;
  names.insert(names.end(), ring->names.begin(), ring->names.end());
  std::vector<std::vector<long>> grading;
  for (const auto& row : ring->grading) {
    std::vector<long> r(fresh.size(), 1);
    r.insert(r.end(), row.begin(), row.end());
    grading.push_back(std::move(r));
  }
  return make_ring(std::move(names), order, std::move(grading));
}

RingPtr subring(const RingPtr& ring, const std::vector<std::size_t>& keep) {
  std::vector<std::string> names;
  for (auto i : keep) names.push_back(ring->names[i]);
  std::vector<std::vector<long>> grading;
  for (const auto& row : ring->grading) {
    std::vector<long> r;
    for (auto i : keep) r.push_back(row[i]);
    grading.push_back(std::move(r));
  }
  return make_ring(std::move(names), MonomialOrder::degrevlex(),
                   std::move(grading));
}

}  // namespace sod
