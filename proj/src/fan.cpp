#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "horofan/polyhedra.hpp"

namespace horofan {

PlainFan::PlainFan(std::size_t ambient_rank, std::vector<Cone> cones) : n_(ambient_rank), cones_(std::move(cones)) {
  for (const auto& c : cones_)
    if (c.ambient_rank() != n_) throw std::invalid_argument("PlainFan: cone of wrong rank");
  std::sort(cones_.begin(), cones_.end());
  cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
}

std::vector<Cone> PlainFan::maximal_cones() const {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cones_.size() && maximal; ++j)
      if (i != j && cones_[j].contains(cones_[i])) maximal = false;
    if (maximal) out.push_back(cones_[i]);
  }
  return out;
}

bool support_contains(const PlainFan& fan, const IntVector& u) {
  return std::any_of(fan.cones().begin(), fan.cones().end(), [&](const Cone& c) { return c.contains(u); });
}

bool fan_is_complete(const PlainFan& fan) {
  const std::size_t n = fan.ambient_rank();
  auto maximal = fan.maximal_cones();
  if (maximal.empty()) return false;
  for (const auto& c : maximal)
    if (c.dim() != n) return false;

  // facet graph: every facet must be shared by exactly two maximal cones
  std::vector<std::size_t> parent(maximal.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    for (const auto& f : maximal[i].facets()) {
      Cone facet = Cone::from_inequalities(n, maximal[i].facets(), {f});
      std::vector<std::size_t> owners;
      for (std::size_t j = 0; j < maximal.size(); ++j)
        if (is_face_of(facet, maximal[j])) owners.push_back(j);
      if (owners.size() != 2) return false;
      parent[find(owners[0])] = find(owners[1]);
    }
  }
  for (std::size_t i = 0; i < maximal.size(); ++i)
    if (find(i) != find(0)) return false;
  return true;
}

bool region_covered(const Cone& region, const std::vector<Cone>& pieces, const CancelToken* cancel) {
  check_cancel(cancel);
  const std::size_t n = region.ambient_rank();
  std::vector<Cone> relevant;
  for (const auto& p : pieces) {
    Cone q = intersect(p, region);
    if (q.dim() == region.dim()) relevant.push_back(std::move(q));
  }
  if (relevant.empty()) return false;
  const Cone first = relevant.front();
  if (first == region) return true;
  std::vector<Cone> rest(relevant.begin() + 1, relevant.end());

  // region minus first is covered by the pieces Q_j = region cap {h_1..h_{j-1} >= 0, h_j <= 0}
  const auto gens = region.generators();
  std::vector<IntVector> prior;
  for (const auto& h : first.facets()) {
    bool valid = std::all_of(gens.begin(), gens.end(), [&](const IntVector& g) { return dot(h, g) >= 0; });
    if (!valid) {
      std::vector<IntVector> ineq = region.facets();
      ineq.insert(ineq.end(), prior.begin(), prior.end());
      ineq.push_back(negate(h));
      Cone q = Cone::from_inequalities(n, ineq, region.equations());
      if (q.dim() == region.dim() && !region_covered(q, rest, cancel)) return false;
    }
    prior.push_back(h);
  }
  return true;
}

}  // namespace horofan
