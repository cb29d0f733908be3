#include <algorithm>
#include <set>

#include "horofan/errors.hpp"
#include "horofan/polyhedra.hpp"

namespace horofan {

namespace {

// Pulling triangulation of a pointed cone given by its extreme rays.
void triangulate(std::size_t d, const std::vector<IntVector>& rays, std::vector<std::vector<IntVector>>& out) {
  if (rank(rays, d) == rays.size()) {
    out.push_back(rays);
    return;
  }
  Cone c = Cone::from_generators(d, rays);
  const IntVector& apex = rays.front();
  for (const auto& f : c.facets()) {
    if (dot(f, apex) == 0) continue;
    std::vector<IntVector> facet_rays;
    for (const auto& r : rays)
      if (dot(f, r) == 0) facet_rays.push_back(r);
    std::vector<std::vector<IntVector>> sub;
    triangulate(d, facet_rays, sub);
    for (auto& s : sub) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<IntVector> hilbert_basis(const Cone& sigma, Execution mode) {
  if (!sigma.is_strongly_convex()) throw NotPointed("hilbert_basis: cone " + sigma.to_string() + " contains a line");
  if (sigma.rays().empty()) return {};
  const std::size_t n = sigma.ambient_rank();

  // coordinates with respect to a lattice basis of the linear span
  IntMatrix basis = IntMatrix::from_columns(sigma.span_lattice(), n);
  const std::size_t d = basis.cols();
  std::vector<IntVector> rays;
  for (const auto& r : sigma.rays()) rays.push_back(solve_integer_affine(basis, r)->particular);
  Cone local = Cone::from_generators(d, rays);

  std::vector<std::vector<IntVector>> simplices;
  triangulate(d, local.rays(), simplices);

  std::set<IntVector> candidates(local.rays().begin(), local.rays().end());
  for (const auto& s : simplices) {
    IntMatrix g = IntMatrix::from_columns(s, d);
    auto pts = mode == Execution::parallel ? kernels::parallelepiped_points_parallel(g)
                                           : kernels::parallelepiped_points_serial(g);
    candidates.insert(pts.begin(), pts.end());
  }
  std::vector<IntVector> cand(candidates.begin(), candidates.end());
  auto irreducible = mode == Execution::parallel ? kernels::irreducible_parallel(cand, local.facets())
                                                 : kernels::irreducible_serial(cand, local.facets());
  std::vector<IntVector> out;
  for (const auto& x : irreducible) out.push_back(basis.apply(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace horofan
