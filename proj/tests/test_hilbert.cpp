#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "horofan/polyhedra.hpp"

using namespace horofan;
using fx::iv;

namespace {

std::set<oracle::Vec> as_set(const std::vector<IntVector>& vs) {
  std::set<oracle::Vec> out;
  for (const auto& v : vs) out.insert(fx::to_ov(v));
  return out;
}

}  // namespace

TEST_CASE("hilbert basis examples") {
  CHECK(hilbert_basis(Cone::from_generators(2, {iv({1, 0}), iv({0, 1})})) ==
        std::vector<IntVector>{iv({0, 1}), iv({1, 0})});
  CHECK(hilbert_basis(Cone::from_generators(2, {iv({1, 0}), iv({1, 2})})) ==
        std::vector<IntVector>{iv({1, 0}), iv({1, 1}), iv({1, 2})});
  CHECK(hilbert_basis(Cone::from_generators(1, {iv({1})})) == std::vector<IntVector>{iv({1})});
  CHECK(hilbert_basis(Cone::trivial(2)).empty());
  // lower-dimensional cone inside Z^3
  CHECK(hilbert_basis(Cone::from_generators(3, {iv({1, 0, 0}), iv({1, 2, 0})})) ==
        std::vector<IntVector>{iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 2, 0})});
  CHECK_THROWS_AS(hilbert_basis(Cone::from_generators(1, {iv({1}), iv({-1})})), NotPointed);
}

TEST_CASE("hilbert basis matches box enumeration") {
  std::mt19937 rng(31);
  int checked = 0;
  while (checked < 60) {
    std::size_t n = 2 + rng() % 2;
    auto rays = fx::random_rays(rng, n, n + rng() % 2, n == 2 ? 4 : 2);
    Cone s = Cone::from_generators(n, rays);
    if (!s.is_full_dimensional() || !s.is_strongly_convex()) continue;
    std::vector<oracle::Vec> g;
    for (const auto& r : s.rays()) g.push_back(fx::to_ov(r));
    auto expected = oracle::hilbert_basis(g, n);
    auto got = hilbert_basis(s, Execution::parallel);
    CHECK(as_set(got) == expected);
    CHECK(got == hilbert_basis(s, Execution::serial));
    for (const auto& h : got) CHECK(s.contains(h));
    ++checked;
  }
}

TEST_CASE("parallel and serial kernels agree") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 3;
    auto rays = fx::random_rays(rng, n, n, 4);
    if (rank(rays, n) != n) continue;
    IntMatrix G = IntMatrix::from_columns(rays, n);
    auto a = kernels::parallelepiped_points_serial(G);
    auto b = kernels::parallelepiped_points_parallel(G);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    // |det| - 1 nonzero points in the half-open parallelepiped
    Int det = determinant(G);
    CHECK(Int(static_cast<unsigned long>(a.size())) == abs(det) - 1);

    Cone s = Cone::from_generators(n, rays);
    std::vector<IntVector> cand = a;
    cand.insert(cand.end(), rays.begin(), rays.end());
    auto x = kernels::irreducible_serial(cand, s.facets());
    auto y = kernels::irreducible_parallel(cand, s.facets());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    CHECK(x == y);
  }
}
