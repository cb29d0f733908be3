// Example fans and random generators shared by the test binaries.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "horofan/dictionary.hpp"
#include "horofan/divisors.hpp"
#include "horofan/horo.hpp"
#include "oracles.hpp"

namespace fx {

using namespace horofan;

inline IntVector iv(std::initializer_list<long> xs) { return make_vector(xs); }

inline IntVector to_iv(const oracle::Vec& v) {
  IntVector out;
  for (long long x : v) out.push_back(Int(static_cast<long>(x)));
  return out;
}

inline oracle::Vec to_ov(const IntVector& v) {
  oracle::Vec out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

inline ColouredCone cc(std::size_t rank, std::vector<IntVector> gens, IndexSet colours = {}) {
  return ColouredCone{Cone::from_generators(rank, gens), std::move(colours)};
}

inline HorosphericalDatum sl3_u3() { return make_datum(RootDatum::parse("A2", 0), {}); }

/// Maximal cones (Cone(e1,e2),{a1}), (Cone(e2,-e1-e2),{}), (Cone(e1,-e1-e2),{a1}).
inline ColouredFan orbits_fan(const HorosphericalDatum& d) {
  return ColouredFan::generated_by(build_coloured_lattice(d), {cc(2, {iv({1, 0}), iv({0, 1})}, {0}),
                                                               cc(2, {iv({0, 1}), iv({-1, -1})}),
                                                               cc(2, {iv({1, 0}), iv({-1, -1})}, {0})});
}

/// Maximal cones (Cone(e1+e2,e1-e2),{a1}), (Cone(-e1,e1+e2),{}), (Cone(-e1,e1-e2),{}).
inline ColouredFan class_group_fan(const HorosphericalDatum& d) {
  return ColouredFan::generated_by(build_coloured_lattice(d), {cc(2, {iv({1, 1}), iv({1, -1})}, {0}),
                                                               cc(2, {iv({-1, 0}), iv({1, 1})}),
                                                               cc(2, {iv({-1, 0}), iv({1, -1})})});
}

/// Index of a coloured cone in the fan, located by generators.
inline std::size_t find_cone(const ColouredFan& fan, std::vector<IntVector> gens) {
  auto i = fan.index_of(Cone::from_generators(fan.lattice().rank(), gens));
  if (!i) throw std::logic_error("cone not in fan");
  return *i;
}

/// aD_{-e1} + bD_{a2} on the class-group fan.
inline BInvariantDivisor class_group_divisor(const ColouredFan& fan, long a, long b) {
  DivisorBasis basis = divisor_basis(fan);
  std::vector<Int> coeffs(basis.size(), Int(0));
  for (std::size_t i = 0; i < basis.rays.size(); ++i)
    if (basis.rays[i] == iv({-1, 0})) coeffs[i] = a;
  for (std::size_t k = 0; k < basis.colours.size(); ++k)
    if (basis.colours[k] == 1) coeffs[basis.rays.size() + k] = b;
  return divisor_from_coefficients(basis, coeffs);
}

// ---------------------------------------------------------------- random data

struct RandomModel {
  HorosphericalDatum datum;
  ColouredFan fan;
};

inline const std::vector<std::string>& small_groups() {
  static const std::vector<std::string> g{"A1", "A2", "A1xA1", "B2", "G2", "A3", "C3", "A1xA2"};
  return g;
}

inline HorosphericalDatum random_datum(std::mt19937& rng, std::size_t min_rank, std::size_t max_rank) {
  for (;;) {
    const auto& groups = small_groups();
    std::string g = groups[rng() % groups.size()];
    std::size_t torus = rng() % 2;
    RootDatum G = RootDatum::parse(g, torus);
    IndexSet I;
    for (std::size_t i = 0; i < G.simple_root_count(); ++i)
      if (rng() % 3 == 0) I.insert(i);
    std::size_t r = G.simple_root_count() - I.size() + torus;
    if (r < min_rank || r > max_rank) continue;
    return make_datum(G, I);
  }
}

/// Random primitive ray generators with entries in [-k, k].
inline std::vector<IntVector> random_rays(std::mt19937& rng, std::size_t rank, std::size_t count, int k) {
  std::vector<IntVector> out;
  while (out.size() < count) {
    oracle::Vec v = oracle::random_vector(rng, rank, -k, k);
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) continue;
    out.push_back(primitive(to_iv(v)));
  }
  return out;
}

/// Complete simplicial fan on Z^2 from sorted-by-angle rays.
inline std::vector<Cone> random_complete_fan2(std::mt19937& rng, std::size_t nrays) {
  for (;;) {
    auto rays = random_rays(rng, 2, nrays, 3);
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    auto angle_less = [](const IntVector& a, const IntVector& b) {
      auto half = [](const IntVector& v) { return v[1] < 0 || (v[1] == 0 && v[0] < 0); };
      if (half(a) != half(b)) return half(a) < half(b);
      return a[0] * b[1] - a[1] * b[0] > 0;
    };
    std::sort(rays.begin(), rays.end(), angle_less);
    bool ok = rays.size() >= 3;
    std::vector<Cone> cones;
    for (std::size_t i = 0; ok && i < rays.size(); ++i) {
      const IntVector &a = rays[i], &b = rays[(i + 1) % rays.size()];
      Int cross = a[0] * b[1] - a[1] * b[0];
      if (cross <= 0) ok = false;  // consecutive rays must span a pointed cone
      cones.push_back(Cone::from_generators(2, {a, b}));
    }
    if (ok) return cones;
  }
}

/// Random colour sets on the given cones; keeps only valid results.
inline std::optional<ColouredFan> colour_randomly(std::mt19937& rng, const ColouredLattice& lattice,
                                                  const std::vector<Cone>& cones) {
  std::vector<ColouredCone> cc;
  for (const auto& c : cones) {
    IndexSet F;
    for (const auto& col : lattice.colours())
      if (!col.point.empty() && c.contains(col.point) && rng() % 2) F.insert(col.root);
    cc.push_back(ColouredCone{c, F});
  }
  ColouredFan fan = ColouredFan::generated_by(lattice, cc);
  if (!validate_coloured_fan(fan).ok()) return std::nullopt;
  return fan;
}

/// A random valid coloured fan of rank 1, 2 or 3.
inline RandomModel random_valid_fan(std::mt19937& rng) {
  for (;;) {
    HorosphericalDatum d = random_datum(rng, 1, 3);
    ColouredLattice lat = build_coloured_lattice(d);
    const std::size_t r = d.rank();
    std::vector<Cone> cones;
    if (r == 1) {
      if (rng() % 2) cones.push_back(Cone::from_generators(1, {iv({1})}));
      if (rng() % 2) cones.push_back(Cone::from_generators(1, {iv({-1})}));
    } else if (r == 2) {
      auto all = random_complete_fan2(rng, 3 + rng() % 4);
      for (const auto& c : all)
        if (rng() % 3) cones.push_back(c);
    } else {
      std::size_t k = 3 + rng() % 2;
      auto rays = random_rays(rng, 3, k, 2);
      Cone c = Cone::from_generators(3, rays);
      if (!c.is_strongly_convex()) continue;
      cones.push_back(c);
    }
    if (auto fan = colour_randomly(rng, lat, cones)) return RandomModel{d, *fan};
  }
}

/// Descriptors of all semisimple types of total rank <= max_rank, products included.
inline std::vector<std::string> semisimple_descriptors(std::size_t max_rank) {
  std::vector<std::pair<std::string, std::size_t>> simple;
  for (std::size_t n = 1; n <= max_rank; ++n) {
    simple.emplace_back("A" + std::to_string(n), n);
    if (n >= 2) simple.emplace_back("B" + std::to_string(n), n);
    if (n >= 3) simple.emplace_back("C" + std::to_string(n), n);
    if (n >= 4) simple.emplace_back("D" + std::to_string(n), n);
    if (n >= 6 && n <= 8) simple.emplace_back("E" + std::to_string(n), n);
    if (n == 4) simple.emplace_back("F4", 4);
    if (n == 2) simple.emplace_back("G2", 2);
  }
  std::vector<std::string> out;
  // multisets of simple factors, taken in non-decreasing index order
  std::function<void(std::size_t, std::size_t, std::string)> go = [&](std::size_t from, std::size_t left,
                                                                        std::string acc) {
    if (!acc.empty()) out.push_back(acc);
    for (std::size_t k = from; k < simple.size(); ++k)
      if (simple[k].second <= left)
        go(k, left - simple[k].second, acc.empty() ? simple[k].first : acc + "x" + simple[k].first);
  };
  go(0, max_rank, "");
  return out;
}

}  // namespace fx
