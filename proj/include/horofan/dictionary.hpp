// Orbits, orbit closures, global properties, morphisms and local structure of
// the horospherical variety attached to a coloured fan.
#pragma once

#include <string>
#include <vector>

#include "horofan/cancel.hpp"
#include "horofan/horo.hpp"

namespace horofan {

struct OrbitRecord {
  std::size_t cone_index = 0;
  std::size_t dimension = 0;
  /// The orbit as a homogeneous space: (I union F(sigma), (N/sigma)^vee).
  HorosphericalDatum datum;
  /// Indices of the cones whose orbits lie in the closure of this one.
  std::vector<std::size_t> closure;
};

/// Throws LatticeMismatch if the fan does not live on the datum's lattice.
std::vector<OrbitRecord> orbit_table(const ColouredFan& fan, const HorosphericalDatum& d);

struct OrbitClosure {
  ColouredFan fan;
  HorosphericalDatum datum;
};

/// Throws ConeNotInFan, LatticeMismatch.
OrbitClosure orbit_closure(const ColouredFan& fan, std::size_t cone_index, const HorosphericalDatum& d);

struct ConeRegularity {
  std::size_t cone_index = 0;
  std::vector<IntVector> multiset;
  bool simplicial = false;
  bool regular = false;
  bool smooth = false;
  /// "" when smooth, "regular" when the multiset fails, else the Dynkin clause.
  std::string failed_clause;
  std::string diagnostic;
};

std::vector<ConeRegularity> regularity_report(const ColouredFan& fan, const HorosphericalDatum& d);

struct PropertyReport {
  bool is_simple = false, is_affine = false, is_complete = false, is_toroidal = false, is_projective = false;
  bool is_simplicial = false, is_regular = false, is_factorial = false, is_q_factorial = false, is_smooth = false;
  std::vector<ConeRegularity> cones;
};

PropertyReport classify_variety(const ColouredFan& fan, const HorosphericalDatum& d,
                                const CancelToken* cancel = nullptr);

/// Exact LP: the largest strictness gap (capped at 1) of a piecewise linear
/// function on the maximal cones. Positive iff a strictly convex one exists.
Rational strict_convexity_margin(const ColouredFan& fan, const CancelToken* cancel = nullptr);

struct MorphismVerdict {
  bool compatible = false;
  bool proper = false;
  std::string diagnostic;
};

/// Throws LatticeMismatch.
MorphismVerdict morphism_check(const ColouredLatticeMap& map, const ColouredFan& source, const ColouredFan& target,
                               const CancelToken* cancel = nullptr);

ColouredFan decolouration(const ColouredFan& fan);
ColouredFan open_toroidal_subfan(const ColouredFan& fan);

struct LocalStructure {
  IndexSet q_index;                  // I union F(sigma)
  HorosphericalDatum levi_datum;
  ColouredCone z_cone;               // colours in Levi indices
  std::vector<std::size_t> levi_index;  // Levi simple root -> parent simple root
};

/// Throws NotStronglyConvex.
LocalStructure affine_local_structure(const ColouredCone& sigma, const HorosphericalDatum& d);

/// Minimal generators of the monoid sigma^vee cap N^vee, sorted.
std::vector<IntVector> weight_monoid_generators(const ColouredCone& sigma, const HorosphericalDatum& d);

}  // namespace horofan
