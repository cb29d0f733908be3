// Horospherical data (I, M), coloured lattices, coloured cones and fans.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "horofan/intlin.hpp"
#include "horofan/polyhedra.hpp"
#include "horofan/rootsys.hpp"

namespace horofan {

/// Presents G/H_(I,M). Columns of M form a basis of the character lattice M,
/// written in fundamental-weight coordinates followed by torus coordinates.
struct HorosphericalDatum {
  RootDatum group;
  IndexSet I;
  IntMatrix M;  // group.weight_rank() x rank

  std::size_t rank() const { return M.cols(); }
  IndexSet colours() const;
  /// Throws InvalidDatum.
  void validate() const;

  friend bool operator==(const HorosphericalDatum&, const HorosphericalDatum&);
};

/// Basis of X(P_I): omega_j for j not in I, then the torus characters.
IntMatrix parabolic_characters(const RootDatum& group, const IndexSet& I);
HorosphericalDatum make_datum(RootDatum group, IndexSet I);
HorosphericalDatum make_datum(RootDatum group, IndexSet I, IntMatrix M);

struct Colour {
  std::size_t root;  // simple-root index in the group
  IntVector point;
  friend bool operator==(const Colour&, const Colour&) = default;
};

class ColouredLattice {
 public:
  ColouredLattice() = default;
  ColouredLattice(std::size_t rank, std::size_t simple_root_count, std::vector<Colour> colours);

  std::size_t rank() const { return rank_; }
  /// Size of the simple-root index space the colour roots refer to.
  std::size_t simple_root_count() const { return simple_roots_; }
  /// Sorted by root.
  const std::vector<Colour>& colours() const { return colours_; }
  const Colour* find(std::size_t root) const;
  const IntVector& point(std::size_t root) const;
  IndexSet colour_set() const;

  friend bool operator==(const ColouredLattice&, const ColouredLattice&) = default;

 private:
  std::size_t rank_ = 0;
  std::size_t simple_roots_ = 0;
  std::vector<Colour> colours_;
};

ColouredLattice build_coloured_lattice(const HorosphericalDatum& d);

struct ColouredCone {
  Cone cone;
  IndexSet colours;

  friend bool operator==(const ColouredCone&, const ColouredCone&) = default;
};

/// Canonical order: dimension descending, then cone, then colours.
bool canonical_less(const ColouredCone& a, const ColouredCone& b);

std::vector<ColouredCone> coloured_faces(const ColouredCone& sigma, const ColouredLattice& lattice);
/// tau is a face of sigma and F(tau) = {alpha in F(sigma) : u_alpha in tau}.
bool is_coloured_face(const ColouredCone& tau, const ColouredCone& sigma, const ColouredLattice& lattice);
/// Rays of sigma containing no colour point of F(sigma).
std::vector<IntVector> noncoloured_rays(const ColouredCone& sigma, const ColouredLattice& lattice);

class ColouredFan {
 public:
  ColouredFan() = default;
  /// Stores the cones in canonical order; does not validate.
  ColouredFan(ColouredLattice lattice, std::vector<ColouredCone> cones);
  /// The given cones plus all their coloured faces.
  static ColouredFan generated_by(ColouredLattice lattice, const std::vector<ColouredCone>& cones);
  /// {(0, empty)}
  static ColouredFan trivial(ColouredLattice lattice);

  const ColouredLattice& lattice() const { return lattice_; }
  const std::vector<ColouredCone>& cones() const { return cones_; }
  std::size_t size() const { return cones_.size(); }
  std::optional<std::size_t> index_of(const Cone& cone) const;
  std::vector<std::size_t> maximal_indices() const;
  /// Rays of cones with empty colour set, sorted.
  std::vector<IntVector> noncoloured_rays() const;
  /// F(Sigma): union of all colour sets.
  IndexSet used_colours() const;
  PlainFan underlying() const;

  friend bool operator==(const ColouredFan&, const ColouredFan&) = default;

 private:
  ColouredLattice lattice_;
  std::vector<ColouredCone> cones_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Colour names in messages use `names` when given (index = root).
ValidationReport validate_coloured_fan(const ColouredFan& fan, const std::vector<std::string>* names = nullptr);

struct QuotientResult {
  ColouredLattice lattice;
  HorosphericalDatum datum;
  IntMatrix projection;  // N -> N/N'
};

/// N' given by a spanning set of the sublattice. Throws NotSaturated or
/// ColourOutsideSublattice.
QuotientResult quotient_coloured_lattice(const HorosphericalDatum& d, const std::vector<IntVector>& sublattice,
                                         const IndexSet& collapsed_colours);

struct ColouredLatticeMap {
  ColouredLattice source, target;
  IntMatrix phi;
  IndexSet dominant;  // C_Phi
};

/// Map induced by H_1 in H_2. Throws NotASubdatum or GroupMismatch.
ColouredLatticeMap coloured_lattice_map(const HorosphericalDatum& source, const HorosphericalDatum& target);

/// Throws GroupMismatch.
bool homogeneous_spaces_isomorphic(const HorosphericalDatum& a, const HorosphericalDatum& b);

HorosphericalDatum product_datum(const HorosphericalDatum& a, const HorosphericalDatum& b);
ColouredFan product_coloured_fan(const ColouredFan& a, const ColouredFan& b);

}  // namespace horofan
