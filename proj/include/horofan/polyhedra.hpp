// Rational polyhedral cones in Z^n and plain fans.
//
// A Cone keeps both descriptions: extreme rays modulo lineality plus a
// lineality basis, and irredundant facet normals plus a basis of the
// equations of its linear span. Both are canonical, so operator== is
// structural equality.
#pragma once

#include <cstddef>
#include <vector>

#include "horofan/cancel.hpp"
#include "horofan/intlin.hpp"

namespace horofan {

class Cone {
 public:
  /// The trivial cone {0} in rank 0.
  Cone() = default;

  static Cone from_generators(std::size_t ambient_rank, const std::vector<IntVector>& generators);
  /// {u : <a, u> >= 0 for a in inequalities, <e, u> = 0 for e in equations}
  static Cone from_inequalities(std::size_t ambient_rank, const std::vector<IntVector>& inequalities,
                                const std::vector<IntVector>& equations = {});
  static Cone trivial(std::size_t ambient_rank);
  static Cone whole_space(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return n_; }
  /// Extreme rays, taken orthogonal to the lineality space; primitive, sorted.
  const std::vector<IntVector>& rays() const { return rays_; }
  /// Canonical lattice basis of the lineality space sigma cap -sigma.
  const std::vector<IntVector>& lineality() const { return lineality_; }
  /// rays plus +-lineality, sorted lexicographically.
  std::vector<IntVector> generators() const;
  /// Irredundant inequality normals, taken inside the linear span; primitive, sorted.
  const std::vector<IntVector>& facets() const { return facets_; }
  /// Canonical lattice basis of span(sigma)^perp.
  const std::vector<IntVector>& equations() const { return equations_; }

  std::size_t dim() const { return n_ - equations_.size(); }
  bool is_strongly_convex() const { return lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }
  bool contains(const IntVector& u) const;
  bool contains(const Cone& other) const;
  bool in_relative_interior(const IntVector& u) const;
  /// Integer basis of span(sigma) cap Z^n, in canonical form.
  std::vector<IntVector> span_lattice() const;

  friend bool operator==(const Cone& a, const Cone& b);
  friend bool operator<(const Cone& a, const Cone& b);

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<IntVector> rays_, lineality_, facets_, equations_;
};

/// Extreme rays and lineality of an H-description (double description method).
struct VRepresentation {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};
VRepresentation double_description(std::size_t ambient_rank, const std::vector<IntVector>& inequalities,
                                   const std::vector<IntVector>& equations);

Cone dual_cone(const Cone& sigma);
/// All faces, from {lineality} up to sigma, sorted by dimension then canonically.
std::vector<Cone> faces(const Cone& sigma);
Cone intersect(const Cone& a, const Cone& b);
bool is_face_of(const Cone& tau, const Cone& sigma);
/// {u : phi u in sigma}
Cone preimage(const IntMatrix& phi, const Cone& sigma);
/// Cone generated by phi applied to the generators of sigma.
Cone image(const IntMatrix& phi, const Cone& sigma);

enum class Execution { serial, parallel };

/// Minimal generating set of sigma cap Z^n, sorted lexicographically.
/// Throws NotPointed if sigma contains a line.
std::vector<IntVector> hilbert_basis(const Cone& sigma, Execution mode = Execution::parallel);

class PlainFan {
 public:
  PlainFan() = default;
  PlainFan(std::size_t ambient_rank, std::vector<Cone> cones);

  std::size_t ambient_rank() const { return n_; }
  const std::vector<Cone>& cones() const { return cones_; }
  /// Cones not contained in any other member.
  std::vector<Cone> maximal_cones() const;

 private:
  std::size_t n_ = 0;
  std::vector<Cone> cones_;
};

bool support_contains(const PlainFan& fan, const IntVector& u);
bool fan_is_complete(const PlainFan& fan);

/// True iff every point of region lies in the union of pieces.
bool region_covered(const Cone& region, const std::vector<Cone>& pieces, const CancelToken* cancel = nullptr);

namespace kernels {

/// Nonzero lattice points sum(l_i g_i), 0 <= l_i < 1, for the columns g_i of a
/// nonsingular square matrix.
std::vector<IntVector> parallelepiped_points_serial(const IntMatrix& generators);
std::vector<IntVector> parallelepiped_points_parallel(const IntMatrix& generators);

/// Keeps the candidates x with no other candidate y such that x - y lies in the
/// full-dimensional cone given by its facet normals.
std::vector<IntVector> irreducible_serial(const std::vector<IntVector>& candidates,
                                          const std::vector<IntVector>& facets);
std::vector<IntVector> irreducible_parallel(const std::vector<IntVector>& candidates,
                                            const std::vector<IntVector>& facets);

}  // namespace kernels

}  // namespace horofan
