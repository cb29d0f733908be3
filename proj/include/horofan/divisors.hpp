// B-invariant divisors: class group, Cartier data, Picard group, positivity,
// anticanonical divisor.
//
// Divisors are indexed by the fan's non-coloured rays (sorted by generator)
// followed by all colours of the lattice (sorted by simple root).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "horofan/horo.hpp"

namespace horofan {

struct DivisorBasis {
  std::vector<IntVector> rays;
  std::vector<std::size_t> colours;

  std::size_t size() const { return rays.size() + colours.size(); }
  /// u_D for the i-th prime divisor.
  IntVector point(std::size_t i, const ColouredLattice& lattice) const;
};

DivisorBasis divisor_basis(const ColouredFan& fan);

struct BInvariantDivisor {
  std::vector<Int> ray_coeffs;
  std::vector<Int> colour_coeffs;

  std::vector<Int> coefficients() const;
  friend bool operator==(const BInvariantDivisor&, const BInvariantDivisor&) = default;
};

BInvariantDivisor divisor_from_coefficients(const DivisorBasis& basis, const std::vector<Int>& coeffs);

/// div(f_m) = sum <m, u_D> D
BInvariantDivisor principal_divisor(const IntVector& m, const ColouredFan& fan);
/// Rows u_D, one per prime divisor.
IntMatrix principal_matrix(const ColouredFan& fan);

struct ClassGroupResult {
  AbelianGroup group;
  /// One divisor per cyclic summand (torsion summands first).
  std::vector<BInvariantDivisor> generators;
  bool left_exact = false;
};

ClassGroupResult class_group(const ColouredFan& fan, const HorosphericalDatum& d);

struct CartierData {
  std::vector<std::size_t> cones;  // maximal cone indices in the fan
  std::vector<IntVector> m;        // one covector per maximal cone
};

/// std::nullopt when the divisor is not Cartier.
std::optional<CartierData> cartier_data(const BInvariantDivisor& delta, const ColouredFan& fan);

struct ExactSequenceReport {
  std::size_t colour_rank = 0;          // rank Z(C minus F(Sigma))
  std::size_t span_perp_image_rank = 0; // rank of the image of Span(|Sigma|)^perp there
  std::size_t plf_lf_rank = 0;
  std::size_t pic_rank = 0;
  bool consistent = false;
};

struct PicardResult {
  AbelianGroup picard;
  AbelianGroup plf_mod_lf;
  ExactSequenceReport sequence;
};

PicardResult picard_group(const ColouredFan& fan, const HorosphericalDatum& d);

struct PositivityVerdict {
  bool cartier = false;
  bool basepoint_free = false;
  bool ample = false;
};

/// Throws NotComplete.
PositivityVerdict positivity_check(const BInvariantDivisor& delta, const ColouredFan& fan,
                                   const HorosphericalDatum& d);

/// b_alpha = sum over gamma in R+ minus R_I+ of <gamma, alpha^vee>, for each colour.
std::vector<Int> anticanonical_colour_coefficients(const HorosphericalDatum& d);
BInvariantDivisor anticanonical(const ColouredFan& fan, const HorosphericalDatum& d);

}  // namespace horofan
