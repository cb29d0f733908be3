// Exact integer and rational linear algebra over GMP integers.
//
// Everything here operates on small dense matrices; no modular or sparse
// tricks. Empty matrices (zero rows or zero columns) are valid inputs for
// every routine.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace horofan {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rational>;

IntVector make_vector(std::initializer_list<long> values);
Int dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);
IntVector negate(IntVector v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& v, const Int& s);
/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);
Int content(const IntVector& v);
std::string to_string(const IntVector& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix diagonal(const std::vector<Int>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  std::vector<IntVector> row_vectors() const;
  std::vector<IntVector> col_vectors() const;

  IntMatrix transpose() const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  IntMatrix select_cols(const std::vector<std::size_t>& idx) const;
  /// [this | other]
  IntMatrix hconcat(const IntMatrix& other) const;
  /// [this ; other]
  IntMatrix vconcat(const IntMatrix& other) const;

  IntVector apply(const IntVector& v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
/// d_1 | d_2 | ... | d_k and every d_i >= 2.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal with divisibility chain, entries >= 0
  IntMatrix V;  // cols x cols, unimodular
  std::size_t rank = 0;
};

/// U * A * V = D.
SmithForm smith_normal_form(const IntMatrix& A);

struct HermiteForm {
  IntMatrix H;  // row echelon; pivots positive; entries above a pivot in [0, pivot)
  IntMatrix U;  // unimodular with U * A = H
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& A);

/// (Z^rows) / (column image of A).
AbelianGroup cokernel(const IntMatrix& A);

struct AffineSolution {
  /// Canonical: trailing coordinates reduced modulo the kernel.
  IntVector particular;
  /// Canonical (Hermite-reduced) basis of the integer kernel of A, one vector per entry.
  std::vector<IntVector> kernel;
};

/// Integer solutions of A x = b; std::nullopt when there are none.
std::optional<AffineSolution> solve_integer_affine(const IntMatrix& A, const IntVector& b);

/// Canonical basis of the integer kernel {x in Z^cols : A x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& A);

/// Columns generate Span_Q(B) cap Z^n, in canonical (Hermite) form.
IntMatrix saturate(const IntMatrix& B);

/// Canonical column basis of the lattice generated by the columns of B.
IntMatrix lattice_basis(const IntMatrix& B);

/// True iff some unimodular U satisfies U * A = B.
bool left_unimodular_equivalent(const IntMatrix& A, const IntMatrix& B);

/// Reduces v modulo the lattice spanned by the rows of a Hermite basis.
IntVector reduce_modulo(IntVector v, const std::vector<IntVector>& hermite_rows);

Int determinant(const IntMatrix& A);
std::size_t rank(const IntMatrix& A);
std::size_t rank(const std::vector<IntVector>& vectors, std::size_t dim);

// ---- rational helpers ----

/// Rational solution of A x = b, if any (some particular solution).
std::optional<RatVector> solve_rational(const IntMatrix& A, const RatVector& b);
/// Orthogonal projection of v onto the complement of span(basis) (standard inner
/// product), scaled to a primitive integer vector.
IntVector project_off(const IntVector& v, const std::vector<IntVector>& basis);

Int floor_div(const Int& a, const Int& b);

}  // namespace horofan
