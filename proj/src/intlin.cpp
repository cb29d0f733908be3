#include "horofan/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace horofan {

// ---------------------------------------------------------------------------
// vectors

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntVector negate(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVector scale(const IntVector& v, const Int& s) {
  IntVector r(v);
  for (auto& x : r) x *= s;
  return r;
}

Int content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector primitive(IntVector v) {
  Int g = content(v);
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  std::vector<IntVector> r;
  for (const auto& row : rows) r.push_back(make_vector(row));
  return from_rows(r, cols);
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<IntVector> IntMatrix::col_vectors() const {
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  IntMatrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("hconcat: row mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& other) const {
  if (cols_ != other.cols_) throw std::invalid_argument("vconcat: column mismatch");
  IntMatrix m(rows_ + other.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(rows_ + i, j) = other(i, j);
  return m;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  IntVector r(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << (*this)(i, j).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  if (free_rank > 0) {
    if (!s.empty()) s += " + ";
    s += free_rank == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

bool find_min_abs(const IntMatrix& D, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < D.rows(); ++i)
    for (std::size_t j = t; j < D.cols(); ++j) {
      const Int& x = D(i, j);
      if (x == 0) continue;
      Int a = abs(x);
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  IntMatrix D = A, U = IntMatrix::identity(m), V = IntMatrix::identity(n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_min_abs(D, t, pi, pj)) break;
    D.swap_rows(t, pi);
    U.swap_rows(t, pi);
    D.swap_cols(t, pj);
    V.swap_cols(t, pj);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Int q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Int q = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // move the smallest remainder in row/column t into the pivot
        Int best = abs(D(t, t));
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < best) best = abs(D(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < best) best = abs(D(t, j)), bi = t, bj = j;
        D.swap_rows(t, bi);
        U.swap_rows(t, bi);
        D.swap_cols(t, bj);
        V.swap_cols(t, bj);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          Int r;
          mpz_tdiv_r(r.get_mpz_t(), D(i, j).get_mpz_t(), D(t, t).get_mpz_t());
          if (r != 0) {
            D.add_row_multiple(t, i, 1);
            U.add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return SmithForm{std::move(U), std::move(D), std::move(V), t};
}

// ---------------------------------------------------------------------------
// Hermite normal form (row style)

HermiteForm hermite_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  IntMatrix H = A, U = IntMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      // smallest nonzero |entry| in column c at or below row r
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, c) != 0 && (best == m || abs(H(i, c)) < abs(H(best, c)))) best = i;
      if (best == m) break;
      H.swap_rows(r, best);
      U.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Int q = floor_div(H(i, c), H(r, c));
        H.add_row_multiple(i, r, -q);
        U.add_row_multiple(i, r, -q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(H(i, c), H(r, c));
      H.add_row_multiple(i, r, -q);
      U.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return HermiteForm{std::move(H), std::move(U), r};
}

AbelianGroup cokernel(const IntMatrix& A) {
  SmithForm s = smith_normal_form(A);
  AbelianGroup g;
  g.free_rank = A.rows() - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) > 1) g.torsion.push_back(s.D(i, i));
  return g;
}

std::vector<IntVector> integer_kernel(const IntMatrix& A) {
  const std::size_t n = A.cols();
  HermiteForm h = hermite_normal_form(A.transpose());
  std::vector<IntVector> basis;
  for (std::size_t i = h.rank; i < n; ++i) basis.push_back(h.U.row(i));
  if (basis.empty()) return basis;
  HermiteForm canon = hermite_normal_form(IntMatrix::from_rows(basis, n));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < canon.rank; ++i) out.push_back(canon.H.row(i));
  return out;
}

IntVector reduce_modulo(IntVector v, const std::vector<IntVector>& hermite_rows) {
  for (const auto& h : hermite_rows) {
    auto it = std::find_if(h.begin(), h.end(), [](const Int& x) { return x != 0; });
    if (it == h.end()) continue;
    std::size_t p = static_cast<std::size_t>(it - h.begin());
    Int q = floor_div(v[p], h[p]);
    if (q != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * h[j];
  }
  return v;
}

std::optional<AffineSolution> solve_integer_affine(const IntMatrix& A, const IntVector& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve_integer_affine: dimension mismatch");
  const std::size_t m = A.rows(), n = A.cols();
  SmithForm s = smith_normal_form(A);
  IntVector c = s.U.apply(b);
  IntVector y(n, Int(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (i < s.rank) {
      Int r;
      mpz_tdiv_r(r.get_mpz_t(), c[i].get_mpz_t(), s.D(i, i).get_mpz_t());
      if (r != 0) return std::nullopt;
      y[i] = c[i] / s.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  AffineSolution sol;
  sol.kernel = integer_kernel(A);
  // canonical representative: reduce the trailing coordinates first
  auto reversed = [](IntVector v) {
    std::reverse(v.begin(), v.end());
    return v;
  };
  std::vector<IntVector> rk;
  for (const auto& k : sol.kernel) rk.push_back(reversed(k));
  HermiteForm h = hermite_normal_form(IntMatrix::from_rows(rk, n));
  rk.clear();
  for (std::size_t i = 0; i < h.rank; ++i) rk.push_back(h.H.row(i));
  sol.particular = reversed(reduce_modulo(reversed(s.V.apply(y)), rk));
  return sol;
}

IntMatrix lattice_basis(const IntMatrix& B) {
  HermiteForm h = hermite_normal_form(B.transpose());
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < h.rank; ++i) cols.push_back(h.H.row(i));
  return IntMatrix::from_columns(cols, B.rows());
}

IntMatrix saturate(const IntMatrix& B) {
  const std::size_t n = B.rows();
  // Span_Q(B) cap Z^n is the annihilator of the annihilator of B.
  std::vector<IntVector> ann = integer_kernel(B.transpose());
  std::vector<IntVector> sat = integer_kernel(IntMatrix::from_rows(ann, n));
  return IntMatrix::from_columns(sat, n);
}

bool left_unimodular_equivalent(const IntMatrix& A, const IntMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  return hermite_normal_form(A).H == hermite_normal_form(B).H;
}

Int determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix M = A;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M(i, j) = v;
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& A) { return hermite_normal_form(A).rank; }

std::size_t rank(const std::vector<IntVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors, dim));
}

// ---------------------------------------------------------------------------
// rational helpers

std::optional<RatVector> solve_rational(const IntMatrix& A, const RatVector& b) {
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<RatVector> M(m, RatVector(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = A(i, j);
    M[i][n] = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    Rational inv = 1 / M[r][c];
    for (std::size_t j = c; j <= n; ++j) M[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (std::size_t j = c; j <= n; ++j) M[i][j] -= f * M[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (M[i][n] != 0) return std::nullopt;
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = M[i][n];
  return x;
}

IntVector project_off(const IntVector& v, const std::vector<IntVector>& basis) {
  if (basis.empty()) return primitive(v);
  const std::size_t k = basis.size(), n = v.size();
  IntMatrix gram(k, k);
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  auto coeffs = solve_rational(gram, rhs);
  if (!coeffs) throw std::logic_error("project_off: dependent basis");
  RatVector p(n);
  for (std::size_t j = 0; j < n; ++j) {
    p[j] = v[j];
    for (std::size_t i = 0; i < k; ++i) p[j] -= (*coeffs)[i] * basis[i][j];
  }
  Int den = 1;
  for (auto& x : p) {
    x.canonicalize();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  IntVector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = p[j] * den;
    out[j] = s.get_num();
  }
  return primitive(out);
}

}  // namespace horofan
