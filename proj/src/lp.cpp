#include "horofan/lp.hpp"

#include <stdexcept>

namespace horofan {

std::optional<LPSolution> maximize(const std::vector<RatVector>& A, const RatVector& b, const RatVector& c,
                                   const CancelToken* cancel) {
  const std::size_t m = A.size(), n = c.size();
  if (b.size() != m) throw std::invalid_argument("maximize: dimension mismatch");
  for (const auto& bi : b)
    if (bi < 0) throw std::invalid_argument("maximize: origin must be feasible");

  // columns 0..n-1 structural, n..n+m-1 slack, n+m right-hand side
  const std::size_t width = n + m + 1;
  std::vector<RatVector> t(m, RatVector(width, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw std::invalid_argument("maximize: ragged constraint matrix");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = b[i];
  }
  RatVector z(width, Rational(0));
  for (std::size_t j = 0; j < n; ++j) z[j] = -c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    check_cancel(cancel);
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return std::nullopt;

    Rational p = t[leave][enter];
    for (auto& v : t[leave]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      Rational f = z[enter];
      for (std::size_t j = 0; j < width; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LPSolution sol{z[n + m], RatVector(n, Rational(0))};
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) sol.x[basis[i]] = t[i][n + m];
  return sol;
}

}  // namespace horofan
