// Hot loops of the Hilbert basis computation. The *_serial variants are the
// plain reference implementations; the *_parallel variants are the OpenMP
// versions used by default. Tests compare the two on random cones.
#include <algorithm>
#include <stdexcept>

#include "horofan/polyhedra.hpp"

namespace horofan::kernels {

namespace {

struct Residues {
  IntMatrix u_inv;              // maps SNF residue coordinates back to Z^d
  std::vector<Int> moduli;      // diagonal of the Smith form
  std::vector<RatVector> g_inv; // rational inverse of the generator matrix
  long count = 1;
};

Residues residue_system(const IntMatrix& g) {
  const std::size_t d = g.rows();
  if (g.cols() != d) throw std::invalid_argument("parallelepiped_points: matrix not square");
  SmithForm s = smith_normal_form(g);
  if (s.rank != d) throw std::invalid_argument("parallelepiped_points: singular matrix");
  Residues r;
  r.u_inv = hermite_normal_form(s.U).U;
  for (std::size_t i = 0; i < d; ++i) {
    r.moduli.push_back(s.D(i, i));
    if (!s.D(i, i).fits_slong_p() || r.count > (1L << 40) / s.D(i, i).get_si())
      throw std::invalid_argument("parallelepiped_points: determinant too large");
    r.count *= s.D(i, i).get_si();
  }
  r.g_inv.assign(d, RatVector(d));
  for (std::size_t j = 0; j < d; ++j) {
    RatVector e(d, Rational(0));
    e[j] = 1;
    RatVector c = *solve_rational(g, e);
    for (std::size_t i = 0; i < d; ++i) r.g_inv[i][j] = c[i];
  }
  return r;
}

// The lattice point with residue index idx, moved into the half-open parallelepiped.
IntVector residue_point(const IntMatrix& g, const Residues& r, long idx) {
  const std::size_t d = g.rows();
  IntVector y(d);
  for (std::size_t i = 0; i < d; ++i) {
    long m = r.moduli[i].get_si();
    y[i] = idx % m;
    idx /= m;
  }
  IntVector x = r.u_inv.apply(y);
  for (std::size_t i = 0; i < d; ++i) {
    Rational lambda = 0;
    for (std::size_t j = 0; j < d; ++j) lambda += r.g_inv[i][j] * x[j];
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lambda.get_num_mpz_t(), lambda.get_den_mpz_t());
    if (fl != 0)
      for (std::size_t k = 0; k < d; ++k) x[k] -= fl * g(k, i);
  }
  return x;
}

}  // namespace

std::vector<IntVector> parallelepiped_points_serial(const IntMatrix& g) {
  Residues r = residue_system(g);
  std::vector<IntVector> out;
  for (long idx = 0; idx < r.count; ++idx) {
    IntVector x = residue_point(g, r, idx);
    if (!is_zero(x)) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> parallelepiped_points_parallel(const IntMatrix& g) {
  Residues r = residue_system(g);
  std::vector<IntVector> slots(static_cast<std::size_t>(r.count));
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < r.count; ++idx) slots[static_cast<std::size_t>(idx)] = residue_point(g, r, idx);
  std::vector<IntVector> out;
  out.reserve(slots.size());
  for (auto& x : slots)
    if (!is_zero(x)) out.push_back(std::move(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> irreducible_serial(const std::vector<IntVector>& candidates,
                                          const std::vector<IntVector>& facets) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool reducible = false;
    for (std::size_t j = 0; j < candidates.size() && !reducible; ++j) {
      if (i == j) continue;
      IntVector diff = sub(candidates[i], candidates[j]);
      reducible = std::all_of(facets.begin(), facets.end(),
                              [&](const IntVector& f) { return dot(f, diff) >= 0; });
    }
    if (!reducible) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> irreducible_parallel(const std::vector<IntVector>& candidates,
                                            const std::vector<IntVector>& facets) {
  const std::size_t k = candidates.size(), nf = facets.size();
  // x - y lies in the cone iff every facet value of x dominates that of y
  std::vector<Int> values(k * nf);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t f = 0; f < nf; ++f) values[i * nf + f] = dot(facets[f], candidates[i]);

  std::vector<char> keep(k, 1);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      bool dominated = true;
      for (std::size_t f = 0; f < nf && dominated; ++f)
        if (values[i * nf + f] < values[j * nf + f]) dominated = false;
      if (dominated) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < k; ++i)
    if (keep[i]) out.push_back(candidates[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace horofan::kernels
