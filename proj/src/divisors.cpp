#include "horofan/divisors.hpp"

#include <algorithm>
#include <stdexcept>

#include "horofan/errors.hpp"

namespace horofan {

IntVector DivisorBasis::point(std::size_t i, const ColouredLattice& lattice) const {
  if (i < rays.size()) return rays[i];
  return lattice.point(colours.at(i - rays.size()));
}

DivisorBasis divisor_basis(const ColouredFan& fan) {
  DivisorBasis b;
  b.rays = fan.noncoloured_rays();
  for (const auto& c : fan.lattice().colours()) b.colours.push_back(c.root);
  return b;
}

std::vector<Int> BInvariantDivisor::coefficients() const {
  std::vector<Int> out = ray_coeffs;
  out.insert(out.end(), colour_coeffs.begin(), colour_coeffs.end());
  return out;
}

BInvariantDivisor divisor_from_coefficients(const DivisorBasis& basis, const std::vector<Int>& coeffs) {
  if (coeffs.size() != basis.size()) throw std::invalid_argument("divisor: wrong number of coefficients");
  auto split = coeffs.begin() + static_cast<std::ptrdiff_t>(basis.rays.size());
  return BInvariantDivisor{std::vector<Int>(coeffs.begin(), split), std::vector<Int>(split, coeffs.end())};
}

IntMatrix principal_matrix(const ColouredFan& fan) {
  DivisorBasis b = divisor_basis(fan);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < b.size(); ++i) rows.push_back(b.point(i, fan.lattice()));
  return IntMatrix::from_rows(rows, fan.lattice().rank());
}

BInvariantDivisor principal_divisor(const IntVector& m, const ColouredFan& fan) {
  if (m.size() != fan.lattice().rank()) throw LatticeMismatch("principal_divisor: covector of wrong rank");
  return divisor_from_coefficients(divisor_basis(fan), principal_matrix(fan).apply(m));
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k, std::size_t limit) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (out.size() >= limit) return;
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Linear system on (delta, m_1, ..., m_k): the Cartier conditions on every
// maximal cone plus agreement on pairwise intersections.
struct CartierSystem {
  std::vector<std::size_t> maximal;
  std::size_t divisors = 0, rank = 0;
  std::vector<IntVector> rows;         // over delta | m
  std::vector<bool> compatibility;     // row is an agreement condition
};

CartierSystem cartier_system(const ColouredFan& fan) {
  CartierSystem sys;
  const DivisorBasis basis = divisor_basis(fan);
  const auto& lattice = fan.lattice();
  sys.maximal = fan.maximal_indices();
  sys.divisors = basis.size();
  sys.rank = lattice.rank();
  const std::size_t s = sys.divisors, r = sys.rank, width = s + sys.maximal.size() * r;
  auto add = [&](std::size_t cone, const IntVector& u, std::optional<std::size_t> divisor) {
    IntVector row(width, Int(0));
    for (std::size_t t = 0; t < r; ++t) row[s + cone * r + t] = u[t];
    if (divisor) row[*divisor] = -1;
    sys.rows.push_back(std::move(row));
    sys.compatibility.push_back(false);
  };
  for (std::size_t a = 0; a < sys.maximal.size(); ++a) {
    const ColouredCone& sigma = fan.cones()[sys.maximal[a]];
    for (const auto& ray : noncoloured_rays(sigma, lattice)) {
      auto it = std::find(basis.rays.begin(), basis.rays.end(), ray);
      if (it == basis.rays.end()) throw std::logic_error("ray of a maximal cone missing from the fan");
      add(a, ray, static_cast<std::size_t>(it - basis.rays.begin()));
    }
    for (std::size_t alpha : sigma.colours) {
      auto it = std::find(basis.colours.begin(), basis.colours.end(), alpha);
      add(a, lattice.point(alpha), basis.rays.size() + static_cast<std::size_t>(it - basis.colours.begin()));
    }
  }
  for (std::size_t a = 0; a < sys.maximal.size(); ++a)
    for (std::size_t b = a + 1; b < sys.maximal.size(); ++b) {
      Cone meet = intersect(fan.cones()[sys.maximal[a]].cone, fan.cones()[sys.maximal[b]].cone);
      for (const auto& u : meet.generators()) {
        IntVector row(width, Int(0));
        for (std::size_t t = 0; t < r; ++t) {
          row[s + a * r + t] = u[t];
          row[s + b * r + t] = -u[t];
        }
        sys.rows.push_back(std::move(row));
        sys.compatibility.push_back(true);
      }
    }
  return sys;
}

// Coordinates of each column of `vectors` in the lattice basis given by the columns of `basis`.
IntMatrix coordinates(const IntMatrix& basis, const std::vector<IntVector>& vectors) {
  IntMatrix out(basis.cols(), vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    auto sol = solve_integer_affine(basis, vectors[j]);
    if (!sol) throw std::logic_error("vector outside the expected lattice");
    for (std::size_t i = 0; i < basis.cols(); ++i) out(i, j) = sol->particular[i];
  }
  return out;
}

}  // namespace

ClassGroupResult class_group(const ColouredFan& fan, const HorosphericalDatum& d) {
  if (!(fan.lattice() == build_coloured_lattice(d))) throw LatticeMismatch("class_group: fan and datum disagree");
  const DivisorBasis basis = divisor_basis(fan);
  const IntMatrix P = principal_matrix(fan);
  const std::size_t s = P.rows(), r = P.cols();
  ClassGroupResult res;
  res.group = cokernel(P);
  const std::size_t p = rank(P);
  res.left_exact = p == r;

  if (res.group.is_free()) {
    // the remaining prime divisors form a basis when some p rows map onto Z^p
    for (const auto& rows : combinations(s, p, 20000)) {
      if (!cokernel(P.select_rows(rows)).is_trivial()) continue;
      for (std::size_t i = 0; i < s; ++i) {
        if (std::find(rows.begin(), rows.end(), i) != rows.end()) continue;
        std::vector<Int> c(s, Int(0));
        c[i] = 1;
        res.generators.push_back(divisor_from_coefficients(basis, c));
      }
      return res;
    }
  }
  SmithForm snf = smith_normal_form(P);
  IntMatrix u_inv = hermite_normal_form(snf.U).U;
  for (std::size_t i = 0; i < s; ++i) {
    if (i < snf.rank && snf.D(i, i) == 1) continue;
    res.generators.push_back(divisor_from_coefficients(basis, u_inv.col(i)));
  }
  return res;
}

std::optional<CartierData> cartier_data(const BInvariantDivisor& delta, const ColouredFan& fan) {
  CartierSystem sys = cartier_system(fan);
  const std::vector<Int> coeffs = delta.coefficients();
  if (coeffs.size() != sys.divisors) throw std::invalid_argument("cartier_data: divisor does not match the fan");
  const std::size_t s = sys.divisors, r = sys.rank, nm = sys.maximal.size() * r;
  IntMatrix A(sys.rows.size(), nm);
  IntVector b(sys.rows.size(), Int(0));
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    for (std::size_t j = 0; j < nm; ++j) A(i, j) = sys.rows[i][s + j];
    for (std::size_t j = 0; j < s; ++j) b[i] -= sys.rows[i][j] * coeffs[j];
  }
  auto sol = solve_integer_affine(A, b);
  if (!sol) return std::nullopt;
  CartierData data;
  data.cones = sys.maximal;
  for (std::size_t a = 0; a < sys.maximal.size(); ++a) {
    IntVector m(sol->particular.begin() + static_cast<std::ptrdiff_t>(a * r),
                sol->particular.begin() + static_cast<std::ptrdiff_t>((a + 1) * r));
    // only the class modulo sigma^perp is determined
    data.m.push_back(reduce_modulo(std::move(m), fan.cones()[sys.maximal[a]].cone.equations()));
  }
  return data;
}

PicardResult picard_group(const ColouredFan& fan, const HorosphericalDatum& d) {
  if (!(fan.lattice() == build_coloured_lattice(d))) throw LatticeMismatch("picard_group: fan and datum disagree");
  CartierSystem sys = cartier_system(fan);
  const std::size_t s = sys.divisors, r = sys.rank, k = sys.maximal.size(), nm = k * r;
  PicardResult res;

  // Cartier divisors: projection of the solution lattice of the full system
  std::vector<IntVector> solutions = sys.rows.empty() ? IntMatrix::identity(s + nm).row_vectors()
                                                      : integer_kernel(IntMatrix::from_rows(sys.rows, s + nm));
  std::vector<IntVector> cdiv;
  for (const auto& v : solutions) cdiv.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(s));
  IntMatrix cdiv_basis = lattice_basis(IntMatrix::from_columns(cdiv, s));
  IntMatrix P = principal_matrix(fan);
  res.picard = cokernel(coordinates(cdiv_basis, P.col_vectors()));

  // piecewise linear functions modulo gauge (sigma^perp per cone) and global linear functions
  std::vector<IntVector> compat;
  for (std::size_t i = 0; i < sys.rows.size(); ++i)
    if (sys.compatibility[i]) compat.emplace_back(sys.rows[i].begin() + static_cast<std::ptrdiff_t>(s), sys.rows[i].end());
  std::vector<IntVector> plf =
      compat.empty() ? IntMatrix::identity(nm).row_vectors() : integer_kernel(IntMatrix::from_rows(compat, nm));
  std::vector<IntVector> trivial;
  for (std::size_t a = 0; a < k; ++a)
    for (const auto& e : fan.cones()[sys.maximal[a]].cone.equations()) {
      IntVector v(nm, Int(0));
      for (std::size_t t = 0; t < r; ++t) v[a * r + t] = e[t];
      trivial.push_back(std::move(v));
    }
  for (std::size_t t = 0; t < r; ++t) {
    IntVector v(nm, Int(0));
    for (std::size_t a = 0; a < k; ++a) v[a * r + t] = 1;
    trivial.push_back(std::move(v));
  }
  res.plf_mod_lf = cokernel(coordinates(IntMatrix::from_columns(plf, nm), trivial));

  // 0 <- PLF/LF <- Pic <- Z(C minus F) <- Span(|Sigma|)^perp
  auto& seq = res.sequence;
  const IndexSet used = fan.used_colours();
  std::vector<std::size_t> free_colours;
  for (const auto& c : fan.lattice().colours())
    if (!used.count(c.root)) free_colours.push_back(c.root);
  seq.colour_rank = free_colours.size();
  std::vector<IntVector> support_gens;
  for (std::size_t i : sys.maximal)
    for (const auto& g : fan.cones()[i].cone.generators()) support_gens.push_back(g);
  std::vector<IntVector> perp = support_gens.empty() ? IntMatrix::identity(r).row_vectors()
                                                     : integer_kernel(IntMatrix::from_rows(support_gens, r));
  std::vector<IntVector> images;
  for (const auto& m : perp) {
    IntVector v;
    for (std::size_t alpha : free_colours) v.push_back(dot(m, fan.lattice().point(alpha)));
    images.push_back(std::move(v));
  }
  seq.span_perp_image_rank = rank(images, free_colours.size());
  seq.plf_lf_rank = res.plf_mod_lf.free_rank;
  seq.pic_rank = res.picard.free_rank;
  seq.consistent = seq.pic_rank + seq.span_perp_image_rank == seq.colour_rank + seq.plf_lf_rank;
  bool has_full = std::any_of(sys.maximal.begin(), sys.maximal.end(),
                              [&](std::size_t i) { return fan.cones()[i].cone.dim() == r; });
  if (has_full && !res.picard.is_free()) seq.consistent = false;
  return res;
}

PositivityVerdict positivity_check(const BInvariantDivisor& delta, const ColouredFan& fan,
                                   const HorosphericalDatum& d) {
  if (!(fan.lattice() == build_coloured_lattice(d))) throw LatticeMismatch("positivity_check: fan and datum disagree");
  if (!fan_is_complete(fan.underlying())) throw NotComplete("positivity_check: the fan is not complete");
  PositivityVerdict v;
  auto data = cartier_data(delta, fan);
  if (!data) return v;
  v.cartier = v.basepoint_free = v.ample = true;
  const std::size_t k = data->cones.size();
  auto cone = [&](std::size_t a) -> const Cone& { return fan.cones()[data->cones[a]].cone; };
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      for (const auto& u : cone(a).generators()) {
        Int gap = dot(data->m[a], u) - dot(data->m[b], u);
        if (gap < 0) v.basepoint_free = false;
        if (gap <= 0 && !cone(b).contains(u)) v.ample = false;
      }
    }
  const DivisorBasis basis = divisor_basis(fan);
  const IndexSet used = fan.used_colours();
  for (std::size_t j = 0; j < basis.colours.size(); ++j) {
    std::size_t alpha = basis.colours[j];
    if (used.count(alpha)) continue;
    const IntVector& u = fan.lattice().point(alpha);
    std::size_t a = 0;
    while (a < k && !cone(a).contains(u)) ++a;
    if (a == k) throw std::logic_error("colour point outside a complete fan");
    Int phi = dot(data->m[a], u);
    if (phi > delta.colour_coeffs[j]) v.basepoint_free = false;
    if (phi >= delta.colour_coeffs[j]) v.ample = false;
  }
  v.ample = v.ample && v.basepoint_free;
  return v;
}

std::vector<Int> anticanonical_colour_coefficients(const HorosphericalDatum& d) {
  std::vector<Int> out;
  for (std::size_t alpha : d.colours()) {
    long b = 0;
    for (const auto& gamma : d.group.positive_roots()) {
      bool in_levi = true;
      for (std::size_t j = 0; j < gamma.size(); ++j)
        if (gamma[j] != 0 && !d.I.count(j)) in_levi = false;
      if (!in_levi) b += d.group.pairing(gamma, alpha);
    }
    if (b < 2) throw std::logic_error("anticanonical coefficient below 2 for " + d.group.label(alpha));
    out.emplace_back(b);
  }
  return out;
}

BInvariantDivisor anticanonical(const ColouredFan& fan, const HorosphericalDatum& d) {
  if (!(fan.lattice() == build_coloured_lattice(d))) throw LatticeMismatch("anticanonical: fan and datum disagree");
  BInvariantDivisor k;
  k.ray_coeffs.assign(fan.noncoloured_rays().size(), Int(1));
  k.colour_coeffs = anticanonical_colour_coefficients(d);
  return k;
}

}  // namespace horofan
