#include "horofan/dictionary.hpp"

#include <algorithm>
#include <stdexcept>

#include "horofan/errors.hpp"
#include "horofan/lp.hpp"

namespace horofan {

namespace {

void require_lattice(const ColouredFan& fan, const HorosphericalDatum& d) {
  if (!(fan.lattice() == build_coloured_lattice(d)))
    throw LatticeMismatch("the fan does not live on the coloured lattice of the datum");
}

IndexSet with(IndexSet a, const IndexSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

std::vector<OrbitRecord> orbit_table(const ColouredFan& fan, const HorosphericalDatum& d) {
  require_lattice(fan, d);
  const auto& cones = fan.cones();
  std::vector<OrbitRecord> out;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const auto& c = cones[i];
    OrbitRecord rec;
    rec.cone_index = i;
    rec.dimension = d.rank() - c.cone.dim() + d.group.flag_dimension(with(d.I, c.colours));
    rec.datum = quotient_coloured_lattice(d, c.cone.span_lattice(), c.colours).datum;
    for (std::size_t j = 0; j < cones.size(); ++j)
      if (is_coloured_face(c, cones[j], fan.lattice())) rec.closure.push_back(j);
    out.push_back(std::move(rec));
  }
  return out;
}

OrbitClosure orbit_closure(const ColouredFan& fan, std::size_t index, const HorosphericalDatum& d) {
  require_lattice(fan, d);
  if (index >= fan.size()) throw ConeNotInFan("cone index " + std::to_string(index) + " is out of range");
  const ColouredCone& tau = fan.cones()[index];
  QuotientResult q = quotient_coloured_lattice(d, tau.cone.span_lattice(), tau.colours);
  std::vector<ColouredCone> cones;
  for (const auto& sigma : fan.cones()) {
    if (!is_coloured_face(tau, sigma, fan.lattice())) continue;
    IndexSet f;
    std::set_difference(sigma.colours.begin(), sigma.colours.end(), tau.colours.begin(), tau.colours.end(),
                        std::inserter(f, f.end()));
    cones.push_back(ColouredCone{image(q.projection, sigma.cone), std::move(f)});
  }
  return OrbitClosure{ColouredFan(q.lattice, std::move(cones)), q.datum};
}

std::vector<ConeRegularity> regularity_report(const ColouredFan& fan, const HorosphericalDatum& d) {
  require_lattice(fan, d);
  const std::size_t r = d.rank();
  std::vector<ConeRegularity> out;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const auto& c = fan.cones()[i];
    ConeRegularity rep;
    rep.cone_index = i;
    rep.multiset = noncoloured_rays(c, fan.lattice());
    for (std::size_t a : c.colours) rep.multiset.push_back(fan.lattice().point(a));
    std::sort(rep.multiset.begin(), rep.multiset.end());
    const std::size_t k = rep.multiset.size();
    rep.simplicial = rank(rep.multiset, r) == k;
    if (rep.simplicial && k <= r) {
      AbelianGroup q = cokernel(IntMatrix::from_columns(rep.multiset, r));
      rep.regular = q.is_free();
    }
    if (!rep.regular) {
      std::string ms = "{";
      for (std::size_t j = 0; j < k; ++j) ms += (j ? "," : "") + to_string(rep.multiset[j]);
      ms += "}";
      rep.failed_clause = "regular";
      rep.diagnostic = rep.simplicial ? "multiset " + ms + " does not extend to a basis of N"
                                      : "multiset " + ms + " is linearly dependent, so it does not extend to a basis of N";
    } else {
      SmoothnessVerdict v = colour_smoothness_check(d.group, d.I, c.colours);
      rep.smooth = v.smooth;
      rep.failed_clause = v.clause;
      rep.diagnostic = v.diagnostic;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

Rational strict_convexity_margin(const ColouredFan& fan, const CancelToken* cancel) {
  const std::size_t r = fan.lattice().rank();
  const auto maxi = fan.maximal_indices();
  const std::size_t k = maxi.size(), nm = k * r;
  auto cone = [&](std::size_t a) -> const Cone& { return fan.cones()[maxi[a]].cone; };

  // rows over the m-variables: <m_a - m_b, u>
  auto difference_row = [&](std::size_t a, std::size_t b, const IntVector& u) {
    IntVector row(nm, Int(0));
    for (std::size_t t = 0; t < r; ++t) {
      row[a * r + t] += u[t];
      row[b * r + t] -= u[t];
    }
    return row;
  };
  std::vector<IntVector> eq, gap;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      check_cancel(cancel);
      if (a < b)
        for (const auto& u : intersect(cone(a), cone(b)).generators()) eq.push_back(difference_row(a, b, u));
      for (const auto& u : cone(a).generators())
        if (!cone(b).contains(u)) gap.push_back(difference_row(a, b, u));
    }

  // piecewise linear functions m = K y with y free, written y = y+ - y-
  std::vector<IntVector> kernel =
      eq.empty() ? IntMatrix::identity(nm).row_vectors() : integer_kernel(IntMatrix::from_rows(eq, nm));
  const std::size_t p = kernel.size(), vars = 2 * p + 1;
  std::vector<RatVector> A;
  RatVector b;
  for (const auto& g : gap) {
    RatVector row(vars, Rational(0));
    for (std::size_t j = 0; j < p; ++j) {
      Int v = dot(g, kernel[j]);
      row[j] = -v;
      row[p + j] = v;
    }
    row[2 * p] = 1;  // eps - <m_a - m_b, u> <= 0
    A.push_back(std::move(row));
    b.push_back(0);
  }
  RatVector cap(vars, Rational(0));
  cap[2 * p] = 1;
  A.push_back(cap);
  b.push_back(1);
  auto sol = maximize(A, b, cap, cancel);
  return sol ? sol->value : Rational(1);
}

PropertyReport classify_variety(const ColouredFan& fan, const HorosphericalDatum& d, const CancelToken* cancel) {
  require_lattice(fan, d);
  PropertyReport rep;
  const IndexSet used = fan.used_colours();
  rep.is_simple = fan.maximal_indices().size() == 1;
  rep.is_affine = rep.is_simple && used == d.colours();
  rep.is_complete = fan_is_complete(fan.underlying());
  rep.is_toroidal = used.empty();
  rep.is_projective = rep.is_complete && strict_convexity_margin(fan, cancel) > 0;
  rep.cones = regularity_report(fan, d);
  rep.is_simplicial = rep.is_regular = rep.is_smooth = true;
  for (const auto& c : rep.cones) {
    rep.is_simplicial = rep.is_simplicial && c.simplicial;
    rep.is_regular = rep.is_regular && c.regular;
    rep.is_smooth = rep.is_smooth && c.smooth;
  }
  rep.is_factorial = rep.is_regular;
  rep.is_q_factorial = rep.is_simplicial;
  return rep;
}

MorphismVerdict morphism_check(const ColouredLatticeMap& map, const ColouredFan& source, const ColouredFan& target,
                               const CancelToken* cancel) {
  if (!(source.lattice() == map.source) || !(target.lattice() == map.target))
    throw LatticeMismatch("fans do not live on the lattices of the map");
  MorphismVerdict v;
  v.compatible = true;
  for (const auto& s : source.cones()) {
    check_cancel(cancel);
    Cone img = image(map.phi, s.cone);
    IndexSet need;
    std::set_difference(s.colours.begin(), s.colours.end(), map.dominant.begin(), map.dominant.end(),
                        std::inserter(need, need.end()));
    bool found = std::any_of(target.cones().begin(), target.cones().end(), [&](const ColouredCone& t) {
      return t.cone.contains(img) && std::includes(t.colours.begin(), t.colours.end(), need.begin(), need.end());
    });
    if (!found) {
      v.compatible = false;
      v.diagnostic = "no target coloured cone contains the image of " + s.cone.to_string() + " with its colours";
      break;
    }
  }

  std::vector<Cone> src_max, pre;
  for (std::size_t i : source.maximal_indices()) src_max.push_back(source.cones()[i].cone);
  for (std::size_t i : target.maximal_indices()) pre.push_back(preimage(map.phi, target.cones()[i].cone));
  v.proper = true;
  for (const auto& c : pre)
    if (!region_covered(c, src_max, cancel)) {
      v.proper = false;
      if (v.diagnostic.empty()) v.diagnostic = "preimage " + c.to_string() + " is not covered by the source fan";
      break;
    }
  if (v.proper)
    for (const auto& c : src_max)
      if (!region_covered(c, pre, cancel)) {
        v.proper = false;
        if (v.diagnostic.empty()) v.diagnostic = c.to_string() + " leaves the preimage of the target support";
        break;
      }
  return v;
}

ColouredFan decolouration(const ColouredFan& fan) {
  std::vector<ColouredCone> cones;
  for (const auto& c : fan.cones()) cones.push_back(ColouredCone{c.cone, {}});
  return ColouredFan(fan.lattice(), std::move(cones));
}

ColouredFan open_toroidal_subfan(const ColouredFan& fan) {
  std::vector<ColouredCone> cones{ColouredCone{Cone::trivial(fan.lattice().rank()), {}}};
  for (const auto& c : fan.cones())
    if (c.cone.dim() == 1 && c.colours.empty()) cones.push_back(c);
  return ColouredFan(fan.lattice(), std::move(cones));
}

LocalStructure affine_local_structure(const ColouredCone& sigma, const HorosphericalDatum& d) {
  if (!sigma.cone.is_strongly_convex()) throw NotStronglyConvex(sigma.cone.to_string() + " contains a line");
  if (sigma.cone.ambient_rank() != d.rank()) throw LatticeMismatch("cone of wrong rank");
  const std::size_t s = d.group.simple_root_count();
  LocalStructure out;
  out.q_index = with(d.I, sigma.colours);
  RootDatum levi = d.group.levi(out.q_index, d.group.torus_rank() + (s - out.q_index.size()), &out.levi_index);

  // same torus, coordinates reordered: Levi simple roots, the other simple roots, then the torus
  std::vector<std::size_t> rows = out.levi_index;
  for (std::size_t i = 0; i < s; ++i)
    if (!out.q_index.count(i)) rows.push_back(i);
  for (std::size_t i = s; i < d.group.weight_rank(); ++i) rows.push_back(i);
  IndexSet I, F;
  for (std::size_t k = 0; k < out.levi_index.size(); ++k) {
    if (d.I.count(out.levi_index[k])) I.insert(k);
    if (sigma.colours.count(out.levi_index[k])) F.insert(k);
  }
  out.levi_datum = make_datum(std::move(levi), std::move(I), d.M.select_rows(rows));
  out.z_cone = ColouredCone{sigma.cone, std::move(F)};
  return out;
}

std::vector<IntVector> weight_monoid_generators(const ColouredCone& sigma, const HorosphericalDatum& d) {
  if (sigma.cone.ambient_rank() != d.rank()) throw LatticeMismatch("cone of wrong rank");
  if (!sigma.cone.is_strongly_convex()) throw NotStronglyConvex(sigma.cone.to_string() + " contains a line");
  const std::size_t r = d.rank();
  Cone dual = dual_cone(sigma.cone);
  if (dual.is_strongly_convex()) return hilbert_basis(dual);

  // split off the lineality sigma^perp: project along it, then lift back
  const std::vector<IntVector>& lin = dual.lineality();
  IntMatrix K = IntMatrix::from_rows(sigma.cone.span_lattice(), r);
  std::vector<IntVector> out;
  for (const auto& h : hilbert_basis(image(K, dual))) {
    auto lift = solve_integer_affine(K, h);
    out.push_back(reduce_modulo(lift->particular, lin));
  }
  for (const auto& l : lin) {
    out.push_back(l);
    out.push_back(negate(l));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace horofan
