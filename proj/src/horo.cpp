#include "horofan/horo.hpp"

#include <algorithm>
#include <stdexcept>

#include "horofan/errors.hpp"

namespace horofan {

namespace {

std::string colour_name(std::size_t root, const std::vector<std::string>* names) {
  if (names && root < names->size()) return (*names)[root];
  return "#" + std::to_string(root);
}

IntVector embed(const IntVector& v, std::size_t offset, std::size_t total) {
  IntVector out(total, Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// data

IndexSet HorosphericalDatum::colours() const {
  IndexSet c;
  for (std::size_t i = 0; i < group.simple_root_count(); ++i)
    if (!I.count(i)) c.insert(i);
  return c;
}

void HorosphericalDatum::validate() const {
  if (M.rows() != group.weight_rank())
    throw InvalidDatum("M has " + std::to_string(M.rows()) + " rows, expected " + std::to_string(group.weight_rank()));
  for (std::size_t i : I) {
    if (i >= group.simple_root_count()) throw InvalidDatum("I contains an index outside S");
    if (!is_zero(M.row(i)))
      throw InvalidDatum("a character in M pairs nonzero with " + group.label(i) + " in I");
  }
  if (horofan::rank(M) != M.cols()) throw InvalidDatum("columns of M are linearly dependent");
}

bool operator==(const HorosphericalDatum& a, const HorosphericalDatum& b) {
  return a.group == b.group && a.I == b.I && a.M == b.M;
}

IntMatrix parabolic_characters(const RootDatum& group, const IndexSet& I) {
  std::vector<IntVector> cols;
  const std::size_t w = group.weight_rank();
  for (std::size_t j = 0; j < w; ++j) {
    if (j < group.simple_root_count() && I.count(j)) continue;
    IntVector e(w, Int(0));
    e[j] = 1;
    cols.push_back(std::move(e));
  }
  return IntMatrix::from_columns(cols, w);
}

HorosphericalDatum make_datum(RootDatum group, IndexSet I) {
  IntMatrix M = parabolic_characters(group, I);
  return make_datum(std::move(group), std::move(I), std::move(M));
}

HorosphericalDatum make_datum(RootDatum group, IndexSet I, IntMatrix M) {
  HorosphericalDatum d{std::move(group), std::move(I), std::move(M)};
  d.validate();
  return d;
}

// ---------------------------------------------------------------------------
// coloured lattices

ColouredLattice::ColouredLattice(std::size_t rank, std::size_t simple_root_count, std::vector<Colour> colours)
    : rank_(rank), simple_roots_(simple_root_count), colours_(std::move(colours)) {
  std::sort(colours_.begin(), colours_.end(), [](const Colour& a, const Colour& b) { return a.root < b.root; });
  for (const auto& c : colours_) {
    if (c.point.size() != rank_) throw std::invalid_argument("colour point of wrong rank");
    if (c.root >= simple_roots_) throw std::invalid_argument("colour root outside S");
  }
}

const Colour* ColouredLattice::find(std::size_t root) const {
  for (const auto& c : colours_)
    if (c.root == root) return &c;
  return nullptr;
}

const IntVector& ColouredLattice::point(std::size_t root) const {
  const Colour* c = find(root);
  if (!c) throw std::out_of_range("no colour for simple root " + std::to_string(root));
  return c->point;
}

IndexSet ColouredLattice::colour_set() const {
  IndexSet s;
  for (const auto& c : colours_) s.insert(c.root);
  return s;
}

ColouredLattice build_coloured_lattice(const HorosphericalDatum& d) {
  d.validate();
  // <m, alpha^vee> is the alpha-th fundamental-weight coordinate of m
  std::vector<Colour> colours;
  for (std::size_t alpha : d.colours()) colours.push_back(Colour{alpha, d.M.row(alpha)});
  return ColouredLattice(d.rank(), d.group.simple_root_count(), std::move(colours));
}

// ---------------------------------------------------------------------------
// coloured cones and fans

bool canonical_less(const ColouredCone& a, const ColouredCone& b) {
  if (a.cone.dim() != b.cone.dim()) return a.cone.dim() > b.cone.dim();
  if (!(a.cone == b.cone)) return a.cone < b.cone;
  return a.colours < b.colours;
}

std::vector<ColouredCone> coloured_faces(const ColouredCone& sigma, const ColouredLattice& lattice) {
  std::vector<ColouredCone> out;
  for (auto& tau : faces(sigma.cone)) {
    IndexSet f;
    if (tau == sigma.cone) f = sigma.colours;
    for (std::size_t alpha : sigma.colours) {
      const Colour* c = lattice.find(alpha);
      if (c && tau.contains(c->point)) f.insert(alpha);
    }
    out.push_back(ColouredCone{std::move(tau), std::move(f)});
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_coloured_face(const ColouredCone& tau, const ColouredCone& sigma, const ColouredLattice& lattice) {
  if (!is_face_of(tau.cone, sigma.cone)) return false;
  IndexSet f;
  for (std::size_t alpha : sigma.colours) {
    const Colour* c = lattice.find(alpha);
    if (c && tau.cone.contains(c->point)) f.insert(alpha);
  }
  return f == tau.colours;
}

std::vector<IntVector> noncoloured_rays(const ColouredCone& sigma, const ColouredLattice& lattice) {
  std::vector<IntVector> out;
  for (const auto& r : sigma.cone.rays()) {
    bool coloured = std::any_of(sigma.colours.begin(), sigma.colours.end(), [&](std::size_t a) {
      const Colour* c = lattice.find(a);
      return c && !is_zero(c->point) && primitive(c->point) == r;
    });
    if (!coloured) out.push_back(r);
  }
  return out;
}

ColouredFan::ColouredFan(ColouredLattice lattice, std::vector<ColouredCone> cones)
    : lattice_(std::move(lattice)), cones_(std::move(cones)) {
  std::sort(cones_.begin(), cones_.end(), canonical_less);
  cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
}

ColouredFan ColouredFan::generated_by(ColouredLattice lattice, const std::vector<ColouredCone>& cones) {
  std::vector<ColouredCone> all{ColouredCone{Cone::trivial(lattice.rank()), {}}};
  for (const auto& c : cones) {
    if (c.cone.ambient_rank() != lattice.rank()) throw LatticeMismatch("cone of wrong rank");
    auto fs = coloured_faces(c, lattice);
    all.insert(all.end(), fs.begin(), fs.end());
  }
  return ColouredFan(std::move(lattice), std::move(all));
}

ColouredFan ColouredFan::trivial(ColouredLattice lattice) {
  std::size_t r = lattice.rank();
  return ColouredFan(std::move(lattice), {ColouredCone{Cone::trivial(r), {}}});
}

std::optional<std::size_t> ColouredFan::index_of(const Cone& cone) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].cone == cone) return i;
  return std::nullopt;
}

std::vector<std::size_t> ColouredFan::maximal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cones_.size() && maximal; ++j)
      if (i != j && !(cones_[i].cone == cones_[j].cone) && cones_[j].cone.contains(cones_[i].cone)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<IntVector> ColouredFan::noncoloured_rays() const {
  std::vector<IntVector> out;
  for (const auto& c : cones_)
    if (c.cone.dim() == 1 && c.cone.is_strongly_convex() && c.colours.empty()) out.push_back(c.cone.rays().front());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IndexSet ColouredFan::used_colours() const {
  IndexSet s;
  for (const auto& c : cones_) s.insert(c.colours.begin(), c.colours.end());
  return s;
}

PlainFan ColouredFan::underlying() const {
  std::vector<Cone> cs;
  for (const auto& c : cones_) cs.push_back(c.cone);
  return PlainFan(lattice_.rank(), std::move(cs));
}

ValidationReport validate_coloured_fan(const ColouredFan& fan, const std::vector<std::string>* names) {
  ValidationReport report;
  const auto& lattice = fan.lattice();
  const auto& cones = fan.cones();
  auto describe = [&](const ColouredCone& c) {
    std::string s = "(" + c.cone.to_string() + ", {";
    bool first = true;
    for (std::size_t a : c.colours) {
      s += (first ? "" : ",") + colour_name(a, names);
      first = false;
    }
    return s + "})";
  };

  bool shapes_ok = true;
  for (const auto& c : cones) {
    if (c.cone.ambient_rank() != lattice.rank()) {
      report.violations.push_back(describe(c) + " lives in the wrong rank");
      shapes_ok = false;
      continue;
    }
    if (!c.cone.is_strongly_convex()) report.violations.push_back(describe(c) + " is not strongly convex");
    for (std::size_t a : c.colours) {
      const Colour* col = lattice.find(a);
      if (!col) {
        report.violations.push_back(describe(c) + " uses " + colour_name(a, names) + ", which is not a colour");
        continue;
      }
      if (is_zero(col->point))
        report.violations.push_back(describe(c) + " uses " + colour_name(a, names) + ", whose colour point is 0");
      else if (!c.cone.contains(col->point))
        report.violations.push_back(describe(c) + ": colour point of " + colour_name(a, names) + " " +
                                    to_string(col->point) + " lies outside the cone");
    }
  }
  if (!shapes_ok) return report;

  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      if (cones[i].cone == cones[j].cone)
        report.violations.push_back(describe(cones[i]) + " and " + describe(cones[j]) + " share an underlying cone");

  for (const auto& c : cones) {
    if (!c.cone.is_strongly_convex()) continue;
    for (const auto& f : coloured_faces(c, lattice))
      if (std::find(cones.begin(), cones.end(), f) == cones.end())
        report.violations.push_back("coloured face " + describe(f) + " of " + describe(c) + " is missing");
  }

  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      Cone meet = intersect(cones[i].cone, cones[j].cone);
      if (!is_face_of(meet, cones[i].cone) || !is_face_of(meet, cones[j].cone))
        report.violations.push_back("intersection of " + describe(cones[i]) + " and " + describe(cones[j]) +
                                    " is not a face of both");
    }
  return report;
}

// ---------------------------------------------------------------------------
// quotients and maps

QuotientResult quotient_coloured_lattice(const HorosphericalDatum& d, const std::vector<IntVector>& sublattice,
                                         const IndexSet& collapsed) {
  const std::size_t r = d.rank();
  for (const auto& v : sublattice)
    if (v.size() != r) throw LatticeMismatch("sublattice vector of wrong rank");
  IntMatrix gens = IntMatrix::from_columns(sublattice, r);
  if (!(lattice_basis(gens) == saturate(gens))) throw NotSaturated("sublattice is not saturated");

  ColouredLattice lattice = build_coloured_lattice(d);
  for (std::size_t alpha : collapsed) {
    const Colour* c = lattice.find(alpha);
    if (!c) throw ColourOutsideSublattice(d.group.label(alpha) + " is not a colour");
    if (!solve_integer_affine(gens, c->point))
      throw ColourOutsideSublattice("colour point of " + d.group.label(alpha) + " is not in the sublattice");
  }

  // (N/N')^vee is the annihilator of N' inside M = N^vee
  std::vector<IntVector> ann = integer_kernel(IntMatrix::from_rows(sublattice, r));
  IntMatrix K = IntMatrix::from_rows(ann, r);
  IndexSet I = d.I;
  I.insert(collapsed.begin(), collapsed.end());
  HorosphericalDatum datum{d.group, I, d.M * K.transpose()};
  datum.validate();

  std::vector<Colour> colours;
  for (const auto& c : lattice.colours())
    if (!collapsed.count(c.root)) colours.push_back(Colour{c.root, K.apply(c.point)});
  ColouredLattice quotient(K.rows(), lattice.simple_root_count(), std::move(colours));
  if (!(quotient == build_coloured_lattice(datum)))
    throw std::logic_error("quotient lattice disagrees with its datum");
  return QuotientResult{std::move(quotient), std::move(datum), std::move(K)};
}

ColouredLatticeMap coloured_lattice_map(const HorosphericalDatum& source, const HorosphericalDatum& target) {
  if (!(source.group == target.group)) throw GroupMismatch("coloured_lattice_map: different groups");
  if (!std::includes(target.I.begin(), target.I.end(), source.I.begin(), source.I.end()))
    throw NotASubdatum("I of the source is not contained in I of the target");
  // M_target = M_source * C; Phi is dual to the inclusion
  IntMatrix C(source.rank(), target.rank());
  for (std::size_t j = 0; j < target.rank(); ++j) {
    auto sol = solve_integer_affine(source.M, target.M.col(j));
    if (!sol) throw NotASubdatum("M of the target is not contained in M of the source");
    for (std::size_t i = 0; i < source.rank(); ++i) C(i, j) = sol->particular[i];
  }
  ColouredLatticeMap map{build_coloured_lattice(source), build_coloured_lattice(target), C.transpose(), {}};
  for (std::size_t alpha : target.I)
    if (!source.I.count(alpha)) map.dominant.insert(alpha);
  for (const auto& c : map.source.colours()) {
    IntVector image = map.phi.apply(c.point);
    bool ok = map.dominant.count(c.root) ? is_zero(image) : image == map.target.point(c.root);
    if (!ok) throw std::logic_error("coloured lattice map does not respect colour points");
  }
  return map;
}

bool homogeneous_spaces_isomorphic(const HorosphericalDatum& a, const HorosphericalDatum& b) {
  if (!(a.group == b.group)) throw GroupMismatch("homogeneous_spaces_isomorphic: different groups");
  if (a.I != b.I || a.rank() != b.rank()) return false;
  std::vector<std::size_t> colour_rows;
  for (std::size_t alpha : a.colours()) colour_rows.push_back(alpha);
  // columns are the colour points u_alpha, matched by simple root
  IntMatrix ua = a.M.select_rows(colour_rows).transpose(), ub = b.M.select_rows(colour_rows).transpose();
  if (!left_unimodular_equivalent(ua, ub)) return false;
  return left_unimodular_equivalent(a.M.transpose(), b.M.transpose());
}

HorosphericalDatum product_datum(const HorosphericalDatum& a, const HorosphericalDatum& b) {
  RootDatum group = product(a.group, b.group);
  const std::size_t sa = a.group.simple_root_count(), sb = b.group.simple_root_count();
  const std::size_t ta = a.group.torus_rank();
  IndexSet I = a.I;
  for (std::size_t i : b.I) I.insert(sa + i);
  IntMatrix M(group.weight_rank(), a.rank() + b.rank());
  for (std::size_t j = 0; j < a.rank(); ++j) {
    for (std::size_t i = 0; i < sa; ++i) M(i, j) = a.M(i, j);
    for (std::size_t i = 0; i < ta; ++i) M(sa + sb + i, j) = a.M(sa + i, j);
  }
  for (std::size_t j = 0; j < b.rank(); ++j) {
    for (std::size_t i = 0; i < sb; ++i) M(sa + i, a.rank() + j) = b.M(i, j);
    for (std::size_t i = 0; i < b.group.torus_rank(); ++i) M(sa + sb + ta + i, a.rank() + j) = b.M(sb + i, j);
  }
  return make_datum(std::move(group), std::move(I), std::move(M));
}

ColouredFan product_coloured_fan(const ColouredFan& a, const ColouredFan& b) {
  const std::size_t ra = a.lattice().rank(), rb = b.lattice().rank(), r = ra + rb;
  const std::size_t sa = a.lattice().simple_root_count();
  std::vector<Colour> colours;
  for (const auto& c : a.lattice().colours()) colours.push_back(Colour{c.root, embed(c.point, 0, r)});
  for (const auto& c : b.lattice().colours()) colours.push_back(Colour{sa + c.root, embed(c.point, ra, r)});
  ColouredLattice lattice(r, sa + b.lattice().simple_root_count(), std::move(colours));
  std::vector<ColouredCone> cones;
  for (const auto& x : a.cones())
    for (const auto& y : b.cones()) {
      std::vector<IntVector> g;
      for (const auto& v : x.cone.generators()) g.push_back(embed(v, 0, r));
      for (const auto& v : y.cone.generators()) g.push_back(embed(v, ra, r));
      IndexSet f = x.colours;
      for (std::size_t alpha : y.colours) f.insert(sa + alpha);
      cones.push_back(ColouredCone{Cone::from_generators(r, g), std::move(f)});
    }
  return ColouredFan(std::move(lattice), std::move(cones));
}

}  // namespace horofan
