#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace horofan;
using fx::cc;
using fx::iv;

namespace {

HorosphericalDatum sl2() { return make_datum(RootDatum::parse("A1", 0), {}); }

HorosphericalDatum sl5() { return make_datum(RootDatum::parse("A4", 0), {1, 3}); }

HorosphericalDatum diagonal_sl3() {
  return make_datum(RootDatum::parse("A2", 0), {}, IntMatrix::from_columns({iv({1, 1})}, 2));
}

ColouredFan single(const HorosphericalDatum& d, ColouredCone c) {
  return ColouredFan::generated_by(build_coloured_lattice(d), {std::move(c)});
}

const ConeRegularity& report_for(const std::vector<ConeRegularity>& rs, const ColouredFan& fan, std::size_t i) {
  for (const auto& r : rs)
    if (r.cone_index == i) return r;
  (void)fan;
  throw std::logic_error("no report");
}

bool is_proper_face(const ColouredCone& t, const ColouredCone& s, const ColouredLattice& lat) {
  if (t == s) return false;
  auto fs = coloured_faces(s, lat);
  return std::find(fs.begin(), fs.end(), t) != fs.end();
}

}  // namespace

TEST_CASE("orbit table of the projective SL3/U3 example") {
  HorosphericalDatum d = fx::sl3_u3();
  ColouredFan fan = fx::orbits_fan(d);
  REQUIRE(validate_coloured_fan(fan).ok());
  auto table = orbit_table(fan, d);
  REQUIRE(table.size() == 7);
  auto dim_of = [&](std::vector<IntVector> g) { return table[fx::find_cone(fan, g)].dimension; };
  CHECK(dim_of({iv({1, 0}), iv({0, 1})}) == 2);
  CHECK(dim_of({iv({0, 1}), iv({-1, -1})}) == 3);
  CHECK(dim_of({iv({1, 0}), iv({-1, -1})}) == 2);
  CHECK(dim_of({iv({0, 1})}) == 4);
  CHECK(dim_of({iv({1, 0})}) == 3);
  CHECK(dim_of({iv({-1, -1})}) == 4);
  CHECK(dim_of({}) == 5);
  // closed orbit of sigma_1 is the flag variety SL3/P_a1
  CHECK(table[fx::find_cone(fan, {iv({1, 0}), iv({0, 1})})].datum.I == IndexSet{0});
}

TEST_CASE("orbit table of small fans") {
  HorosphericalDatum d = fx::sl3_u3();
  auto t = orbit_table(ColouredFan::trivial(build_coloured_lattice(d)), d);
  REQUIRE(t.size() == 1);
  CHECK(t[0].dimension == 5);

  HorosphericalDatum torus = make_datum(RootDatum::parse("", 2), {});
  ColouredFan quad = single(torus, cc(2, {iv({1, 0}), iv({0, 1})}));
  auto q = orbit_table(quad, torus);
  std::vector<std::size_t> dims;
  for (const auto& r : q) dims.push_back(r.dimension);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{0, 1, 1, 2});

  CHECK_THROWS_AS(orbit_table(quad, d), LatticeMismatch);
}

TEST_CASE("orbit closures") {
  HorosphericalDatum d = fx::sl3_u3();
  ColouredFan fan = fx::orbits_fan(d);

  OrbitClosure s1 = orbit_closure(fan, fx::find_cone(fan, {iv({1, 0}), iv({0, 1})}), d);
  CHECK(s1.fan.lattice().rank() == 0);
  CHECK(s1.datum.I == IndexSet{0});
  CHECK(s1.datum.rank() == 0);
  CHECK(s1.fan.size() == 1);

  OrbitClosure e2 = orbit_closure(fan, fx::find_cone(fan, {iv({0, 1})}), d);
  const ColouredLattice& l = e2.fan.lattice();
  CHECK(l.rank() == 1);
  REQUIRE(l.colours().size() == 2);
  CHECK(l.point(0) == iv({1}));
  CHECK(l.point(1) == iv({0}));
  CHECK(e2.datum.I.empty());
  CHECK(e2.datum.M == IntMatrix::from_columns({iv({1, 0})}, 2));
  CHECK(validate_coloured_fan(e2.fan).ok());
  // (Cone(e1,e2),{a1}) and (Cone(e2,-e1-e2),{}) become the two half-lines
  CHECK(e2.fan.size() == 3);

  OrbitClosure all = orbit_closure(fan, fx::find_cone(fan, {}), d);
  CHECK(all.fan == fan);
  CHECK(all.datum == d);

  CHECK_THROWS_AS(orbit_closure(fan, fan.size(), d), ConeNotInFan);
}

TEST_CASE("orbit closures agree with the orbit table") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = fx::random_valid_fan(rng);
    auto table = orbit_table(m.fan, m.datum);
    for (std::size_t i = 0; i < m.fan.size(); ++i) {
      OrbitClosure oc = orbit_closure(m.fan, i, m.datum);
      CHECK(validate_coloured_fan(oc.fan).ok());
      auto sub = orbit_table(oc.fan, oc.datum);
      std::size_t open = 0;
      for (const auto& r : sub) open = std::max(open, r.dimension);
      CHECK(open == table[i].dimension);
      CHECK(sub.size() == table[i].closure.size());
    }
  }
}

TEST_CASE("classification examples") {
  HorosphericalDatum d = fx::sl3_u3();
  PropertyReport affine = classify_variety(single(d, cc(2, {iv({1, 0}), iv({0, 1})}, {0, 1})), d);
  CHECK(affine.is_affine);
  CHECK(affine.is_simple);
  CHECK_FALSE(affine.is_complete);

  PropertyReport proj = classify_variety(fx::orbits_fan(d), d);
  CHECK(proj.is_complete);
  CHECK(proj.is_projective);
  CHECK_FALSE(proj.is_affine);
  CHECK_FALSE(proj.is_toroidal);

  HorosphericalDatum s = sl2();
  PropertyReport blowup = classify_variety(single(s, cc(1, {iv({1})})), s);
  CHECK(blowup.is_toroidal);
  CHECK_FALSE(blowup.is_complete);
  CHECK_FALSE(blowup.is_affine);
  CHECK(blowup.is_simple);

  PropertyReport a2 = classify_variety(single(s, cc(1, {iv({1})}, {0})), s);
  CHECK(a2.is_affine);
  CHECK(a2.is_smooth);

  // P^2 as an SL2 variety
  ColouredFan p2 =
      ColouredFan::generated_by(build_coloured_lattice(s), {cc(1, {iv({1})}, {0}), cc(1, {iv({-1})})});
  PropertyReport pr = classify_variety(p2, s);
  CHECK(pr.is_complete);
  CHECK(pr.is_projective);
  CHECK(pr.is_smooth);
}

TEST_CASE("strict convexity margin") {
  HorosphericalDatum d = fx::sl3_u3();
  CHECK(strict_convexity_margin(fx::orbits_fan(d)) > 0);
  CHECK(strict_convexity_margin(fx::class_group_fan(d)) > 0);
  CancelToken tok;
  tok.cancel();
  CHECK_THROWS_AS(classify_variety(fx::orbits_fan(d), d, &tok), Cancelled);
}

TEST_CASE("regularity of cones") {
  HorosphericalDatum diag = diagonal_sl3();
  ColouredFan both = single(diag, cc(1, {iv({1})}, {0, 1}));
  auto rb = regularity_report(both, diag);
  const auto& top = report_for(rb, both, fx::find_cone(both, {iv({1})}));
  CHECK(top.multiset == std::vector<IntVector>{iv({1}), iv({1})});
  CHECK_FALSE(top.simplicial);
  CHECK_FALSE(top.regular);

  ColouredFan one = single(diag, cc(1, {iv({1})}, {0}));
  auto ro = regularity_report(one, diag);
  CHECK(report_for(ro, one, fx::find_cone(one, {iv({1})})).regular);

  HorosphericalDatum d5 = sl5();
  ColouredFan c1 = single(d5, cc(2, {iv({1, 0}), iv({-1, 1})}, {0, 2}));
  const auto& r1 = report_for(regularity_report(c1, d5), c1, fx::find_cone(c1, {iv({1, 0}), iv({-1, 1})}));
  CHECK_FALSE(r1.smooth);
  CHECK(r1.failed_clause == "regular");

  ColouredFan c2 = single(d5, cc(2, {iv({1, 0}), iv({0, 1})}, {0}));
  CHECK(report_for(regularity_report(c2, d5), c2, fx::find_cone(c2, {iv({1, 0}), iv({0, 1})})).smooth);

  ColouredFan c3 = single(d5, cc(2, {iv({1, 0}), iv({0, 1})}, {2}));
  const auto& r3 = report_for(regularity_report(c3, d5), c3, fx::find_cone(c3, {iv({1, 0}), iv({0, 1})}));
  CHECK(r3.regular);
  CHECK_FALSE(r3.smooth);
  CHECK(r3.failed_clause == "b");
}

TEST_CASE("morphisms") {
  HorosphericalDatum d = fx::sl3_u3();
  ColouredFan fan = fx::orbits_fan(d);
  auto id = coloured_lattice_map(d, d);
  auto v = morphism_check(id, fan, fan);
  CHECK(v.compatible);
  CHECK(v.proper);

  HorosphericalDatum s = sl2();
  ColouredFan a2 = single(s, cc(1, {iv({1})}, {0}));
  ColouredFan bl = decolouration(a2);
  CHECK(bl == single(s, cc(1, {iv({1})})));
  auto dv = morphism_check(coloured_lattice_map(s, s), bl, a2);
  CHECK(dv.compatible);
  CHECK(dv.proper);

  // SL2/B is (empty, 0); ({a}, 0) is the point SL2/SL2
  HorosphericalDatum p1 = make_datum(RootDatum::parse("A1", 0), {}, IntMatrix(1, 0));
  ColouredFan pt = ColouredFan::trivial(build_coloured_lattice(p1));
  auto proj = coloured_lattice_map(s, p1);
  CHECK(proj.dominant.empty());
  CHECK_FALSE(morphism_check(proj, a2, pt).compatible);
  HorosphericalDatum point = make_datum(RootDatum::parse("A1", 0), {0}, IntMatrix(1, 0));
  auto to_point = coloured_lattice_map(s, point);
  auto tv = morphism_check(to_point, a2, ColouredFan::trivial(build_coloured_lattice(point)));
  CHECK(tv.compatible);
  CHECK_FALSE(tv.proper);
  // A^2 minus the origin maps to P^1
  ColouredFan punctured = ColouredFan::trivial(build_coloured_lattice(s));
  auto pv = morphism_check(proj, punctured, pt);
  CHECK(pv.compatible);
  CHECK_FALSE(pv.proper);
  // the blow up of the origin maps properly to P^1
  auto bv = morphism_check(proj, bl, pt);
  CHECK(bv.compatible);
  CHECK_FALSE(bv.proper);
  ColouredFan p1_bundle = ColouredFan::generated_by(build_coloured_lattice(s), {cc(1, {iv({1})}), cc(1, {iv({-1})})});
  CHECK(morphism_check(proj, p1_bundle, pt).proper);

  // open inclusion of a sub-fan is not proper
  ColouredFan half = single(d, cc(2, {iv({1, 0}), iv({0, 1})}, {0}));
  auto inc = morphism_check(id, half, fan);
  CHECK(inc.compatible);
  CHECK_FALSE(inc.proper);
  CHECK_FALSE(morphism_check(id, fan, half).compatible);

  CHECK_THROWS_AS(morphism_check(id, a2, fan), LatticeMismatch);
}

TEST_CASE("decolouration and open toroidal subfan") {
  HorosphericalDatum d = fx::sl3_u3();
  ColouredFan fan = fx::orbits_fan(d);
  ColouredLattice lat = build_coloured_lattice(d);
  ColouredFan open = open_toroidal_subfan(fan);
  CHECK(open == ColouredFan(lat, {cc(2, {}), cc(2, {iv({0, 1})}), cc(2, {iv({-1, -1})})}));
  ColouredFan dec = decolouration(fan);
  CHECK(decolouration(dec) == dec);
  CHECK(classify_variety(dec, d).is_toroidal);
  CHECK(dec.size() == fan.size());
  CHECK(morphism_check(coloured_lattice_map(d, d), dec, fan).compatible);
  CHECK(morphism_check(coloured_lattice_map(d, d), open, fan).compatible);

  std::mt19937 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = fx::random_valid_fan(rng);
    ColouredFan dc = decolouration(m.fan);
    CHECK(validate_coloured_fan(dc).ok());
    CHECK(decolouration(dc) == dc);
    ColouredFan ot = open_toroidal_subfan(m.fan);
    CHECK(validate_coloured_fan(ot).ok());
    CHECK(classify_variety(ot, m.datum).is_toroidal);
    for (const auto& c : ot.cones()) CHECK(std::find(m.fan.cones().begin(), m.fan.cones().end(), c) != m.fan.cones().end());
    CHECK(open_toroidal_subfan(dc) == open_toroidal_subfan(dc));
  }
}

TEST_CASE("affine local structure") {
  HorosphericalDatum d = fx::sl3_u3();
  LocalStructure ls = affine_local_structure(cc(2, {iv({1, 0}), iv({0, 1})}, {0}), d);
  CHECK(ls.q_index == IndexSet{0});
  CHECK(ls.levi_datum.group.descriptor() == "A1");
  CHECK(ls.levi_datum.group.torus_rank() == 1);
  CHECK(ls.levi_datum.rank() == 2);
  CHECK(ls.z_cone.cone == Cone::from_generators(2, {iv({1, 0}), iv({0, 1})}));
  CHECK(ls.z_cone.colours.size() == 1);
  CHECK(ls.levi_index == std::vector<std::size_t>{0});
  ColouredLattice zl = build_coloured_lattice(ls.levi_datum);
  CHECK(zl.point(*ls.z_cone.colours.begin()) == iv({1, 0}));
  CHECK(classify_variety(ColouredFan::generated_by(zl, {ls.z_cone}), ls.levi_datum).is_affine);

  LocalStructure tor = affine_local_structure(cc(2, {iv({0, 1}), iv({-1, -1})}), d);
  CHECK(tor.q_index.empty());
  CHECK(tor.levi_datum.group.simple_root_count() == 0);
  CHECK(tor.levi_datum.group.torus_rank() == 2);
  CHECK(tor.z_cone.cone == Cone::from_generators(2, {iv({0, 1}), iv({-1, -1})}));

  LocalStructure whole = affine_local_structure(cc(2, {iv({1, 0}), iv({0, 1})}, {0, 1}), d);
  CHECK(whole.q_index == IndexSet{0, 1});
  CHECK(whole.levi_datum.group.descriptor() == "A2");
  CHECK(whole.z_cone == cc(2, {iv({1, 0}), iv({0, 1})}, {0, 1}));

  CHECK_THROWS_AS(affine_local_structure(cc(2, {iv({1, 0}), iv({-1, 0})}), d), NotStronglyConvex);

  std::mt19937 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = fx::random_valid_fan(rng);
    for (const auto& c : m.fan.cones()) {
      LocalStructure l = affine_local_structure(c, m.datum);
      CHECK(l.levi_datum.rank() == m.datum.rank());
      ColouredLattice ll = build_coloured_lattice(l.levi_datum);
      CHECK(ll.colours().size() == c.colours.size());
      CHECK(classify_variety(ColouredFan::generated_by(ll, {l.z_cone}), l.levi_datum).is_affine);
    }
  }
}

TEST_CASE("weight monoids") {
  HorosphericalDatum d = fx::sl3_u3();
  CHECK(weight_monoid_generators(cc(2, {iv({1, 0}), iv({0, 1})}, {0, 1}), d) ==
        std::vector<IntVector>{iv({0, 1}), iv({1, 0})});
  CHECK(weight_monoid_generators(cc(1, {}), sl2()) == std::vector<IntVector>{iv({-1}), iv({1})});
  CHECK(weight_monoid_generators(cc(2, {iv({1, 0}), iv({1, 2})}), d) ==
        std::vector<IntVector>{iv({0, 1}), iv({1, 0}), iv({2, -1})});
  auto half = weight_monoid_generators(cc(2, {iv({1, 0})}), d);
  CHECK(half == std::vector<IntVector>{iv({0, -1}), iv({0, 1}), iv({1, 0})});
}

TEST_CASE("orbit invariants on random fans") {
  std::mt19937 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = fx::random_valid_fan(rng);
    const ColouredLattice& lat = m.fan.lattice();
    auto table = orbit_table(m.fan, m.datum);
    REQUIRE(table.size() == m.fan.size());
    std::size_t open_dim = m.datum.rank() + m.datum.group.flag_dimension(m.datum.I);
    auto maximal = m.fan.maximal_indices();
    std::size_t closed = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& ci = m.fan.cones()[i];
      bool is_max = std::count(maximal.begin(), maximal.end(), i) == 1;
      if (table[i].closure.size() == 1) ++closed;
      CHECK((table[i].closure.size() == 1) == is_max);
      bool uncoloured_ray = ci.cone.dim() == 1 && ci.colours.empty();
      CHECK((table[i].dimension + 1 == open_dim) == uncoloured_ray);
      for (std::size_t j = 0; j < table.size(); ++j)
        if (is_proper_face(m.fan.cones()[j], ci, lat)) CHECK(table[j].dimension > table[i].dimension);
    }
    CHECK(closed == maximal.size());
  }
}

TEST_CASE("regularity implications on random fans") {
  std::mt19937 rng(55);
  int toroidal = 0;
  for (int trial = 0; trial < 80; ++trial) {
    auto m = fx::random_valid_fan(rng);
    PropertyReport p = classify_variety(m.fan, m.datum);
    if (p.is_smooth) CHECK(p.is_factorial);
    if (p.is_factorial) CHECK(p.is_q_factorial);
    CHECK(p.is_factorial == p.is_regular);
    CHECK(p.is_q_factorial == p.is_simplicial);
    if (p.is_affine) CHECK(p.is_simple);
    if (p.is_projective) CHECK(p.is_complete);

    PropertyReport q = classify_variety(decolouration(m.fan), m.datum);
    CHECK(q.is_smooth == q.is_regular);
    ++toroidal;
  }
  CHECK(toroidal > 0);
}
