// Runs the ten acceptance criteria and prints one PASS/FAIL line per criterion.
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "horofan/document.hpp"
#include "json.hpp"

using namespace horofan;
using fx::cc;
using fx::iv;
using nlohmann::json;

namespace {

struct Checker {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(HOROFAN_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing data file " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json cli_json(const std::string& command, const std::string& file, cli::Options opt = {}) {
  cli::Report r = cli::run(command, slurp(file), opt);
  std::string text = r.text();
  auto at = text.find(cli::kJsonSentinel);
  if (at == std::string::npos) throw std::runtime_error("no JSON block from " + command);
  return json::parse(text.substr(at + std::string(cli::kJsonSentinel).size()));
}

IntVector json_vector(const json& j) {
  IntVector v;
  for (const auto& x : j) v.push_back(Int(x.get<long>()));
  return v;
}

std::vector<Int> ints(std::initializer_list<long> xs) { return std::vector<Int>(xs.begin(), xs.end()); }

/// Coefficients in the order D_{e1+e2}, D_{-e1}, D_{e1-e2}, D_a1, D_a2.
std::vector<Int> example_order(const BInvariantDivisor& d, const DivisorBasis& b) {
  std::vector<Int> out;
  for (const auto& r : {iv({1, 1}), iv({-1, 0}), iv({1, -1})})
    for (std::size_t i = 0; i < b.rays.size(); ++i)
      if (b.rays[i] == r) out.push_back(d.ray_coeffs[i]);
  for (const auto& c : d.colour_coeffs) out.push_back(c);
  return out;
}

IndexSet mask_set(std::size_t mask, std::size_t n) {
  IndexSet I;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) I.insert(i);
  return I;
}

// ------------------------------------------------------------------ criteria

void orbit_table_criterion(Checker& check) {
  json j = cli_json("orbits", "sl3_orbits.json");
  check(j["exit_code"] == 0, "orbits exit code");
  const json& orbits = j["orbits"];
  check(orbits.size() == 7, "seven orbits");

  cli::Model model = cli::build_model(cli::parse_input(slurp("sl3_orbits.json")));
  const ColouredFan& fan = model.fan;
  struct Named {
    std::vector<IntVector> rays;
    IndexSet colours;
    std::size_t dim;
  };
  const std::vector<Named> table{
      {{iv({1, 0}), iv({0, 1})}, {0}, 2},  {{iv({0, 1}), iv({-1, -1})}, {}, 3}, {{iv({1, 0}), iv({-1, -1})}, {0}, 2},
      {{iv({0, 1})}, {}, 4},               {{iv({1, 0})}, {0}, 3},               {{iv({-1, -1})}, {}, 4},
      {{}, {}, 5}};
  for (const auto& row : table) {
    ColouredCone want = cc(2, row.rays, row.colours);
    bool found = false;
    for (const auto& o : orbits) {
      std::vector<IntVector> rays;
      for (const auto& r : o["rays"]) rays.push_back(json_vector(r));
      IndexSet colours;
      for (const auto& c : o["colours"]) colours.insert(*model.datum.group.index_of(c.get<std::string>()));
      if (!(cc(2, rays, colours) == want)) continue;
      found = true;
      check(o["dimension"].get<std::size_t>() == row.dim, "dimension of " + o.dump());
    }
    check(found, "orbit of a named cone present");
  }

  // closure order is reverse coloured-face inclusion
  for (const auto& o : orbits) {
    std::size_t i = o["cone"].get<std::size_t>();
    std::set<std::size_t> closure;
    for (const auto& c : o["closure"]) closure.insert(c.get<std::size_t>());
    for (std::size_t k = 0; k < fan.size(); ++k) {
      auto fs = coloured_faces(fan.cones()[k], fan.lattice());
      bool face = std::find(fs.begin(), fs.end(), fan.cones()[i]) != fs.end();
      check(face == (closure.count(k) == 1), "closure order at cone " + std::to_string(i));
    }
  }
}

void class_group_criterion(Checker& check) {
  HorosphericalDatum d = fx::sl3_u3();
  ColouredFan fan = fx::class_group_fan(d);
  DivisorBasis b = divisor_basis(fan);
  ClassGroupResult cl = class_group(fan, d);
  check(cl.group == AbelianGroup{3, {}}, "Cl is Z^3, got " + cl.group.to_string());
  check(example_order(principal_divisor(iv({1, 0}), fan), b) == ints({1, -1, 1, 1, 0}), "relation for e1");
  check(example_order(principal_divisor(iv({0, 1}), fan), b) == ints({1, 0, -1, 0, 1}), "relation for e2");

  json j = cli_json("class-group", "sl3_class_group.json");
  check(j["class_group"]["text"] == "Z^3", "CLI reports Z^3");
  const std::vector<std::string> order{"[1,1]", "[-1,0]", "[1,-1]", "a1", "a2"};
  std::vector<std::vector<long>> rel;
  std::vector<std::string> names = j["divisors"].get<std::vector<std::string>>();
  for (const auto& r : j["relations"]) {
    std::vector<long> row;
    for (const auto& key : order) {
      auto at = std::find(names.begin(), names.end(), key);
      if (at == names.end()) throw std::runtime_error("CLI divisor list lacks " + key);
      row.push_back(r[static_cast<std::size_t>(at - names.begin())].get<long>());
    }
    rel.push_back(row);
  }
  check(rel == std::vector<std::vector<long>>{{1, -1, 1, 1, 0}, {1, 0, -1, 0, 1}}, "CLI relation vectors");
}

void picard_criterion(Checker& check) {
  HorosphericalDatum d = fx::sl3_u3();
  PicardResult p = picard_group(fx::class_group_fan(d), d);
  check(p.picard == AbelianGroup{2, {}}, "Pic is Z^2, got " + p.picard.to_string());
  check(p.plf_mod_lf == AbelianGroup{1, {}}, "PLF/LF is Z, got " + p.plf_mod_lf.to_string());
  check(p.sequence.consistent, "exact sequence consistent");
  json j = cli_json("picard", "sl3_class_group.json");
  check(j["picard"]["text"] == "Z^2" && j["plf_mod_lf"]["text"] == "Z", "CLI Picard report");
}

void positivity_criterion(Checker& check) {
  HorosphericalDatum d = fx::sl3_u3();
  ColouredFan fan = fx::class_group_fan(d);
  for (long a = -1; a <= 2; ++a)
    for (long b = -1; b <= 2; ++b) {
      PositivityVerdict v = positivity_check(fx::class_group_divisor(fan, a, b), fan, d);
      std::string at = " at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      check(v.basepoint_free == (a >= 0 && a <= b), "basepoint free" + at);
      check(v.ample == (a > 0 && a < b), "ample" + at);
    }
}

void smoothness_criterion(Checker& check) {
  json r1 = cli_json("smooth", "sl5_cone1.json");
  json r2 = cli_json("smooth", "sl5_cone2.json");
  json r3 = cli_json("smooth", "sl5_cone3.json");
  check(r1["smooth"] == false && r2["smooth"] == true && r3["smooth"] == false, "verdicts");

  // the maximal cone is listed first
  const json& c1 = r1["cones"][0];
  check(c1["clause"] == "regular", "row 1 fails regularity");
  std::set<IntVector> ms;
  for (const auto& v : c1["multiset"]) ms.insert(json_vector(v));
  check(ms == std::set<IntVector>{iv({1, 0}), iv({0, 1}), iv({-1, 1})}, "row 1 multiset {e1, e2, -e1+e2}");
  check(r2["cones"][0]["regular"] == true, "row 2 regular");
  const json& c3 = r3["cones"][0];
  check(c3["regular"] == true, "row 3 regular");
  check(c3["clause"] == "b", "row 3 fails the two-components clause");
  check(c3["diagnostic"].get<std::string>().find("a3 is connected to two components of I") != std::string::npos,
        "row 3 diagnostic names a3");
}

void anticanonical_criterion(Checker& check) {
  HorosphericalDatum d = fx::sl3_u3();
  check(anticanonical_colour_coefficients(d) == ints({2, 2}), "b_a1 = b_a2 = 2");
  ColouredFan fan = fx::class_group_fan(d);
  check(example_order(anticanonical(fan, d), divisor_basis(fan)) == ints({1, 1, 1, 2, 2}), "-K on the example fan");
  check(example_order(anticanonical(fx::orbits_fan(d), d), divisor_basis(fx::orbits_fan(d))).size() == 2,
        "orbits fan has two non-coloured rays");

  std::size_t pairs = 0;
  for (const auto& g : fx::semisimple_descriptors(4)) {
    RootDatum G = RootDatum::parse(g, 0);
    const std::size_t n = G.simple_root_count();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      auto bs = anticanonical_colour_coefficients(make_datum(G, mask_set(mask, n)));
      for (const auto& b : bs) check(b >= 2, "b >= 2 for " + g);
      ++pairs;
    }
  }
  check(pairs > 300, "sweep covered all types and subsets");
}

void simpliciality_criterion(Checker& check) {
  HorosphericalDatum diag =
      make_datum(RootDatum::parse("A2", 0), {}, IntMatrix::from_columns({iv({1, 1})}, 2));
  ColouredLattice lat = build_coloured_lattice(diag);
  ColouredFan both = ColouredFan::generated_by(lat, {cc(1, {iv({1})}, {0, 1})});
  ColouredFan one = ColouredFan::generated_by(lat, {cc(1, {iv({1})}, {0})});
  for (const auto& r : regularity_report(both, diag))
    if (both.cones()[r.cone_index].cone.dim() == 1) {
      check(!r.simplicial, "F = {a1,a2} not simplicial");
      check(!r.regular, "F = {a1,a2} not regular");
    }
  for (const auto& r : regularity_report(one, diag))
    if (one.cones()[r.cone_index].cone.dim() == 1) check(r.regular, "F = {a1} regular");

  json j = cli_json("smooth", "sl3_double_colour.json");
  check(j["cones"][0]["simplicial"] == false, "CLI reports not simplicial");
}

void colour_point_criterion(Checker& check) {
  auto cols = [](const IntMatrix& M) {
    std::vector<oracle::Vec> out;
    for (const auto& c : M.col_vectors()) out.push_back(fx::to_ov(c));
    return out;
  };
  for (std::size_t n = 2; n <= 6; ++n) {
    HorosphericalDatum d = make_datum(RootDatum({{DynkinType::A, n - 1}}, 0), {});
    ColouredLattice lat = build_coloured_lattice(d);
    auto expected = oracle::sl_colour_points(n, cols(d.M));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      IntVector e(n - 1, Int(0));
      e[i] = 1;
      check(lat.point(i) == e, "u_a" + std::to_string(i + 1) + " = e" + std::to_string(i + 1));
      check(fx::to_ov(lat.point(i)) == expected[i], "oracle agrees for SL" + std::to_string(n));
    }
  }
  IntMatrix two = IntMatrix::from_rows({{2}});
  HorosphericalDatum s2 = make_datum(RootDatum::parse("A1", 0), {}, two);
  check(build_coloured_lattice(s2).point(0) == iv({2}), "SL2, M = 2Z");
  check(oracle::sl_colour_points(2, cols(two))[0] == oracle::Vec{2}, "oracle for SL2, M = 2Z");

  IntMatrix diag = IntMatrix::from_columns({iv({1, 1})}, 2);
  ColouredLattice dl = build_coloured_lattice(make_datum(RootDatum::parse("A2", 0), {}, diag));
  check(dl.point(0) == iv({1}) && dl.point(1) == iv({1}), "diagonal SL3 gives e1, e1");
  auto od = oracle::sl_colour_points(3, cols(diag));
  check(od[0] == oracle::Vec{1} && od[1] == oracle::Vec{1}, "oracle for diagonal SL3");
}

void weight_monoid_criterion(Checker& check) {
  HorosphericalDatum d = fx::sl3_u3();
  auto gens = weight_monoid_generators(cc(2, {iv({1, 0}), iv({0, 1})}, {0, 1}), d);
  check(gens == std::vector<IntVector>{iv({0, 1}), iv({1, 0})}, "generators {e1, e2}");

  std::mt19937 rng(2024);
  int done = 0;
  while (done < 50) {
    std::size_t n = 2 + rng() % 2;
    auto rays = fx::random_rays(rng, n, n + rng() % 2, n == 2 ? 4 : 2);
    Cone s = Cone::from_generators(n, rays);
    if (!s.is_full_dimensional() || !s.is_strongly_convex()) continue;
    std::vector<oracle::Vec> g;
    for (const auto& r : s.rays()) g.push_back(fx::to_ov(r));
    std::set<oracle::Vec> got;
    for (const auto& h : hilbert_basis(s)) got.insert(fx::to_ov(h));
    check(got == oracle::hilbert_basis(g, n), "Hilbert basis of random cone " + std::to_string(done));
    ++done;
  }
}

void property_criterion(Checker& check) {
  std::mt19937 rng(99);

  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 4;
    Cone s = Cone::from_generators(n, fx::random_rays(rng, n, 1 + rng() % (n + 2), 3));
    check(dual_cone(dual_cone(s)) == s, "duality involution");
  }

  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix A(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) A(i, j) = static_cast<long>(rng() % 9) - 4;
    SmithForm s = smith_normal_form(A);
    check(s.U * A * s.V == s.D, "U A V = D");
    check(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "SNF transforms unimodular");
    HermiteForm h = hermite_normal_form(A);
    check(h.U * A == h.H, "U A = H");
    check(abs(determinant(h.U)) == 1, "HNF transform unimodular");
  }

  HorosphericalDatum s2 = make_datum(RootDatum::parse("A1", 0), {});
  ColouredLattice l2 = build_coloured_lattice(s2);
  const std::vector<std::vector<ColouredCone>> five{
      {cc(1, {iv({1})})},
      {cc(1, {iv({1})}, {0})},
      {cc(1, {iv({-1})})},
      {cc(1, {iv({1})}), cc(1, {iv({-1})})},
      {cc(1, {iv({1})}, {0}), cc(1, {iv({-1})})}};
  for (const auto& f : five) check(validate_coloured_fan(ColouredFan::generated_by(l2, f)).ok(), "SL2/U2 fan valid");

  for (int t = 0; t < 100; ++t) {
    auto m = fx::random_valid_fan(rng);
    auto table = orbit_table(m.fan, m.datum);
    for (std::size_t i = 0; i < m.fan.size(); ++i) {
      auto fs = coloured_faces(m.fan.cones()[i], m.fan.lattice());
      for (std::size_t j = 0; j < m.fan.size(); ++j)
        if (j != i && std::find(fs.begin(), fs.end(), m.fan.cones()[j]) != fs.end())
          check(table[j].dimension > table[i].dimension, "strict orbit-dimension monotonicity");
    }
    ColouredFan dec = decolouration(m.fan);
    check(decolouration(dec) == dec, "decolouration idempotent");
    MorphismVerdict v = morphism_check(coloured_lattice_map(m.datum, m.datum), dec, m.fan);
    check(v.compatible && v.proper, "decolouration map compatible and proper");
  }

  HorosphericalDatum d = fx::sl3_u3();
  ColouredFan fan = fx::class_group_fan(d);
  for (int t = 0; t < 40; ++t) {
    DivisorBasis b = divisor_basis(fan);
    std::vector<Int> c;
    for (std::size_t i = 0; i < b.size(); ++i) c.push_back(static_cast<long>(rng() % 7) - 2);
    PositivityVerdict v = positivity_check(divisor_from_coefficients(b, c), fan, d);
    check(!v.ample || v.basepoint_free, "ample implies basepoint free");
    check(!v.basepoint_free || v.cartier, "basepoint free implies Cartier");
  }
  for (int t = 0; t < 40; ++t) {
    HorosphericalDatum r = fx::random_datum(rng, 2, 2);
    ColouredLattice lat = build_coloured_lattice(r);
    std::optional<ColouredFan> f;
    while (!f) f = fx::colour_randomly(rng, lat, fx::random_complete_fan2(rng, 3 + rng() % 3));
    DivisorBasis b = divisor_basis(*f);
    std::vector<Int> c;
    for (std::size_t i = 0; i < b.size(); ++i) c.push_back(static_cast<long>(rng() % 7) - 2);
    PositivityVerdict v = positivity_check(divisor_from_coefficients(b, c), *f, r);
    check(!v.ample || v.basepoint_free, "ample implies basepoint free");
    check(!v.basepoint_free || v.cartier, "basepoint free implies Cartier");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"orbit table of the projective SL3/U3 fan", orbit_table_criterion},
      {"class group Z^3 with its relations", class_group_criterion},
      {"Picard group Z^2 and PLF/LF = Z", picard_criterion},
      {"positivity region on the 16-point grid", positivity_criterion},
      {"SL5 smoothness rows", smoothness_criterion},
      {"anticanonical coefficients", anticanonical_criterion},
      {"simpliciality of the doubly coloured cone", simpliciality_criterion},
      {"colour points against the pairing oracle", colour_point_criterion},
      {"weight monoid and Hilbert bases", weight_monoid_criterion},
      {"property suites", property_criterion},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = check.failures.empty();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!ok) std::cout << " (" << check.failures.size() << " failed checks, first: " << check.failures.front() << ")";
    std::cout << "\n";
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
