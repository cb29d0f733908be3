#include "horofan/document.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "horofan/dictionary.hpp"

namespace horofan::cli {

using ojson = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- parsing

const char* type_name(const nlohmann::json& j) { return j.type_name(); }

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

void reject_unknown(const nlohmann::json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; });
    if (!ok) fail(path.empty() ? it.key() : path + "." + it.key(), "unknown key");
  }
}

Int parse_int(const nlohmann::json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  fail(path, std::string("expected an integer, got ") + type_name(j));
}

IntVector parse_vector(const nlohmann::json& j, const std::string& path, std::optional<std::size_t> len) {
  if (!j.is_array()) fail(path, std::string("expected an array of integers, got ") + type_name(j));
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_int(j[i], path + "[" + std::to_string(i) + "]"));
  if (len && v.size() != *len)
    fail(path, "expected " + std::to_string(*len) + " entries, got " + std::to_string(v.size()));
  return v;
}

std::string parse_string(const nlohmann::json& j, const std::string& path) {
  if (!j.is_string()) fail(path, std::string("expected a string, got ") + type_name(j));
  return j.get<std::string>();
}

const nlohmann::json& require_array(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) fail(path, std::string("expected an array, got ") + type_name(j));
  return j;
}

RootDatum parse_group(const std::string& descriptor, std::size_t torus_rank) {
  try {
    return RootDatum::parse(descriptor, torus_rank);
  } catch (const std::invalid_argument& e) {
    fail("group", e.what());
  }
}

std::size_t root_index(const RootDatum& g, const std::string& label, const std::string& path) {
  auto i = g.index_of(label);
  if (!i) fail(path, "no simple root '" + label + "' in " + (g.descriptor().empty() ? "the trivial group" : g.descriptor()));
  return *i;
}

std::size_t colour_index(const RootDatum& g, const IndexSet& I, const std::string& label, const std::string& path) {
  std::size_t i = root_index(g, label, path);
  if (I.count(i)) fail(path, "'" + label + "' lies in I, so it is not a colour");
  return i;
}

std::string vector_key(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

IndexSet parse_I(const InputDocument& doc, const RootDatum& g) {
  IndexSet I;
  for (std::size_t k = 0; k < doc.I.size(); ++k) I.insert(root_index(g, doc.I[k], "I[" + std::to_string(k) + "]"));
  return I;
}

std::size_t lattice_rank(const InputDocument& doc, const RootDatum& g, const IndexSet& I) {
  if (doc.M) return doc.M->size();
  return g.simple_root_count() - I.size() + g.torus_rank();
}

// ---------------------------------------------------------------- output helpers

ojson int_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ojson vector_json(const IntVector& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

ojson vectors_json(const std::vector<IntVector>& vs) {
  ojson a = ojson::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

ojson group_json(const AbelianGroup& g) {
  ojson t = ojson::array();
  for (const auto& x : g.torsion) t.push_back(int_json(x));
  return ojson{{"free_rank", g.free_rank}, {"torsion", t}, {"text", g.to_string()}};
}

std::vector<std::string> labels(const IndexSet& s, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (std::size_t i : s) out.push_back(names.at(i));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string set_text(const IndexSet& s, const std::vector<std::string>& names) {
  return "{" + join(labels(s, names), ",") + "}";
}

std::string rays_text(const Cone& c) {
  std::vector<std::string> parts;
  for (const auto& r : c.rays()) parts.push_back(vector_key(r));
  for (const auto& l : c.lineality()) parts.push_back("+-" + vector_key(l));
  return parts.empty() ? "0" : join(parts, " ");
}

ojson cone_json(const ColouredCone& c, const std::vector<std::string>& names) {
  ojson o{{"rays", vectors_json(c.cone.rays())}, {"colours", labels(c.colours, names)}};
  if (!c.cone.lineality().empty()) o["lineality"] = vectors_json(c.cone.lineality());
  return o;
}

ojson fan_json(const ColouredFan& fan, const std::vector<std::string>& names) {
  ojson a = ojson::array();
  for (std::size_t i = 0; i < fan.size(); ++i) {
    ojson o{{"index", i}};
    o.update(cone_json(fan.cones()[i], names));
    a.push_back(o);
  }
  return a;
}

ojson datum_json(const HorosphericalDatum& d, const std::vector<std::string>& names) {
  return ojson{{"group", d.group.descriptor()},
               {"torus_rank", d.group.torus_rank()},
               {"I", labels(d.I, names)},
               {"M", vectors_json(d.M.col_vectors())}};
}

std::string matrix_text(const IntMatrix& M) {
  std::vector<std::string> cols;
  for (const auto& c : M.col_vectors()) cols.push_back(vector_key(c));
  return "(" + join(cols, " ") + ")";
}

/// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const {
    std::vector<std::size_t> w;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (w.size() <= i) w.push_back(0);
        w[i] = std::max(w[i], r[i].size());
      }
    std::string out;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

Table fan_table(const ColouredFan& fan, const std::vector<std::string>& names) {
  Table t({"cone", "dim", "rays", "colours"});
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const auto& c = fan.cones()[i];
    t.add({std::to_string(i), std::to_string(c.cone.dim()), rays_text(c.cone), set_text(c.colours, names)});
  }
  return t;
}

std::vector<std::string> divisor_names(const DivisorBasis& b, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& r : b.rays) out.push_back(vector_key(r));
  for (std::size_t a : b.colours) out.push_back(names.at(a));
  return out;
}

ojson divisor_json(const BInvariantDivisor& D, const std::vector<std::string>& dn) {
  ojson o = ojson::object();
  auto cs = D.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) o[dn[i]] = int_json(cs[i]);
  return o;
}

std::string divisor_text(const BInvariantDivisor& D, const std::vector<std::string>& dn) {
  auto cs = D.coefficients();
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i] != 0) parts.push_back(cs[i].get_str() + "*D" + dn[i]);
  return parts.empty() ? "0" : join(parts, " + ");
}

struct Result {
  int code = 0;
  std::string human;
  ojson json;
};

Result usage(const std::string& msg) { return Result{2, "error: " + msg + "\n", ojson{{"error", msg}}}; }

Result domain_error(const std::string& msg) { return Result{1, "error: " + msg + "\n", ojson{{"error", msg}}}; }

Result invalid_fan(const ValidationReport& rep) {
  std::string h = "fan is not valid\n";
  for (const auto& v : rep.violations) h += "  " + v + "\n";
  return Result{1, h, ojson{{"error", "invalid fan"}, {"violations", rep.violations}}};
}

std::optional<std::size_t> cone_option(const Options& opt, const Model& m, Result& err) {
  if (!opt.cone) {
    err = usage("--cone INDEX is required");
    return std::nullopt;
  }
  if (*opt.cone >= m.fan.size()) {
    err = usage("cone index " + std::to_string(*opt.cone) + " is out of range (fan has " +
                std::to_string(m.fan.size()) + " cones)");
    return std::nullopt;
  }
  return opt.cone;
}

// ---------------------------------------------------------------- commands

Result cmd_validate(const Model& m, const ValidationReport& rep) {
  if (!rep.ok()) return invalid_fan(rep);
  Result r;
  r.human = "fan is valid\n" + fan_table(m.fan, m.names).str();
  r.json = ojson{{"valid", true}, {"datum", datum_json(m.datum, m.names)}, {"fan", fan_json(m.fan, m.names)}};
  return r;
}

Result cmd_orbits(const Model& m) {
  auto table = orbit_table(m.fan, m.datum);
  Table t({"cone", "rays", "colours", "orbit dim", "I'", "M'", "closure"});
  ojson rows = ojson::array();
  for (const auto& o : table) {
    const auto& c = m.fan.cones()[o.cone_index];
    std::vector<std::string> cl;
    for (std::size_t j : o.closure) cl.push_back(std::to_string(j));
    t.add({std::to_string(o.cone_index), rays_text(c.cone), set_text(c.colours, m.names), std::to_string(o.dimension),
           set_text(o.datum.I, m.names), matrix_text(o.datum.M), "{" + join(cl, ",") + "}"});
    ojson row{{"cone", o.cone_index}, {"dimension", o.dimension}, {"I", labels(o.datum.I, m.names)},
              {"M", vectors_json(o.datum.M.col_vectors())}, {"closure", o.closure}};
    row.update(cone_json(c, m.names));
    rows.push_back(row);
  }
  return Result{0, std::to_string(table.size()) + " orbits\n" + t.str(), ojson{{"orbits", rows}}};
}

Result cmd_classify(const Model& m) {
  PropertyReport p = classify_variety(m.fan, m.datum);
  std::vector<std::pair<std::string, bool>> props{
      {"simple", p.is_simple},         {"affine", p.is_affine},       {"complete", p.is_complete},
      {"projective", p.is_projective}, {"toroidal", p.is_toroidal},   {"simplicial", p.is_simplicial},
      {"q_factorial", p.is_q_factorial}, {"factorial", p.is_factorial}, {"smooth", p.is_smooth}};
  Table t({"property", "holds"});
  ojson j = ojson::object();
  for (const auto& [k, v] : props) {
    t.add({k, yes(v)});
    j[k] = v;
  }
  return Result{0, t.str(), j};
}

Result cmd_class_group(const Model& m) {
  ClassGroupResult cg = class_group(m.fan, m.datum);
  DivisorBasis b = divisor_basis(m.fan);
  auto dn = divisor_names(b, m.names);
  std::string h = "Cl = " + cg.group.to_string() + "\n";
  ojson gens = ojson::array();
  for (const auto& g : cg.generators) {
    h += "  generator " + divisor_text(g, dn) + "\n";
    gens.push_back(divisor_json(g, dn));
  }
  ojson rel = ojson::array();
  Table t({"relation", "divisor"});
  for (std::size_t i = 0; i < m.datum.rank(); ++i) {
    IntVector e(m.datum.rank(), Int(0));
    e[i] = 1;
    BInvariantDivisor D = principal_divisor(e, m.fan);
    t.add({"div(e" + std::to_string(i + 1) + "*)", divisor_text(D, dn)});
    rel.push_back(vector_json(D.coefficients()));
  }
  h += t.str();
  h += std::string("principal divisor map injective: ") + yes(cg.left_exact) + "\n";
  return Result{0, h,
                ojson{{"class_group", group_json(cg.group)},
                      {"divisors", dn},
                      {"generators", gens},
                      {"relations", rel},
                      {"left_exact", cg.left_exact}}};
}

Result cmd_picard(const Model& m) {
  PicardResult p = picard_group(m.fan, m.datum);
  const auto& s = p.sequence;
  Table t({"group", "value"});
  t.add({"Pic", p.picard.to_string()});
  t.add({"PLF/LF", p.plf_mod_lf.to_string()});
  std::string h = t.str() + "exact sequence ranks: span-perp image " + std::to_string(s.span_perp_image_rank) +
                  ", colours " + std::to_string(s.colour_rank) + ", PLF/LF " + std::to_string(s.plf_lf_rank) +
                  ", Pic " + std::to_string(s.pic_rank) + " (" + (s.consistent ? "consistent" : "inconsistent") +
                  ")\n";
  ojson seq{{"span_perp_image_rank", s.span_perp_image_rank},
            {"colour_rank", s.colour_rank},
            {"plf_lf_rank", s.plf_lf_rank},
            {"pic_rank", s.pic_rank},
            {"consistent", s.consistent}};
  return Result{0, h,
                ojson{{"picard", group_json(p.picard)}, {"plf_mod_lf", group_json(p.plf_mod_lf)}, {"sequence", seq}}};
}

Result cmd_cartier(const Model& m, const BInvariantDivisor& D, const std::string& name) {
  auto data = cartier_data(D, m.fan);
  if (!data)
    return Result{0, name + " is not Cartier\n", ojson{{"divisor", name}, {"cartier", false}}};
  Table t({"cone", "rays", "m"});
  ojson rows = ojson::array();
  for (std::size_t k = 0; k < data->cones.size(); ++k) {
    std::size_t i = data->cones[k];
    t.add({std::to_string(i), rays_text(m.fan.cones()[i].cone), vector_key(data->m[k])});
    rows.push_back(ojson{{"cone", i}, {"m", vector_json(data->m[k])}});
  }
  return Result{0, name + " is Cartier\n" + t.str(), ojson{{"divisor", name}, {"cartier", true}, {"data", rows}}};
}

Result cmd_positivity(const Model& m, const BInvariantDivisor& D, const std::string& name) {
  PositivityVerdict v = positivity_check(D, m.fan, m.datum);
  Table t({"property", "holds"});
  t.add({"cartier", yes(v.cartier)});
  t.add({"basepoint_free", yes(v.basepoint_free)});
  t.add({"ample", yes(v.ample)});
  return Result{0, name + "\n" + t.str(),
                ojson{{"divisor", name}, {"cartier", v.cartier}, {"basepoint_free", v.basepoint_free}, {"ample", v.ample}}};
}

Result cmd_anticanonical(const Model& m) {
  auto b = anticanonical_colour_coefficients(m.datum);
  BInvariantDivisor K = anticanonical(m.fan, m.datum);
  auto dn = divisor_names(divisor_basis(m.fan), m.names);
  Table t({"colour", "b"});
  ojson bj = ojson::object();
  const auto& cols = m.fan.lattice().colours();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    t.add({m.names[cols[k].root], b[k].get_str()});
    bj[m.names[cols[k].root]] = int_json(b[k]);
  }
  return Result{0, "-K = " + divisor_text(K, dn) + "\n" + t.str(),
                ojson{{"divisor", divisor_json(K, dn)}, {"b", bj}}};
}

Result cmd_smooth(const Model& m) {
  auto rep = regularity_report(m.fan, m.datum);
  Table t({"cone", "rays", "colours", "simplicial", "regular", "smooth", "reason"});
  ojson rows = ojson::array();
  bool all = true;
  for (const auto& c : rep) {
    const auto& cc = m.fan.cones()[c.cone_index];
    all = all && c.smooth;
    t.add({std::to_string(c.cone_index), rays_text(cc.cone), set_text(cc.colours, m.names), yes(c.simplicial),
           yes(c.regular), yes(c.smooth), c.diagnostic});
    rows.push_back(ojson{{"cone", c.cone_index},
                         {"multiset", vectors_json(c.multiset)},
                         {"simplicial", c.simplicial},
                         {"regular", c.regular},
                         {"smooth", c.smooth},
                         {"clause", c.failed_clause},
                         {"diagnostic", c.diagnostic}});
  }
  return Result{0, std::string(all ? "smooth" : "not smooth") + "\n" + t.str(),
                ojson{{"smooth", all}, {"cones", rows}}};
}

Result cmd_decolour(const Model& m) {
  ColouredFan dec = decolouration(m.fan);
  ColouredFan open = open_toroidal_subfan(m.fan);
  std::string h = "decolouration\n" + fan_table(dec, m.names).str() + "open toroidal subfan\n" +
                  fan_table(open, m.names).str();
  return Result{0, h, ojson{{"decolouration", fan_json(dec, m.names)}, {"toroidal_subfan", fan_json(open, m.names)}}};
}

Result cmd_orbit_closure(const Model& m, std::size_t index) {
  OrbitClosure oc = orbit_closure(m.fan, index, m.datum);
  std::string h = "closure of the orbit of cone " + std::to_string(index) + ": I = " + set_text(oc.datum.I, m.names) +
                  ", M = " + matrix_text(oc.datum.M) + ", rank " + std::to_string(oc.datum.rank()) + "\n";
  Table ct({"colour", "point"});
  ojson cj = ojson::array();
  for (const auto& c : oc.fan.lattice().colours()) {
    ct.add({m.names[c.root], vector_key(c.point)});
    cj.push_back(ojson{{"colour", m.names[c.root]}, {"point", vector_json(c.point)}});
  }
  h += ct.str() + fan_table(oc.fan, m.names).str();
  return Result{0, h,
                ojson{{"cone", index},
                      {"datum", datum_json(oc.datum, m.names)},
                      {"rank", oc.datum.rank()},
                      {"colours", cj},
                      {"fan", fan_json(oc.fan, m.names)}}};
}

Result cmd_morphism(const Model& src, const Model& tgt) {
  ColouredLatticeMap map = coloured_lattice_map(src.datum, tgt.datum);
  MorphismVerdict v = morphism_check(map, src.fan, tgt.fan);
  Table t({"property", "holds"});
  t.add({"compatible", yes(v.compatible)});
  t.add({"proper", yes(v.proper)});
  std::string h = "lattice map " + matrix_text(map.phi) + ", dominant colours " + set_text(map.dominant, src.names) +
                  "\n" + t.str();
  if (!v.diagnostic.empty()) h += v.diagnostic + "\n";
  return Result{0, h,
                ojson{{"phi", vectors_json(map.phi.row_vectors())},
                      {"dominant_colours", labels(map.dominant, src.names)},
                      {"compatible", v.compatible},
                      {"proper", v.proper},
                      {"diagnostic", v.diagnostic}}};
}

Result cmd_weight_monoid(const Model& m, std::size_t index) {
  auto gens = weight_monoid_generators(m.fan.cones()[index], m.datum);
  std::vector<std::string> parts;
  for (const auto& g : gens) parts.push_back(vector_key(g));
  return Result{0,
                "weight monoid of cone " + std::to_string(index) + " generated by " + join(parts, " ") + "\n",
                ojson{{"cone", index}, {"generators", vectors_json(gens)}}};
}

}  // namespace

// ---------------------------------------------------------------- public API

InputDocument parse_input(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(),
                                                               text.begin() + static_cast<std::ptrdiff_t>(
                                                                                  std::min(e.byte, text.size())),
                                                               '\n'));
    throw ParseError("line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
  if (!j.is_object()) fail("document", "expected a JSON object");
  reject_unknown(j, "", {"group", "torus_rank", "I", "M", "fan", "faces", "divisors"});

  InputDocument doc;
  if (!j.contains("group")) fail("group", "missing");
  doc.group = parse_string(j["group"], "group");
  if (j.contains("torus_rank")) {
    Int t = parse_int(j["torus_rank"], "torus_rank");
    if (t < 0 || t > 64) fail("torus_rank", "must be between 0 and 64");
    doc.torus_rank = t.get_ui();
  }
  RootDatum g = parse_group(doc.group, doc.torus_rank);

  if (j.contains("I")) {
    const auto& a = require_array(j["I"], "I");
    for (std::size_t k = 0; k < a.size(); ++k) doc.I.push_back(parse_string(a[k], "I[" + std::to_string(k) + "]"));
  }
  IndexSet I = parse_I(doc, g);
  std::vector<std::string> canon_I;
  for (std::size_t i : I) canon_I.push_back(g.label(i));
  doc.I = canon_I;

  if (j.contains("M")) {
    const auto& a = require_array(j["M"], "M");
    std::vector<IntVector> cols;
    for (std::size_t k = 0; k < a.size(); ++k)
      cols.push_back(parse_vector(a[k], "M[" + std::to_string(k) + "]", g.weight_rank()));
    doc.M = cols;
  }
  const std::size_t r = lattice_rank(doc, g, I);

  if (j.contains("fan")) {
    const auto& a = require_array(j["fan"], "fan");
    for (std::size_t k = 0; k < a.size(); ++k) {
      const std::string p = "fan[" + std::to_string(k) + "]";
      if (!a[k].is_object()) fail(p, std::string("expected an object, got ") + type_name(a[k]));
      reject_unknown(a[k], p, {"generators", "colours"});
      ConeSpec spec;
      if (a[k].contains("generators")) {
        const auto& gens = require_array(a[k]["generators"], p + ".generators");
        for (std::size_t t = 0; t < gens.size(); ++t)
          spec.generators.push_back(parse_vector(gens[t], p + ".generators[" + std::to_string(t) + "]", r));
      }
      if (a[k].contains("colours")) {
        const auto& cols = require_array(a[k]["colours"], p + ".colours");
        IndexSet F;
        for (std::size_t t = 0; t < cols.size(); ++t) {
          const std::string cp = p + ".colours[" + std::to_string(t) + "]";
          F.insert(colour_index(g, I, parse_string(cols[t], cp), cp));
        }
        for (std::size_t c : F) spec.colours.push_back(g.label(c));
      }
      doc.fan.push_back(std::move(spec));
    }
  }

  if (j.contains("faces")) {
    doc.faces = parse_string(j["faces"], "faces");
    if (doc.faces != "generate" && doc.faces != "explicit")
      fail("faces", "expected \"generate\" or \"explicit\", got \"" + doc.faces + "\"");
  }

  if (j.contains("divisors")) {
    const auto& ds = j["divisors"];
    if (!ds.is_object()) fail("divisors", std::string("expected an object, got ") + type_name(ds));
    for (auto it = ds.begin(); it != ds.end(); ++it) {
      const std::string p = "divisors." + it.key();
      if (!it.value().is_object()) fail(p, std::string("expected an object, got ") + type_name(it.value()));
      auto& coeffs = doc.divisors[it.key()];
      for (auto c = it.value().begin(); c != it.value().end(); ++c) {
        const std::string cp = p + "." + c.key();
        std::string key = c.key();
        if (!key.empty() && key.front() == '[') {
          nlohmann::json v;
          try {
            v = nlohmann::json::parse(key);
          } catch (const nlohmann::json::parse_error&) {
            fail(cp, "ray key is not a JSON integer array");
          }
          key = vector_key(parse_vector(v, cp, r));
        } else {
          key = g.label(colour_index(g, I, key, cp));
        }
        if (coeffs.count(key)) fail(cp, "duplicate prime divisor");
        coeffs[key] = parse_int(c.value(), cp);
      }
    }
  }
  return doc;
}

std::string serialize(const InputDocument& doc) {
  ojson j;
  j["group"] = doc.group;
  j["torus_rank"] = doc.torus_rank;
  j["I"] = doc.I;
  if (doc.M) j["M"] = vectors_json(*doc.M);
  ojson fan = ojson::array();
  for (const auto& c : doc.fan) fan.push_back(ojson{{"generators", vectors_json(c.generators)}, {"colours", c.colours}});
  j["fan"] = fan;
  j["faces"] = doc.faces;
  if (!doc.divisors.empty()) {
    ojson ds = ojson::object();
    for (const auto& [name, coeffs] : doc.divisors) {
      ojson d = ojson::object();
      for (const auto& [k, v] : coeffs) d[k] = int_json(v);
      ds[name] = d;
    }
    j["divisors"] = ds;
  }
  return j.dump(2) + "\n";
}

Model build_model(const InputDocument& doc) {
  RootDatum g = parse_group(doc.group, doc.torus_rank);
  IndexSet I = parse_I(doc, g);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.simple_root_count(); ++i) names.push_back(g.label(i));
  const std::size_t r = lattice_rank(doc, g, I);

  HorosphericalDatum d = doc.M ? make_datum(g, I, IntMatrix::from_columns(*doc.M, g.weight_rank())) : make_datum(g, I);
  ColouredLattice lattice = build_coloured_lattice(d);

  std::vector<ColouredCone> cones;
  for (std::size_t k = 0; k < doc.fan.size(); ++k) {
    IndexSet F;
    for (std::size_t t = 0; t < doc.fan[k].colours.size(); ++t)
      F.insert(colour_index(g, I, doc.fan[k].colours[t],
                            "fan[" + std::to_string(k) + "].colours[" + std::to_string(t) + "]"));
    cones.push_back(ColouredCone{Cone::from_generators(r, doc.fan[k].generators), F});
  }
  ColouredFan fan;
  if (doc.faces == "explicit") {
    cones.push_back(ColouredCone{Cone::trivial(r), {}});
    std::sort(cones.begin(), cones.end(), canonical_less);
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    fan = ColouredFan(lattice, std::move(cones));
  } else {
    fan = ColouredFan::generated_by(lattice, cones);
  }
  return Model{std::move(d), std::move(fan), std::move(names)};
}

BInvariantDivisor divisor_from_document(const InputDocument& doc, const Model& model, const std::string& name) {
  auto it = doc.divisors.find(name);
  if (it == doc.divisors.end()) throw ParseError("divisors: no divisor named '" + name + "'");
  DivisorBasis b = divisor_basis(model.fan);
  auto dn = divisor_names(b, model.names);
  std::vector<Int> coeffs(b.size(), Int(0));
  for (const auto& [key, v] : it->second) {
    std::string k = key;
    if (k.front() == '[') {
      // accept any positive multiple of a ray generator
      auto parsed = nlohmann::json::parse(k);
      IntVector vec;
      for (const auto& x : parsed) vec.push_back(Int(x.get<std::int64_t>()));
      k = vector_key(primitive(vec));
    }
    auto pos = std::find(dn.begin(), dn.end(), k);
    if (pos == dn.end())
      throw Error("divisors." + name + "." + key + ": not a prime B-invariant divisor of this variety");
    coeffs[static_cast<std::size_t>(pos - dn.begin())] = v;
  }
  return divisor_from_coefficients(b, coeffs);
}

std::string Report::text() const { return human + kJsonSentinel + "\n" + json + "\n"; }

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate",      "orbits", "classify", "class-group",   "picard",
                                              "cartier",       "positivity", "anticanonical", "smooth",
                                              "decolour",      "orbit-closure", "morphism", "weight-monoid"};
  return names;
}

Report execute(const std::string& command, const InputDocument& doc, const Options& options) {
  auto finish = [&](const Result& r) {
    ojson j{{"command", command}, {"exit_code", r.code}};
    j.update(r.json);
    return Report{r.code, r.human, j.dump(2)};
  };
  const auto& cmds = command_names();
  if (std::find(cmds.begin(), cmds.end(), command) == cmds.end())
    return finish(usage("unknown command '" + command + "'"));

  try {
    Model m = build_model(doc);
    ValidationReport rep = validate_coloured_fan(m.fan, &m.names);
    if (command == "validate") return finish(cmd_validate(m, rep));
    if (!rep.ok()) return finish(invalid_fan(rep));

    if (command == "orbits") return finish(cmd_orbits(m));
    if (command == "classify") return finish(cmd_classify(m));
    if (command == "class-group") return finish(cmd_class_group(m));
    if (command == "picard") return finish(cmd_picard(m));
    if (command == "anticanonical") return finish(cmd_anticanonical(m));
    if (command == "smooth") return finish(cmd_smooth(m));
    if (command == "decolour") return finish(cmd_decolour(m));
    if (command == "cartier" || command == "positivity") {
      if (options.divisor.empty()) return finish(usage("--divisor NAME is required"));
      BInvariantDivisor D = divisor_from_document(doc, m, options.divisor);
      return finish(command == "cartier" ? cmd_cartier(m, D, options.divisor)
                                         : cmd_positivity(m, D, options.divisor));
    }
    if (command == "orbit-closure" || command == "weight-monoid") {
      Result err;
      auto idx = cone_option(options, m, err);
      if (!idx) return finish(err);
      return finish(command == "orbit-closure" ? cmd_orbit_closure(m, *idx) : cmd_weight_monoid(m, *idx));
    }
    // morphism
    if (!options.target) return finish(usage("--target FILE is required"));
    Model t = build_model(*options.target);
    ValidationReport trep = validate_coloured_fan(t.fan, &t.names);
    if (!trep.ok()) {
      Result r = invalid_fan(trep);
      r.human = "target " + r.human;
      return finish(r);
    }
    return finish(cmd_morphism(m, t));
  } catch (const ParseError& e) {
    return finish(usage(e.what()));
  } catch (const Error& e) {
    return finish(domain_error(e.what()));
  }
}

Report run(const std::string& command, const std::string& text, const Options& options) {
  try {
    return execute(command, parse_input(text), options);
  } catch (const ParseError& e) {
    ojson j{{"command", command}, {"exit_code", 2}, {"error", e.what()}};
    return Report{2, std::string("error: ") + e.what() + "\n", j.dump(2)};
  }
}

}  // namespace horofan::cli
