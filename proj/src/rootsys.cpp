#include "horofan/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <stdexcept>

namespace horofan {

char type_letter(DynkinType t) { return "ABCDEFG"[static_cast<int>(t)]; }

std::vector<std::vector<int>> cartan_matrix(DynkinType type, std::size_t n) {
  auto bad = [&] {
    throw std::invalid_argument(std::string("no simple type ") + type_letter(type) + std::to_string(n));
  };
  switch (type) {
    case DynkinType::A: if (n < 1) bad(); break;
    case DynkinType::B:
    case DynkinType::C: if (n < 2) bad(); break;
    case DynkinType::D: if (n < 4) bad(); break;
    case DynkinType::E: if (n < 6 || n > 8) bad(); break;
    case DynkinType::F: if (n != 4) bad(); break;
    case DynkinType::G: if (n != 2) bad(); break;
  }
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  auto join = [&](std::size_t i, std::size_t j) { c[i - 1][j - 1] = c[j - 1][i - 1] = -1; };
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  switch (type) {
    case DynkinType::A:
    case DynkinType::B:
    case DynkinType::C:
      for (std::size_t i = 1; i < n; ++i) join(i, i + 1);
      if (type == DynkinType::B) c[n - 1][n - 2] = -2;
      if (type == DynkinType::C) c[n - 2][n - 1] = -2;
      break;
    case DynkinType::D:
      for (std::size_t i = 1; i + 1 < n; ++i) join(i, i + 1);
      join(n - 2, n);
      break;
    case DynkinType::E:
      join(1, 3);
      join(2, 4);
      for (std::size_t i = 3; i < n; ++i) join(i, i + 1);
      break;
    case DynkinType::F:
      join(1, 2);
      join(2, 3);
      join(3, 4);
      c[2][1] = -2;
      break;
    case DynkinType::G:
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

namespace {

std::vector<Root> component_positive_roots(const std::vector<std::vector<int>>& cartan) {
  const std::size_t n = cartan.size();
  std::vector<Root> found;
  std::deque<Root> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    found.push_back(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root g = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      long p = 0;
      for (std::size_t j = 0; j < n; ++j) p += g[j] * cartan[i][j];
      Root s = g;
      s[i] -= p;
      if (s[i] < 0 || s == g) continue;
      if (std::find(found.begin(), found.end(), s) == found.end()) {
        found.push_back(s);
        queue.push_back(s);
      }
    }
  }
  auto height = [](const Root& r) {
    long h = 0;
    for (long x : r) h += x;
    return h;
  };
  std::sort(found.begin(), found.end(), [&](const Root& a, const Root& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a > b;
  });
  return found;
}

// Names a connected Cartan matrix; used for Levi subdata, whose node order is
// inherited from the parent.
DynkinType classify(const std::vector<std::vector<int>>& c) {
  const std::size_t n = c.size();
  std::vector<std::vector<std::size_t>> adj(n);
  bool has_triple = false;
  std::size_t doubles = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0) continue;
      adj[i].push_back(j);
      if (c[i][j] == -3) has_triple = true;
      if (c[i][j] == -2) ++doubles;
    }
  if (has_triple) return DynkinType::G;
  auto branch = std::find_if(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 3; });
  if (branch != adj.end()) {
    std::size_t centre = static_cast<std::size_t>(branch - adj.begin());
    std::vector<std::size_t> arms;
    for (std::size_t start : adj[centre]) {
      std::size_t len = 1, prev = centre, cur = start;
      while (adj[cur].size() == 2) {
        std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[1] == 1) return DynkinType::D;
    return DynkinType::E;
  }
  if (doubles == 0) return DynkinType::A;
  // a path with one double bond: F4 if it sits in the middle
  std::size_t end = 0;
  while (adj[end].size() > 1) ++end;
  std::vector<std::size_t> path{end};
  while (path.size() < n) {
    std::size_t cur = path.back();
    for (std::size_t x : adj[cur])
      if (path.size() < 2 || x != path[path.size() - 2]) {
        path.push_back(x);
        break;
      }
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t a = path[k], b = path[k + 1];
    if (c[a][b] != -2 && c[b][a] != -2) continue;
    if (k != 0 && k + 2 != n) return DynkinType::F;
    // orient so the double bond is at the end (x, y); y long means type C
    std::size_t x = k == 0 ? b : a, y = k == 0 ? a : b;
    if (n == 2) return DynkinType::B;
    return c[x][y] == -2 ? DynkinType::C : DynkinType::B;
  }
  return DynkinType::A;
}

}  // namespace

RootDatum::RootDatum(const std::vector<std::pair<DynkinType, std::size_t>>& types, std::size_t torus_rank)
    : torus_rank_(torus_rank) {
  std::size_t next = 0;
  for (const auto& [type, rank] : types) {
    SimpleComponent comp{type, rank, {}, cartan_matrix(type, rank)};
    for (std::size_t i = 0; i < rank; ++i) comp.nodes.push_back(next++);
    components_.push_back(std::move(comp));
  }
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (std::size_t k = 0; k < components_[c].rank; ++k) {
      std::string l = "a" + std::to_string(k + 1);
      labels_.push_back(components_.size() > 1 ? std::to_string(c + 1) + "." + l : l);
    }
  finish();
}

void RootDatum::finish() {
  const std::size_t s = labels_.size();
  component_of_.assign(s, 0);
  local_index_.assign(s, 0);
  positive_roots_.clear();
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    for (std::size_t k = 0; k < comp.rank; ++k) {
      component_of_[comp.nodes[k]] = c;
      local_index_[comp.nodes[k]] = k;
    }
    for (const auto& r : component_positive_roots(comp.cartan)) {
      Root g(s, 0);
      for (std::size_t k = 0; k < comp.rank; ++k) g[comp.nodes[k]] = r[k];
      positive_roots_.push_back(std::move(g));
    }
  }
}

RootDatum RootDatum::parse(const std::string& descriptor, std::size_t torus_rank) {
  std::vector<std::pair<DynkinType, std::size_t>> types;
  std::size_t pos = 0;
  while (pos < descriptor.size()) {
    std::size_t end = descriptor.find('x', pos);
    if (end == std::string::npos) end = descriptor.size();
    std::string token = descriptor.substr(pos, end - pos);
    if (token.size() < 2 || std::string("ABCDEFG").find(token[0]) == std::string::npos ||
        !std::all_of(token.begin() + 1, token.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
        token.size() > 4)
      throw std::invalid_argument("bad Dynkin descriptor '" + descriptor + "'");
    types.emplace_back(static_cast<DynkinType>(token[0] - 'A'), std::stoul(token.substr(1)));
    pos = end + 1;
    if (end + 1 == descriptor.size()) throw std::invalid_argument("bad Dynkin descriptor '" + descriptor + "'");
  }
  return RootDatum(types, torus_rank);
}

int RootDatum::cartan(std::size_t i, std::size_t j) const {
  if (component_of_[i] != component_of_[j]) return 0;
  return components_[component_of_[i]].cartan[local_index_[i]][local_index_[j]];
}

std::optional<std::size_t> RootDatum::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::string RootDatum::descriptor() const {
  std::string s;
  for (const auto& c : components_) {
    if (!s.empty()) s += "x";
    s += type_letter(c.type) + std::to_string(c.rank);
  }
  return s;
}

long RootDatum::pairing(const Root& gamma, std::size_t i) const {
  long p = 0;
  for (std::size_t j = 0; j < gamma.size(); ++j)
    if (gamma[j] != 0) p += gamma[j] * cartan(i, j);
  return p;
}

std::size_t RootDatum::flag_dimension(const IndexSet& I) const {
  std::size_t count = 0;
  for (const auto& r : positive_roots_)
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0 && !I.count(j)) {
        ++count;
        break;
      }
  return count;
}

std::vector<IndexSet> diagram_components(const RootDatum& d, const IndexSet& I) {
  std::vector<IndexSet> out;
  IndexSet seen;
  for (std::size_t start : I) {
    if (seen.count(start)) continue;
    IndexSet comp{start};
    std::deque<std::size_t> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : I)
        if (!seen.count(y) && d.adjacent(x, y)) {
          seen.insert(y);
          comp.insert(y);
          queue.push_back(y);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

RootDatum RootDatum::levi(const IndexSet& J, std::size_t torus_rank, std::vector<std::size_t>* levi_index) const {
  RootDatum out;
  out.torus_rank_ = torus_rank;
  std::vector<std::size_t> order;
  for (const auto& comp : diagram_components(*this, J)) {
    std::vector<std::size_t> nodes(comp.begin(), comp.end());
    SimpleComponent sc{DynkinType::A, nodes.size(), {}, {}};
    sc.cartan.assign(nodes.size(), std::vector<int>(nodes.size()));
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = 0; b < nodes.size(); ++b) sc.cartan[a][b] = cartan(nodes[a], nodes[b]);
    sc.type = classify(sc.cartan);
    for (std::size_t x : nodes) {
      sc.nodes.push_back(order.size());
      order.push_back(x);
      out.labels_.push_back(labels_[x]);
    }
    out.components_.push_back(std::move(sc));
  }
  out.finish();
  if (levi_index) *levi_index = order;
  return out;
}

RootDatum product(const RootDatum& a, const RootDatum& b) {
  std::vector<std::pair<DynkinType, std::size_t>> types;
  for (const auto& c : a.components_) types.emplace_back(c.type, c.rank);
  for (const auto& c : b.components_) types.emplace_back(c.type, c.rank);
  RootDatum out(types, a.torus_rank_ + b.torus_rank_);
  // keep any non-standard (Levi) Cartan blocks
  for (std::size_t c = 0; c < a.components_.size(); ++c) out.components_[c].cartan = a.components_[c].cartan;
  for (std::size_t c = 0; c < b.components_.size(); ++c)
    out.components_[a.components_.size() + c].cartan = b.components_[c].cartan;
  out.finish();
  return out;
}

bool operator==(const RootDatum& a, const RootDatum& b) {
  if (a.torus_rank_ != b.torus_rank_ || a.labels_ != b.labels_ || a.components_.size() != b.components_.size())
    return false;
  for (std::size_t c = 0; c < a.components_.size(); ++c) {
    const auto &x = a.components_[c], &y = b.components_[c];
    if (x.type != y.type || x.nodes != y.nodes || x.cartan != y.cartan) return false;
  }
  return true;
}

SmoothnessVerdict colour_smoothness_check(const RootDatum& d, const IndexSet& I, const IndexSet& F) {
  const auto comps = diagram_components(d, I);
  auto touching = [&](std::size_t alpha) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (std::any_of(comps[c].begin(), comps[c].end(), [&](std::size_t x) { return d.adjacent(alpha, x); }))
        out.push_back(c);
    return out;
  };
  auto fail = [](const char* clause, std::string why) { return SmoothnessVerdict{false, clause, std::move(why)}; };

  for (auto a = F.begin(); a != F.end(); ++a)
    for (auto b = std::next(a); b != F.end(); ++b) {
      if (d.adjacent(*a, *b)) return fail("a", d.label(*a) + " and " + d.label(*b) + " are adjacent");
      auto ta = touching(*a), tb = touching(*b);
      for (std::size_t c : ta)
        if (std::find(tb.begin(), tb.end(), c) != tb.end())
          return fail("a", d.label(*a) + " and " + d.label(*b) + " are connected to the same component of I");
    }

  for (std::size_t alpha : F) {
    auto t = touching(alpha);
    if (t.size() >= 2) return fail("b", d.label(alpha) + " is connected to two components of I");
    if (t.empty()) continue;

    // walk the chain alpha = b_1, b_2, ..., b_l through the component
    const IndexSet& comp = comps[t.front()];
    IndexSet nodes = comp;
    nodes.insert(alpha);
    auto neighbours = [&](std::size_t x) {
      std::vector<std::size_t> out;
      for (std::size_t y : nodes)
        if (d.adjacent(x, y)) out.push_back(y);
      return out;
    };
    std::string bad = d.label(alpha) + " with its component of I is not a chain of type A or C starting at " +
                      d.label(alpha);
    if (neighbours(alpha).size() != 1) return fail("c", bad);
    std::vector<std::size_t> chain{alpha};
    while (chain.size() < nodes.size()) {
      auto nb = neighbours(chain.back());
      if (nb.size() > 2) return fail("c", bad);
      std::size_t next = nodes.size();
      for (std::size_t y : nb)
        if (chain.size() < 2 || y != chain[chain.size() - 2]) next = y;
      if (next == nodes.size()) return fail("c", bad);
      chain.push_back(next);
    }
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      int up = d.cartan(chain[k], chain[k + 1]), down = d.cartan(chain[k + 1], chain[k]);
      if (up == -1 && down == -1) continue;
      // only the last bond may be double, pointing to a long end node
      bool last = k + 2 == chain.size();
      if (!(last && up == -2 && down == -1)) return fail("c", bad);
    }
  }
  return {};
}

}  // namespace horofan
