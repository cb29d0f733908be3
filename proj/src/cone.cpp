#include <algorithm>
#include <set>
#include <stdexcept>

#include "horofan/polyhedra.hpp"

namespace horofan {

namespace {

struct DDRay {
  IntVector v;
  std::vector<bool> zero;  // tight inequalities among those processed so far
};

bool covers(const std::vector<bool>& super, const std::vector<bool>& sub) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (sub[i] && !super[i]) return false;
  return true;
}

std::vector<IntVector> canonical_lattice(std::size_t n, const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return {};
  return saturate(IntMatrix::from_columns(vectors, n)).col_vectors();
}

std::vector<IntVector> sorted_unique(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

VRepresentation double_description(std::size_t n, const std::vector<IntVector>& inequalities,
                                   const std::vector<IntVector>& equations) {
  std::vector<IntVector> lin;
  if (equations.empty()) {
    lin = IntMatrix::identity(n).row_vectors();
  } else {
    for (const auto& e : equations)
      if (e.size() != n) throw std::invalid_argument("double_description: dimension mismatch");
    lin = integer_kernel(IntMatrix::from_rows(equations, n));
  }
  std::vector<DDRay> rays;

  for (std::size_t k = 0; k < inequalities.size(); ++k) {
    const IntVector& a = inequalities[k];
    if (a.size() != n) throw std::invalid_argument("double_description: dimension mismatch");

    auto hit = std::find_if(lin.begin(), lin.end(), [&](const IntVector& l) { return dot(a, l) != 0; });
    if (hit != lin.end()) {
      // a cuts the lineality space: one lineality direction becomes a ray
      IntVector l = *hit;
      lin.erase(hit);
      Int s = dot(a, l);
      if (s < 0) {
        l = negate(l);
        s = -s;
      }
      for (auto& other : lin) {
        Int t = dot(a, other);
        if (t != 0) other = primitive(sub(scale(other, s), scale(l, t)));
      }
      for (auto& r : rays) {
        Int t = dot(a, r.v);
        if (t != 0) r.v = primitive(sub(scale(r.v, s), scale(l, t)));
        r.zero.push_back(true);
      }
      DDRay fresh{l, std::vector<bool>(k, true)};
      fresh.zero.push_back(false);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Int> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) rays[i].zero.push_back(val[i] == 0);
      continue;
    }

    std::vector<DDRay> next;
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        std::vector<bool> common(k);
        for (std::size_t i = 0; i < k; ++i) common[i] = rays[p].zero[i] && rays[q].zero[i];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && covers(rays[r].zero, common)) adjacent = false;
        if (!adjacent) continue;
        IntVector v = primitive(sub(scale(rays[q].v, val[p]), scale(rays[p].v, val[q])));
        common.push_back(true);
        next.push_back(DDRay{std::move(v), std::move(common)});
      }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      rays[i].zero.push_back(val[i] == 0);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  VRepresentation out;
  out.lineality = canonical_lattice(n, lin);
  for (const auto& r : rays) {
    IntVector v = project_off(r.v, out.lineality);
    if (!is_zero(v)) out.rays.push_back(std::move(v));
  }
  out.rays = sorted_unique(std::move(out.rays));
  return out;
}

Cone Cone::from_inequalities(std::size_t n, const std::vector<IntVector>& inequalities,
                             const std::vector<IntVector>& equations) {
  VRepresentation v = double_description(n, inequalities, equations);
  VRepresentation dual = double_description(n, v.rays, v.lineality);
  Cone c;
  c.n_ = n;
  c.rays_ = std::move(v.rays);
  c.lineality_ = std::move(v.lineality);
  c.facets_ = std::move(dual.rays);
  c.equations_ = std::move(dual.lineality);
  return c;
}

Cone Cone::from_generators(std::size_t n, const std::vector<IntVector>& generators) {
  for (const auto& g : generators)
    if (g.size() != n) throw std::invalid_argument("Cone: generator of wrong dimension");
  VRepresentation dual = double_description(n, generators, {});
  VRepresentation v = double_description(n, dual.rays, dual.lineality);
  Cone c;
  c.n_ = n;
  c.rays_ = std::move(v.rays);
  c.lineality_ = std::move(v.lineality);
  c.facets_ = std::move(dual.rays);
  c.equations_ = std::move(dual.lineality);
  return c;
}

Cone Cone::trivial(std::size_t n) { return from_generators(n, {}); }

Cone Cone::whole_space(std::size_t n) { return from_inequalities(n, {}, {}); }

std::vector<IntVector> Cone::generators() const {
  std::vector<IntVector> g = rays_;
  for (const auto& l : lineality_) {
    g.push_back(l);
    g.push_back(negate(l));
  }
  std::sort(g.begin(), g.end());
  return g;
}

bool Cone::contains(const IntVector& u) const {
  if (u.size() != n_) throw std::invalid_argument("Cone::contains: dimension mismatch");
  for (const auto& e : equations_)
    if (dot(e, u) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, u) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.n_ != n_) return false;
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Cone::in_relative_interior(const IntVector& u) const {
  if (!contains(u)) return false;
  for (const auto& f : facets_)
    if (dot(f, u) == 0) return false;
  return true;
}

std::vector<IntVector> Cone::span_lattice() const {
  if (equations_.empty()) return IntMatrix::identity(n_).row_vectors();
  return integer_kernel(IntMatrix::from_rows(equations_, n_));
}

bool operator==(const Cone& a, const Cone& b) {
  return a.n_ == b.n_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
}

bool operator<(const Cone& a, const Cone& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
  return a.lineality_ < b.lineality_;
}

std::string Cone::to_string() const {
  std::string s = "Cone(";
  auto g = generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ", ";
    s += horofan::to_string(g[i]);
  }
  return s + ")";
}

Cone dual_cone(const Cone& sigma) {
  return Cone::from_generators(sigma.ambient_rank(), [&] {
    std::vector<IntVector> g = sigma.facets();
    for (const auto& e : sigma.equations()) {
      g.push_back(e);
      g.push_back(negate(e));
    }
    return g;
  }());
}

std::vector<Cone> faces(const Cone& sigma) {
  const auto& rays = sigma.rays();
  std::vector<IntVector> lin;
  for (const auto& l : sigma.lineality()) {
    lin.push_back(l);
    lin.push_back(negate(l));
  }
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{std::vector<bool>(rays.size(), true)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<bool> cur = queue[head];
    for (const auto& f : sigma.facets()) {
      std::vector<bool> next(rays.size(), false);
      for (std::size_t i = 0; i < rays.size(); ++i) next[i] = cur[i] && dot(f, rays[i]) == 0;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Cone> out;
  for (const auto& mask : queue) {
    std::vector<IntVector> g = lin;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (mask[i]) g.push_back(rays[i]);
    out.push_back(Cone::from_generators(sigma.ambient_rank(), g));
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("intersect: rank mismatch");
  std::vector<IntVector> ineq = a.facets(), eq = a.equations();
  ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.ambient_rank(), ineq, eq);
}

bool is_face_of(const Cone& tau, const Cone& sigma) {
  if (!sigma.contains(tau)) return false;
  const auto gens = tau.generators();
  std::vector<IntVector> eq = sigma.equations();
  for (const auto& f : sigma.facets())
    if (std::all_of(gens.begin(), gens.end(), [&](const IntVector& g) { return dot(f, g) == 0; }))
      eq.push_back(f);
  return Cone::from_inequalities(sigma.ambient_rank(), sigma.facets(), eq) == tau;
}

Cone preimage(const IntMatrix& phi, const Cone& sigma) {
  if (phi.rows() != sigma.ambient_rank()) throw std::invalid_argument("preimage: dimension mismatch");
  IntMatrix t = phi.transpose();
  std::vector<IntVector> ineq, eq;
  for (const auto& f : sigma.facets()) ineq.push_back(t.apply(f));
  for (const auto& e : sigma.equations()) eq.push_back(t.apply(e));
  return Cone::from_inequalities(phi.cols(), ineq, eq);
}

Cone image(const IntMatrix& phi, const Cone& sigma) {
  if (phi.cols() != sigma.ambient_rank()) throw std::invalid_argument("image: dimension mismatch");
  std::vector<IntVector> g;
  for (const auto& v : sigma.generators()) g.push_back(phi.apply(v));
  return Cone::from_generators(phi.rows(), g);
}

}  // namespace horofan
