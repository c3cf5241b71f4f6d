#include "expforge/certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <unordered_map>

#include "expforge/errors.hpp"
#include "subset_walk.hpp"

namespace expforge {

EmlResult eml_bound(const BipartiteMultigraph& g, const VertexSet& a, const VertexSet& b, double lambda) {
  if (a.side != Side::left || b.side != Side::right) throw DomainError("A must be on the left and B on the right");
  const auto rep = validate_biregular(g, g.left_size() ? static_cast<std::uint32_t>(g.degree(Side::left, 0)) : 0,
                                      g.right_size() ? static_cast<std::uint32_t>(g.degree(Side::right, 0)) : 0);
  if (!rep.passed() || g.edge_count() == 0) throw DomainError("expander mixing bound needs a nonempty biregular graph");
  for (auto x : a.members) {
    if (x >= g.left_size()) throw DomainError("A member out of range");
  }
  for (auto x : b.members) {
    if (x >= g.right_size()) throw DomainError("B member out of range");
  }
  EmlResult r;
  r.c = rep.d_left;
  r.d = rep.d_right;
  r.edges = g.edge_count();
  r.alpha = static_cast<double>(a.size()) / g.left_size();
  r.beta = static_cast<double>(b.size()) / g.right_size();
  r.lambda = lambda;
  const double ab = r.alpha * r.beta;
  const double spread = lambda / std::sqrt(static_cast<double>(r.c) * r.d) * std::sqrt(ab);
  const double m = static_cast<double>(r.edges);
  r.low = m * (ab - spread);
  r.high = m * (ab + spread);
  r.actual = edges_between(g, a, b);
  const double eps = 1e-9 * std::max(1.0, m);
  r.contained = static_cast<double>(r.actual) >= r.low - eps && static_cast<double>(r.actual) <= r.high + eps;
  return r;
}

SymmetricGraph skeletonize(const BipartiteMultigraph& g, Side side) {
  const auto n = g.size(side);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::uint32_t> mark(n, 0xffffffffu);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (auto mid : g.neighbors(side, u)) {
      for (auto v : g.neighbors(opposite(side), mid)) {
        if (v > u && mark[v] != u) {
          mark[v] = u;
          edges.emplace_back(u, v);
        }
      }
    }
  }
  return SymmetricGraph(n, std::move(edges));
}

SymmetricGraph skeletonize(const StructuredBipartite& sb, Side side) { return skeletonize(sb.graph, side); }

SmallSetLambda small_set_skeleton_lambda(const SymmetricGraph& skel, const std::vector<std::uint32_t>& u) {
  SmallSetLambda out;
  if (skel.size() == 0) return out;
  std::vector<std::uint32_t> sorted = u;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto whole = top_eigenvalue(skel);
  out.lambda_max = whole.lambda_max;
  out.lambda_2 = whole.lambda_2;
  out.d_max = static_cast<double>(skel.max_degree());
  out.bound = out.lambda_2 + static_cast<double>(sorted.size()) / skel.size() * out.d_max;
  if (!sorted.empty()) out.lambda_u = top_eigenvalue(induced_subgraph(skel, sorted)).lambda_max;
  return out;
}

TriangleReport triangle_face_count(const CliqueComplex& complex, const std::vector<std::uint32_t>& u,
                                   std::optional<std::uint64_t> q) {
  const auto k = complex.k();
  std::vector<char> in_u(complex.vertex_count(), 0);
  std::size_t distinct = 0;
  for (auto v : u) {
    if (v >= complex.vertex_count()) throw DomainError("vertex " + std::to_string(v) + " out of range");
    distinct += !in_u[v];
    in_u[v] = 1;
  }
  TriangleReport rep;
  rep.u_size = distinct;

  // Faces touching U, with their hit counts.
  std::unordered_map<std::uint32_t, std::uint32_t> hits;
  for (std::uint32_t v = 0; v < complex.vertex_count(); ++v) {
    if (!in_u[v]) continue;
    for (auto f : complex.faces_of(v)) ++hits[f];
  }
  std::map<std::array<std::uint32_t, 3>, std::set<std::array<std::uint32_t, 3>>> triangles;
  std::vector<std::uint32_t> inside;
  for (const auto& [f, h] : hits) {
    if (h < 3) continue;
    ++rep.faces;
    inside.clear();
    for (auto v : complex.face(f)) {
      if (in_u[v]) inside.push_back(v);
    }
    for (std::size_t x = 0; x < inside.size(); ++x) {
      for (std::size_t y = x + 1; y < inside.size(); ++y) {
        for (std::size_t z = y + 1; z < inside.size(); ++z) {
          const std::array<std::uint32_t, 3> parts{complex.part_of(inside[x]), complex.part_of(inside[y]),
                                                   complex.part_of(inside[z])};
          triangles[parts].insert({inside[x], inside[y], inside[z]});
        }
      }
    }
  }
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = a + 1; b < k; ++b) {
      for (std::uint32_t c = b + 1; c < k; ++c) {
        const auto it = triangles.find({a, b, c});
        rep.per_triple.push_back({a, b, c, it == triangles.end() ? 0 : it->second.size()});
      }
    }
  }
  rep.ratio = distinct ? static_cast<double>(rep.faces) / distinct : 0.0;
  if (q && k >= 3) rep.formula_exponent = tau_lambda_formulas(k, *q).tau;
  return rep;
}

namespace {

detail::WalkOptions walk_options(const EnumerationOptions& opt, bool maximize) {
  detail::WalkOptions w;
  w.min_size = 1;
  w.max_size = opt.size_cap;
  w.exhaustive_budget = opt.exhaustive_budget;
  w.samples = opt.samples;
  w.seed = opt.seed;
  w.workers = opt.workers;
  w.maximize = maximize;
  return w;
}

std::vector<SizeProfileRow> to_rows(const std::vector<detail::SizeResult>& res) {
  std::vector<SizeProfileRow> rows;
  for (const auto& r : res) {
    if (!r.found) continue;
    rows.push_back({r.size, r.exhaustive ? "exhaustive" : "sampled", r.evaluated, r.value, r.witness});
  }
  return rows;
}

class FaceHitState {
 public:
  explicit FaceHitState(const CliqueComplex& c) : c_(&c), hits_(c.face_count(), 0) {}
  void add(std::uint32_t v) {
    for (auto f : c_->faces_of(v)) full_ += ++hits_[f] == 3;
  }
  void remove(std::uint32_t v) {
    for (auto f : c_->faces_of(v)) full_ -= hits_[f]-- == 3;
  }
  double score(std::size_t s) const { return static_cast<double>(full_) / static_cast<double>(s); }
  std::vector<std::uint32_t> detail(std::size_t) const { return {}; }

 private:
  const CliqueComplex* c_;
  std::vector<std::uint32_t> hits_;
  std::uint64_t full_ = 0;
};

class UniqueState {
 public:
  UniqueState(const BipartiteMultigraph& g, Side side) : g_(&g), side_(side), hits_(g.size(opposite(side)), 0) {}
  void add(std::uint32_t v) {
    for (auto r : g_->neighbors(side_, v)) {
      const auto c = ++hits_[r];
      if (c == 1) ++unique_;
      if (c == 2) --unique_;
    }
  }
  void remove(std::uint32_t v) {
    for (auto r : g_->neighbors(side_, v)) {
      const auto c = hits_[r]--;
      if (c == 1) --unique_;
      if (c == 2) ++unique_;
    }
  }
  double score(std::size_t s) const { return static_cast<double>(unique_) / static_cast<double>(s); }
  std::vector<std::uint32_t> detail(std::size_t) const { return {}; }

 private:
  const BipartiteMultigraph* g_;
  Side side_;
  std::vector<std::uint32_t> hits_;
  std::int64_t unique_ = 0;
};

}  // namespace

TauEstimate triangle_expander_tau(const CliqueComplex& complex, const EnumerationOptions& opt) {
  TauEstimate est;
  if (complex.face_count() == 0 || complex.vertex_count() == 0) return est;
  const FaceHitState proto(complex);
  const auto res = detail::walk_subsets(proto, complex.vertex_count(), walk_options(opt, true));
  est.profile = to_rows(res);
  for (const auto& row : est.profile) {
    if (est.witness.empty() || row.value > est.tau) {
      est.tau = row.value;
      est.witness = row.witness;
    }
  }
  return est;
}

Orientation bounded_outdegree_orientation(const SymmetricGraph& g) {
  const auto n = g.size();
  Orientation o;
  o.out_degree.assign(n, 0);
  std::vector<std::uint32_t> deg(n);
  std::set<std::pair<std::uint32_t, std::uint32_t>> queue;
  for (std::uint32_t v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    o.peel_order.push_back(v);
    o.out_degree[v] = d;
    o.max_out_degree = std::max(o.max_out_degree, d);
    for (auto w : g.neighbors(v)) {
      if (removed[w]) continue;
      o.arcs.emplace_back(v, w);
      queue.erase({deg[w], w});
      --deg[w];
      queue.emplace(deg[w], w);
    }
  }
  return o;
}

DegreeProductCheck degree_product_check(const BipartiteMultigraph& g) {
  if (g.edge_count() == 0) throw DomainError("degree product check needs at least one edge");
  DegreeProductCheck c;
  const double m = static_cast<double>(g.edge_count());
  c.d1 = m / g.left_size();
  c.d2 = m / g.right_size();
  c.lhs = (c.d1 - 1) * (c.d2 - 1);
  c.lambda = bipartite_lambda2(g).lambda_max;
  c.rhs = c.lambda * c.lambda;
  c.passed = c.lhs <= c.rhs * (1 + 1e-12);
  return c;
}

UneProfile measure_une(const BipartiteMultigraph& z, Side side, const EnumerationOptions& opt) {
  UneProfile p;
  p.side = side;
  const UniqueState proto(z, side);
  const auto res = detail::walk_subsets(proto, z.size(side), walk_options(opt, false));
  p.rows = to_rows(res);
  for (const auto& row : p.rows) {
    if (p.witness.empty() || row.value < p.global_min) {
      p.global_min = row.value;
      p.witness = row.witness;
    }
  }
  return p;
}

}  // namespace expforge
