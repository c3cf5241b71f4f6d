#pragma once
// Small graphs, bases and naive oracles shared by the unit and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "expforge/bipartite.hpp"
#include "expforge/cayley.hpp"
#include "expforge/complex.hpp"
#include "expforge/gadget.hpp"
#include "expforge/group.hpp"
#include "expforge/rng.hpp"
#include "expforge/spectral.hpp"
#include "expforge/structured.hpp"

namespace fixtures {

using namespace expforge;

inline BipartiteMultigraph complete_bipartite(std::uint32_t a, std::uint32_t b) {
  std::vector<BipartiteMultigraph::Edge> e;
  for (std::uint32_t l = 0; l < a; ++l) {
    for (std::uint32_t r = 0; r < b; ++r) e.push_back({l, r});
  }
  return BipartiteMultigraph(a, b, e);
}

inline BipartiteMultigraph perfect_matching(std::uint32_t n) {
  std::vector<BipartiteMultigraph::Edge> e;
  for (std::uint32_t i = 0; i < n; ++i) e.push_back({i, i});
  return BipartiteMultigraph(n, n, e);
}

// 2n-cycle as an n+n bipartite graph.
inline BipartiteMultigraph even_cycle(std::uint32_t n) {
  std::vector<BipartiteMultigraph::Edge> e;
  for (std::uint32_t i = 0; i < n; ++i) {
    e.push_back({i, i});
    e.push_back({i, (i + 1) % n});
  }
  return BipartiteMultigraph(n, n, e);
}

inline SymmetricGraph complete_graph(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return SymmetricGraph(n, e);
}

// Complete multipartite graph, parts of size `part` laid out consecutively.
inline SymmetricGraph complete_multipartite(std::uint32_t parts, std::uint32_t part) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  const auto n = parts * part;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (a / part != b / part) e.emplace_back(a, b);
    }
  }
  return SymmetricGraph(n, e);
}

inline SymmetricGraph random_graph(std::uint32_t n, double p, Rng& rng) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (uniform_unit(rng) < p) e.emplace_back(a, b);
    }
  }
  return SymmetricGraph(n, e);
}

// Random pure k-partite complex: `faces` random transversal tuples, then one
// extra face through every vertex that was missed.
inline CliqueComplex random_complex(std::uint32_t k, std::uint32_t part, std::uint32_t faces, Rng& rng) {
  std::vector<std::uint32_t> flat;
  for (std::uint32_t f = 0; f < faces; ++f) {
    for (std::uint32_t p = 0; p < k; ++p) flat.push_back(static_cast<std::uint32_t>(uniform_below(rng, part)));
  }
  std::vector<std::vector<char>> hit(k, std::vector<char>(part, 0));
  for (std::size_t i = 0; i < flat.size(); ++i) hit[i % k][flat[i]] = 1;
  for (std::uint32_t p = 0; p < k; ++p) {
    for (std::uint32_t v = 0; v < part; ++v) {
      if (hit[p][v]) continue;
      for (std::uint32_t t = 0; t < k; ++t) flat.push_back(t == p ? v : static_cast<std::uint32_t>(uniform_below(rng, part)));
    }
  }
  return CliqueComplex(std::vector<std::uint32_t>(k, part), flat);
}

// Faces meeting U in at least three vertices, by direct scan.
inline std::uint64_t naive_triangle_faces(const CliqueComplex& c, const std::vector<std::uint32_t>& u) {
  std::set<std::uint32_t> in(u.begin(), u.end());
  std::uint64_t count = 0;
  for (std::size_t f = 0; f < c.face_count(); ++f) {
    std::uint32_t hits = 0;
    for (auto v : c.face(f)) hits += in.count(v) ? 1u : 0u;
    count += hits >= 3;
  }
  return count;
}

// Right vertices with exactly one edge from S, by counting every edge.
inline std::vector<std::uint32_t> naive_unique_neighbors(const BipartiteMultigraph& g, const std::vector<std::uint32_t>& s) {
  std::vector<std::uint32_t> hits(g.right_size(), 0);
  for (const auto& e : g.edges()) {
    if (std::find(s.begin(), s.end(), e.left) != s.end()) ++hits[e.right];
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 0; r < g.right_size(); ++r) {
    if (hits[r] == 1) out.push_back(r);
  }
  return out;
}

// Z_k x Z_m with S_i = {(i, y) : y in Y}. Element (a, b) has index a*m + b.
inline CayleySpec strip_spec(std::uint32_t k, std::uint32_t m, const std::vector<std::uint32_t>& ys) {
  CayleySpec spec;
  spec.group = direct_product(cyclic_group(k), cyclic_group(m));
  for (std::uint32_t i = 1; i < k; ++i) {
    std::vector<std::uint32_t> part;
    for (auto y : ys) part.push_back(i * m + y % m);
    std::sort(part.begin(), part.end());
    spec.parts.push_back(part);
  }
  return spec;
}

// Y = {-1, 0, 1} inside Z_m.
inline std::vector<std::uint32_t> window_offsets(std::uint32_t m) { return {m - 1, 0, 1}; }

inline std::vector<std::uint32_t> all_offsets(std::uint32_t m) {
  std::vector<std::uint32_t> ys(m);
  for (std::uint32_t y = 0; y < m; ++y) ys[y] = y;
  return ys;
}

}  // namespace fixtures
