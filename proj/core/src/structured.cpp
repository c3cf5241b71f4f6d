#include "expforge/structured.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

#include "expforge/errors.hpp"

namespace expforge {

std::span<const std::uint32_t> StructuredBipartite::nbr(std::uint32_t u) const {
  if (u + 1 >= nbr_offsets.size()) throw DomainError("middle vertex " + std::to_string(u) + " out of range");
  return {nbr_order.data() + nbr_offsets[u], nbr_order.data() + nbr_offsets[u + 1]};
}

const std::vector<StructuredBipartite::IndexSet>& StructuredBipartite::specials(std::uint32_t a, std::uint32_t b) const {
  if (a >= k || b >= k) throw DomainError("part index out of range");
  return special_sets.at(static_cast<std::size_t>(a) * k + b);
}

namespace {

StructuredBipartite from_complex(const CliqueComplex& complex) {
  StructuredBipartite sb;
  sb.k = complex.k();
  const auto n = complex.vertex_count();
  const auto f = complex.face_count();
  std::vector<BipartiteMultigraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(f) * sb.k);
  for (std::uint32_t face = 0; face < f; ++face) {
    for (auto v : complex.face(face)) edges.push_back({face, v});
  }
  sb.graph = BipartiteMultigraph(static_cast<std::uint32_t>(f), n, std::move(edges));
  sb.part_of.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    sb.part_of[v] = complex.part_of(v);
    if (complex.faces_of(v).empty()) {
      throw DomainError("complex is not pure: vertex " + std::to_string(v) + " lies in no maximal face");
    }
  }
  return sb;
}

void set_degree(StructuredBipartite& sb) {
  std::uint32_t d = 0;
  for (std::size_t u = 0; u + 1 < sb.nbr_offsets.size(); ++u) {
    d = std::max(d, sb.nbr_offsets[u + 1] - sb.nbr_offsets[u]);
  }
  sb.D = d;
}

std::uint32_t find_face(const CliqueComplex& complex, std::span<const std::uint32_t> face) {
  std::size_t lo = 0;
  std::size_t hi = complex.face_count();
  while (lo < hi) {
    const auto mid = (lo + hi) / 2;
    const auto f = complex.face(mid);
    if (std::lexicographical_compare(f.begin(), f.end(), face.begin(), face.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == complex.face_count() || !std::equal(face.begin(), face.end(), complex.face(lo).begin())) {
    throw DomainError("face not present in the complex");
  }
  return static_cast<std::uint32_t>(lo);
}

}  // namespace

StructuredBipartite incidence_graph(const CliqueComplex& complex) {
  auto sb = from_complex(complex);
  const auto n = complex.vertex_count();
  sb.nbr_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t u = 0; u < n; ++u) {
    const auto faces = complex.faces_of(u);
    sb.nbr_order.insert(sb.nbr_order.end(), faces.begin(), faces.end());
    sb.nbr_offsets[u + 1] = static_cast<std::uint32_t>(sb.nbr_order.size());
  }
  set_degree(sb);
  compute_special_sets(sb);
  return sb;
}

StructuredBipartite cayley_incidence_graph(const CayleyComplex& cc) {
  const auto& complex = cc.complex;
  auto sb = from_complex(complex);
  const auto n = complex.vertex_count();
  const auto k = complex.k();
  sb.nbr_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  sb.nbr_order.reserve(static_cast<std::size_t>(n) * cc.generators.size());
  std::vector<std::uint32_t> face(k);
  for (std::uint32_t u = 0; u < n; ++u) {
    const auto m = cc.element_of[u];
    for (const auto& sigma : cc.generators) {
      for (std::uint32_t t = 0; t < k; ++t) {
        const auto v = cc.vertex_of[cc.group.op(m, sigma.elements[t])];
        face[complex.part_of(v)] = v;
      }
      sb.nbr_order.push_back(find_face(complex, face));
    }
    sb.nbr_offsets[u + 1] = static_cast<std::uint32_t>(sb.nbr_order.size());
  }
  set_degree(sb);
  compute_special_sets(sb);
  return sb;
}

StructuredBipartite::IndexSet common_index_set(const StructuredBipartite& sb, std::uint32_t u, std::uint32_t v) {
  StructuredBipartite::IndexSet out;
  const auto order = sb.nbr(u);
  const auto nv = sb.graph.right_neighbors(v);
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    if (std::binary_search(nv.begin(), nv.end(), order[i])) out.push_back(i);
  }
  return out;
}

void compute_special_sets(StructuredBipartite& sb) {
  const auto k = sb.k;
  std::vector<std::set<StructuredBipartite::IndexSet>> found(static_cast<std::size_t>(k) * k);
  const auto n = sb.middle_size();
  std::unordered_map<std::uint32_t, StructuredBipartite::IndexSet> by_partner;
  for (std::uint32_t u = 0; u < n; ++u) {
    by_partner.clear();
    const auto order = sb.nbr(u);
    for (std::uint32_t i = 0; i < order.size(); ++i) {
      for (auto w : sb.graph.left_neighbors(order[i])) {
        if (w == u) continue;
        auto& idx = by_partner[w];
        if (idx.empty() || idx.back() != i) idx.push_back(i);
      }
    }
    for (auto& [w, idx] : by_partner) {
      const auto a = sb.part_of[u];
      const auto b = sb.part_of[w];
      if (a >= k || b >= k) throw DomainError("part index out of range");
      found[static_cast<std::size_t>(a) * k + b].insert(std::move(idx));
    }
  }
  sb.special_sets.assign(found.size(), {});
  for (std::size_t p = 0; p < found.size(); ++p) sb.special_sets[p].assign(found[p].begin(), found[p].end());
}

StructuredReport verify_structured(const StructuredBipartite& sb) {
  StructuredReport rep;
  rep.k = sb.k;
  rep.D = sb.D;
  const auto& g = sb.graph;
  const auto n = sb.middle_size();
  const auto k = sb.k;

  for (std::uint32_t f = 0; f < g.left_size(); ++f) {
    if (g.degree(Side::left, f) != k) rep.bad_faces.push_back(f);
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    if (g.degree(Side::right, u) != sb.D) rep.bad_middle.push_back(u);
  }
  rep.degrees_ok = rep.bad_faces.empty() && rep.bad_middle.empty();

  if (sb.nbr_offsets.size() != static_cast<std::size_t>(n) + 1) {
    for (std::uint32_t u = 0; u < n; ++u) rep.bad_orderings.push_back(u);
  } else {
    for (std::uint32_t u = 0; u < n; ++u) {
      std::vector<std::uint32_t> listed(sb.nbr(u).begin(), sb.nbr(u).end());
      std::sort(listed.begin(), listed.end());
      const auto actual = g.right_neighbors(u);
      const bool injective = std::adjacent_find(listed.begin(), listed.end()) == listed.end();
      if (!injective || !std::equal(listed.begin(), listed.end(), actual.begin(), actual.end())) {
        rep.bad_orderings.push_back(u);
      }
    }
  }
  rep.orderings_ok = rep.bad_orderings.empty();

  std::vector<std::uint32_t> hits(k);
  for (std::uint32_t f = 0; f < g.left_size(); ++f) {
    std::fill(hits.begin(), hits.end(), 0);
    bool ok = true;
    for (auto u : g.left_neighbors(f)) {
      if (sb.part_of.at(u) >= k) {
        ok = false;
        continue;
      }
      ++hits[sb.part_of[u]];
    }
    for (auto h : hits) ok = ok && h == 1;
    if (!ok) rep.partition_violations.push_back(f);
  }
  rep.partition_ok = rep.partition_violations.empty();

  if (!rep.orderings_ok) {
    rep.special_sets_ok = false;
    return rep;
  }
  const bool have_sets = sb.special_sets.size() == static_cast<std::size_t>(k) * k;
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = 0; b < k; ++b) {
      if (a == b) continue;
      SpecialPairReport pr{a, b, 0, 0, 0, true};
      if (have_sets) {
        const auto& sets = sb.specials(a, b);
        pr.s = sets.size();
        if (!sets.empty()) {
          pr.min_size = sets.front().size();
          for (const auto& A : sets) {
            pr.min_size = std::min(pr.min_size, A.size());
            pr.max_size = std::max(pr.max_size, A.size());
            // D/(2s) <= |A| <= 2D/s
            if (2 * pr.s * A.size() < sb.D || pr.s * A.size() > 2ull * sb.D) pr.sizes_in_window = false;
          }
        }
      }
      rep.special_sets_ok = rep.special_sets_ok && pr.sizes_in_window;
      rep.pairs.push_back(pr);
    }
  }
  if (!have_sets) rep.special_sets_ok = false;

  std::unordered_map<std::uint32_t, char> partners;
  for (std::uint32_t u = 0; u < n; ++u) {
    partners.clear();
    for (auto f : g.right_neighbors(u)) {
      for (auto w : g.left_neighbors(f)) {
        if (w != u) partners.emplace(w, 0);
      }
    }
    std::vector<std::uint32_t> sorted;
    sorted.reserve(partners.size());
    for (const auto& [w, unused] : partners) sorted.push_back(w);
    std::sort(sorted.begin(), sorted.end());
    for (auto w : sorted) {
      const auto a = sb.part_of[u];
      const auto b = sb.part_of[w];
      bool matched = false;
      if (have_sets && a < k && b < k && a != b) {
        const auto& sets = sb.specials(a, b);
        matched = std::binary_search(sets.begin(), sets.end(), common_index_set(sb, u, w));
      }
      if (!matched) rep.unmatched.emplace_back(u, w);
    }
  }
  if (!rep.unmatched.empty()) rep.special_sets_ok = false;
  return rep;
}

}  // namespace expforge
