#include "expforge/product.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "expforge/errors.hpp"

namespace expforge {

namespace {

void require_orderings(const StructuredBipartite& sb, std::uint32_t D, const char* which) {
  for (std::uint32_t u = 0; u < sb.middle_size(); ++u) {
    if (sb.nbr(u).size() != D) {
      throw DomainError(std::string(which) + " ordering of middle vertex " + std::to_string(u) + " has length " +
                        std::to_string(sb.nbr(u).size()) + ", gadget side has " + std::to_string(D));
    }
  }
}

}  // namespace

LineProductInstance line_product(const StructuredBipartite& g_left, const StructuredBipartite& g_right,
                                 const BipartiteMultigraph& gadget) {
  if (g_left.middle_size() != g_right.middle_size()) throw DomainError("left and right base graphs have different middle layers");
  if (g_left.k != g_right.k) throw DomainError("left and right base graphs have different k");
  if (g_left.part_of != g_right.part_of) throw DomainError("left and right base graphs partition the middle layer differently");
  require_orderings(g_left, gadget.left_size(), "left");
  require_orderings(g_right, gadget.right_size(), "right");

  LineProductInstance inst;
  inst.g_left = g_left;
  inst.g_right = g_right;
  inst.gadget = gadget;
  const auto n = g_left.middle_size();
  std::vector<BipartiteMultigraph::Edge> edges;
  std::vector<std::string> tags;
  edges.reserve(static_cast<std::size_t>(n) * gadget.edge_count());
  tags.reserve(edges.capacity());
  inst.provenance.reserve(edges.capacity());
  for (std::uint32_t u = 0; u < n; ++u) {
    const auto lnbr = g_left.nbr(u);
    const auto rnbr = g_right.nbr(u);
    for (const auto& e : gadget.edges()) {
      edges.push_back({lnbr[e.left], rnbr[e.right]});
      tags.push_back(std::to_string(u) + ":" + std::to_string(e.left) + ":" + std::to_string(e.right));
      inst.provenance.push_back({u, e.left, e.right});
    }
  }
  inst.z = BipartiteMultigraph(g_left.face_count(), g_right.face_count(), std::move(edges), std::move(tags));

  std::uint32_t d_l = 0;
  std::uint32_t d_r = 0;
  if (gadget.left_size() > 0) d_l = static_cast<std::uint32_t>(gadget.degree(Side::left, 0));
  if (gadget.right_size() > 0) d_r = static_cast<std::uint32_t>(gadget.degree(Side::right, 0));
  inst.degrees = validate_biregular(inst.z, g_left.k * d_l, g_right.k * d_r);
  return inst;
}

LineProductInstance transpose(const LineProductInstance& inst) {
  LineProductInstance t;
  t.g_left = inst.g_right;
  t.g_right = inst.g_left;
  t.gadget = inst.gadget.transposed();
  t.z = inst.z.transposed();
  t.provenance.reserve(inst.provenance.size());
  for (const auto& p : inst.provenance) t.provenance.push_back({p.middle, p.right_port, p.left_port});
  t.degrees = inst.degrees;
  std::swap(t.degrees.d_left, t.degrees.d_right);
  for (auto& v : t.degrees.violations) v.side = opposite(v.side);
  return t;
}

CollisionReport analyze_collisions(const LineProductInstance& input, const VertexSet& seed, double tau, double delta,
                                   double lambda) {
  if (!(tau > 0 && delta > 0 && lambda > 0)) throw DomainError("tau, delta and lambda must be positive");
  if (seed.side == Side::right) {
    auto rep = analyze_collisions(transpose(input), VertexSet{Side::left, seed.members}, tau, delta, lambda);
    rep.transposed = true;
    rep.seed.side = Side::right;
    return rep;
  }
  const auto& inst = input;
  const auto& gl = inst.g_left;
  const auto& gr = inst.g_right;
  const auto& h = inst.gadget;
  for (auto l : seed.members) {
    if (l >= gl.face_count()) throw DomainError("seed vertex " + std::to_string(l) + " out of range");
  }

  CollisionReport rep;
  rep.seed = seed;
  rep.threshold = tau / delta;
  rep.saturation_threshold = lambda / delta;

  // Gamma_S and U.
  std::map<std::uint32_t, std::uint32_t> deg;
  for (auto l : seed.members) {
    for (auto u : gl.graph.left_neighbors(l)) {
      ++deg[u];
      rep.gamma_edges.emplace_back(l, u);
    }
  }
  std::sort(rep.gamma_edges.begin(), rep.gamma_edges.end());
  const auto n_mid = gl.middle_size();
  std::vector<std::uint32_t> slot(n_mid, 0xffffffffu);
  std::vector<char> is_low(n_mid, 0);
  for (const auto& [u, d] : deg) {
    slot[u] = static_cast<std::uint32_t>(rep.u.size());
    rep.u.push_back(u);
    rep.gamma_degree.push_back(d);
    if (static_cast<double>(d) > rep.threshold) {
      rep.u_high.push_back(u);
    } else {
      rep.u_low.push_back(u);
      is_low[u] = 1;
    }
  }

  // Blue / red ports per gadget copy.
  rep.blue.resize(rep.u.size());
  rep.red.resize(rep.u.size());
  std::vector<std::uint32_t> c(h.right_size());
  std::vector<std::vector<std::uint32_t>> colored(rep.u.size());
  for (std::size_t idx = 0; idx < rep.u.size(); ++idx) {
    const auto u = rep.u[idx];
    std::fill(c.begin(), c.end(), 0);
    const auto lnbr = gl.nbr(u);
    for (std::uint32_t i = 0; i < lnbr.size(); ++i) {
      if (!seed.contains(lnbr[i])) continue;
      for (auto j : h.left_neighbors(i)) ++c[j];
    }
    for (std::uint32_t j = 0; j < c.size(); ++j) {
      if (c[j] == 1) rep.blue[idx].push_back(j);
      if (c[j] >= 2) rep.red[idx].push_back(j);
      if (c[j] >= 1) colored[idx].push_back(j);
    }
    rep.blue_edges += rep.blue[idx].size();
    rep.red_edges += rep.red[idx].size();
  }

  // Colored arrivals at each right vertex: (slot, blue?).
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, bool>>> arrivals;
  for (std::size_t idx = 0; idx < rep.u.size(); ++idx) {
    const auto rnbr = gr.nbr(rep.u[idx]);
    for (auto j : rep.blue[idx]) arrivals[rnbr[j]].emplace_back(static_cast<std::uint32_t>(idx), true);
    for (auto j : rep.red[idx]) arrivals[rnbr[j]].emplace_back(static_cast<std::uint32_t>(idx), false);
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> mult;
  for (const auto& [r, list] : arrivals) {
    std::size_t blues = 0;
    for (const auto& [idx, blue] : list) blues += blue;
    if (blues == 1 && list.size() == 1) ++rep.blue_unique;
    for (std::size_t x = 0; x < list.size(); ++x) {
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        const auto u = rep.u[list[x].first];
        const auto v = rep.u[list[y].first];
        const bool hit = (list[x].second && is_low[u]) || (list[y].second && is_low[v]);
        if (hit) ++mult[{std::min(u, v), std::max(u, v)}];
      }
    }
  }
  rep.z_unique = unique_neighbors(inst.z, seed).size();
  rep.blue_unique_matches = rep.blue_unique == rep.z_unique;

  // C, its split, and the multiplicity bound at both endpoints.
  auto mass = [&](std::uint32_t a, std::uint32_t b, bool& found) {
    const auto shared = common_index_set(gr, a, b);
    if (shared.empty()) rep.skeleton_subgraph = false;
    const auto pa = gr.part_of[a];
    const auto pb = gr.part_of[b];
    if (pa != pb && pa < gr.k && pb < gr.k && gr.special_sets.size() == static_cast<std::size_t>(gr.k) * gr.k) {
      const auto& sets = gr.specials(pa, pb);
      found = found && std::binary_search(sets.begin(), sets.end(), shared);
    } else {
      found = false;
    }
    const auto& col = colored[slot[a]];
    std::uint32_t m = 0;
    for (auto j : shared) m += std::binary_search(col.begin(), col.end(), j);
    return m;
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> low_high_degree;  // (low vertex, part b)
  for (const auto& [key, m] : mult) {
    CollisionEdge e;
    e.u = key.first;
    e.v = key.second;
    e.multiplicity = m;
    e.mass_u = mass(e.u, e.v, e.special_set_found);
    e.mass_v = mass(e.v, e.u, e.special_set_found);
    if (m > e.mass_u || m > e.mass_v || !e.special_set_found) ++rep.multiplicity_violations;
    rep.e_c_total += m;
    const bool lu = is_low[e.u];
    const bool lv = is_low[e.v];
    if (lu && lv) {
      rep.e_c_low += m;
    } else if (lu || lv) {
      rep.e_c_low_high += m;
      const auto low = lu ? e.u : e.v;
      const auto high = lu ? e.v : e.u;
      ++low_high_degree[{low, gr.part_of[high]}];
    } else {
      rep.e_c_high += m;
    }
    rep.collisions.push_back(e);
  }
  for (const auto& [key, d] : low_high_degree) {
    if (static_cast<double>(d) > rep.saturation_threshold) rep.saturated.push_back({key.first, key.second, d});
  }
  return rep;
}

LowEdgeDiagnostic edges_into_low_diagnostic(const CollisionReport& report, std::uint32_t k, double delta) {
  LowEdgeDiagnostic d;
  for (std::size_t idx = 0; idx < report.u.size(); ++idx) {
    const bool low = std::binary_search(report.u_low.begin(), report.u_low.end(), report.u[idx]);
    (low ? d.e_low : d.e_high) += report.gamma_degree[idx];
  }
  d.k_times_s = static_cast<std::uint64_t>(k) * report.seed.size();
  d.identity_holds = d.e_low + d.e_high == d.k_times_s;
  const double denom = (1.0 - 4.0 * delta) * (static_cast<double>(k) - 2.0) * static_cast<double>(report.seed.size());
  if (denom > 0) d.ratio = static_cast<double>(d.e_low) / denom;
  return d;
}

}  // namespace expforge
