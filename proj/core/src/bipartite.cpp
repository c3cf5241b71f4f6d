#include "expforge/bipartite.hpp"

#include <algorithm>

#include "expforge/errors.hpp"

namespace expforge {

const char* to_string(Side s) noexcept { return s == Side::left ? "left" : "right"; }

namespace {

void build_csr(std::uint32_t n, const std::vector<BipartiteMultigraph::Edge>& edges, bool by_left,
               std::vector<std::uint32_t>& offsets, std::vector<std::uint32_t>& adj) {
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges) ++offsets[(by_left ? e.left : e.right) + 1];
  for (std::uint32_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  adj.assign(edges.size(), 0);
  std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& e : edges) {
    const std::uint32_t from = by_left ? e.left : e.right;
    adj[fill[from]++] = by_left ? e.right : e.left;
  }
  for (std::uint32_t v = 0; v < n; ++v) std::sort(adj.begin() + offsets[v], adj.begin() + offsets[v + 1]);
}

}  // namespace

BipartiteMultigraph::BipartiteMultigraph(std::uint32_t left_size, std::uint32_t right_size,
                                         std::vector<Edge> edges, std::vector<std::string> tags)
    : left_size_(left_size), right_size_(right_size), edges_(std::move(edges)), tags_(std::move(tags)) {
  if (!tags_.empty() && tags_.size() != edges_.size()) {
    throw DomainError("tag list length " + std::to_string(tags_.size()) + " does not match edge count " +
                      std::to_string(edges_.size()));
  }
  for (const auto& e : edges_) {
    if (e.left >= left_size_) {
      throw DomainError("left index " + std::to_string(e.left) + " out of range " + std::to_string(left_size_));
    }
    if (e.right >= right_size_) {
      throw DomainError("right index " + std::to_string(e.right) + " out of range " + std::to_string(right_size_));
    }
  }
  build_csr(left_size_, edges_, true, left_offsets_, left_adj_);
  build_csr(right_size_, edges_, false, right_offsets_, right_adj_);
}

std::span<const std::uint32_t> BipartiteMultigraph::neighbors(Side s, std::uint32_t v) const {
  const auto& offsets = s == Side::left ? left_offsets_ : right_offsets_;
  const auto& adj = s == Side::left ? left_adj_ : right_adj_;
  if (v + 1 >= offsets.size()) {
    throw DomainError(std::string(to_string(s)) + " vertex " + std::to_string(v) + " out of range");
  }
  return {adj.data() + offsets[v], adj.data() + offsets[v + 1]};
}

BipartiteMultigraph BipartiteMultigraph::transposed() const {
  std::vector<Edge> flipped;
  flipped.reserve(edges_.size());
  for (const auto& e : edges_) flipped.push_back({e.right, e.left});
  return BipartiteMultigraph(right_size_, left_size_, std::move(flipped), tags_);
}

bool BipartiteMultigraph::same_edges(const BipartiteMultigraph& other) const {
  if (left_size_ != other.left_size_ || right_size_ != other.right_size_) return false;
  if (edges_.size() != other.edges_.size()) return false;
  auto a = edges_;
  auto b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

VertexSet VertexSet::of(Side side, std::vector<std::uint32_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return VertexSet{side, std::move(members)};
}

bool VertexSet::contains(std::uint32_t v) const { return std::binary_search(members.begin(), members.end(), v); }

BiregularReport validate_biregular(const BipartiteMultigraph& g, std::uint32_t d_left, std::uint32_t d_right) {
  BiregularReport report;
  report.d_left = d_left;
  report.d_right = d_right;
  for (std::uint32_t l = 0; l < g.left_size(); ++l) {
    const auto deg = g.degree(Side::left, l);
    if (deg != d_left) report.violations.push_back({Side::left, l, deg, d_left});
  }
  for (std::uint32_t r = 0; r < g.right_size(); ++r) {
    const auto deg = g.degree(Side::right, r);
    if (deg != d_right) report.violations.push_back({Side::right, r, deg, d_right});
  }
  report.handshake_ok = static_cast<std::uint64_t>(g.left_size()) * d_left ==
                        static_cast<std::uint64_t>(g.right_size()) * d_right;
  return report;
}

namespace {

std::vector<std::uint32_t> hit_counts(const BipartiteMultigraph& g, const VertexSet& s) {
  std::vector<std::uint32_t> counts(g.size(opposite(s.side)), 0);
  for (auto v : s.members) {
    for (auto w : g.neighbors(s.side, v)) ++counts[w];
  }
  return counts;
}

}  // namespace

VertexSet unique_neighbors(const BipartiteMultigraph& g, const VertexSet& s) {
  const auto counts = hit_counts(g, s);
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 0; w < counts.size(); ++w) {
    if (counts[w] == 1) out.push_back(w);
  }
  return VertexSet{opposite(s.side), std::move(out)};
}

VertexSet neighborhood(const BipartiteMultigraph& g, const VertexSet& s) {
  const auto counts = hit_counts(g, s);
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 0; w < counts.size(); ++w) {
    if (counts[w] > 0) out.push_back(w);
  }
  return VertexSet{opposite(s.side), std::move(out)};
}

std::size_t edges_between(const BipartiteMultigraph& g, const VertexSet& a, const VertexSet& b) {
  std::vector<char> in_b(g.right_size(), 0);
  for (auto r : b.members) in_b.at(r) = 1;
  std::size_t total = 0;
  for (auto l : a.members) {
    for (auto r : g.left_neighbors(l)) total += in_b[r];
  }
  return total;
}

}  // namespace expforge
