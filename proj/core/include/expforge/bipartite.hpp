#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace expforge {

enum class Side : std::uint8_t { left, right };

constexpr Side opposite(Side s) noexcept { return s == Side::left ? Side::right : Side::left; }
const char* to_string(Side s) noexcept;

// Bipartite multigraph with optional opaque per-edge provenance tags.
//
// Parallel edges are kept and every degree / neighborhood query counts them
// with multiplicity: a vertex joined twice to the same neighbor appears twice
// in its neighbor list.
class BipartiteMultigraph {
 public:
  struct Edge {
    std::uint32_t left;
    std::uint32_t right;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  BipartiteMultigraph() = default;
  // Throws DomainError on an out-of-range endpoint or a tag list whose
  // length is neither 0 nor edges.size().
  BipartiteMultigraph(std::uint32_t left_size, std::uint32_t right_size, std::vector<Edge> edges,
                      std::vector<std::string> tags = {});

  std::uint32_t left_size() const noexcept { return left_size_; }
  std::uint32_t right_size() const noexcept { return right_size_; }
  std::uint32_t size(Side s) const noexcept { return s == Side::left ? left_size_ : right_size_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_tags() const noexcept { return !tags_.empty(); }
  const std::vector<std::string>& tags() const noexcept { return tags_; }

  std::span<const std::uint32_t> neighbors(Side s, std::uint32_t v) const;
  std::span<const std::uint32_t> left_neighbors(std::uint32_t l) const { return neighbors(Side::left, l); }
  std::span<const std::uint32_t> right_neighbors(std::uint32_t r) const { return neighbors(Side::right, r); }
  std::size_t degree(Side s, std::uint32_t v) const { return neighbors(s, v).size(); }

  // Same edge multiset with the sides exchanged; tags are carried over.
  BipartiteMultigraph transposed() const;

  // Multiset equality of edges, ignoring order and tags.
  bool same_edges(const BipartiteMultigraph& other) const;

 private:
  std::uint32_t left_size_ = 0;
  std::uint32_t right_size_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> tags_;
  std::vector<std::uint32_t> left_offsets_{0};
  std::vector<std::uint32_t> left_adj_;
  std::vector<std::uint32_t> right_offsets_{0};
  std::vector<std::uint32_t> right_adj_;
};

// A set of vertices on one side, kept sorted and deduplicated.
struct VertexSet {
  Side side = Side::left;
  std::vector<std::uint32_t> members;

  static VertexSet of(Side side, std::vector<std::uint32_t> members);
  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }
  bool contains(std::uint32_t v) const;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

struct DegreeViolation {
  Side side;
  std::uint32_t vertex;
  std::size_t degree;
  std::size_t expected;
};

struct BiregularReport {
  std::uint32_t d_left = 0;
  std::uint32_t d_right = 0;
  std::vector<DegreeViolation> violations;
  bool handshake_ok = false;

  bool passed() const noexcept { return violations.empty() && handshake_ok; }
};

BiregularReport validate_biregular(const BipartiteMultigraph& g, std::uint32_t d_left, std::uint32_t d_right);

// Opposite-side vertices joined to s by exactly one edge, counting
// multiplicity. Throws DomainError if a member of s is out of range.
VertexSet unique_neighbors(const BipartiteMultigraph& g, const VertexSet& s);

// All opposite-side vertices with at least one edge into s.
VertexSet neighborhood(const BipartiteMultigraph& g, const VertexSet& s);

// Number of edges between a (left) and b (right), counting multiplicity.
std::size_t edges_between(const BipartiteMultigraph& g, const VertexSet& a, const VertexSet& b);

}  // namespace expforge
