#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "expforge/bipartite.hpp"
#include "expforge/cayley.hpp"
#include "expforge/complex.hpp"

namespace expforge {

// Incidence-style bipartite graph with faces V on the left and middle
// vertices M on the right, a k-way partition of M, a neighbor ordering per
// middle vertex and the special-set family of every ordered part pair.
struct StructuredBipartite {
  using IndexSet = std::vector<std::uint32_t>;

  BipartiteMultigraph graph;
  std::uint32_t k = 0;
  std::uint32_t D = 0;
  std::vector<std::uint32_t> part_of;
  // CSR: the ordered neighbors of u are nbr_order[nbr_offsets[u] .. nbr_offsets[u+1]).
  std::vector<std::uint32_t> nbr_offsets{0};
  std::vector<std::uint32_t> nbr_order;
  // special_sets[a * k + b]: distinct index sets, sorted.
  std::vector<std::vector<IndexSet>> special_sets;

  std::uint32_t middle_size() const noexcept { return graph.right_size(); }
  std::uint32_t face_count() const noexcept { return graph.left_size(); }
  std::span<const std::uint32_t> nbr(std::uint32_t u) const;
  const std::vector<IndexSet>& specials(std::uint32_t a, std::uint32_t b) const;
  std::size_t s(std::uint32_t a, std::uint32_t b) const { return specials(a, b).size(); }
};

// Vertex-face incidence of a pure complex. Faces containing u are ordered by
// face id. Throws DomainError if some vertex lies in no face.
StructuredBipartite incidence_graph(const CliqueComplex& complex);

// Incidence of a Cayley complex; the i-th neighbor of u is the face u*sigma_i.
StructuredBipartite cayley_incidence_graph(const CayleyComplex& cc);

// Fills special_sets from the common neighborhoods N(u) ∩ N(v), written as
// index sets through u's ordering.
void compute_special_sets(StructuredBipartite& sb);

// Index set of N(u) ∩ N(v) inside u's ordering, empty when they share nothing.
StructuredBipartite::IndexSet common_index_set(const StructuredBipartite& sb, std::uint32_t u, std::uint32_t v);

struct SpecialPairReport {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::size_t s = 0;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  bool sizes_in_window = true;  // every size within [D/(2s), 2D/s]
};

struct StructuredReport {
  std::uint32_t k = 0;
  std::uint32_t D = 0;
  // Property 1: face degree k, middle degree D.
  bool degrees_ok = true;
  std::vector<std::uint32_t> bad_faces;
  std::vector<std::uint32_t> bad_middle;
  // Property 2: each ordering is an injective listing of N(u).
  bool orderings_ok = true;
  std::vector<std::uint32_t> bad_orderings;
  // Property 3: one neighbor per part.
  bool partition_ok = true;
  std::vector<std::uint32_t> partition_violations;
  // Property 4.
  bool special_sets_ok = true;
  std::vector<SpecialPairReport> pairs;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> unmatched;  // (u, v) with no matching special set

  bool passed() const noexcept { return degrees_ok && orderings_ok && partition_ok && special_sets_ok; }
};

StructuredReport verify_structured(const StructuredBipartite& sb);

}  // namespace expforge
