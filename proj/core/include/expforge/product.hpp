#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expforge/bipartite.hpp"
#include "expforge/structured.hpp"

namespace expforge {

struct ZProvenance {
  std::uint32_t middle = 0;
  std::uint32_t left_port = 0;
  std::uint32_t right_port = 0;
};

// Z on (L, R): one copy of the gadget at every middle vertex u, joining
// LNbr_u(i) to RNbr_u(j) for every gadget edge (i, j).
struct LineProductInstance {
  StructuredBipartite g_left;
  StructuredBipartite g_right;
  BipartiteMultigraph gadget;
  BipartiteMultigraph z;  // tags "u:i:j"
  std::vector<ZProvenance> provenance;
  BiregularReport degrees;  // against (k d_L, k d_R)
};

// Throws DomainError when the middle layers differ, k differs, or some middle
// vertex's ordering length differs from the gadget side it feeds.
LineProductInstance line_product(const StructuredBipartite& g_left, const StructuredBipartite& g_right,
                                 const BipartiteMultigraph& gadget);

// Roles of L and R exchanged, gadget transposed.
LineProductInstance transpose(const LineProductInstance& inst);

struct CollisionEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::uint32_t multiplicity = 0;
  std::uint32_t mass_u = 0;  // colored ports of u inside the shared special set
  std::uint32_t mass_v = 0;
  bool special_set_found = true;
};

struct SaturatedVertex {
  std::uint32_t vertex = 0;
  std::uint32_t part = 0;  // the part b of U_high it saturates on
  std::uint32_t degree = 0;
};

struct CollisionReport {
  bool transposed = false;
  VertexSet seed;                             // S
  std::vector<std::uint32_t> u;               // N_{G_L}(S)
  std::vector<std::uint32_t> gamma_degree;    // per entry of u: edges into S
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gamma_edges;  // (l, u), l in S
  double threshold = 0;                       // tau / delta
  std::vector<std::uint32_t> u_low;
  std::vector<std::uint32_t> u_high;
  // Per entry of u: right ports j (in [D_R]) labeled blue / red.
  std::vector<std::vector<std::uint32_t>> blue;
  std::vector<std::vector<std::uint32_t>> red;
  std::vector<CollisionEdge> collisions;      // C with multiplicities
  std::uint64_t e_c_total = 0;
  std::uint64_t e_c_low = 0;
  std::uint64_t e_c_low_high = 0;
  std::uint64_t e_c_high = 0;                 // always 0
  double saturation_threshold = 0;            // lambda / delta
  std::vector<SaturatedVertex> saturated;
  std::uint64_t blue_edges = 0;
  std::uint64_t red_edges = 0;
  std::uint64_t blue_unique = 0;
  std::uint64_t z_unique = 0;                 // |UN_Z(S)|
  bool blue_unique_matches = false;
  std::uint64_t multiplicity_violations = 0;  // collision edges breaking the mass bound
  bool skeleton_subgraph = true;              // every C edge shares a G_R neighbor
};

// S on the left of Z, or on the right (then the transposed instance is used).
// Requires tau, delta, lambda > 0.
CollisionReport analyze_collisions(const LineProductInstance& inst, const VertexSet& seed, double tau, double delta,
                                   double lambda);

struct LowEdgeDiagnostic {
  std::uint64_t e_low = 0;
  std::uint64_t e_high = 0;
  std::uint64_t k_times_s = 0;
  bool identity_holds = false;
  std::optional<double> ratio;  // e_low / ((1 - 4 delta)(k - 2)|S|), absent when the denominator is <= 0
};

LowEdgeDiagnostic edges_into_low_diagnostic(const CollisionReport& report, std::uint32_t k, double delta);

}  // namespace expforge
