#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expforge/bipartite.hpp"
#include "expforge/bounds.hpp"
#include "expforge/complex.hpp"
#include "expforge/spectral.hpp"
#include "expforge/structured.hpp"

namespace expforge {

struct EmlResult {
  std::uint32_t c = 0;  // left degree
  std::uint32_t d = 0;  // right degree
  std::size_t edges = 0;
  double alpha = 0;
  double beta = 0;
  double lambda = 0;
  double low = 0;
  double high = 0;
  std::size_t actual = 0;
  bool contained = false;
};

// |E|(ab -+ lambda/sqrt(cd) sqrt(ab)) around e(A, B). Throws DomainError if g
// is not biregular or A, B are on the wrong sides.
EmlResult eml_bound(const BipartiteMultigraph& g, const VertexSet& a, const VertexSet& b, double lambda);

// Simple graph on one side joining vertices with a common neighbor.
SymmetricGraph skeletonize(const BipartiteMultigraph& g, Side side);
// Skeleton of the middle layer (or of the faces with Side::left).
SymmetricGraph skeletonize(const StructuredBipartite& sb, Side side = Side::right);

struct SmallSetLambda {
  double lambda_u = 0;   // top eigenvalue of skel[U]
  double lambda_2 = 0;   // second eigenvalue of skel
  double d_max = 0;
  double bound = 0;      // lambda_2 + (|U| / n) d_max
  double lambda_max = 0; // top eigenvalue of skel
};

SmallSetLambda small_set_skeleton_lambda(const SymmetricGraph& skel, const std::vector<std::uint32_t>& u);

struct TripleCount {
  std::uint32_t i0 = 0;
  std::uint32_t i1 = 0;
  std::uint32_t i2 = 0;
  std::uint64_t triangles = 0;
};

struct TriangleReport {
  std::uint64_t faces = 0;  // maximal faces meeting U in >= 3 vertices
  std::size_t u_size = 0;
  double ratio = 0;
  std::vector<TripleCount> per_triple;  // distinct triangles inside U, by part triple
  std::optional<Rational> formula_exponent;
};

// `q`, when given with k >= 3, adds the tau exponent for reference.
TriangleReport triangle_face_count(const CliqueComplex& complex, const std::vector<std::uint32_t>& u,
                                   std::optional<std::uint64_t> q = std::nullopt);

struct SizeProfileRow {
  std::uint32_t size = 0;
  std::string mode;
  std::uint64_t evaluated = 0;
  double value = 0;
  std::vector<std::uint32_t> witness;
};

struct EnumerationOptions {
  std::uint32_t size_cap = 4;
  std::uint64_t exhaustive_budget = 2'000'000;
  std::uint64_t samples = 2000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct TauEstimate {
  double tau = 0;
  std::vector<std::uint32_t> witness;
  std::vector<SizeProfileRow> profile;
};

// max over 1 <= |U| <= size_cap of |F^{k,3}(U)| / |U|.
TauEstimate triangle_expander_tau(const CliqueComplex& complex, const EnumerationOptions& opt);

struct Orientation {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;  // tail -> head
  std::vector<std::uint32_t> out_degree;
  std::vector<std::uint32_t> peel_order;
  std::uint32_t max_out_degree = 0;
};

// Repeatedly removes a minimum-degree vertex (smallest index on ties) and
// orients its remaining edges away from it.
Orientation bounded_outdegree_orientation(const SymmetricGraph& g);

struct DegreeProductCheck {
  double d1 = 0;
  double d2 = 0;
  double lhs = 0;  // (d1 - 1)(d2 - 1)
  double lambda = 0;
  double rhs = 0;  // lambda^2
  bool passed = false;
};

// Average degrees against the top singular value. Throws DomainError on a
// graph without edges.
DegreeProductCheck degree_product_check(const BipartiteMultigraph& g);

struct UneProfile {
  Side side = Side::left;
  std::vector<SizeProfileRow> rows;  // min |UN(S)| / |S| per size
  double global_min = 0;
  std::vector<std::uint32_t> witness;
};

UneProfile measure_une(const BipartiteMultigraph& z, Side side, const EnumerationOptions& opt);

}  // namespace expforge
