#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expforge/bipartite.hpp"

namespace expforge {

// Simple undirected graph. Edges are stored once with u < v, sorted.
class SymmetricGraph {
 public:
  SymmetricGraph() = default;
  // Throws DomainError on a self-loop, a repeated edge or an endpoint >= n.
  SymmetricGraph(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::uint32_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const noexcept { return edges_; }
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const;
  std::size_t degree(std::uint32_t v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;
  bool adjacent(std::uint32_t u, std::uint32_t v) const;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<std::uint32_t> adj_;
};

// Subgraph induced on the sorted vertex list `keep`, relabeled 0..|keep|-1.
SymmetricGraph induced_subgraph(const SymmetricGraph& g, std::span<const std::uint32_t> keep);

struct SpectralOptions {
  double tolerance = 1e-9;
  std::uint64_t max_iterations = 100'000;
  std::uint64_t seed = 1;
  std::uint32_t dense_limit = 2000;
};

struct SpectralReport {
  double lambda_max = 0;
  double lambda_2 = 0;
  std::string method;  // "dense" or "iterative"
  double tolerance = 0;
  std::uint64_t iterations = 0;
  double residual = 0;  // ||A v - lambda v|| / ||v|| for the top pair
  std::uint32_t components = 0;
};

// Largest and second-largest adjacency eigenvalue. n = 0 throws DomainError;
// iterative non-convergence throws ResourceError carrying the residual.
SpectralReport top_eigenvalue(const SymmetricGraph& g, const SpectralOptions& opt = {});

// Largest and second-largest singular value of the biadjacency matrix
// (parallel edges count as entries > 1).
SpectralReport bipartite_lambda2(const BipartiteMultigraph& g, const SpectralOptions& opt = {});

}  // namespace expforge
