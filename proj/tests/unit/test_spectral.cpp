#include <gtest/gtest.h>

#include <cmath>

#include "expforge/errors.hpp"
#include "expforge/grassmann.hpp"
#include "expforge/spectral.hpp"
#include "fixtures.hpp"

using namespace expforge;

TEST(SymmetricGraph, Construction) {
  EXPECT_THROW(SymmetricGraph(3, {{0, 0}}), DomainError);
  EXPECT_THROW(SymmetricGraph(3, {{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(SymmetricGraph(3, {{0, 3}}), DomainError);
  const SymmetricGraph g(4, {{2, 1}, {0, 1}});
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.max_degree(), 2u);
  const std::vector<std::uint32_t> keep{1, 2};
  EXPECT_EQ(induced_subgraph(g, keep).edge_count(), 1u);
}

TEST(TopEigenvalue, Examples) {
  EXPECT_NEAR(top_eigenvalue(SymmetricGraph(2, {{0, 1}})).lambda_max, 1.0, 1e-9);
  EXPECT_NEAR(top_eigenvalue(fixtures::complete_multipartite(3, 2)).lambda_max, 4.0, 1e-9);
  EXPECT_NEAR(top_eigenvalue(fixtures::complete_graph(3)).lambda_max, 2.0, 1e-9);
  EXPECT_THROW(top_eigenvalue(SymmetricGraph()), DomainError);
}

TEST(TopEigenvalue, IterativeAgreesWithDense) {
  Rng rng(7);
  SpectralOptions iterative;
  iterative.dense_limit = 0;
  for (int t = 0; t < 10; ++t) {
    const auto g = fixtures::random_graph(40 + t * 5, 0.2, rng);
    const auto dense = top_eigenvalue(g);
    const auto iter = top_eigenvalue(g, iterative);
    EXPECT_EQ(dense.method, "dense");
    EXPECT_EQ(iter.method, "iterative");
    EXPECT_NEAR(dense.lambda_max, iter.lambda_max, 1e-5 * std::max(1.0, dense.lambda_max));
    EXPECT_NEAR(dense.lambda_2, iter.lambda_2, 1e-4 * std::max(1.0, dense.lambda_max));
  }
}

TEST(TopEigenvalue, RegularGraphsGiveDegree) {
  for (std::uint32_t n : {4u, 7u, 12u}) EXPECT_NEAR(top_eigenvalue(fixtures::complete_graph(n)).lambda_max, n - 1.0, 1e-9);
  EXPECT_NEAR(top_eigenvalue(fixtures::complete_multipartite(4, 3)).lambda_max, 9.0, 1e-9);
}

TEST(BipartiteLambda2, Examples) {
  EXPECT_NEAR(bipartite_lambda2(fixtures::complete_bipartite(3, 5)).lambda_2, 0.0, 1e-9);
  EXPECT_NEAR(bipartite_lambda2(fixtures::complete_bipartite(3, 5)).lambda_max, std::sqrt(15.0), 1e-9);
  EXPECT_NEAR(bipartite_lambda2(building_bipartite(3, 2, 1, 2)).lambda_2, std::sqrt(2.0), 1e-6);
  EXPECT_NEAR(bipartite_lambda2(fixtures::even_cycle(3)).lambda_2, 1.0, 1e-9);
}

TEST(BipartiteLambda2, IterativeAgreesWithDense) {
  SpectralOptions iterative;
  iterative.dense_limit = 0;
  const auto g = building_bipartite(4, 2, 1, 2);
  const auto dense = bipartite_lambda2(g);
  const auto iter = bipartite_lambda2(g, iterative);
  EXPECT_NEAR(dense.lambda_max, iter.lambda_max, 1e-6);
  EXPECT_NEAR(dense.lambda_2, iter.lambda_2, 1e-5);
  EXPECT_NEAR(dense.lambda_2, link_lambda2_formula(4, 2, 1, 2), 1e-6);
}
