#include <gtest/gtest.h>

#include <cmath>

#include "expforge/certify.hpp"
#include "expforge/errors.hpp"
#include "expforge/grassmann.hpp"
#include "fixtures.hpp"

using namespace expforge;

TEST(Eml, Examples) {
  const auto k33 = fixtures::complete_bipartite(3, 3);
  const auto r = eml_bound(k33, VertexSet::of(Side::left, {0}), VertexSet::of(Side::right, {2}), 0.0);
  EXPECT_NEAR(r.low, 1.0, 1e-12);
  EXPECT_NEAR(r.high, 1.0, 1e-12);
  EXPECT_EQ(r.actual, 1u);
  EXPECT_TRUE(r.contained);
  const auto e = eml_bound(k33, VertexSet::of(Side::left, {}), VertexSet::of(Side::right, {0, 1}), 0.0);
  EXPECT_DOUBLE_EQ(e.low, 0.0);
  EXPECT_DOUBLE_EQ(e.high, 0.0);
  EXPECT_EQ(e.actual, 0u);
  EXPECT_THROW(eml_bound(k33, VertexSet::of(Side::right, {0}), VertexSet::of(Side::right, {0}), 0.0), DomainError);
}

TEST(Eml, BuildingRandomPairs) {
  const auto g = building_bipartite(3, 2, 1, 2);
  const double lambda = bipartite_lambda2(g).lambda_2;
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto a = VertexSet::of(Side::left, sample_subset(rng, 7, 3));
    const auto b = VertexSet::of(Side::right, sample_subset(rng, 7, 3));
    EXPECT_TRUE(eml_bound(g, a, b, lambda).contained);
  }
}

TEST(Skeleton, Examples) {
  const auto sk = skeletonize(incidence_graph(complete_partite_complex(3, 2)));
  const auto oct = fixtures::complete_multipartite(3, 2);
  EXPECT_EQ(sk.edges(), oct.edges());
  const auto single = skeletonize(incidence_graph(complete_partite_complex(4, 1)));
  EXPECT_EQ(single.edges(), fixtures::complete_graph(4).edges());
  // Two disjoint triangles.
  const auto two = skeletonize(incidence_graph(CliqueComplex({2, 2, 2}, {0, 0, 0, 1, 1, 1})));
  EXPECT_EQ(two.edge_count(), 6u);
  EXPECT_FALSE(two.adjacent(0, 1));
}

TEST(SmallSetLambda, Examples) {
  const auto oct = fixtures::complete_multipartite(3, 2);
  EXPECT_NEAR(small_set_skeleton_lambda(oct, {0, 2}).lambda_u, 1.0, 1e-9);
  EXPECT_DOUBLE_EQ(small_set_skeleton_lambda(oct, {}).lambda_u, 0.0);
  // 0,2,1,3: parts {0,1} and {2,3} give a 4-cycle.
  EXPECT_NEAR(small_set_skeleton_lambda(oct, {0, 1, 2, 3}).lambda_u, 2.0, 1e-9);
}

TEST(SmallSetLambda, Interlacing) {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const auto g = fixtures::random_graph(30, 0.3, rng);
    const auto u = sample_subset(rng, 30, 1 + static_cast<std::uint32_t>(uniform_below(rng, 29)));
    const auto r = small_set_skeleton_lambda(g, u);
    EXPECT_LE(r.lambda_u, r.lambda_max + 1e-9);
  }
}

TEST(Triangles, Examples) {
  const auto c = complete_partite_complex(3, 2);
  EXPECT_EQ(triangle_face_count(c, {0, 2, 4}).faces, 1u);
  EXPECT_EQ(triangle_face_count(c, {0, 1, 2, 3, 4, 5}).faces, 8u);
  const auto flags = building_complex(3, 2).flags;
  EXPECT_EQ(triangle_face_count(flags, {0, 1, 2, 3, 4}).faces, 0u);  // k = 2: no face has three vertices
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto cx = fixtures::random_complex(4, 6, 60, rng);
    const auto u = sample_subset(rng, cx.vertex_count(), 1 + static_cast<std::uint32_t>(uniform_below(rng, 20)));
    EXPECT_EQ(triangle_face_count(cx, u).faces, fixtures::naive_triangle_faces(cx, u));
  }
  const auto with_q = triangle_face_count(complete_partite_complex(5, 2), {0, 2, 4}, 2);
  ASSERT_TRUE(with_q.formula_exponent.has_value());
  EXPECT_EQ(*with_q.formula_exponent, Rational(13, 2));
}

TEST(Triangles, PerTripleCounts) {
  const auto c = complete_partite_complex(4, 2);
  const auto rep = triangle_face_count(c, {0, 2, 4, 6});
  EXPECT_EQ(rep.faces, 5u);  // the full transversal plus 4 faces through exactly three members
  ASSERT_EQ(rep.per_triple.size(), 4u);
  for (const auto& t : rep.per_triple) EXPECT_EQ(t.triangles, 1u);
}

TEST(Tau, Examples) {
  EnumerationOptions opt;
  opt.size_cap = 3;
  EXPECT_DOUBLE_EQ(triangle_expander_tau(CliqueComplex({2, 2, 2}, std::vector<std::uint32_t>{}), opt).tau, 0.0);
  const auto single = triangle_expander_tau(complete_partite_complex(4, 1), opt);
  EXPECT_DOUBLE_EQ(single.tau, 1.0 / 3.0);
  EXPECT_EQ(single.witness.size(), 3u);
  // Every 3-set meets at most one face, so the ratio is 1/3 at this cap.
  const auto cp = triangle_expander_tau(complete_partite_complex(3, 2), opt);
  EXPECT_DOUBLE_EQ(cp.tau, 1.0 / 3.0);
  opt.size_cap = 6;
  EXPECT_DOUBLE_EQ(triangle_expander_tau(complete_partite_complex(3, 2), opt).tau, 8.0 / 6.0);
}

TEST(Orientation, Examples) {
  // The first peeled vertex points at both others.
  const auto tri = bounded_outdegree_orientation(fixtures::complete_graph(3));
  EXPECT_EQ(tri.max_out_degree, 2u);
  EXPECT_EQ(tri.peel_order.front(), 0u);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> star;
  for (std::uint32_t i = 1; i <= 5; ++i) star.emplace_back(0, i);
  EXPECT_EQ(bounded_outdegree_orientation(SymmetricGraph(6, star)).max_out_degree, 1u);
  const auto oct = bounded_outdegree_orientation(fixtures::complete_multipartite(3, 2));
  EXPECT_EQ(oct.max_out_degree, 4u);
  EXPECT_EQ(oct.arcs.size(), 12u);
}

TEST(Orientation, EveryEdgeOnce) {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const auto g = fixtures::random_graph(40, 0.2, rng);
    const auto o = bounded_outdegree_orientation(g);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> undirected;
    for (auto [a, b] : o.arcs) undirected.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(undirected.begin(), undirected.end());
    EXPECT_EQ(undirected, g.edges());
    EXPECT_LE(o.max_out_degree, std::ceil(top_eigenvalue(g).lambda_max - 1e-9));
  }
}

TEST(DegreeProduct, Examples) {
  const auto m = degree_product_check(fixtures::perfect_matching(4));
  EXPECT_DOUBLE_EQ(m.lhs, 0.0);
  EXPECT_NEAR(m.rhs, 1.0, 1e-9);
  EXPECT_TRUE(m.passed);
  const auto k = degree_product_check(fixtures::complete_bipartite(3, 3));
  EXPECT_DOUBLE_EQ(k.lhs, 4.0);
  EXPECT_NEAR(k.rhs, 9.0, 1e-9);
  EXPECT_TRUE(k.passed);
  EXPECT_THROW(degree_product_check(BipartiteMultigraph(2, 2, {})), DomainError);
}

TEST(Une, Examples) {
  EnumerationOptions opt;
  opt.size_cap = 3;
  const auto m = measure_une(fixtures::perfect_matching(5), Side::left, opt);
  for (const auto& r : m.rows) EXPECT_DOUBLE_EQ(r.value, 1.0);
  EXPECT_DOUBLE_EQ(m.global_min, 1.0);
  opt.size_cap = 2;
  const auto k = measure_une(fixtures::complete_bipartite(2, 3), Side::left, opt);
  ASSERT_EQ(k.rows.size(), 2u);
  EXPECT_DOUBLE_EQ(k.rows[1].value, 0.0);
  EXPECT_EQ(k.witness, (std::vector<std::uint32_t>{0, 1}));
}

TEST(Une, AgreesWithBruteForce) {
  const auto g = sample_biregular(10, 10, 3, 3, 8);
  EnumerationOptions opt;
  opt.size_cap = 3;
  const auto prof = measure_une(g, Side::left, opt);
  for (std::uint32_t s = 1; s <= 3; ++s) {
    double best = 1e9;
    std::vector<std::uint32_t> pick;
    auto rec = [&](auto&& self, std::uint32_t from) -> void {
      if (pick.size() == s) {
        best = std::min(best, static_cast<double>(fixtures::naive_unique_neighbors(g, pick).size()) / s);
        return;
      }
      for (std::uint32_t v = from; v < 10; ++v) {
        pick.push_back(v);
        self(self, v + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
    EXPECT_DOUBLE_EQ(prof.rows[s - 1].value, best);
  }
}
