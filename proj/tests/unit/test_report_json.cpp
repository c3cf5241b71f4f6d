#include <gtest/gtest.h>

#include <cstdlib>
#include <limits>

#include "expforge/errors.hpp"
#include "expforge/parallel.hpp"
#include "expforge/report_json.hpp"
#include "fixtures.hpp"

using namespace expforge;

TEST(Json, RationalsAndNonFinite) {
  EXPECT_EQ(to_json(Rational(13, 2)), "13/2");
  EXPECT_EQ(to_json(Rational(3)), "3");
  SpectralReport s;
  s.lambda_max = std::numeric_limits<double>::infinity();
  EXPECT_TRUE(to_json(s)["lambda_max"].is_null());
}

TEST(Json, CertificateRoundTrip) {
  GadgetParams p;
  p.D_L = p.D_R = 12;
  p.d_L = p.d_R = 3;
  p.right_family = equal_buckets(12, 3);
  p.left_family = equal_buckets(12, 3);
  p.checks.size_cap = 3;
  p.shrink = 0.5;
  p.seed = 4;
  const auto cert = search_good_gadget(p, 10);
  const auto j = to_json(cert);
  const auto rep = make_report("gadget-search", j);
  EXPECT_EQ(rep["schema"], "certify/v1");
  EXPECT_EQ(rep["body"], j);
  const auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_TRUE(back.gadget.same_edges(cert.gadget));
  EXPECT_EQ(back.spread.worst_ratio, cert.spread.worst_ratio);
  EXPECT_EQ(back.lossless.min_ratio, cert.lossless.min_ratio);
  EXPECT_TRUE(replay_certificate(back));
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Parallel, ResolveWorkers) {
  EXPECT_EQ(resolve_workers(3), 3u);
  ::setenv("EXPFORGE_WORKERS", "2", 1);
  EXPECT_EQ(resolve_workers(0), 2u);
  ::setenv("EXPFORGE_WORKERS", "two", 1);
  EXPECT_THROW(resolve_workers(0), DomainError);
  ::unsetenv("EXPFORGE_WORKERS");
  EXPECT_GE(resolve_workers(0), 1u);
}

TEST(Parallel, CoversEveryIndexAndPropagates) {
  std::vector<int> hit(1000, 0);
  parallel_for(hit.size(), 4, [&](std::size_t i) { hit[i] += 1; });
  for (int h : hit) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                 if (i == 7) throw DomainError("boom");
               }),
               DomainError);
}

TEST(Json, StructuredRoundTrip) {
  const auto sb = incidence_graph(complete_partite_complex(3, 2));
  const auto back = structured_from_json(nlohmann::json::parse(to_json(sb).dump()));
  EXPECT_TRUE(back.graph.same_edges(sb.graph));
  EXPECT_EQ(back.nbr_order, sb.nbr_order);
  EXPECT_EQ(back.nbr_offsets, sb.nbr_offsets);
  EXPECT_EQ(back.special_sets, sb.special_sets);
  EXPECT_EQ(back.D, sb.D);
  auto bad = to_json(sb);
  bad["orderings"][0][0] = 99;
  EXPECT_THROW(structured_from_json(bad), DomainError);
  bad["schema"] = "other";
  EXPECT_THROW(structured_from_json(bad), DomainError);
}
