#include <gtest/gtest.h>

#include <cmath>

#include "expforge/errors.hpp"
#include "expforge/gadget.hpp"
#include "fixtures.hpp"

using namespace expforge;

namespace {

GadgetParams params(std::uint32_t dl_size, std::uint32_t dr_size, std::uint32_t d_l, std::uint32_t d_r, std::uint32_t r) {
  GadgetParams p;
  p.D_L = dl_size;
  p.D_R = dr_size;
  p.d_L = d_l;
  p.d_R = d_r;
  p.right_family = equal_buckets(dr_size, r);
  p.left_family = equal_buckets(dl_size, r);
  return p;
}

}  // namespace

TEST(Buckets, EqualSplit) {
  const auto f = equal_buckets(10, 3);
  ASSERT_EQ(f.count(), 3u);
  std::vector<std::uint32_t> all;
  for (const auto& b : f.buckets) {
    EXPECT_GE(b.size(), 3u);
    EXPECT_LE(b.size(), 4u);
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, fixtures::all_offsets(10));
  EXPECT_THROW((BucketFamily{4, {{0, 4}}}.validate()), DomainError);
  EXPECT_THROW((BucketFamily{4, {}}.validate()), DomainError);
}

TEST(Sampling, MatchingAndValidity) {
  const auto m = sample_biregular(2, 2, 1, 1, 5);
  EXPECT_TRUE(validate_biregular(m, 1, 1).passed());
  EXPECT_TRUE(validate_biregular(sample_biregular(6, 4, 2, 3, 11), 2, 3).passed());
  EXPECT_THROW(sample_biregular(6, 4, 2, 2, 11), DomainError);
}

TEST(Sampling, SeedsMatterAndReplay) {
  const auto a = sample_biregular(4, 4, 2, 2, 1);
  const auto b = sample_biregular(4, 4, 2, 2, 1);
  EXPECT_TRUE(a.same_edges(b));
  bool any_diff = false;
  for (std::uint64_t s = 2; s < 12; ++s) {
    const auto c = sample_biregular(4, 4, 2, 2, s);
    EXPECT_TRUE(validate_biregular(c, 2, 2).passed());
    any_diff = any_diff || !c.same_edges(a);
  }
  EXPECT_TRUE(any_diff);
}

TEST(Sampling, SimpleHasNoParallelEdges) {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const auto g = sample_biregular(24, 24, 6, 6, s, true);
    EXPECT_TRUE(validate_biregular(g, 6, 6).passed());
    EXPECT_EQ(std::adjacent_find(g.edges().begin(), g.edges().end()), g.edges().end());
  }
}

TEST(Spread, CompleteBipartiteSingleBucket) {
  const auto h = fixtures::complete_bipartite(4, 4);
  const auto ev = check_bucket_spread(h, BucketFamily{4, {{0, 1, 2, 3}}}, CheckOptions{});
  EXPECT_TRUE(ev.passed);
  EXPECT_NEAR(ev.worst_ratio, 1.0 / 32.0, 1e-15);
  EXPECT_EQ(ev.r, 1u);
  EXPECT_FALSE(ev.vacuous);
}

TEST(Spread, NoAdmissibleWindowIsVacuous) {
  // w_min = ceil(3 ln 24 / 3) = 4 > 3 buckets.
  const auto ev = check_bucket_spread(sample_biregular(12, 12, 3, 3, 1, true), equal_buckets(12, 3), CheckOptions{});
  EXPECT_TRUE(ev.vacuous);
  EXPECT_EQ(ev.w_min, 4u);
  EXPECT_TRUE(ev.passed);
}

TEST(Spread, DesksScaleGadgetPasses) {
  const auto h = sample_biregular(24, 24, 4, 4, 3, true);
  CheckOptions opt;
  opt.size_cap = 3;
  const auto ev = check_bucket_spread(h, equal_buckets(24, 4), opt);
  EXPECT_TRUE(ev.passed);
  EXPECT_EQ(ev.mode, "exhaustive");
  EXPECT_GT(ev.worst_ratio, 0.0);
  EXPECT_LT(ev.worst_ratio, 1.0);
}

TEST(Lossless, SimpleSingletonsAndMatchings) {
  CheckOptions opt;
  opt.size_cap = 1;
  const auto h = sample_biregular(12, 12, 3, 3, 4, true);
  const auto ev = check_lossless(h, 0.9, 0.1, opt);
  EXPECT_DOUBLE_EQ(ev.min_ratio, 1.0);
  EXPECT_TRUE(ev.passed);
  opt.size_cap = 4;
  const auto m = check_lossless(fixtures::perfect_matching(6), 0.9, 0.1, opt);
  EXPECT_DOUBLE_EQ(m.min_ratio, 1.0);
  for (const auto& s : m.sizes) EXPECT_DOUBLE_EQ(s.value, 1.0);
}

TEST(Lossless, SampledModeBeyondBudget) {
  CheckOptions opt;
  opt.size_cap = 3;
  opt.exhaustive_budget = 100;
  opt.samples = 50;
  const auto h = sample_biregular(24, 24, 4, 4, 9, true);
  const auto ev = check_lossless(h, 0.5, 0.1, opt);
  ASSERT_EQ(ev.sizes.size(), 3u);
  EXPECT_EQ(ev.sizes[0].mode, "exhaustive");
  EXPECT_EQ(ev.sizes[2].mode, "sampled");
  EXPECT_EQ(ev.sizes[2].evaluated, 50u);
}

TEST(Lossless, ParallelMatchesSerial) {
  CheckOptions opt;
  opt.size_cap = 3;
  const auto h = sample_biregular(20, 20, 4, 4, 13, true);
  const auto serial = check_lossless(h, 0.9, 0.1, opt);
  opt.workers = 3;
  const auto par = check_lossless(h, 0.9, 0.1, opt);
  EXPECT_EQ(serial.min_ratio, par.min_ratio);
  EXPECT_EQ(serial.witness, par.witness);
}

TEST(Search, MatchingCertifiesFirstTry) {
  auto p = params(2, 2, 1, 1, 1);
  const auto cert = search_good_gadget(p, 5);
  EXPECT_TRUE(cert.passed());
  EXPECT_EQ(cert.tries, 1u);
  EXPECT_TRUE(replay_certificate(cert));
}

TEST(Search, HandshakeViolation) {
  auto p = params(4, 4, 2, 3, 1);
  EXPECT_THROW(p.validate(), DomainError);
  EXPECT_THROW(search_good_gadget(p, 3), DomainError);
}

TEST(Search, FailureCarriesTries) {
  auto p = params(8, 8, 4, 4, 2);
  // Certify pairs too: two 4-sets inside [8] essentially always overlap.
  p.shrink = 0.99;
  p.shrink_range = 1.0;
  try {
    search_good_gadget(p, 3);
    FAIL();
  } catch (const GadgetSearchFailure& e) {
    EXPECT_EQ(e.tries().size(), 3u);
    for (const auto& t : e.tries()) EXPECT_FALSE(t.passed);
  }
}

TEST(Search, TamperedCertificateFailsReplay) {
  auto p = params(12, 12, 3, 3, 3);
  p.checks.size_cap = 3;
  p.shrink = 0.5;
  auto cert = search_good_gadget(p, 10);
  EXPECT_TRUE(replay_certificate(cert));
  cert.lossless.min_ratio += 1e-12;
  EXPECT_FALSE(replay_certificate(cert));
}

TEST(UnFormula, Values) {
  EXPECT_THROW(un_lower_bound_formula(7.0, 0.0, 50, 1), DomainError);
  EXPECT_NEAR(un_lower_bound_formula(7.0, 1e-12, 50, 1), 7.0, 1e-4);
  EXPECT_DOUBLE_EQ(un_lower_bound_formula(4.0, 0.1, 100, 1), 0.0);
  const double p = 1.0 / 6.0;
  const double expect = std::max(0.0, 8 * (1 - p) - std::sqrt(4 * p * (1 - p) * 48 * std::log(48.0)));
  EXPECT_DOUBLE_EQ(un_lower_bound_formula(8.0, p, 48, 2), expect);
}
