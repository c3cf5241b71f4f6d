#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "expforge/errors.hpp"
#include "expforge/field.hpp"
#include "expforge/grassmann.hpp"

using namespace expforge;

TEST(Field, AxiomsHoldExhaustively) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    PrimePowerField f(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1u) << "q=" << q << " a=" << a;
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        EXPECT_EQ(f.sub(f.add(a, b), b), a);
        for (std::uint32_t c = 0; c < q; ++c) {
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        }
      }
    }
  }
}

TEST(Field, RejectsNonPrimePowers) {
  EXPECT_THROW(PrimePowerField(6), DomainError);
  EXPECT_THROW(PrimePowerField(1), DomainError);
  EXPECT_THROW(PrimePowerField(2).inv(0), DomainError);
  EXPECT_EQ(prime_power_decomposition(27), std::make_pair(3u, 3u));
  EXPECT_EQ(prime_power_decomposition(12), std::make_pair(0u, 0u));
}

TEST(GaussBinom, KnownValues) {
  EXPECT_EQ(gauss_binom(3, 1, 2), 7);
  EXPECT_EQ(gauss_binom(4, 2, 2), 35);
  for (int k = 0; k <= 6; ++k) {
    for (std::uint64_t q : {2u, 3u, 7u}) EXPECT_EQ(gauss_binom(k, 0, q), 1);
  }
  EXPECT_EQ(gauss_binom(4, 2, 3), 130);
}

TEST(GaussBinom, Symmetry) {
  for (int k = 0; k <= 8; ++k) {
    for (int i = 0; i <= k; ++i) {
      for (std::uint64_t q : {2u, 3u, 4u, 5u}) EXPECT_EQ(gauss_binom(k, i, q), gauss_binom(k, k - i, q));
    }
  }
}

TEST(GaussBinom, OutOfRange) {
  EXPECT_THROW(gauss_binom(3, 4, 2), DomainError);
  EXPECT_THROW(gauss_binom(3, -1, 2), DomainError);
  EXPECT_THROW(gauss_binom(3, 1, 1), DomainError);
}

TEST(Subspaces, CountsMatchGaussBinom) {
  for (std::uint32_t k = 2; k <= 5; ++k) {
    for (std::uint32_t i = 1; i < k; ++i) {
      for (std::uint32_t q : {2u, 3u}) {
        const auto subs = enumerate_subspaces(k, i, q);
        ASSERT_EQ(BigInt(subs.size()), gauss_binom(static_cast<int>(k), static_cast<int>(i), q));
        EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
        EXPECT_EQ(std::adjacent_find(subs.begin(), subs.end()), subs.end());
        for (const auto& s : subs) EXPECT_EQ(s.dim(), i);
      }
    }
  }
}

TEST(Subspaces, SmallExamples) {
  EXPECT_EQ(enumerate_subspaces(3, 1, 2).size(), 7u);
  EXPECT_EQ(enumerate_subspaces(2, 1, 2).size(), 3u);
  EXPECT_EQ(enumerate_subspaces(4, 2, 3).size(), 130u);
  EXPECT_EQ(enumerate_subspaces(2, 1, 4).size(), 5u);
}

TEST(Subspaces, CanonicalFormIgnoresSpanningSet) {
  PrimePowerField f(3);
  // Two spanning lists of the same plane in F_3^3.
  Subspace a(f, 3, {1, 0, 2, 0, 1, 1});
  Subspace b(f, 3, {1, 1, 0, 2, 0, 1, 1, 2, 1});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
}

TEST(Subspaces, CapAndRange) {
  EXPECT_THROW(enumerate_subspaces(3, 0, 2), DomainError);
  EXPECT_THROW(enumerate_subspaces(3, 3, 2), DomainError);
  try {
    enumerate_subspaces(6, 3, 3, 100);
    FAIL() << "cap not enforced";
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("100"), std::string::npos);
  }
}

TEST(BuildingBipartite, DegreesMatchFormulas) {
  for (std::uint32_t k : {3u, 4u}) {
    for (std::uint32_t q : {2u, 3u}) {
      for (std::uint32_t i = 1; i < k; ++i) {
        for (std::uint32_t j = i + 1; j < k; ++j) {
          const auto g = building_bipartite(k, q, i, j);
          const auto dl = gauss_binom_u64(static_cast<int>(k - i), static_cast<int>(j - i), q);
          const auto dr = gauss_binom_u64(static_cast<int>(j), static_cast<int>(i), q);
          for (std::uint32_t v = 0; v < g.left_size(); ++v) ASSERT_EQ(g.degree(Side::left, v), dl);
          for (std::uint32_t v = 0; v < g.right_size(); ++v) ASSERT_EQ(g.degree(Side::right, v), dr);
        }
      }
    }
  }
}

TEST(BuildingBipartite, Examples) {
  const auto g = building_bipartite(3, 2, 1, 2);
  EXPECT_EQ(g.left_size(), 7u);
  EXPECT_EQ(g.right_size(), 7u);
  EXPECT_TRUE(validate_biregular(g, 3, 3).passed());
  EXPECT_TRUE(validate_biregular(building_bipartite(4, 2, 1, 3), 7, 7).passed());
  for (std::uint32_t k : {3u, 4u, 5u}) {
    const auto h = building_bipartite(k, 2, 1, k - 1);
    EXPECT_EQ(BigInt(h.edge_count()), gauss_binom(static_cast<int>(k), 1, 2) * gauss_binom(static_cast<int>(k) - 1, static_cast<int>(k) - 2, 2));
  }
  EXPECT_THROW(building_bipartite(3, 2, 2, 1), DomainError);
  EXPECT_THROW(building_bipartite(3, 2, 1, 3), DomainError);
}

TEST(LinkFormula, Values) {
  EXPECT_NEAR(link_lambda2_formula(3, 2, 1, 2), std::sqrt(2.0), 1e-12);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) EXPECT_NEAR(link_lambda2_formula(3, q, 1, 2), std::sqrt(q), 1e-12);
  EXPECT_NEAR(link_lambda2_formula(4, 2, 1, 2), std::sqrt(6.0), 1e-12);
}

TEST(BuildingComplex, FlagCounts) {
  const auto b3 = building_complex(3, 2);
  EXPECT_EQ(b3.flags.face_count(), 21u);
  EXPECT_EQ(b3.flags.k(), 2u);
  const auto b4 = building_complex(4, 2);
  EXPECT_EQ(b4.flags.face_count(), 315u);  // [4]_2! = 1 * 3 * 7 * 15
  for (std::size_t f = 0; f < b4.flags.face_count(); ++f) {
    const auto face = b4.flags.face(f);
    PrimePowerField field(2);
    for (std::uint32_t p = 0; p + 1 < face.size(); ++p) {
      const auto& lo = b4.parts[p][b4.flags.local_index(face[p])];
      const auto& hi = b4.parts[p + 1][b4.flags.local_index(face[p + 1])];
      ASSERT_TRUE(is_subspace_of(field, lo, hi));
    }
  }
}

TEST(ChainExtension, Examples) {
  for (std::uint32_t q : {2u, 3u, 5u}) EXPECT_EQ(chain_extension_count(3, q, 0, 1, 2), 1);
  EXPECT_EQ(chain_extension_count(4, 2, 0, 1, 2), 3);
  EXPECT_EQ(chain_extension_count(4, 2, 0, 1, 3), 3);
  EXPECT_THROW(chain_extension_count(4, 2, 1, 1, 2), DomainError);
}

// Counts complete flags through a fixed pair by walking every chain.
TEST(ChainExtension, MatchesBruteForce) {
  PrimePowerField field(2);
  for (std::uint32_t k : {3u, 4u}) {
    std::vector<std::vector<Subspace>> by_dim(k);
    for (std::uint32_t d = 1; d < k; ++d) by_dim[d] = enumerate_subspaces(k, d, 2);
    // All complete flags, as index tuples per dimension.
    std::vector<std::vector<std::size_t>> flags;
    std::vector<std::size_t> cur;
    auto extend = [&](auto&& self, std::uint32_t d) -> void {
      if (d == k) {
        flags.push_back(cur);
        return;
      }
      for (std::size_t x = 0; x < by_dim[d].size(); ++x) {
        if (d > 1 && !is_subspace_of(field, by_dim[d - 1][cur.back()], by_dim[d][x])) continue;
        cur.push_back(x);
        self(self, d + 1);
        cur.pop_back();
      }
    };
    extend(extend, 1);
    for (std::uint32_t i0 = 0; i0 < k; ++i0) {
      for (std::uint32_t i1 = i0 + 1; i1 < k; ++i1) {
        for (std::uint32_t i2 = i1 + 1; i2 < k; ++i2) {
          const auto a = i1 - i0;
          const auto b = i2 - i0;
          std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> through;
          for (const auto& f : flags) ++through[{f[a - 1], f[b - 1]}];
          const auto expect = chain_extension_count(k, 2, i0, i1, i2);
          for (const auto& [pair, count] : through) ASSERT_EQ(BigInt(count), expect);
        }
      }
    }
  }
}
