#include <gtest/gtest.h>

#include "expforge/cayley.hpp"
#include "expforge/complex.hpp"
#include "expforge/grassmann.hpp"
#include "expforge/structured.hpp"
#include "fixtures.hpp"

using namespace expforge;

TEST(Incidence, CompleteTripartite) {
  const auto sb = incidence_graph(complete_partite_complex(3, 2));
  EXPECT_EQ(sb.face_count(), 8u);
  EXPECT_EQ(sb.middle_size(), 6u);
  EXPECT_EQ(sb.D, 4u);
  EXPECT_TRUE(validate_biregular(sb.graph, 3, 4).passed());
  for (std::uint32_t u = 0; u < 6; ++u) {
    for (std::uint32_t v = 0; v < 6; ++v) {
      if (sb.part_of[u] == sb.part_of[v]) continue;
      EXPECT_EQ(common_index_set(sb, u, v).size(), 2u);
    }
  }
  for (std::uint32_t a = 0; a < 3; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      if (a == b) continue;
      EXPECT_EQ(sb.s(a, b), 2u);
      for (const auto& set : sb.specials(a, b)) EXPECT_EQ(set.size(), 2u);
    }
  }
  const auto rep = verify_structured(sb);
  EXPECT_TRUE(rep.passed());
}

TEST(Incidence, SingleFace) {
  for (std::uint32_t k : {2u, 3u, 5u}) {
    const auto sb = incidence_graph(complete_partite_complex(k, 1));
    EXPECT_TRUE(validate_biregular(sb.graph, k, 1).passed());
    EXPECT_EQ(sb.face_count(), 1u);
  }
}

TEST(Incidence, FlagComplex) {
  const auto b = building_complex(3, 2);
  const auto sb = incidence_graph(b.flags);
  EXPECT_EQ(sb.face_count(), 21u);
  EXPECT_EQ(sb.middle_size(), 14u);
  EXPECT_TRUE(validate_biregular(sb.graph, 2, 3).passed());
  EXPECT_TRUE(verify_structured(sb).degrees_ok);
}

TEST(Incidence, NotPure) {
  EXPECT_THROW(incidence_graph(CliqueComplex({2, 2}, {0, 0})), DomainError);
}

TEST(Verify, PartitionViolation) {
  auto sb = incidence_graph(complete_partite_complex(3, 2));
  sb.part_of[2] = 0;  // vertex 2 now shares part 0 with vertices 0 and 1
  const auto rep = verify_structured(sb);
  EXPECT_FALSE(rep.partition_ok);
  EXPECT_FALSE(rep.passed());
  ASSERT_FALSE(rep.partition_violations.empty());
  for (auto f : rep.partition_violations) {
    const auto nb = sb.graph.left_neighbors(f);
    EXPECT_NE(std::find(nb.begin(), nb.end(), 2u), nb.end());
  }
}

TEST(Verify, SpecialSetMismatch) {
  auto sb = incidence_graph(complete_partite_complex(3, 2));
  // Reorder vertex 0 after the special sets were computed.
  std::swap(sb.nbr_order[sb.nbr_offsets[0] + 1], sb.nbr_order[sb.nbr_offsets[0] + 2]);
  const auto rep = verify_structured(sb);
  EXPECT_TRUE(rep.orderings_ok);
  EXPECT_FALSE(rep.special_sets_ok);
  bool names_zero = false;
  for (const auto& [u, v] : rep.unmatched) names_zero = names_zero || u == 0;
  EXPECT_TRUE(names_zero);
}

TEST(Verify, OrderingViolation) {
  auto sb = incidence_graph(complete_partite_complex(3, 2));
  sb.nbr_order[sb.nbr_offsets[0] + 1] = sb.nbr_order[sb.nbr_offsets[0]];
  const auto rep = verify_structured(sb);
  EXPECT_FALSE(rep.orderings_ok);
  EXPECT_EQ(rep.bad_orderings, (std::vector<std::uint32_t>{0}));
}

TEST(CayleyIncidence, OrderingFollowsGenerators) {
  const auto spec = fixtures::strip_spec(3, 5, fixtures::window_offsets(5));
  const auto cc = build_cayley_complex(spec);
  const auto sb = cayley_incidence_graph(cc);
  EXPECT_EQ(sb.D, cc.generators.size());
  for (std::uint32_t u = 0; u < sb.middle_size(); ++u) {
    const auto m = cc.element_of[u];
    const auto ord = sb.nbr(u);
    for (std::size_t i = 0; i < ord.size(); ++i) {
      const auto face = cc.complex.face(ord[i]);
      std::vector<std::uint32_t> el;
      for (auto v : face) el.push_back(cc.element_of[v]);
      std::sort(el.begin(), el.end());
      std::vector<std::uint32_t> want;
      for (auto s : cc.generators[i].elements) want.push_back(spec.group.op(m, s));
      std::sort(want.begin(), want.end());
      ASSERT_EQ(el, want);
    }
  }
  const auto rep = verify_structured(sb);
  EXPECT_TRUE(rep.degrees_ok);
  EXPECT_TRUE(rep.orderings_ok);
  EXPECT_TRUE(rep.partition_ok);
}
