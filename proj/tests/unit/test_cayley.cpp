#include <gtest/gtest.h>

#include <set>

#include "expforge/cayley.hpp"
#include "expforge/errors.hpp"
#include "expforge/structured.hpp"
#include "fixtures.hpp"

using namespace expforge;

namespace {

CayleySpec z_n(std::uint32_t n, std::vector<std::vector<std::uint32_t>> parts) { return {cyclic_group(n), std::move(parts)}; }

}  // namespace

TEST(CayleySpec, Validation) {
  EXPECT_NO_THROW(validate_cayley_spec(z_n(6, {{1, 5}})));
  EXPECT_THROW(validate_cayley_spec(z_n(6, {{0}})), DomainError);        // identity
  EXPECT_THROW(validate_cayley_spec(z_n(6, {{1}})), DomainError);        // inverse 5 missing
  EXPECT_THROW(validate_cayley_spec(z_n(6, {{1, 7}})), DomainError);     // out of range
  EXPECT_THROW(validate_cayley_spec(z_n(6, {{1, 2}, {2, 5}})), DomainError);  // overlap
}

TEST(Cayley, SixCycle) {
  const auto cc = build_cayley_complex(z_n(6, {{1, 5}}));
  EXPECT_EQ(cc.complex.k(), 2u);
  EXPECT_EQ(cc.complex.face_count(), 6u);
  EXPECT_EQ(cc.complex.part_sizes(), (std::vector<std::uint32_t>{3, 3}));
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t f = 0; f < 6; ++f) {
    const auto face = cc.complex.face(f);
    const auto a = cc.element_of[face[0]];
    const auto b = cc.element_of[face[1]];
    EXPECT_TRUE((a + 1) % 6 == b || (b + 1) % 6 == a);
    seen.insert({std::min(a, b), std::max(a, b)});
  }
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_EQ(face_generators(z_n(6, {{1, 5}})).size(), 2u);
}

TEST(Cayley, StripComplexIsAllTransversals) {
  const auto spec = fixtures::strip_spec(3, 3, fixtures::all_offsets(3));
  const auto gens = face_generators(spec);
  EXPECT_EQ(gens.size(), 9u);
  const auto cc = build_cayley_complex(spec);
  EXPECT_EQ(cc.complex.face_count(), 9u * 9u / 3u);
  // Brute force: triples with one element per color whose pairwise quotients lie in S.
  std::set<std::vector<std::uint32_t>> brute;
  const auto& g = spec.group;
  auto in_s = [&](std::uint32_t x) {
    for (const auto& p : spec.parts) {
      if (std::find(p.begin(), p.end(), x) != p.end()) return true;
    }
    return false;
  };
  for (std::uint32_t x = 0; x < 3; ++x) {
    for (std::uint32_t y = 3; y < 6; ++y) {
      for (std::uint32_t z = 6; z < 9; ++z) {
        if (in_s(g.op(g.inverse(x), y)) && in_s(g.op(g.inverse(x), z)) && in_s(g.op(g.inverse(y), z))) {
          brute.insert({x, y, z});
        }
      }
    }
  }
  std::set<std::vector<std::uint32_t>> built;
  for (std::size_t f = 0; f < cc.complex.face_count(); ++f) {
    std::vector<std::uint32_t> el;
    for (auto v : cc.complex.face(f)) el.push_back(cc.element_of[v]);
    std::sort(el.begin(), el.end());
    built.insert(el);
  }
  EXPECT_EQ(built, brute);
}

TEST(Cayley, EmptyGenerators) {
  const auto spec = z_n(4, {{}});
  EXPECT_TRUE(face_generators(spec).empty());
  EXPECT_EQ(build_cayley_complex(spec).complex.face_count(), 0u);
}

TEST(Cayley, GeneratorCountMatchesIncidenceDegree) {
  const auto spec = fixtures::strip_spec(3, 5, fixtures::window_offsets(5));
  const auto gens = face_generators(spec);
  const auto cc = build_cayley_complex(spec);
  for (std::uint32_t v = 0; v < cc.complex.vertex_count(); ++v) EXPECT_EQ(cc.complex.faces_of(v).size(), gens.size());
  for (const auto& s : gens) EXPECT_TRUE(is_face_generator(spec, s));
}

TEST(Cayley, FaceGeneratorCap) { EXPECT_THROW(face_generators(fixtures::strip_spec(4, 6, fixtures::all_offsets(6)), 10), ResourceError); }

TEST(Cayley, ColoringConflict) {
  // Odd cycle with k = 2 admits no 2-coloring.
  EXPECT_THROW(cayley_coloring(z_n(5, {{1, 4}})), DomainError);
  EXPECT_THROW(build_cayley_complex(z_n(5, {{1, 4}})), DomainError);
  const auto colors = cayley_coloring(z_n(6, {{1, 5}}));
  for (std::uint32_t m = 0; m < 6; ++m) EXPECT_EQ(colors[m], m % 2);
}

TEST(Equivalence, PairOnZ5) {
  const auto spec = z_n(5, {{1, 4}});
  const auto gens = face_generators(spec);
  ASSERT_EQ(gens.size(), 2u);
  const auto classes = equivalence_classes(gens, spec);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].size(), 2u);
  const auto trunc = truncate_to_degree(classes, 2);
  EXPECT_EQ(trunc, classes[0]);
  const auto one = equivalence_classes({gens[0]}, spec);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].size(), 1u);
}

TEST(Equivalence, ClassesPartitionGenerators) {
  const auto spec = fixtures::strip_spec(3, 5, fixtures::window_offsets(5));
  const auto gens = face_generators(spec);
  const auto classes = equivalence_classes(gens, spec);
  std::vector<FaceGenerator> all;
  for (const auto& c : classes) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, gens);
}

TEST(Truncate, SingletonsAndDivisibility) {
  std::vector<std::vector<FaceGenerator>> singles;
  for (std::uint32_t i = 0; i < 5; ++i) singles.push_back({FaceGenerator{{0, i + 1}}});
  const auto t = truncate_to_degree(singles, 3);
  EXPECT_EQ(t, (std::vector<FaceGenerator>{{{0, 1}}, {{0, 2}}, {{0, 3}}}));

  std::vector<std::vector<FaceGenerator>> pairs{{{{0, 1}}, {{0, 2}}}, {{{0, 3}}, {{0, 4}}}};
  try {
    truncate_to_degree(pairs, 3);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("not realizable"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos);
  }
}

TEST(Truncate, TruncatedComplexHasTargetDegree) {
  const auto spec = fixtures::strip_spec(3, 5, fixtures::all_offsets(5));
  const auto gens = face_generators(spec);
  const auto classes = equivalence_classes(gens, spec);
  const auto t = truncate_to_degree(classes, 3);
  ASSERT_EQ(t.size(), 3u);
  const auto cc = build_cayley_complex(spec, t);
  const auto sb = cayley_incidence_graph(cc);
  EXPECT_EQ(sb.D, 3u);
  EXPECT_TRUE(verify_structured(sb).orderings_ok);
}
