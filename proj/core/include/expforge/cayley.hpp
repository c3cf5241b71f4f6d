#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "expforge/complex.hpp"
#include "expforge/group.hpp"

namespace expforge {

inline constexpr std::uint64_t kDefaultCayleyCap = 20'000'000;

// Group plus generator parts S_1..S_{k-1}; k = parts.size() + 1.
struct CayleySpec {
  GroupTable group;
  std::vector<std::vector<std::uint32_t>> parts;

  std::uint32_t k() const noexcept { return static_cast<std::uint32_t>(parts.size()) + 1; }
};

// Throws DomainError if an element is out of range, the parts overlap, the
// identity is a generator, or some s in S_i has s^{-1} outside S_{k-i}.
void validate_cayley_spec(const CayleySpec& spec);

// elements[t] lies in S_t, elements[0] is the identity.
struct FaceGenerator {
  std::vector<std::uint32_t> elements;

  friend bool operator==(const FaceGenerator&, const FaceGenerator&) = default;
  friend auto operator<=>(const FaceGenerator&, const FaceGenerator&) = default;
};

bool is_face_generator(const CayleySpec& spec, const FaceGenerator& sigma);

// All face generators in lexicographic order. The DFS visits at most `cap`
// partial tuples before throwing ResourceError.
std::vector<FaceGenerator> face_generators(const CayleySpec& spec, std::uint64_t cap = kDefaultCayleyCap);

// Part index of every group element: the identity gets 0 and m*s gets
// color(m) + i mod k for s in S_i. Elements outside the subgroup generated by
// S start a fresh component at color 0. Throws DomainError if S admits no
// such coloring.
std::vector<std::uint32_t> cayley_coloring(const CayleySpec& spec);

struct CayleyComplex {
  GroupTable group;
  CliqueComplex complex;
  std::vector<std::uint32_t> element_of;  // complex vertex -> group element
  std::vector<std::uint32_t> vertex_of;   // group element -> complex vertex
  std::vector<FaceGenerator> generators;  // the sigma used, in order
};

// Faces {m, m s_1, ..., m s_{k-1}} over every m and every face generator.
CayleyComplex build_cayley_complex(const CayleySpec& spec, std::uint64_t cap = kDefaultCayleyCap);

// Same, restricted to faces m*sigma for sigma in gens (the truncated complex).
CayleyComplex build_cayley_complex(const CayleySpec& spec, std::vector<FaceGenerator> gens,
                                   std::uint64_t cap = kDefaultCayleyCap);

// sigma ~ s^{-1} sigma for s in sigma. Classes are sorted internally and
// listed by smallest member.
std::vector<std::vector<FaceGenerator>> equivalence_classes(const std::vector<FaceGenerator>& gens,
                                                            const CayleySpec& spec);

// Picks whole classes of one size j with j | D, D/j of them, smallest first.
// Among admissible j the one covering the most generators wins, ties to the
// smaller j. Throws DomainError listing the sizes with enough generators when
// none of them divides D.
std::vector<FaceGenerator> truncate_to_degree(const std::vector<std::vector<FaceGenerator>>& classes,
                                              std::uint32_t degree);

}  // namespace expforge
