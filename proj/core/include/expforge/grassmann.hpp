#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "expforge/bipartite.hpp"
#include "expforge/complex.hpp"
#include "expforge/field.hpp"

namespace expforge {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultSubspaceCap = 2'000'000;

// Number of i-dimensional subspaces of F_q^k, computed exactly as
// [k]_q! / ([i]_q! [k-i]_q!). Throws DomainError unless 0 <= i <= k, q >= 2.
BigInt gauss_binom(int k, int i, std::uint64_t q);

// The q-integer [n]_q = 1 + q + ... + q^{n-1}.
BigInt q_integer(int n, std::uint64_t q);

// gauss_binom narrowed to 64 bits; throws ResourceError on overflow.
std::uint64_t gauss_binom_u64(int k, int i, std::uint64_t q);

// Subspace of F_q^k represented by its reduced row echelon basis, so equal
// subspaces compare equal.
class Subspace {
 public:
  using Elem = PrimePowerField::Elem;

  Subspace() = default;
  // rows: any spanning list (row-major, rows.size() multiple of ambient).
  Subspace(const PrimePowerField& field, std::uint32_t ambient, std::vector<Elem> rows);

  std::uint32_t ambient_dim() const noexcept { return ambient_; }
  std::uint32_t dim() const noexcept { return dim_; }
  // dim() rows of ambient_dim() entries, RREF.
  const std::vector<Elem>& basis() const noexcept { return basis_; }
  std::vector<std::uint32_t> pivots() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  std::uint32_t ambient_ = 0;
  std::uint32_t dim_ = 0;
  std::vector<Elem> basis_;
};

// Row-reduces in place; returns rank. rows is row-major with `cols` columns;
// zero rows are dropped from the result.
std::uint32_t reduce_rows(const PrimePowerField& field, std::uint32_t cols, std::vector<PrimePowerField::Elem>& rows);

bool is_subspace_of(const PrimePowerField& field, const Subspace& small, const Subspace& big);

// All dim-i subspaces of F_q^k (0 < i < k) in ascending canonical order.
// Throws ResourceError naming the cap if the count would exceed it.
std::vector<Subspace> enumerate_subspaces(std::uint32_t k, std::uint32_t i, std::uint32_t q,
                                          std::uint64_t cap = kDefaultSubspaceCap);
std::vector<Subspace> enumerate_subspaces(const PrimePowerField& field, std::uint32_t k, std::uint32_t i,
                                          std::uint64_t cap = kDefaultSubspaceCap);

// Spherical building of F_q^k: part p holds the (p+1)-dimensional subspaces,
// p = 0..k-2, and the maximal faces are the complete flags.
struct BuildingComplex {
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::vector<std::vector<Subspace>> parts;
  CliqueComplex flags;
};

BuildingComplex building_complex(std::uint32_t k, std::uint32_t q, std::uint64_t cap = kDefaultSubspaceCap);

// Containment graph between dim-i (left) and dim-j (right) subspaces,
// 1 <= i < j <= k-1. Vertex indices follow enumerate_subspaces order.
BipartiteMultigraph building_bipartite(std::uint32_t k, std::uint32_t q, std::uint32_t i, std::uint32_t j,
                                       std::uint64_t cap = kDefaultSubspaceCap);

// Second eigenvalue of the (V_i, V_j) building graph in closed form:
// sqrt(q^{j-i} [j-1 choose j-i]_q [k-i-1 choose j-i]_q).
double link_lambda2_formula(std::uint32_t k, std::uint32_t q, std::uint32_t i, std::uint32_t j);

// Number of complete flags rho_1 < ... < rho_{k-1} of F_q^k in which the
// entries of dimension i1-i0 and i2-i0 are fixed. Requires 0 <= i0 < i1 < i2 < k.
BigInt chain_extension_count(std::uint32_t k, std::uint32_t q, std::uint32_t i0, std::uint32_t i1, std::uint32_t i2);

}  // namespace expforge
