#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace expforge {

// Finite group given by its full multiplication table.
class GroupTable {
 public:
  GroupTable() = default;
  // mul is row-major order x order with mul[a * order + b] = a * b. Throws
  // DomainError on out-of-range entries or mismatched sizes; group axioms are
  // checked separately by check_group_axioms.
  GroupTable(std::uint32_t order, std::vector<std::uint32_t> mul, std::vector<std::uint32_t> inverse,
             std::uint32_t identity);

  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t op(std::uint32_t a, std::uint32_t b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inv_[a]; }
  const std::vector<std::uint32_t>& table() const noexcept { return mul_; }
  const std::vector<std::uint32_t>& inverses() const noexcept { return inv_; }

 private:
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
  std::uint32_t identity_ = 0;
};

// Exhaustive associativity / identity / inverse check, O(n^3). Returns a
// description of the first violated law, or nullopt.
std::optional<std::string> check_group_axioms(const GroupTable& g);

GroupTable cyclic_group(std::uint32_t n);
// Elements of G x H are indexed a * |H| + b.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

}  // namespace expforge
