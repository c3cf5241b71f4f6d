#include "expforge/group.hpp"

#include "expforge/errors.hpp"

namespace expforge {

GroupTable::GroupTable(std::uint32_t order, std::vector<std::uint32_t> mul, std::vector<std::uint32_t> inverse,
                       std::uint32_t identity)
    : order_(order), mul_(std::move(mul)), inv_(std::move(inverse)), identity_(identity) {
  if (order_ == 0) throw DomainError("group of order 0");
  if (mul_.size() != static_cast<std::size_t>(order_) * order_) throw DomainError("multiplication table size mismatch");
  if (inv_.size() != order_) throw DomainError("inverse list size mismatch");
  if (identity_ >= order_) throw DomainError("identity index out of range");
  for (auto x : mul_) {
    if (x >= order_) throw DomainError("multiplication table entry out of range");
  }
  for (auto x : inv_) {
    if (x >= order_) throw DomainError("inverse entry out of range");
  }
}

std::optional<std::string> check_group_axioms(const GroupTable& g) {
  const auto n = g.order();
  const auto e = g.identity();
  for (std::uint32_t a = 0; a < n; ++a) {
    if (g.op(e, a) != a || g.op(a, e) != a) return "identity law fails at " + std::to_string(a);
    if (g.op(a, g.inverse(a)) != e || g.op(g.inverse(a), a) != e) return "inverse law fails at " + std::to_string(a);
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto ab = g.op(a, b);
      for (std::uint32_t c = 0; c < n; ++c) {
        if (g.op(ab, c) != g.op(a, g.op(b, c))) {
          return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

GroupTable cyclic_group(std::uint32_t n) {
  if (n == 0) throw DomainError("cyclic group of order 0");
  std::vector<std::uint32_t> mul(static_cast<std::size_t>(n) * n);
  std::vector<std::uint32_t> inv(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    inv[a] = (n - a) % n;
    for (std::uint32_t b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return GroupTable(n, std::move(mul), std::move(inv), 0);
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::uint32_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::uint32_t> mul(static_cast<std::size_t>(n) * n);
  std::vector<std::uint32_t> inv(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    const auto ag = a / nh, ah = a % nh;
    inv[a] = g.inverse(ag) * nh + h.inverse(ah);
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto bg = b / nh, bh = b % nh;
      mul[static_cast<std::size_t>(a) * n + b] = g.op(ag, bg) * nh + h.op(ah, bh);
    }
  }
  return GroupTable(n, std::move(mul), std::move(inv), g.identity() * nh + h.identity());
}

}  // namespace expforge
