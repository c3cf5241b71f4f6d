#pragma once

#include <cstdint>
#include <vector>

namespace expforge {

// Finite field F_q for q = p^f.
//
// Elements are the integers 0..q-1. For f = 1 they are residues mod p. For
// f > 1 an element encodes the coefficient vector (c_0, ..., c_{f-1}) of a
// polynomial modulo a fixed irreducible polynomial as sum c_t p^t. Extension
// fields are limited to q <= 64; prime fields have no limit beyond 32-bit
// arithmetic.
class PrimePowerField {
 public:
  using Elem = std::uint32_t;

  explicit PrimePowerField(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return f_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  // Throws DomainError on zero.
  Elem inv(Elem a) const;

  // Coefficients (low to high, leading 1 included) of the modulus; {0, 1}
  // for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

 private:
  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t f_ = 0;
  std::vector<std::uint32_t> modulus_;
  // Dense tables, only for f > 1.
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
};

// Returns {p, f} with q = p^f, or {0, 0} if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint32_t q);

}  // namespace expforge
