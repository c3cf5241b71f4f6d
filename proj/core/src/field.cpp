#include "expforge/field.hpp"

#include <array>
#include <utility>

#include "expforge/errors.hpp"

namespace expforge {

namespace {

struct ConwayEntry {
  std::uint32_t p;
  std::uint32_t f;
  std::array<std::uint32_t, 7> coeffs;  // low to high, monic
};

// Conway polynomials for every non-prime q <= 64.
constexpr std::array<ConwayEntry, 9> kConway{{
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {5, 2, {2, 4, 1}},
    {7, 2, {3, 6, 1}},
}};

}  // namespace

std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint32_t q) {
  if (q < 2) return {0, 0};
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  std::uint32_t f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return {0, 0};
  return {p, f};
}

PrimePowerField::PrimePowerField(std::uint32_t q) : q_(q) {
  auto [p, f] = prime_power_decomposition(q);
  if (p == 0) throw DomainError("field order " + std::to_string(q) + " is not a prime power");
  p_ = p;
  f_ = f;
  if (f == 1) {
    if (q > (1u << 16)) throw DomainError("prime field order exceeds 65536");
    modulus_ = {0, 1};
    return;
  }
  const ConwayEntry* entry = nullptr;
  for (const auto& e : kConway) {
    if (e.p == p && e.f == f) entry = &e;
  }
  if (entry == nullptr) {
    throw DomainError("extension field of order " + std::to_string(q) + " not supported (q <= 64)");
  }
  modulus_.assign(entry->coeffs.begin(), entry->coeffs.begin() + f + 1);

  auto digits = [&](Elem a) {
    std::vector<std::uint32_t> d(f);
    for (std::uint32_t t = 0; t < f; ++t) {
      d[t] = a % p;
      a /= p;
    }
    return d;
  };
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    Elem a = 0;
    for (std::uint32_t t = f; t-- > 0;) a = a * p + d[t];
    return a;
  };

  add_.resize(static_cast<std::size_t>(q) * q);
  mul_.resize(static_cast<std::size_t>(q) * q);
  for (Elem a = 0; a < q; ++a) {
    const auto da = digits(a);
    for (Elem b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::vector<std::uint32_t> sum(f);
      for (std::uint32_t t = 0; t < f; ++t) sum[t] = (da[t] + db[t]) % p;
      add_[a * q + b] = encode(sum);

      std::vector<std::uint32_t> prod(2 * f - 1, 0);
      for (std::uint32_t s = 0; s < f; ++s) {
        for (std::uint32_t t = 0; t < f; ++t) prod[s + t] = (prod[s + t] + da[s] * db[t]) % p;
      }
      // Reduce by the monic modulus from the top down.
      for (std::uint32_t deg = 2 * f - 1; deg-- > f;) {
        const std::uint32_t c = prod[deg];
        if (c == 0) continue;
        for (std::uint32_t t = 0; t <= f; ++t) {
          const std::uint32_t sub = (c * modulus_[t]) % p;
          prod[deg - f + t] = (prod[deg - f + t] + p - sub) % p;
        }
      }
      prod.resize(f);
      mul_[a * q + b] = encode(prod);
    }
  }
  inv_.assign(q, 0);
  for (Elem a = 1; a < q; ++a) {
    for (Elem b = 1; b < q; ++b) {
      if (mul_[a * q + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
}

PrimePowerField::Elem PrimePowerField::add(Elem a, Elem b) const {
  if (f_ == 1) return (a + b) % p_;
  return add_[a * q_ + b];
}

PrimePowerField::Elem PrimePowerField::neg(Elem a) const {
  if (f_ == 1) return a == 0 ? 0 : p_ - a;
  Elem r = 0;
  Elem scale = 1;
  while (a != 0) {
    const Elem d = a % p_;
    r += ((p_ - d) % p_) * scale;
    scale *= p_;
    a /= p_;
  }
  return r;
}

PrimePowerField::Elem PrimePowerField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

PrimePowerField::Elem PrimePowerField::mul(Elem a, Elem b) const {
  if (f_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  return mul_[a * q_ + b];
}

PrimePowerField::Elem PrimePowerField::inv(Elem a) const {
  if (a == 0) throw DomainError("zero has no multiplicative inverse");
  if (f_ == 1) {
    // Fermat: a^(p-2).
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint32_t e = p_ - 2;
    while (e > 0) {
      if (e & 1u) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Elem>(result);
  }
  return inv_[a];
}

}  // namespace expforge
