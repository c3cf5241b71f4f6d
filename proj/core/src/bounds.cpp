#include "expforge/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "expforge/errors.hpp"
#include "expforge/field.hpp"

namespace expforge {

Rational triple_min_exponent(std::uint32_t k, std::uint32_t i0, std::uint32_t i1, std::uint32_t i2) {
  if (!(i0 < i1 && i1 < i2 && i2 < k)) throw DomainError("index triple must satisfy i0 < i1 < i2 < k");
  const std::int64_t K = k;
  const std::int64_t a = i0;
  const std::int64_t b = i1;
  const std::int64_t c = i2;
  const std::array<std::array<std::int64_t, 2>, 3> pairs{{{b - a, c - a}, {c - b, K + a - b}, {K + a - c, K + b - c}}};
  std::optional<Rational> best;
  for (const auto& [i, j] : pairs) {
    const Rational e((i - j + 2) * (i - j + 2) + (K - i - j) * (K - i - j), 8);
    if (!best || e < *best) best = e;
  }
  return *best;
}

BoundExponents tau_lambda_formulas(std::uint32_t k, std::uint64_t q) {
  if (k < 3) throw DomainError("tau/lambda formulas need k >= 3");
  if (q > 0xffffffffull || prime_power_decomposition(static_cast<std::uint32_t>(q)).first == 0) {
    throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  }
  BoundExponents out;
  out.k = k;
  out.q = q;
  const std::int64_t K = k;
  out.tau_base = Rational(K * (K - 1), 2) - Rational(K * K, 8) - Rational(1, 2);
  bool first = true;
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = a + 1; b < k; ++b) {
      for (std::uint32_t c = b + 1; c < k; ++c) {
        const auto e = triple_min_exponent(k, a, b, c);
        if (first || e > out.max_min) {
          out.max_min = e;
          out.argmax = {a, b, c};
          first = false;
        }
      }
    }
  }
  out.tau = out.tau_base + out.max_min;
  out.lambda = Rational((K * K) / 4, 2);
  auto value = [q](const Rational& e) {
    return std::pow(static_cast<double>(q), static_cast<double>(e.numerator()) / static_cast<double>(e.denominator()));
  };
  out.tau_value = value(out.tau);
  out.lambda_value = value(out.lambda);
  return out;
}

bool ParameterReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.passed; });
}

ParameterReport validate_parameters(const ParameterInput& in) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  ParameterReport rep;
  auto add = [&](std::string name, double lhs, double rhs) {
    const bool ok = !std::isnan(lhs) && !std::isnan(rhs) && lhs <= rhs;
    rep.checks.push_back({std::move(name), lhs, rhs, ok, rhs - lhs});
  };
  const double ln_d = in.D > 0 ? std::log(in.D) : -inf;
  add("1/lambda <= delta", in.lambda > 0 ? 1.0 / in.lambda : inf, in.delta);
  add("delta <= 1/(2k)", in.delta, in.k > 0 ? 1.0 / (2.0 * in.k) : 0.0);

  const double spread = std::max(in.lambda, std::sqrt(std::max(in.s_max, 0.0)));
  rep.window_low = in.delta > 0 ? spread * ln_d * ln_d / in.delta : inf;
  rep.window_high = (in.tau > 0 && ln_d > 0) ? in.delta * in.D / (in.tau * ln_d) : -inf;
  rep.window_nonempty = rep.window_low <= rep.window_high;
  add("d_L lower", rep.window_low, in.d_left);
  add("d_L upper", in.d_left, rep.window_high);
  add("d_R lower", rep.window_low, in.d_right);
  add("d_R upper", in.d_right, rep.window_high);
  add("lambda <= delta^2 s_min", in.lambda, in.delta * in.delta * in.s_min);
  return rep;
}

ExponentReport validate_parameter_exponents(const ExponentInput& in) {
  ExponentReport rep;
  rep.window_low = std::max(in.lambda, in.s_max / Rational(2));
  rep.window_high = in.D - in.tau;

  // Upper bounds on x; every one must be positive for some x > 0 to fit.
  // Strict bounds come from the log factors in the degree window.
  struct Bound {
    const char* name;
    Rational value;
  };
  std::vector<Bound> bounds{
      {"1/lambda <= delta", in.lambda},
      {"degree window", (rep.window_high - rep.window_low) / Rational(2)},
      {"lambda <= delta^2 s_min", (in.s_min - in.lambda) / Rational(2)},
  };
  if (in.d) {
    bounds.push_back({"d above window", *in.d - rep.window_low});
    bounds.push_back({"d below window", rep.window_high - *in.d});
  }
  rep.x_sup = bounds.front().value;
  for (const auto& b : bounds) {
    rep.x_sup = std::min(rep.x_sup, b.value);
    if (b.value <= 0) rep.blocking.emplace_back(b.name);
  }
  rep.feasible = rep.x_sup > 0;
  if (rep.feasible) rep.x_witness = rep.x_sup / Rational(2);
  return rep;
}

}  // namespace expforge
