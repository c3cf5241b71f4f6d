#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace expforge {

using Rational = boost::rational<std::int64_t>;

// Exponents of q in the triangle (tau) and skeleton (lambda) bounds of the
// Cayley base graph, constants dropped.
struct BoundExponents {
  std::uint32_t k = 0;
  std::uint64_t q = 0;
  Rational tau_base;  // C(k,2) - k^2/8 - 1/2
  Rational max_min;   // max over triples of the min over the three pairs
  std::array<std::uint32_t, 3> argmax{};
  Rational tau;
  Rational lambda;  // floor(k^2/4) / 2
  double tau_value = 0;     // q^tau
  double lambda_value = 0;  // q^lambda
};

// Requires k >= 3 and q a prime power.
BoundExponents tau_lambda_formulas(std::uint32_t k, std::uint64_t q);

// Exponent of the per-triple min, ((i-j+2)^2 + (k-i-j)^2)/8 minimized over the
// three (i,j) pairs of the triple.
Rational triple_min_exponent(std::uint32_t k, std::uint32_t i0, std::uint32_t i1, std::uint32_t i2);

struct ParameterInput {
  std::uint32_t k = 0;
  double q = 0;
  double d_left = 0;
  double d_right = 0;
  double D = 0;
  double tau = 0;
  double lambda = 0;
  double s_min = 0;
  double s_max = 0;
  double delta = 0;
};

struct InequalityCheck {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  bool passed = false;
  double slack = 0;  // rhs - lhs
};

struct ParameterReport {
  std::vector<InequalityCheck> checks;
  double window_low = 0;
  double window_high = 0;
  bool window_nonempty = false;

  bool passed() const noexcept;
};

// Evaluates the hypotheses of the product theorem with natural logs:
// 1/lambda <= delta <= 1/(2k),
// max{lambda, sqrt(s_max)} ln^2 D / delta <= d_L, d_R <= delta D / (tau ln D),
// lambda <= delta^2 s_min.
ParameterReport validate_parameters(const ParameterInput& in);

// Same hypotheses with every quantity written as q^e for q -> infinity and
// delta = q^{-x}. Logarithmic factors make the degree window strict.
struct ExponentInput {
  std::uint32_t k = 0;
  Rational tau;
  Rational lambda;
  Rational D;
  Rational s_min;
  Rational s_max;
  std::optional<Rational> d;  // degree exponent to test, if any
};

struct ExponentReport {
  Rational window_low;   // max(lambda, s_max/2), before the delta shift
  Rational window_high;  // D - tau, before the delta shift
  // Supremum of admissible x; nonempty iff positive.
  Rational x_sup;
  bool feasible = false;
  std::optional<Rational> x_witness;
  std::vector<std::string> blocking;  // constraints that force x_sup <= 0
};

ExponentReport validate_parameter_exponents(const ExponentInput& in);

}  // namespace expforge
