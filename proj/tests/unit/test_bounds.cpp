#include <gtest/gtest.h>

#include <cmath>

#include "expforge/bounds.hpp"
#include "expforge/errors.hpp"

using namespace expforge;

TEST(Exponents, Known) {
  const auto k3 = tau_lambda_formulas(3, 2);
  EXPECT_EQ(k3.tau, Rational(3, 2));
  EXPECT_EQ(k3.lambda, Rational(1));
  const auto k5 = tau_lambda_formulas(5, 2);
  EXPECT_EQ(k5.tau, Rational(13, 2));
  EXPECT_EQ(k5.lambda, Rational(3));
  EXPECT_EQ(tau_lambda_formulas(6, 2).lambda, Rational(9, 2));
  EXPECT_NEAR(tau_lambda_formulas(5, 4).tau_value, std::pow(4.0, 6.5), 1e-6);
  EXPECT_THROW(tau_lambda_formulas(2, 2), DomainError);
  EXPECT_THROW(tau_lambda_formulas(4, 6), DomainError);
}

TEST(Exponents, TauIsBasePlusMaxMin) {
  for (std::uint32_t k = 3; k <= 9; ++k) {
    const auto b = tau_lambda_formulas(k, 3);
    EXPECT_EQ(b.tau, b.tau_base + b.max_min);
    EXPECT_EQ(b.tau_base, Rational(static_cast<std::int64_t>(k * (k - 1)), 2) - Rational(static_cast<std::int64_t>(k * k), 8) -
                              Rational(1, 2));
    Rational best(-1000);
    for (std::uint32_t a = 0; a < k; ++a) {
      for (std::uint32_t c = a + 1; c < k; ++c) {
        for (std::uint32_t d = c + 1; d < k; ++d) best = std::max(best, triple_min_exponent(k, a, c, d));
      }
    }
    EXPECT_EQ(b.max_min, best);
    EXPECT_EQ(triple_min_exponent(k, b.argmax[0], b.argmax[1], b.argmax[2]), best);
  }
}

namespace {

ParameterInput numeric_k6(double q, double delta) {
  ParameterInput in;
  in.k = 6;
  in.q = q;
  in.tau = std::pow(q, 10.5);
  in.D = std::pow(q, 15);
  in.lambda = std::pow(q, 4.5);
  in.s_min = std::pow(q, 5);
  in.s_max = std::pow(q, 9);
  in.d_left = in.d_right = std::pow(q, 4.5);
  in.delta = delta;
  return in;
}

}  // namespace

TEST(Parameters, NumericK6WindowEmpty) {
  for (double delta : {1e-3, 1.0 / 12}) {
    const auto rep = validate_parameters(numeric_k6(std::pow(2.0, 20), delta));
    EXPECT_FALSE(rep.window_nonempty);
    EXPECT_FALSE(rep.passed());
  }
}

TEST(Parameters, ZeroDeltaFailsFirstCheck) {
  const auto rep = validate_parameters(numeric_k6(std::pow(2.0, 20), 0.0));
  ASSERT_FALSE(rep.checks.empty());
  EXPECT_EQ(rep.checks[0].name, "1/lambda <= delta");
  EXPECT_FALSE(rep.checks[0].passed);
}

TEST(Parameters, ExponentK5Feasible) {
  ExponentInput in{5, Rational(13, 2), Rational(3), Rational(10), Rational(4), Rational(6), Rational(13, 4)};
  const auto rep = validate_parameter_exponents(in);
  EXPECT_TRUE(rep.feasible);
  EXPECT_EQ(rep.window_low, Rational(3));
  EXPECT_EQ(rep.window_high, Rational(7, 2));
  EXPECT_EQ(rep.x_sup, Rational(1, 4));
  ASSERT_TRUE(rep.x_witness.has_value());
  EXPECT_EQ(*rep.x_witness, Rational(1, 8));
}

TEST(Parameters, ExponentK6Empty) {
  ExponentInput in{6, Rational(21, 2), Rational(9, 2), Rational(15), Rational(5), Rational(9), std::nullopt};
  const auto rep = validate_parameter_exponents(in);
  EXPECT_FALSE(rep.feasible);
  EXPECT_LE(rep.x_sup, Rational(0));
  EXPECT_FALSE(rep.blocking.empty());
  EXPECT_FALSE(rep.x_witness.has_value());
}

TEST(Parameters, ExponentDegreeOutsideWindow) {
  ExponentInput in{5, Rational(13, 2), Rational(3), Rational(10), Rational(4), Rational(6), Rational(4)};
  EXPECT_FALSE(validate_parameter_exponents(in).feasible);
}
