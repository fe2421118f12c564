// Copyright 2026 The ngtmst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "ngtmst/bivariate_poly.hpp"
#include "ngtmst/errors.hpp"
#include "ngtmst/gaussian_moments.hpp"
#include "ngtmst/phase_space.hpp"
#include "ngtmst/truncated_series.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

namespace ngtmst {
namespace {

using Complex = std::complex<double>;

TEST(ExpSeries, ZeroExponentIsConstantOne) {
  const std::vector<int> caps{2, 1, 2};
  const std::vector<Complex> lin(3, 0.0);
  const ScalarSeries s = exp_series<Complex>(lin, Eigen::MatrixXcd::Zero(3, 3), caps);
  for (std::size_t f = 0; f < s.size(); ++f) EXPECT_EQ(s.flat(f), f == 0 ? Complex(1.0) : Complex(0.0));
}

TEST(ExpSeries, TwoVariableCrossCoefficient) {
  // exp(2 s t + s a - t b): the s t coefficient is 2 - a b.
  const Complex a(0.7, -0.3);
  const Complex b(-1.1, 0.4);
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(2, 2);
  q(0, 1) = q(1, 0) = 1.0;
  const std::vector<Complex> lin{a, -b};
  const ScalarSeries s = exp_series<Complex>(lin, q, {1, 1});
  const std::vector<int> st{1, 1};
  EXPECT_LT(std::abs(s.at(st) - (2.0 - a * b)), 1e-15);
}

TEST(ExpSeries, SingleCrossTermCoefficient) {
  const std::vector<int> caps(8, 1);
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(8, 8);
  q(0, 1) = 0.37;
  const ScalarSeries s = exp_series<Complex>(std::vector<Complex>(8, 0.0), q, caps);
  const std::vector<int> idx{1, 1, 0, 0, 0, 0, 0, 0};
  EXPECT_LT(std::abs(s.at(idx) - 0.37), 1e-15);
}

TEST(ExpSeries, CapOverflowIsResourceError) {
  const std::vector<int> caps(21, 1);
  EXPECT_THROW(exp_quadratic_series(Eigen::MatrixXcd::Zero(21, 21), caps), ResourceError);
}

TEST(ExpSeries, DimensionMismatchThrows) {
  EXPECT_THROW(exp_quadratic_series(Eigen::MatrixXcd::Zero(3, 3), {1, 1}), DimensionError);
}

TEST(ExtractDerivative, ZeroOrdersGivePrefactorTimesConstant) {
  const std::vector<int> caps{0, 0, 0};
  const ScalarSeries s = ScalarSeries::constant(caps, 2.5);
  EXPECT_EQ(extract_derivative(s, caps, Complex(0.5, 1.0)), Complex(1.25, 2.5));
}

TEST(ExtractDerivative, OrdersMustEqualCaps) {
  const ScalarSeries s = ScalarSeries::constant({1, 1}, 1.0);
  const std::vector<int> orders{1, 0};
  EXPECT_THROW(extract_derivative(s, orders, 1.0), ContractError);
}

TEST(ExtractDerivative, CatalysisBlockIsQuadraticPolynomial) {
  // Order one in (u1, v1, u1', v1'), linear terms only on the primed pair.
  testing::Rng rng(5);
  const std::vector<int> orders{1, 1, 0, 0, 1, 1, 0, 0};
  std::vector<BivariatePoly> lin(8, BivariatePoly(0.0));
  lin[4] = BivariatePoly::linear(Complex(0.3, 0.1), Complex(-0.2, 0.5));
  lin[5] = BivariatePoly::linear(Complex(-0.6, 0.0), Complex(0.1, -0.4));
  Eigen::MatrixXcd q(8, 8);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j <= i; ++j) q(i, j) = q(j, i) = Complex(testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1));
  }
  const BivariatePoly result = extract_derivative(exp_series<BivariatePoly>(lin, q, orders), orders, 1.0);
  int degree = 0;
  for (int d = 0; d <= result.degree(); ++d) {
    for (int b = 0; b <= d; ++b) {
      if (std::abs(result.coeff(d - b, b)) > 1e-14) degree = d;
    }
  }
  EXPECT_EQ(degree, 2);
  const std::vector<int> positions = testing::expand_orders(orders);
  for (int k = 0; k < 10; ++k) {
    const double tau = testing::uniform(rng, -2, 2);
    const double sigma = testing::uniform(rng, -2, 2);
    std::vector<Complex> at(8);
    for (std::size_t i = 0; i < 8; ++i) at[i] = lin[i](tau, sigma);
    EXPECT_LT(std::abs(result(tau, sigma) - testing::wick_derivative(at, q, positions)), 1e-12);
  }
}

TEST(ExtractDerivative, FockGeneratingFunctionGivesLaguerre) {
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(2, 2);
  q(0, 1) = q(1, 0) = 1.0;  // 2 s t
  const Complex i(0.0, 1.0);
  const std::vector<BivariatePoly> lin{BivariatePoly::linear(1.0, i), BivariatePoly::linear(-1.0, i)};
  for (int n = 0; n <= 3; ++n) {
    const std::vector<int> orders{n, n};
    const double prefactor = 1.0 / (std::pow(2.0, n) * factorial(n));
    const BivariatePoly p = extract_derivative(exp_series<BivariatePoly>(lin, q, orders), orders, prefactor);
    for (double tau : {-1.3, 0.0, 0.8}) {
      for (double sigma : {-0.4, 1.9}) {
        EXPECT_LT(std::abs(p(tau, sigma) - laguerre(n, (tau * tau + sigma * sigma) / 2)), 1e-12) << n;
      }
    }
  }
}

TEST(ExtractExpDerivative, MatchesFullSeries) {
  testing::Rng rng(6);
  const std::vector<int> orders{1, 2, 0, 1, 2, 0, 1, 1};
  std::vector<BivariatePoly> lin;
  for (int k = 0; k < 8; ++k) {
    lin.push_back(BivariatePoly::linear(testing::uniform(rng, -1, 1), Complex(0, testing::uniform(rng, -1, 1))));
  }
  Eigen::MatrixXcd q(8, 8);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b <= a; ++b) q(a, b) = q(b, a) = testing::uniform(rng, -0.5, 0.5);
  }
  const BivariatePoly full = extract_derivative(exp_series<BivariatePoly>(lin, q, orders), orders, 0.25);
  const BivariatePoly fused = extract_exp_derivative<BivariatePoly>(lin, exp_quadratic_series(q, orders), orders, 0.25);
  EXPECT_LT((full - fused).max_abs_coeff(), 1e-12 * std::max(1.0, full.max_abs_coeff()));
}

TEST(BivariatePoly, ArithmeticAndEvaluation) {
  const BivariatePoly x = BivariatePoly::monomial(1, 0);
  const BivariatePoly y = BivariatePoly::monomial(0, 1);
  const BivariatePoly p = (x + y) * (x - y) + BivariatePoly(3.0);
  EXPECT_EQ(p(2.0, 1.0), Complex(6.0));
  EXPECT_EQ(p.coeff(1, 1), Complex(0.0));
  EXPECT_EQ(p.coeff(0, 2), Complex(-1.0));
  EXPECT_TRUE((p - p).is_zero());
}

TEST(BivariatePoly, ComposeLinear) {
  const BivariatePoly p = BivariatePoly::monomial(2, 1, 2.0) + BivariatePoly::linear(1.0, -1.0);
  Eigen::Matrix2d a;
  a << 0.5, -1.0, 2.0, 0.3;
  const BivariatePoly q = p.compose_linear(a);
  const Eigen::Vector2d x(0.7, -1.4);
  const Eigen::Vector2d ax = a * x;
  EXPECT_LT(std::abs(q(x(0), x(1)) - p(ax(0), ax(1))), 1e-13);
}

TEST(GaussianMoments, OneDimensional) {
  EXPECT_NEAR(gaussian_moment_1d(0, 2.0), std::sqrt(std::numbers::pi / 2.0), 1e-15);
  EXPECT_NEAR(gaussian_moment_1d(2, 2.0), std::sqrt(std::numbers::pi) / (2.0 * std::pow(2.0, 1.5)), 1e-15);
  EXPECT_NEAR(gaussian_moment_1d(4, 0.5), 3.0 * std::sqrt(std::numbers::pi) / (4.0 * std::pow(0.5, 2.5)), 1e-13);
  EXPECT_EQ(gaussian_moment_1d(3, 1.0), 0.0);
}

TEST(GaussianMoments, ConstantPolynomial) {
  const double c = 0.8;
  EXPECT_NEAR(gaussian_moment_integral(BivariatePoly(1.0), GaussianWeight2D(c, 0.0, c)).real(), 1.0 / (2 * c), 1e-15);
}

TEST(GaussianMoments, SecondMoment) {
  const double c = 0.8;
  const auto v = gaussian_moment_integral(BivariatePoly::monomial(2, 0), GaussianWeight2D(c, 0.0, c));
  EXPECT_NEAR(v.real(), 1.0 / (4 * c * c), 1e-15);
}

TEST(GaussianMoments, OddMomentVanishes) {
  EXPECT_EQ(gaussian_moment_integral(BivariatePoly::monomial(1, 1), GaussianWeight2D(0.5, 0.0, 2.0)), Complex(0.0));
}

TEST(GaussianMoments, CorrelatedWeight) {
  // Int exp(-x^T Q x) = pi / sqrt(det Q); divided by 2 pi.
  const GaussianWeight2D w(1.0, 0.4, 0.7);
  EXPECT_NEAR(gaussian_moment_integral(BivariatePoly(1.0), w).real(), 0.5 / std::sqrt(0.7 - 0.16), 1e-14);
}

TEST(GaussianMoments, NonPositiveWeightDiverges) {
  EXPECT_THROW(GaussianWeight2D(1.0, 2.0, 1.0), DivergenceError);
  EXPECT_THROW(GaussianWeight2D(-1.0, 0.0, 1.0), DivergenceError);
  EXPECT_THROW(GaussianWeight2D(0.0, 0.0, 1.0), DivergenceError);
}

void expect_property(const testing::PropertyResult& r) {
  EXPECT_TRUE(r.passed()) << r.name << ": worst " << r.worst << " > tolerance " << r.tolerance;
}

TEST(PolyEngineProperties, RingLaws) { expect_property(testing::series_ring_laws()); }
TEST(PolyEngineProperties, ExpInverse) { expect_property(testing::series_exp_inverse()); }
TEST(PolyEngineProperties, FiniteDifferences) { expect_property(testing::derivative_vs_finite_differences()); }
TEST(PolyEngineProperties, WickSum) { expect_property(testing::derivative_vs_wick_sum()); }
TEST(PolyEngineProperties, MomentQuadrature) { expect_property(testing::moment_integral_vs_quadrature()); }

}  // namespace
}  // namespace ngtmst
