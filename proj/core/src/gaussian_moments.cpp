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

#include "ngtmst/gaussian_moments.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ngtmst/errors.hpp"

namespace ngtmst {

GaussianWeight2D::GaussianWeight2D(const Eigen::Matrix2d& quadratic)
    : q_(0.5 * (quadratic + quadratic.transpose())) {
  if (!q_.allFinite()) throw DivergenceError("Gaussian weight has non-finite entries");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(q_, Eigen::EigenvaluesOnly);
  const double lo = solver.eigenvalues().minCoeff();
  if (!(lo > 0.0)) {
    throw DivergenceError("Gaussian weight is not positive definite (smallest eigenvalue " +
                          std::to_string(lo) + ")");
  }
}

GaussianWeight2D::GaussianWeight2D(double q11, double q12, double q22)
    : GaussianWeight2D((Eigen::Matrix2d() << q11, q12, q12, q22).finished()) {}

double GaussianWeight2D::operator()(double tau, double sigma) const {
  return std::exp(-(q_(0, 0) * tau * tau + 2.0 * q_(0, 1) * tau * sigma + q_(1, 1) * sigma * sigma));
}

double gaussian_moment_1d(int power, double c) {
  if (!(c > 0.0)) throw DivergenceError("1D Gaussian moment needs c > 0");
  if (power < 0) throw ContractError("negative moment power");
  if (power % 2 != 0) return 0.0;
  // (2k-1)!! sqrt(pi) / (2^k c^{k + 1/2}), built up as prod_{j<k} (2j+1)/(2c).
  double value = std::sqrt(std::numbers::pi / c);
  for (int j = 0; j < power / 2; ++j) value *= (2.0 * j + 1.0) / (2.0 * c);
  return value;
}

std::complex<double> gaussian_moment_integral(const BivariatePoly& poly, const GaussianWeight2D& weight) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(weight.quadratic());
  const Eigen::Matrix2d rotation = solver.eigenvectors();
  const Eigen::Vector2d lambda = solver.eigenvalues();
  // x = R y turns x^T Q x into sum_k lambda_k y_k^2; |det R| = 1.
  const BivariatePoly rotated = poly.compose_linear(rotation);
  const int degree = rotated.degree();
  if (degree < 0) return 0.0;
  std::vector<double> m0(static_cast<std::size_t>(degree) + 1);
  std::vector<double> m1(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    m0[static_cast<std::size_t>(k)] = gaussian_moment_1d(k, lambda(0));
    m1[static_cast<std::size_t>(k)] = gaussian_moment_1d(k, lambda(1));
  }
  std::complex<double> total = 0.0;
  for (int a = 0; a <= degree; a += 2) {
    for (int b = 0; a + b <= degree; b += 2) {
      total += rotated.coeff(a, b) * (m0[static_cast<std::size_t>(a)] * m1[static_cast<std::size_t>(b)]);
    }
  }
  return total / (2.0 * std::numbers::pi);
}

}  // namespace ngtmst
