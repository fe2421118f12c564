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

#ifndef NGTMST_GAUSSIAN_MOMENTS_HPP
#define NGTMST_GAUSSIAN_MOMENTS_HPP

#include <complex>

#include <Eigen/Dense>

#include "ngtmst/bivariate_poly.hpp"

namespace ngtmst {

/// Weight exp[-(Q11 tau^2 + 2 Q12 tau sigma + Q22 sigma^2)] with Q positive definite.
class GaussianWeight2D {
 public:
  /// Throws DivergenceError unless both eigenvalues of Q are positive.
  explicit GaussianWeight2D(const Eigen::Matrix2d& quadratic);
  GaussianWeight2D(double q11, double q12, double q22);

  const Eigen::Matrix2d& quadratic() const { return q_; }
  double operator()(double tau, double sigma) const;

 private:
  Eigen::Matrix2d q_;
};

/// Integral of x^power exp(-c x^2) over the real line (zero for odd powers).
double gaussian_moment_1d(int power, double c);

/// (1/2pi) * integral of poly(tau, sigma) * weight(tau, sigma) over R^2, in
/// closed form: rotate onto the eigenbasis of Q and apply the 1D moments.
std::complex<double> gaussian_moment_integral(const BivariatePoly& poly, const GaussianWeight2D& weight);

}  // namespace ngtmst

#endif  // NGTMST_GAUSSIAN_MOMENTS_HPP
