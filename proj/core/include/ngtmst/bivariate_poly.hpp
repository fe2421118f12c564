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

#ifndef NGTMST_BIVARIATE_POLY_HPP
#define NGTMST_BIVARIATE_POLY_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ngtmst {

/// Complex polynomial in (tau, sigma), stored densely by total degree.
class BivariatePoly {
 public:
  using Scalar = std::complex<double>;

  BivariatePoly() = default;
  BivariatePoly(Scalar constant);  // NOLINT(google-explicit-constructor): ring embedding

  static BivariatePoly monomial(int tau_power, int sigma_power, Scalar coeff = 1.0);
  /// c_tau * tau + c_sigma * sigma + c0.
  static BivariatePoly linear(Scalar c_tau, Scalar c_sigma, Scalar c0 = 0.0);

  /// Upper bound on the total degree; -1 for the zero polynomial.
  int degree() const { return degree_; }
  bool is_zero() const;

  Scalar coeff(int tau_power, int sigma_power) const;
  void add_term(int tau_power, int sigma_power, Scalar value);

  Scalar operator()(Scalar tau, Scalar sigma) const;

  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly& operator-=(const BivariatePoly& other);
  BivariatePoly& operator*=(Scalar s);
  BivariatePoly& operator*=(const BivariatePoly& other) { return *this = *this * other; }

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(BivariatePoly a, Scalar s) { return a *= s; }
  friend BivariatePoly operator*(Scalar s, BivariatePoly a) { return a *= s; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);

  /// q(x) = p(A x) with x = (tau, sigma).
  BivariatePoly compose_linear(const Eigen::Matrix2d& a) const;

  /// Largest coefficient magnitude.
  double max_abs_coeff() const;

 private:
  static std::size_t slot(int a, int b) {
    const auto d = static_cast<std::size_t>(a + b);
    return d * (d + 1) / 2 + static_cast<std::size_t>(b);
  }
  void grow(int degree);

  int degree_ = -1;
  std::vector<Scalar> coeffs_;
};

}  // namespace ngtmst

#endif  // NGTMST_BIVARIATE_POLY_HPP
