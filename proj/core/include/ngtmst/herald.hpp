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

#ifndef NGTMST_HERALD_HPP
#define NGTMST_HERALD_HPP

#include <array>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ngtmst/bivariate_poly.hpp"
#include "ngtmst/phase_space.hpp"
#include "ngtmst/truncated_series.hpp"

namespace ngtmst {

enum class Operation { Subtraction, Addition, Catalysis };

std::string to_string(Operation op);

/// Heralding scheme on a two-mode resource: ancilla mode i starts in |m_i>,
/// mixes with resource mode i on a beam splitter of transmissivity T_i, and the
/// detector on the ancilla output registers n_i photons.
struct HeraldSpec {
  int m1 = 0;
  int m2 = 0;
  int n1 = 0;
  int n2 = 0;
  double T1 = 1.0;
  double T2 = 1.0;

  /// Same (m, n, T) on both modes.
  static HeraldSpec symmetric(int m, int n, double transmissivity);
  /// Operation on mode 1 only; mode 2 gets the identity (m2 = n2 = 0, T2 = 1).
  static HeraldSpec single_mode(int m, int n, double transmissivity);

  /// Throws DomainError for negative counts or T outside [0, 1], and
  /// DegenerateHeraldError for T_i = 0.
  void validate() const;

  /// Classification of mode 1 or 2: m < n subtracts, m > n adds, m = n catalyzes.
  Operation operation(int mode) const;
  bool is_identity(int mode) const;
  bool is_symmetric() const { return m1 == m2 && n1 == n2 && T1 == T2; }
  /// Exactly one mode carries a non-trivial operation.
  bool is_asymmetric() const { return is_identity(1) != is_identity(2); }

  /// Derivative orders for (u1, v1, u2, v2, u1', v1', u2', v2').
  std::vector<int> derivative_orders() const { return {m1, m1, m2, m2, n1, n1, n2, n2}; }
  int total_photons() const { return m1 + m2 + n1 + n2; }

  std::string describe() const;
};

/// Quadratic-exponential data of the heralded characteristic function for a
/// fixed (r, kappa, T1, T2). Lambda = (tau1, sigma1, tau2, sigma2) and
/// u = (u1, v1, u2, v2, u1', v1', u2', v2'), where (u_i, v_i) generate the
/// ancilla input |m_i> and the primed pair the detected |n_i>.
struct HeraldForms {
  double kappa = 0.5;
  double r = 0.0;
  double T1 = 1.0;
  double T2 = 1.0;

  double t1 = 1.0, t2 = 1.0;          // sqrt(T_i)
  double r1 = 0.0, r2 = 0.0;          // sqrt(1 - T_i)
  double Gamma1 = 2.0, Gamma2 = 2.0;  // 1 + T_i
  double alpha = 0.0;                 // sinh r
  double beta = 1.0;                  // cosh r
  double gamma = 2.0;                 // 4 kappa (alpha^2 + beta^2)

  // Index 0 of b and c is unused so that b[7] reads as b7.
  std::array<double, 4> a{};  // a0..a3
  std::array<double, 11> b{};
  std::array<double, 11> c{};

  Eigen::Matrix4d M1;
  Eigen::Matrix<std::complex<double>, 8, 4> M2;
  Eigen::Matrix<double, 8, 8> M3;

  /// Normalization 4 / a0 produced by integrating out the two ancilla modes.
  double norm() const { return 4.0 / a[0]; }
};

HeraldForms build_forms(const ThermalSqueezeParams& params, double T1, double T2);

/// chi~(L) = norm * exp(L^T M1 L) * F1[exp(u^T M2 L + u^T M3 u)], where F1
/// takes the mixed u-derivative of orders (m1, m1, m2, m2, n1, n1, n2, n2) at
/// u = 0 times 2^-(m1+m2+n1+n2) / (m1! m2! n1! n2!).
class UnnormalizedChar {
 public:
  UnnormalizedChar(const HeraldSpec& spec, const ThermalSqueezeParams& params);

  const HeraldSpec& spec() const { return spec_; }
  const HeraldForms& forms() const { return *forms_; }

  /// The F1 part at a point; constant 1 for the vacuum-in/vacuum-out spec.
  std::complex<double> prefactor(const Eigen::Vector4d& lambda) const;
  /// Full unnormalized characteristic function (real up to roundoff).
  std::complex<double> operator()(const Eigen::Vector4d& lambda) const;
  /// chi~ at the origin.
  double probability() const { return probability_; }

  /// F1 part along Lambda = embedding * (tau, sigma), as a polynomial.
  BivariatePoly restricted_prefactor(const Eigen::Matrix<double, 4, 2>& embedding) const;
  /// Q with L^T M1 L = x^T Q x along the same embedding.
  Eigen::Matrix2d restricted_exponent(const Eigen::Matrix<double, 4, 2>& embedding) const;

 private:
  HeraldSpec spec_;
  std::shared_ptr<const HeraldForms> forms_;
  std::shared_ptr<const ScalarSeries> quadratic_;
  std::vector<int> orders_;
  double operator_scale_ = 1.0;
  double probability_ = 0.0;
};

UnnormalizedChar unnormalized_char(const HeraldSpec& spec, const ThermalSqueezeParams& params);

/// chi~ at Lambda = 0. Throws ConsistencyError if the result is complex or
/// negative beyond roundoff.
double success_probability(const HeraldSpec& spec, const ThermalSqueezeParams& params);

/// Heralded state with normalized characteristic function chi = chi~ / P.
class NgState {
 public:
  explicit NgState(UnnormalizedChar unnormalized);

  const HeraldSpec& spec() const { return chi_.spec(); }
  const HeraldForms& forms() const { return chi_.forms(); }
  ThermalSqueezeParams params() const { return {forms().r, forms().kappa}; }
  double probability() const { return chi_.probability(); }

  std::complex<double> chi(const Eigen::Vector4d& lambda) const;

  /// chi along Lambda = embedding * x is exp(-x^T Q x) * poly(x); the returned
  /// poly already includes norm / P.
  struct Restriction {
    Eigen::Matrix2d exponent;  // Q, so the Gaussian factor is exp(-x^T Q x)
    BivariatePoly poly;
  };
  Restriction restrict_to(const Eigen::Matrix<double, 4, 2>& embedding) const;

 private:
  UnnormalizedChar chi_;
};

/// Throws DegenerateHeraldError when the heralding probability is below 1e-300.
NgState normalized_char(const HeraldSpec& spec, const ThermalSqueezeParams& params);

}  // namespace ngtmst

#endif  // NGTMST_HERALD_HPP
