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

#ifndef NGTMST_PHASE_SPACE_HPP
#define NGTMST_PHASE_SPACE_HPP

#include <complex>

#include <Eigen/Dense>

namespace ngtmst {

/// Quadratures are ordered (q1, p1, q2, p2, ...). Characteristic-function
/// arguments use the same layout: Lambda = (tau1, sigma1, tau2, sigma2, ...),
/// so the herald matrices index directly into the 2-mode vectors below.
/// Natural units with hbar = 1; the vacuum covariance is I/2.

/// Block-diagonal symplectic form with `modes` copies of [[0, 1], [-1, 0]].
Eigen::MatrixXd symplectic_form(int modes);

class SymplecticTransform {
 public:
  /// Throws DomainError if S Omega S^T differs from Omega by more than `tol`.
  explicit SymplecticTransform(Eigen::MatrixXd matrix, double tol = 1e-12);

  static SymplecticTransform identity(int modes);

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  int modes() const { return static_cast<int>(matrix_.rows() / 2); }

  SymplecticTransform then(const SymplecticTransform& next) const;
  SymplecticTransform inverse() const;

  /// Largest entry of |S Omega S^T - Omega|.
  double symplectic_defect() const;

 private:
  Eigen::MatrixXd matrix_;
};

/// Beam splitter of transmissivity T between modes i and j (0-based) of an
/// n-mode system: sqrt(T) on the diagonal blocks, +sqrt(1-T) in the (i, j)
/// block and -sqrt(1-T) in the (j, i) block.
SymplecticTransform beam_splitter(double transmissivity, int i, int j, int modes);

/// Two-mode squeezer: cosh(r) I on the diagonal blocks, sinh(r) Z off-diagonal.
SymplecticTransform two_mode_squeezer(double r, int i, int j, int modes);

class GaussianState {
 public:
  GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

  static GaussianState vacuum(int modes);
  static GaussianState coherent(double dx, double dp);
  /// Single-mode squeezed vacuum whose characteristic function is
  /// exp[-(tau^2 e^{2 eps} + sigma^2 e^{-2 eps}) / 4].
  static GaussianState squeezed_vacuum(double eps);

  int modes() const { return static_cast<int>(mean_.size() / 2); }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

  /// Smallest eigenvalue of the Hermitian matrix V + (i/2) Omega.
  double min_uncertainty_eigenvalue() const;
  bool is_physical(double tol = 1e-10) const { return min_uncertainty_eigenvalue() >= -tol; }

  /// d -> S d, V -> S V S^T.
  GaussianState transformed(const SymplecticTransform& s) const;

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
};

/// Squeezing r >= 0 applied to two thermal modes with kappa = n_th + 1/2.
class ThermalSqueezeParams {
 public:
  ThermalSqueezeParams(double r, double kappa);

  double r() const { return r_; }
  double kappa() const { return kappa_; }
  double n_th() const { return kappa_ - 0.5; }

  double alpha() const;  // sinh r
  double beta() const;   // cosh r
  double gamma() const;  // 4 kappa (alpha^2 + beta^2)

 private:
  double r_;
  double kappa_;
};

/// Zero-mean state with covariance S(r) (kappa I_4) S(r)^T.
GaussianState tmst_state(const ThermalSqueezeParams& params);

/// exp[-1/2 L^T (Omega V Omega^T) L - i (Omega d)^T L].
std::complex<double> gaussian_char(const GaussianState& state, const Eigen::VectorXd& lambda);

double laguerre(int n, double x);
double assoc_laguerre(int n, int alpha, double x);

double fock_char(int n, double tau, double sigma);
double squeezed_vacuum_char(double eps, double tau, double sigma);
std::complex<double> coherent_char(double dx, double dp, double tau, double sigma);

}  // namespace ngtmst

#endif  // NGTMST_PHASE_SPACE_HPP
