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

#include "ngtmst/phase_space.hpp"

#include <cmath>
#include <string>

#include "ngtmst/errors.hpp"

namespace ngtmst {

namespace {

void check_mode_pair(int i, int j, int modes) {
  if (modes < 2 || i < 0 || j < 0 || i >= modes || j >= modes || i == j) {
    throw DimensionError("invalid mode pair (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") for " + std::to_string(modes) + " modes");
  }
}

}  // namespace

Eigen::MatrixXd symplectic_form(int modes) {
  if (modes < 1) throw DimensionError("symplectic_form needs at least one mode");
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int k = 0; k < modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

SymplecticTransform::SymplecticTransform(Eigen::MatrixXd matrix, double tol)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0 || matrix_.rows() % 2 != 0) {
    throw DimensionError("symplectic matrix must be square with even dimension");
  }
  if (!matrix_.allFinite()) throw DomainError("symplectic matrix has non-finite entries");
  if (symplectic_defect() > tol) {
    throw DomainError("matrix is not symplectic (defect " + std::to_string(symplectic_defect()) +
                      ")");
  }
}

SymplecticTransform SymplecticTransform::identity(int modes) {
  return SymplecticTransform(Eigen::MatrixXd::Identity(2 * modes, 2 * modes));
}

SymplecticTransform SymplecticTransform::then(const SymplecticTransform& next) const {
  if (next.modes() != modes()) throw DimensionError("composing transforms of different size");
  return SymplecticTransform(next.matrix_ * matrix_, 1e-10);
}

SymplecticTransform SymplecticTransform::inverse() const {
  // S^{-1} = -Omega S^T Omega for symplectic S.
  const Eigen::MatrixXd omega = symplectic_form(modes());
  return SymplecticTransform(-omega * matrix_.transpose() * omega, 1e-10);
}

double SymplecticTransform::symplectic_defect() const {
  const Eigen::MatrixXd omega = symplectic_form(modes());
  return (matrix_ * omega * matrix_.transpose() - omega).cwiseAbs().maxCoeff();
}

SymplecticTransform beam_splitter(double transmissivity, int i, int j, int modes) {
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw DomainError("beam splitter transmissivity must lie in [0, 1], got " +
                      std::to_string(transmissivity));
  }
  check_mode_pair(i, j, modes);
  const double t = std::sqrt(transmissivity);
  const double r = std::sqrt(1.0 - transmissivity);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
  for (int k = 0; k < 2; ++k) {
    s(2 * i + k, 2 * i + k) = t;
    s(2 * j + k, 2 * j + k) = t;
    s(2 * i + k, 2 * j + k) = r;
    s(2 * j + k, 2 * i + k) = -r;
  }
  return SymplecticTransform(std::move(s));
}

SymplecticTransform two_mode_squeezer(double r, int i, int j, int modes) {
  if (!std::isfinite(r)) throw DomainError("squeezing parameter must be finite");
  check_mode_pair(i, j, modes);
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
  for (int k = 0; k < 2; ++k) {
    const double z = (k == 0) ? 1.0 : -1.0;
    m(2 * i + k, 2 * i + k) = c;
    m(2 * j + k, 2 * j + k) = c;
    m(2 * i + k, 2 * j + k) = s * z;
    m(2 * j + k, 2 * i + k) = s * z;
  }
  // Large r loses relative precision in S Omega S^T; scale the check.
  return SymplecticTransform(std::move(m), 1e-12 * std::max(1.0, c * c));
}

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
  if (mean_.size() == 0 || mean_.size() % 2 != 0) {
    throw DimensionError("mean vector must have even, non-zero length");
  }
  if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
    throw DimensionError("covariance matrix dimension does not match mean vector");
  }
  const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
  if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("covariance matrix must be symmetric");
  }
}

GaussianState GaussianState::vacuum(int modes) {
  return GaussianState(Eigen::VectorXd::Zero(2 * modes),
                       0.5 * Eigen::MatrixXd::Identity(2 * modes, 2 * modes));
}

GaussianState GaussianState::coherent(double dx, double dp) {
  Eigen::VectorXd d(2);
  d << dx, dp;
  return GaussianState(std::move(d), 0.5 * Eigen::MatrixXd::Identity(2, 2));
}

GaussianState GaussianState::squeezed_vacuum(double eps) {
  // Omega V Omega^T swaps the diagonal of a single-mode V.
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(2, 2);
  v(0, 0) = 0.5 * std::exp(-2.0 * eps);
  v(1, 1) = 0.5 * std::exp(2.0 * eps);
  return GaussianState(Eigen::VectorXd::Zero(2), std::move(v));
}

double GaussianState::min_uncertainty_eigenvalue() const {
  const Eigen::MatrixXd omega = symplectic_form(modes());
  const Eigen::MatrixXcd h =
      cov_.cast<std::complex<double>>() + std::complex<double>(0.0, 0.5) * omega.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

GaussianState GaussianState::transformed(const SymplecticTransform& s) const {
  if (s.modes() != modes()) throw DimensionError("transform size does not match state");
  const Eigen::MatrixXd& m = s.matrix();
  Eigen::MatrixXd cov = m * cov_ * m.transpose();
  cov = 0.5 * (cov + cov.transpose()).eval();
  return GaussianState(m * mean_, std::move(cov));
}

ThermalSqueezeParams::ThermalSqueezeParams(double r, double kappa) : r_(r), kappa_(kappa) {
  if (!std::isfinite(r) || r < 0.0) {
    throw DomainError("squeezing r must be finite and non-negative, got " + std::to_string(r));
  }
  if (!std::isfinite(kappa) || kappa < 0.5) {
    throw DomainError("thermal parameter kappa must be >= 1/2, got " + std::to_string(kappa));
  }
}

double ThermalSqueezeParams::alpha() const { return std::sinh(r_); }
double ThermalSqueezeParams::beta() const { return std::cosh(r_); }
double ThermalSqueezeParams::gamma() const {
  const double a = alpha();
  const double b = beta();
  return 4.0 * kappa_ * (a * a + b * b);
}

GaussianState tmst_state(const ThermalSqueezeParams& params) {
  const SymplecticTransform s = two_mode_squeezer(params.r(), 0, 1, 2);
  const GaussianState thermal(Eigen::VectorXd::Zero(4),
                              params.kappa() * Eigen::MatrixXd::Identity(4, 4));
  return thermal.transformed(s);
}

std::complex<double> gaussian_char(const GaussianState& state, const Eigen::VectorXd& lambda) {
  if (lambda.size() != state.mean().size()) {
    throw DimensionError("characteristic-function argument has length " +
                         std::to_string(lambda.size()) + ", expected " +
                         std::to_string(state.mean().size()));
  }
  const Eigen::MatrixXd omega = symplectic_form(state.modes());
  const double quad = lambda.dot(omega * state.cov() * omega.transpose() * lambda);
  const double lin = (omega * state.mean()).dot(lambda);
  return std::exp(std::complex<double>(-0.5 * quad, -lin));
}

double laguerre(int n, double x) { return assoc_laguerre(n, 0, x); }

double assoc_laguerre(int n, int alpha, double x) {
  if (n < 0) throw DomainError("Laguerre degree must be non-negative");
  // (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double fock_char(int n, double tau, double sigma) {
  const double x = 0.5 * (tau * tau + sigma * sigma);
  return std::exp(-0.5 * x) * laguerre(n, x);
}

double squeezed_vacuum_char(double eps, double tau, double sigma) {
  if (!std::isfinite(eps)) throw DomainError("squeezing eps must be finite");
  return std::exp(-0.25 * (tau * tau * std::exp(2.0 * eps) + sigma * sigma * std::exp(-2.0 * eps)));
}

std::complex<double> coherent_char(double dx, double dp, double tau, double sigma) {
  return std::exp(std::complex<double>(-0.25 * (tau * tau + sigma * sigma), -(tau * dp - sigma * dx)));
}

}  // namespace ngtmst
