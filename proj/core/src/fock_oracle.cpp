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

#include "ngtmst/fock_oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "ngtmst/errors.hpp"

namespace ngtmst::fock {

namespace {

using Complex = std::complex<double>;

void check_cutoff(int cutoff) {
  if (cutoff < 1 || cutoff > 80) throw DomainError("Fock cutoff must lie in [1, 80]");
}

// exp of the tridiagonal antisymmetric generator of a two-mode squeezer,
// restricted to the states |k + d, k> (or |k, k - d> for d < 0), k = 0..len-1.
Eigen::MatrixXd squeezer_block(double r, int d, int len) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(len, len);
  const int ad = std::abs(d);
  for (int k = 0; k + 1 < len; ++k) {
    const double amp = r * std::sqrt(static_cast<double>(k + ad + 1) * (k + 1));
    g(k + 1, k) = amp;
    g(k, k + 1) = -amp;
  }
  return g.exp();
}

// Beam-splitter block on |j, L - j>, j = 0..L.
Eigen::MatrixXd beam_splitter_block(double theta, int total) {
  const int len = total + 1;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(len, len);
  for (int j = 0; j < total; ++j) {
    const double amp = theta * std::sqrt(static_cast<double>(j + 1) * (total - j));
    g(j + 1, j) = amp;
    g(j, j + 1) = -amp;
  }
  return g.exp();
}

double mixing_angle(double transmissivity) {
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) throw DomainError("transmissivity must lie in [0, 1]");
  return std::acos(std::sqrt(transmissivity));
}

// Single-mode operator with at most one nonzero per row, stored as the source
// column (or -1) and the value.
struct RowShift {
  std::vector<int> source;
  std::vector<double> value;
};

RowShift row_shift(const Eigen::MatrixXd& op) {
  RowShift out{std::vector<int>(static_cast<std::size_t>(op.rows()), -1),
               std::vector<double>(static_cast<std::size_t>(op.rows()), 0.0)};
  for (int i = 0; i < op.rows(); ++i) {
    for (int j = 0; j < op.cols(); ++j) {
      if (op(i, j) == 0.0) continue;
      if (out.source[static_cast<std::size_t>(i)] >= 0) throw ContractError("operator is not a shifted diagonal");
      out.source[static_cast<std::size_t>(i)] = j;
      out.value[static_cast<std::size_t>(i)] = op(i, j);
    }
  }
  return out;
}

// (A1 x A2) rho (A1 x A2)^dagger for real shifted-diagonal A1, A2.
DensityMatrix apply_local(const DensityMatrix& rho, const Eigen::MatrixXd& a1, const Eigen::MatrixXd& a2) {
  if (rho.modes() != 2) throw DimensionError("two-mode density matrix required");
  const RowShift s1 = row_shift(a1);
  const RowShift s2 = row_shift(a2);
  const int d = rho.cutoff() + 1;
  std::vector<int> src(static_cast<std::size_t>(d * d), -1);
  std::vector<double> amp(src.size(), 0.0);
  for (int i1 = 0; i1 < d; ++i1) {
    for (int i2 = 0; i2 < d; ++i2) {
      const auto k1 = static_cast<std::size_t>(i1);
      const auto k2 = static_cast<std::size_t>(i2);
      if (s1.source[k1] < 0 || s2.source[k2] < 0) continue;
      const auto idx = static_cast<std::size_t>(rho.index(i1, i2));
      src[idx] = rho.index(s1.source[k1], s2.source[k2]);
      amp[idx] = s1.value[k1] * s2.value[k2];
    }
  }
  DensityMatrix out(2, rho.cutoff());
  const auto& in = rho.matrix();
  auto& m = out.matrix();
  for (int j = 0; j < m.cols(); ++j) {
    const auto sj = static_cast<std::size_t>(j);
    if (src[sj] < 0) continue;
    for (int i = 0; i < m.rows(); ++i) {
      const auto si = static_cast<std::size_t>(i);
      if (src[si] < 0) continue;
      m(i, j) = amp[si] * amp[sj] * in(src[si], src[sj]);
    }
  }
  return out;
}

// <m|D(alpha)|n> without the exp(-|alpha|^2 / 2) factor.
Eigen::MatrixXcd displacement_polynomial(Complex alpha, int cutoff) {
  const int d = cutoff + 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  const double x = std::norm(alpha);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const int lo = std::min(m, n);
      const int k = std::abs(m - n);
      const Complex base = m >= n ? alpha : -std::conj(alpha);
      const double scale = std::exp(0.5 * (std::lgamma(lo + 1.0) - std::lgamma(lo + k + 1.0)));
      out(m, n) = scale * std::pow(base, k) * assoc_laguerre(lo, k, x);
    }
  }
  return out;
}

// Golub-Welsch nodes and weights for the weight exp(-x^2).
void gauss_hermite(int count, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(count, count);
  for (int k = 1; k < count; ++k) {
    jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * k);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  nodes = solver.eigenvalues();
  weights = std::sqrt(std::numbers::pi) * solver.eigenvectors().row(0).cwiseAbs2().transpose();
}

}  // namespace

FockOperatorSpace::FockOperatorSpace(int cutoff) : cutoff_(cutoff) { check_cutoff(cutoff); }

Eigen::MatrixXd FockOperatorSpace::annihilation() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim(), dim());
  for (int n = 1; n < dim(); ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::MatrixXd FockOperatorSpace::number() const {
  return Eigen::VectorXd::LinSpaced(dim(), 0.0, static_cast<double>(cutoff_)).asDiagonal();
}

DensityMatrix::DensityMatrix(int modes, int cutoff) : modes_(modes), cutoff_(cutoff) {
  check_cutoff(cutoff);
  if (modes < 1 || modes > 2) throw DimensionError("only one- and two-mode density matrices are supported");
  const int d = modes == 1 ? cutoff + 1 : (cutoff + 1) * (cutoff + 1);
  matrix_ = Eigen::MatrixXcd::Zero(d, d);
}

DensityMatrix::DensityMatrix(int modes, int cutoff, Eigen::MatrixXcd matrix) : DensityMatrix(modes, cutoff) {
  if (matrix.rows() != matrix_.rows() || matrix.cols() != matrix_.cols()) {
    throw DimensionError("density matrix has the wrong dimension for its cutoff");
  }
  matrix_ = std::move(matrix);
}

double DensityMatrix::hermiticity_defect() const { return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::min_eigenvalue() const {
  const Eigen::MatrixXcd h = 0.5 * (matrix_ + matrix_.adjoint());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

DensityMatrix DensityMatrix::normalized() const {
  const double t = trace();
  if (!(t > 0.0)) throw DegenerateHeraldError("cannot normalize a density matrix with zero trace");
  return {modes_, cutoff_, matrix_ / t};
}

Eigen::VectorXd thermal_populations(double nbar, int cutoff) {
  if (!(nbar >= 0.0)) throw DomainError("thermal occupation must be non-negative");
  Eigen::VectorXd p(cutoff + 1);
  const double ratio = nbar / (nbar + 1.0);
  p(0) = 1.0 / (nbar + 1.0);
  for (int n = 1; n <= cutoff; ++n) p(n) = p(n - 1) * ratio;
  return p;
}

DensityMatrix tmst_density(const ThermalSqueezeParams& params, int cutoff) {
  check_cutoff(cutoff);
  const int big = 2 * cutoff + 20;  // working truncation for the squeezer
  const Eigen::VectorXd p = thermal_populations(params.n_th(), big);
  DensityMatrix rho(2, cutoff);
  auto& m = rho.matrix();

  for (int d = -big; d <= big; ++d) {
    const int ad = std::abs(d);
    const int len = big + 1 - ad;
    const Eigen::MatrixXd block = squeezer_block(params.r(), d, len);
    const int kept = std::max(0, cutoff + 1 - ad);  // states with both counts <= cutoff
    if (kept == 0) continue;
    std::vector<int> idx(static_cast<std::size_t>(kept));
    for (int k = 0; k < kept; ++k) {
      idx[static_cast<std::size_t>(k)] = d >= 0 ? rho.index(k + ad, k) : rho.index(k, k + ad);
    }
    for (int src = 0; src < len; ++src) {
      const double weight = d >= 0 ? p(src + ad) * p(src) : p(src) * p(src + ad);
      if (weight < 1e-300) continue;
      const Eigen::VectorXd col = block.col(src).head(kept);
      for (int i = 0; i < kept; ++i) {
        for (int j = 0; j < kept; ++j) {
          m(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]) += weight * col(i) * col(j);
        }
      }
    }
  }
  const double deficiency = 1.0 - rho.trace();
  if (deficiency > 1e-6) {
    throw CutoffError("Fock cutoff " + std::to_string(cutoff) + " loses " + std::to_string(deficiency) +
                      " of the trace");
  }
  return rho;
}

Eigen::MatrixXd beam_splitter_unitary(double transmissivity, int cutoff) {
  check_cutoff(cutoff);
  const double theta = mixing_angle(transmissivity);
  const int d = cutoff + 1;
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(d * d, d * d);
  for (int total = 0; total <= 2 * cutoff; ++total) {
    const Eigen::MatrixXd block = beam_splitter_block(theta, total);
    for (int j = std::max(0, total - cutoff); j <= std::min(total, cutoff); ++j) {
      for (int i = std::max(0, total - cutoff); i <= std::min(total, cutoff); ++i) {
        u(i * d + (total - i), j * d + (total - j)) = block(i, j);
      }
    }
  }
  return u;
}

Eigen::MatrixXd herald_kraus(double transmissivity, int m, int n, int cutoff) {
  check_cutoff(cutoff);
  if (m < 0 || n < 0) throw DomainError("photon counts must be non-negative");
  const double theta = mixing_angle(transmissivity);
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(cutoff + 1, cutoff + 1);
  for (int in = 0; in <= cutoff; ++in) {
    const int total = in + m;
    const int out = total - n;
    if (out < 0 || out > cutoff) continue;
    k(out, in) = beam_splitter_block(theta, total)(out, in);
  }
  return k;
}

DensityMatrix apply_herald(const DensityMatrix& rho, const HeraldSpec& spec) {
  spec.validate();
  const int n = rho.cutoff();
  return apply_local(rho, herald_kraus(spec.T1, spec.m1, spec.n1, n), herald_kraus(spec.T2, spec.m2, spec.n2, n));
}

HeraldOutcome herald_oracle(const HeraldSpec& spec, const ThermalSqueezeParams& params, int cutoff) {
  const DensityMatrix out = apply_herald(tmst_density(params, cutoff), spec);
  const double p = out.trace();
  if (!(p >= 1e-12)) throw DegenerateHeraldError("oracle heralding probability below 1e-12 for " + spec.describe());
  return {p, out.normalized()};
}

DensityMatrix apply_ladder(const DensityMatrix& rho, int mode, int power, bool creation) {
  if (mode != 1 && mode != 2) throw DimensionError("mode must be 1 or 2");
  if (power < 0) throw DomainError("ladder power must be non-negative");
  const FockOperatorSpace space(rho.cutoff());
  Eigen::MatrixXd op = Eigen::MatrixXd::Identity(space.dim(), space.dim());
  const Eigen::MatrixXd step = creation ? space.creation() : space.annihilation();
  for (int i = 0; i < power; ++i) op = step * op;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(space.dim(), space.dim());
  return mode == 1 ? apply_local(rho, op, id) : apply_local(rho, id, op);
}

Eigen::MatrixXcd displacement_matrix(Complex alpha, int cutoff) {
  check_cutoff(cutoff);
  return std::exp(-0.5 * std::norm(alpha)) * displacement_polynomial(alpha, cutoff);
}

std::complex<double> char_from_density(const DensityMatrix& rho, const Eigen::Vector4d& lambda) {
  if (rho.modes() != 2) throw DimensionError("two-mode density matrix required");
  const double s = std::numbers::sqrt2;
  const Eigen::MatrixXcd d1 = displacement_matrix({lambda(0) / s, lambda(1) / s}, rho.cutoff());
  const Eigen::MatrixXcd d2 = displacement_matrix({lambda(2) / s, lambda(3) / s}, rho.cutoff());
  const int d = rho.cutoff() + 1;
  const auto& m = rho.matrix();
  Complex sum = 0.0;
  for (int a1 = 0; a1 < d; ++a1) {
    for (int a2 = 0; a2 < d; ++a2) {
      for (int b1 = 0; b1 < d; ++b1) {
        for (int b2 = 0; b2 < d; ++b2) {
          sum += m(rho.index(a1, a2), rho.index(b1, b2)) * d1(b1, a1) * d2(b2, a2);
        }
      }
    }
  }
  return sum;
}

FidelityOverlap::FidelityOverlap(const InputState& input, int cutoff) : cutoff_(cutoff) {
  check_cutoff(cutoff);
  // Input weight chi_in(L) chi_in(-L) = exp(-(c_tau tau^2 + c_sigma sigma^2)).
  double c_tau = 0.5;
  double c_sigma = 0.5;
  if (const auto* sq = std::get_if<SqueezedVacuumInput>(&input)) {
    c_tau = 0.5 * std::exp(2.0 * sq->eps);
    c_sigma = 0.5 * std::exp(-2.0 * sq->eps);
  }
  // The two displacement envelopes add exp(-(tau^2 + sigma^2) / 2).
  const double a_tau = c_tau + 0.5;
  const double a_sigma = c_sigma + 0.5;

  const int d = cutoff + 1;
  const int count = 2 * cutoff + 2;  // exact for the degree-4N polynomial part
  Eigen::VectorXd x;
  Eigen::VectorXd w;
  gauss_hermite(count, x, w);

  const int nodes = count * count;
  Eigen::MatrixXcd left(d * d, nodes);
  Eigen::MatrixXcd right(d * d, nodes);
  const double jac = 1.0 / (2.0 * std::numbers::pi * std::sqrt(a_tau * a_sigma));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      const double tau = x(i) / std::sqrt(a_tau);
      const double sigma = x(j) / std::sqrt(a_sigma);
      const Complex alpha(tau / std::numbers::sqrt2, sigma / std::numbers::sqrt2);
      const Eigen::MatrixXcd p1 = displacement_polynomial(std::conj(alpha), cutoff);
      const Eigen::MatrixXcd p2 = displacement_polynomial(alpha, cutoff);
      const int col = i * count + j;
      left.col(col) = (jac * w(i) * w(j)) * p1.reshaped();
      right.col(col) = p2.reshaped();
    }
  }
  // pair(b1 + d a1, b2 + d a2) = sum_k w_k P1_k(b1, a1) P2_k(b2, a2)
  const Eigen::MatrixXcd pair = left * right.transpose();
  overlap_.resize(d * d, d * d);
  for (int a1 = 0; a1 < d; ++a1) {
    for (int b1 = 0; b1 < d; ++b1) {
      for (int a2 = 0; a2 < d; ++a2) {
        for (int b2 = 0; b2 < d; ++b2) {
          overlap_(b1 * d + b2, a1 * d + a2) = pair(b1 + d * a1, b2 + d * a2);
        }
      }
    }
  }
}

double FidelityOverlap::fidelity(const DensityMatrix& rho) const {
  if (rho.modes() != 2 || rho.cutoff() != cutoff_) throw DimensionError("density matrix does not match the overlap");
  const Complex value = (rho.matrix().cwiseProduct(overlap_.transpose())).sum() / rho.trace();
  if (std::abs(value.imag()) > 1e-8) throw ConsistencyError("oracle fidelity has an imaginary part");
  return value.real();
}

}  // namespace ngtmst::fock
