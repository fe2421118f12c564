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

#ifndef NGTMST_FOCK_ORACLE_HPP
#define NGTMST_FOCK_ORACLE_HPP

#include <complex>

#include <Eigen/Dense>

#include "ngtmst/herald.hpp"
#include "ngtmst/phase_space.hpp"
#include "ngtmst/teleport.hpp"

// Brute-force truncated Fock-basis reference for the heralding and
// teleportation results. Slow and memory-hungry by design; meant for tests.
namespace ngtmst::fock {

inline constexpr int kDefaultCutoff = 25;

/// Single-mode ladder operators on span{|0>, ..., |N>}.
class FockOperatorSpace {
 public:
  explicit FockOperatorSpace(int cutoff);

  int cutoff() const { return cutoff_; }
  int dim() const { return cutoff_ + 1; }
  Eigen::MatrixXd annihilation() const;
  Eigen::MatrixXd creation() const { return annihilation().transpose(); }
  Eigen::MatrixXd number() const;

 private:
  int cutoff_;
};

/// Density matrix on `modes` modes, each truncated at `cutoff` photons. Basis
/// index of |n1, n2, ...> is row-major with the last mode fastest.
class DensityMatrix {
 public:
  DensityMatrix(int modes, int cutoff);
  DensityMatrix(int modes, int cutoff, Eigen::MatrixXcd matrix);

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Eigen::MatrixXcd& matrix() { return matrix_; }

  int index(int n1, int n2) const { return n1 * (cutoff_ + 1) + n2; }

  double trace() const { return matrix_.trace().real(); }
  double hermiticity_defect() const;
  double min_eigenvalue() const;
  double purity() const;

  DensityMatrix normalized() const;

 private:
  int modes_;
  int cutoff_;
  Eigen::MatrixXcd matrix_;
};

/// Thermal occupation probabilities p_n = nbar^n / (nbar + 1)^(n + 1), n <= cutoff.
Eigen::VectorXd thermal_populations(double nbar, int cutoff);

/// S2 (rho_th x rho_th) S2^dagger with S2 = exp[r (a^dag b^dag - a b)]. The
/// squeezer is exponentiated on an enlarged space and the result truncated;
/// throws CutoffError when more than 1e-6 of the trace falls outside.
DensityMatrix tmst_density(const ThermalSqueezeParams& params, int cutoff = kDefaultCutoff);

/// exp[theta (a^dag b - a b^dag)], theta = arccos sqrt(T), on two modes truncated
/// at `cutoff`. Exact on the subspace with at most `cutoff` photons in total.
Eigen::MatrixXd beam_splitter_unitary(double transmissivity, int cutoff);

/// <n|_b U |m>_b as an operator on mode a: the resource-mode action of a beam
/// splitter with |m> in the ancilla and |n> detected.
Eigen::MatrixXd herald_kraus(double transmissivity, int m, int n, int cutoff);

/// (K1 x K2) rho (K1 x K2)^dagger; the trace is the heralding probability.
DensityMatrix apply_herald(const DensityMatrix& rho, const HeraldSpec& spec);

struct HeraldOutcome {
  double probability = 0.0;
  DensityMatrix state;  // normalized
};

/// Throws DegenerateHeraldError when the probability is below 1e-12.
HeraldOutcome herald_oracle(const HeraldSpec& spec, const ThermalSqueezeParams& params, int cutoff = kDefaultCutoff);

/// Ideal ladder action on one mode (1 or 2): a^k rho a^dag^k for subtraction,
/// a^dag^k rho a^k for addition. Unnormalized.
DensityMatrix apply_ladder(const DensityMatrix& rho, int mode, int power, bool creation);

/// <m| D(alpha) |n> for m, n <= cutoff.
Eigen::MatrixXcd displacement_matrix(std::complex<double> alpha, int cutoff);

/// Tr[rho exp(-i L^T Omega xi)] for a two-mode rho. Truncation error stays
/// negligible for |L| <= 4 at cutoff 25.
std::complex<double> char_from_density(const DensityMatrix& rho, const Eigen::Vector4d& lambda);

/// Teleportation fidelity as Tr[rho O], where O is the input-weighted average
/// of D(alpha*) x D(alpha) over the teleported-mode phase space, integrated
/// exactly by tensor Gauss-Hermite quadrature.
class FidelityOverlap {
 public:
  FidelityOverlap(const InputState& input, int cutoff = kDefaultCutoff);

  int cutoff() const { return cutoff_; }
  double fidelity(const DensityMatrix& rho) const;

 private:
  int cutoff_;
  Eigen::MatrixXcd overlap_;
};

}  // namespace ngtmst::fock

#endif  // NGTMST_FOCK_ORACLE_HPP
