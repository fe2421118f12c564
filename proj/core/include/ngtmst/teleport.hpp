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

#ifndef NGTMST_TELEPORT_HPP
#define NGTMST_TELEPORT_HPP

#include <complex>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "ngtmst/herald.hpp"
#include "ngtmst/phase_space.hpp"

namespace ngtmst {

struct CoherentInput {
  double dx = 0.0;
  double dp = 0.0;
};

struct SqueezedVacuumInput {
  double eps = 0.0;
};

using InputState = std::variant<CoherentInput, SqueezedVacuumInput>;

std::string describe(const InputState& input);

std::complex<double> input_char(const InputState& input, double tau, double sigma);

/// W with chi_in(L) chi_in(-L) = exp(-x^T W x); displacements cancel here.
Eigen::Matrix2d input_overlap_exponent(const InputState& input);

/// Resource argument of the unit-gain BK output: Lambda = (tau, -sigma, tau, sigma).
Eigen::Matrix<double, 4, 2> teleport_embedding();

/// F = (1/2pi) Int chi_in(L) chi_in(-L) chi_res(tau, -sigma, tau, sigma) d^2L,
/// evaluated in closed form from the Gaussian-times-polynomial decomposition.
double fidelity(const NgState& resource, const InputState& input);

/// Fidelity with the plain TMST resource: 1/(1 + 2 kappa e^{-2r}) for coherent
/// inputs, 1/sqrt[(e^{2eps} + 2 kappa e^{-2r})(e^{-2eps} + 2 kappa e^{-2r})] for
/// squeezed vacuum.
double fidelity_tmst_closed_form(const ThermalSqueezeParams& params, const InputState& input);

struct TeleportReport {
  HeraldSpec spec;
  double r = 0.0;
  double kappa = 0.5;
  double fidelity = 0.0;       // F with the heralded resource
  double fidelity_base = 0.0;  // F with the TMST resource at the same (r, kappa)
  double delta = 0.0;          // fidelity - fidelity_base
  double probability = 0.0;
  double product = 0.0;        // delta * probability
};

TeleportReport report(const HeraldSpec& spec, const ThermalSqueezeParams& params, const InputState& input);

}  // namespace ngtmst

#endif  // NGTMST_TELEPORT_HPP
