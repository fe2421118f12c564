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

#include "ngtmst/teleport.hpp"

#include <cmath>
#include <sstream>

#include "ngtmst/errors.hpp"
#include "ngtmst/gaussian_moments.hpp"

namespace ngtmst {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string describe(const InputState& input) {
  return std::visit(Overloaded{[](const CoherentInput& c) {
                                 std::ostringstream os;
                                 os << "coherent(dx=" << c.dx << ", dp=" << c.dp << ")";
                                 return os.str();
                               },
                               [](const SqueezedVacuumInput& s) {
                                 std::ostringstream os;
                                 os << "sqvac(eps=" << s.eps << ")";
                                 return os.str();
                               }},
                    input);
}

std::complex<double> input_char(const InputState& input, double tau, double sigma) {
  return std::visit(
      Overloaded{[&](const CoherentInput& c) { return coherent_char(c.dx, c.dp, tau, sigma); },
                 [&](const SqueezedVacuumInput& s) {
                   return std::complex<double>(squeezed_vacuum_char(s.eps, tau, sigma));
                 }},
      input);
}

Eigen::Matrix2d input_overlap_exponent(const InputState& input) {
  return std::visit(Overloaded{[](const CoherentInput&) -> Eigen::Matrix2d {
                                 return 0.5 * Eigen::Matrix2d::Identity();
                               },
                               [](const SqueezedVacuumInput& s) -> Eigen::Matrix2d {
                                 if (!std::isfinite(s.eps)) throw DomainError("squeezing eps must be finite");
                                 Eigen::Matrix2d w = Eigen::Matrix2d::Zero();
                                 w(0, 0) = 0.5 * std::exp(2.0 * s.eps);
                                 w(1, 1) = 0.5 * std::exp(-2.0 * s.eps);
                                 return w;
                               }},
                    input);
}

Eigen::Matrix<double, 4, 2> teleport_embedding() {
  Eigen::Matrix<double, 4, 2> e;
  e << 1.0, 0.0,  //
      0.0, -1.0,  //
      1.0, 0.0,   //
      0.0, 1.0;
  return e;
}

double fidelity(const NgState& resource, const InputState& input) {
  const NgState::Restriction along = resource.restrict_to(teleport_embedding());
  const GaussianWeight2D weight(along.exponent + input_overlap_exponent(input));
  const std::complex<double> value = gaussian_moment_integral(along.poly, weight);
  if (std::abs(value.imag()) > 1e-8 * std::max(1.0, std::abs(value.real()))) {
    throw ConsistencyError("teleportation fidelity has an imaginary part for " + resource.spec().describe());
  }
  return value.real();
}

double fidelity_tmst_closed_form(const ThermalSqueezeParams& params, const InputState& input) {
  const double noise = 2.0 * params.kappa() * std::exp(-2.0 * params.r());
  return std::visit(Overloaded{[&](const CoherentInput&) { return 1.0 / (1.0 + noise); },
                               [&](const SqueezedVacuumInput& s) {
                                 return 1.0 / std::sqrt((std::exp(2.0 * s.eps) + noise) *
                                                        (std::exp(-2.0 * s.eps) + noise));
                               }},
                    input);
}

TeleportReport report(const HeraldSpec& spec, const ThermalSqueezeParams& params, const InputState& input) {
  const NgState state = normalized_char(spec, params);
  TeleportReport out;
  out.spec = spec;
  out.r = params.r();
  out.kappa = params.kappa();
  out.fidelity = fidelity(state, input);
  out.fidelity_base = fidelity_tmst_closed_form(params, input);
  out.delta = out.fidelity - out.fidelity_base;
  out.probability = state.probability();
  out.product = out.delta * out.probability;
  return out;
}

}  // namespace ngtmst
