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

#include "ngtmst/herald.hpp"

#include <cmath>
#include <sstream>

#include "ngtmst/errors.hpp"

namespace ngtmst {

namespace {

constexpr double kImagTolerance = 1e-8;

void check_transmissivity(double t, const char* name) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in (0, 1], got " + std::to_string(t));
  }
  if (t == 0.0) {
    throw DegenerateHeraldError(std::string(name) +
                                " = 0 (total reflection) replaces the resource mode and is unsupported");
  }
}

}  // namespace

std::string to_string(Operation op) {
  switch (op) {
    case Operation::Subtraction:
      return "PS";
    case Operation::Addition:
      return "PA";
    case Operation::Catalysis:
      return "PC";
  }
  return "?";
}

HeraldSpec HeraldSpec::symmetric(int m, int n, double transmissivity) {
  return {m, m, n, n, transmissivity, transmissivity};
}

HeraldSpec HeraldSpec::single_mode(int m, int n, double transmissivity) {
  return {m, 0, n, 0, transmissivity, 1.0};
}

void HeraldSpec::validate() const {
  if (m1 < 0 || m2 < 0 || n1 < 0 || n2 < 0) throw DomainError("photon counts must be non-negative");
  check_transmissivity(T1, "T1");
  check_transmissivity(T2, "T2");
}

Operation HeraldSpec::operation(int mode) const {
  if (mode != 1 && mode != 2) throw ContractError("mode must be 1 or 2");
  const int m = (mode == 1) ? m1 : m2;
  const int n = (mode == 1) ? n1 : n2;
  if (m < n) return Operation::Subtraction;
  if (m > n) return Operation::Addition;
  return Operation::Catalysis;
}

bool HeraldSpec::is_identity(int mode) const {
  if (mode == 1) return m1 == n1 && T1 == 1.0;
  if (mode == 2) return m2 == n2 && T2 == 1.0;
  throw ContractError("mode must be 1 or 2");
}

std::string HeraldSpec::describe() const {
  std::ostringstream os;
  os << "(m1=" << m1 << ", m2=" << m2 << ", n1=" << n1 << ", n2=" << n2 << ", T1=" << T1 << ", T2=" << T2
     << ")";
  return os.str();
}

HeraldForms build_forms(const ThermalSqueezeParams& params, double T1, double T2) {
  check_transmissivity(T1, "T1");
  check_transmissivity(T2, "T2");

  HeraldForms f;
  f.kappa = params.kappa();
  f.r = params.r();
  f.T1 = T1;
  f.T2 = T2;
  f.t1 = std::sqrt(T1);
  f.t2 = std::sqrt(T2);
  f.r1 = std::sqrt(1.0 - T1);
  f.r2 = std::sqrt(1.0 - T2);
  f.Gamma1 = 1.0 + T1;
  f.Gamma2 = 1.0 + T2;
  f.alpha = params.alpha();
  f.beta = params.beta();
  f.gamma = params.gamma();

  const double k = f.kappa;
  const double k2 = k * k;
  const double t1 = f.t1, t2 = f.t2, r1 = f.r1, r2 = f.r2;
  const double t1s = t1 * t1, t2s = t2 * t2, r1s = r1 * r1, r2s = r2 * r2;
  const double G1 = f.Gamma1, G2 = f.Gamma2, g = f.gamma;
  const double ab = f.alpha * f.beta;

  auto& a = f.a;
  a[0] = 4.0 * k2 * r1s * r2s + g * (1.0 - t1s * t2s) + G1 * G2;
  a[1] = 4.0 * G1 * k2 * r2s + g * (1.0 + t1s * t2s) + G2 * r1s;
  a[2] = -16.0 * ab * k * t1 * t2;
  a[3] = 4.0 * G2 * k2 * r1s + g * (1.0 + t1s * t2s) + G1 * r2s;

  auto& b = f.b;
  b[1] = r1 * (g + G2 + 4.0 * k2 * r2s);
  b[2] = -8.0 * ab * k * r1 * t1 * t2;
  b[3] = -r1 * (g + G2 + 4.0 * k2 * r2s);
  b[4] = -8.0 * ab * k * r2 * t1 * t2;
  b[5] = r2 * (g + G1 + 4.0 * k2 * r1s);
  b[6] = -r2 * (g + G1 + 4.0 * k2 * r1s);
  // The thermal term enters b7 and b10 with a minus sign; this is what
  // integrating out the ancillas gives and what the Fock-space oracle confirms.
  b[7] = r1 * t1 * (G2 - 4.0 * k2 * r2s - g * t2s);
  b[8] = 8.0 * ab * k * r1 * t2;
  b[9] = 8.0 * ab * k * r2 * t1;
  b[10] = r2 * t2 * (G1 - 4.0 * k2 * r1s - g * t1s);

  auto& c = f.c;
  c[1] = r1s * (g + G2 + 4.0 * k2 * r2s);
  c[2] = 8.0 * ab * k * r1 * r2 * t1 * t2;
  c[3] = t1 * (2.0 * G2 + g * r2s);
  c[4] = -8.0 * ab * k * r1 * r2 * t1;
  c[5] = r2s * (g + G1 + 4.0 * k2 * r1s);
  c[6] = -8.0 * ab * k * r1 * r2 * t2;
  c[7] = t2 * (2.0 * G1 + g * r1s);
  c[8] = r1s * (-G2 + 4.0 * k2 * r2s + g * t2s);
  c[9] = 8.0 * ab * k * r1 * r2;
  c[10] = r2s * (-G1 + 4.0 * k2 * r1s + g * t1s);

  const double a0 = a[0];
  f.M1 << a[1], 0.0, a[2], 0.0,  //
      0.0, a[1], 0.0, -a[2],     //
      a[2], 0.0, a[3], 0.0,      //
      0.0, -a[2], 0.0, a[3];
  f.M1 *= -1.0 / (4.0 * a0);

  const std::complex<double> i(0.0, 1.0);
  f.M2 << b[1], i * b[1], b[2], -i * b[2],    //
      b[3], i * b[1], -b[2], -i * b[2],       //
      b[4], -i * b[4], b[5], i * b[5],        //
      -b[4], -i * b[4], b[6], i * b[5],       //
      b[7], i * b[7], b[8], -i * b[8],        //
      -b[7], i * b[7], -b[8], -i * b[8],      //
      b[9], -i * b[9], b[10], i * b[10],      //
      -b[9], -i * b[9], -b[10], i * b[10];
  f.M2 /= a0;

  f.M3 << 0, c[1], c[2], 0, 0, c[3], c[4], 0,  //
      c[1], 0, 0, c[2], c[3], 0, 0, c[4],      //
      c[2], 0, 0, c[5], c[6], 0, 0, c[7],      //
      0, c[2], c[5], 0, 0, c[6], c[7], 0,      //
      0, c[3], c[6], 0, 0, c[8], c[9], 0,      //
      c[3], 0, 0, c[6], c[8], 0, 0, c[9],      //
      c[4], 0, 0, c[7], c[9], 0, 0, c[10],     //
      0, c[4], c[7], 0, 0, c[9], c[10], 0;
  f.M3 /= a0;
  return f;
}

UnnormalizedChar::UnnormalizedChar(const HeraldSpec& spec, const ThermalSqueezeParams& params)
    : spec_(spec) {
  spec_.validate();
  forms_ = std::make_shared<const HeraldForms>(build_forms(params, spec.T1, spec.T2));
  orders_ = spec_.derivative_orders();
  quadratic_ = std::make_shared<const ScalarSeries>(
      exp_quadratic_series(forms_->M3.cast<std::complex<double>>(), orders_));
  operator_scale_ = std::pow(2.0, -spec_.total_photons()) /
                    (factorial(spec_.m1) * factorial(spec_.m2) * factorial(spec_.n1) * factorial(spec_.n2));

  const std::complex<double> p = forms_->norm() * prefactor(Eigen::Vector4d::Zero());
  if (std::abs(p.imag()) > 1e-10 * std::max(std::abs(p.real()), 1e-300)) {
    throw ConsistencyError("heralding probability has an imaginary part for " + spec_.describe());
  }
  if (p.real() < -1e-12) {
    throw ConsistencyError("heralding probability is negative for " + spec_.describe());
  }
  if (p.real() > 1.0 + 1e-9) {
    throw ConsistencyError("heralding probability exceeds one for " + spec_.describe());
  }
  probability_ = std::max(p.real(), 0.0);
}

std::complex<double> UnnormalizedChar::prefactor(const Eigen::Vector4d& lambda) const {
  const Eigen::Matrix<std::complex<double>, 8, 1> linear = forms_->M2 * lambda.cast<std::complex<double>>();
  return extract_exp_derivative<std::complex<double>>(std::span(linear.data(), 8), *quadratic_, orders_,
                                                      operator_scale_);
}

std::complex<double> UnnormalizedChar::operator()(const Eigen::Vector4d& lambda) const {
  const double gauss = std::exp(lambda.dot(forms_->M1 * lambda));
  const std::complex<double> value = forms_->norm() * gauss * prefactor(lambda);
  if (std::abs(value.imag()) > kImagTolerance * std::max(probability_, 1e-300)) {
    throw ConsistencyError("characteristic function is not real for " + spec_.describe());
  }
  return value.real();
}

BivariatePoly UnnormalizedChar::restricted_prefactor(const Eigen::Matrix<double, 4, 2>& embedding) const {
  const Eigen::Matrix<std::complex<double>, 8, 2> along = forms_->M2 * embedding.cast<std::complex<double>>();
  std::vector<BivariatePoly> linear;
  linear.reserve(8);
  for (int k = 0; k < 8; ++k) linear.push_back(BivariatePoly::linear(along(k, 0), along(k, 1)));
  return extract_exp_derivative<BivariatePoly>(linear, *quadratic_, orders_, operator_scale_);
}

Eigen::Matrix2d UnnormalizedChar::restricted_exponent(const Eigen::Matrix<double, 4, 2>& embedding) const {
  return -(embedding.transpose() * forms_->M1 * embedding);
}

UnnormalizedChar unnormalized_char(const HeraldSpec& spec, const ThermalSqueezeParams& params) {
  return UnnormalizedChar(spec, params);
}

double success_probability(const HeraldSpec& spec, const ThermalSqueezeParams& params) {
  return UnnormalizedChar(spec, params).probability();
}

NgState::NgState(UnnormalizedChar unnormalized) : chi_(std::move(unnormalized)) {
  if (!(chi_.probability() > 1e-300)) {
    throw DegenerateHeraldError("heralding probability vanishes for " + chi_.spec().describe());
  }
}

std::complex<double> NgState::chi(const Eigen::Vector4d& lambda) const {
  return chi_(lambda) / chi_.probability();
}

NgState::Restriction NgState::restrict_to(const Eigen::Matrix<double, 4, 2>& embedding) const {
  Restriction out;
  out.exponent = chi_.restricted_exponent(embedding);
  out.poly = chi_.restricted_prefactor(embedding) * std::complex<double>(forms().norm() / chi_.probability());
  return out;
}

NgState normalized_char(const HeraldSpec& spec, const ThermalSqueezeParams& params) {
  return NgState(UnnormalizedChar(spec, params));
}

}  // namespace ngtmst
