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

#include "ngtmst/bivariate_poly.hpp"

#include <algorithm>
#include <cmath>

#include "ngtmst/errors.hpp"

namespace ngtmst {

BivariatePoly::BivariatePoly(Scalar constant) {
  if (constant != Scalar(0.0)) {
    degree_ = 0;
    coeffs_.assign(1, constant);
  }
}

BivariatePoly BivariatePoly::monomial(int tau_power, int sigma_power, Scalar coeff) {
  BivariatePoly p;
  p.add_term(tau_power, sigma_power, coeff);
  return p;
}

BivariatePoly BivariatePoly::linear(Scalar c_tau, Scalar c_sigma, Scalar c0) {
  BivariatePoly p(c0);
  p.add_term(1, 0, c_tau);
  p.add_term(0, 1, c_sigma);
  return p;
}

bool BivariatePoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Scalar c) { return c == Scalar(0.0); });
}

void BivariatePoly::grow(int degree) {
  if (degree <= degree_) return;
  degree_ = degree;
  coeffs_.resize(slot(0, degree) + 1, Scalar(0.0));
}

BivariatePoly::Scalar BivariatePoly::coeff(int tau_power, int sigma_power) const {
  if (tau_power < 0 || sigma_power < 0 || tau_power + sigma_power > degree_) return 0.0;
  return coeffs_[slot(tau_power, sigma_power)];
}

void BivariatePoly::add_term(int tau_power, int sigma_power, Scalar value) {
  if (tau_power < 0 || sigma_power < 0) throw ContractError("negative monomial power");
  if (value == Scalar(0.0)) return;
  grow(tau_power + sigma_power);
  coeffs_[slot(tau_power, sigma_power)] += value;
}

BivariatePoly::Scalar BivariatePoly::operator()(Scalar tau, Scalar sigma) const {
  // Horner in sigma for each tau power, then in tau.
  Scalar result = 0.0;
  for (int a = degree_; a >= 0; --a) {
    Scalar row = 0.0;
    for (int b = degree_ - a; b >= 0; --b) row = row * sigma + coeffs_[slot(a, b)];
    result = result * tau + row;
  }
  return result;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  grow(other.degree_);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& other) {
  grow(other.degree_);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(Scalar s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  if (a.degree_ < 0 || b.degree_ < 0) return out;
  out.grow(a.degree_ + b.degree_);
  for (int da = 0; da <= a.degree_; ++da) {
    for (int ia = 0; ia <= da; ++ia) {
      const auto ca = a.coeffs_[BivariatePoly::slot(da - ia, ia)];
      if (ca == BivariatePoly::Scalar(0.0)) continue;
      for (int db = 0; db <= b.degree_; ++db) {
        for (int ib = 0; ib <= db; ++ib) {
          out.coeffs_[BivariatePoly::slot(da - ia + db - ib, ia + ib)] +=
              ca * b.coeffs_[BivariatePoly::slot(db - ib, ib)];
        }
      }
    }
  }
  return out;
}

BivariatePoly BivariatePoly::compose_linear(const Eigen::Matrix2d& a) const {
  // tau -> a00 tau + a01 sigma, sigma -> a10 tau + a11 sigma
  const BivariatePoly new_tau = linear(a(0, 0), a(0, 1));
  const BivariatePoly new_sigma = linear(a(1, 0), a(1, 1));
  std::vector<BivariatePoly> tau_pow{BivariatePoly(1.0)};
  std::vector<BivariatePoly> sigma_pow{BivariatePoly(1.0)};
  for (int k = 1; k <= std::max(degree_, 0); ++k) {
    tau_pow.push_back(tau_pow.back() * new_tau);
    sigma_pow.push_back(sigma_pow.back() * new_sigma);
  }
  BivariatePoly out;
  for (int d = 0; d <= degree_; ++d) {
    for (int b = 0; b <= d; ++b) {
      const auto c = coeffs_[slot(d - b, b)];
      if (c == Scalar(0.0)) continue;
      out += tau_pow[d - b] * sigma_pow[b] * c;
    }
  }
  return out;
}

double BivariatePoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace ngtmst
