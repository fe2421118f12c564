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

#include "ngtmst/truncated_series.hpp"

#include <cmath>

namespace ngtmst {

double factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  return std::tgamma(n + 1.0);
}

ScalarSeries exp_quadratic_series(const Eigen::MatrixXcd& quadratic, std::vector<int> caps) {
  const auto n = static_cast<Eigen::Index>(caps.size());
  if (quadratic.rows() != n || quadratic.cols() != n) {
    throw DimensionError("quadratic form dimension does not match caps");
  }
  ScalarSeries series = ScalarSeries::constant(caps, 1.0);
  const SeriesShape& shape = series.shape();

  std::vector<std::vector<int>> decoded(series.size());
  for (std::size_t f = 0; f < series.size(); ++f) decoded[f] = shape.index_of(f);

  // exp(u^T Q u) = prod_{i <= j} exp(q'_ij u_i u_j) with q'_ii = Q_ii, q'_ij = 2 Q_ij.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const std::complex<double> q = (i == j) ? quadratic(i, i) : quadratic(i, j) + quadratic(j, i);
      if (q == std::complex<double>(0.0)) continue;
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      const std::size_t step = shape.stride(ui) + shape.stride(uj);
      ScalarSeries next(caps);
      for (std::size_t f = 0; f < series.size(); ++f) {
        const auto c = series.flat(f);
        if (c == std::complex<double>(0.0)) continue;
        const auto& idx = decoded[f];
        const int per_step = (i == j) ? 2 : 1;
        std::complex<double> term = c;
        for (int k = 0;; ++k) {
          if (idx[ui] + per_step * k > caps[ui] || idx[uj] + per_step * k > caps[uj]) break;
          next.flat(f + static_cast<std::size_t>(k) * step) += term;
          term *= q / static_cast<double>(k + 1);
        }
      }
      series = std::move(next);
    }
  }
  return series;
}

}  // namespace ngtmst
