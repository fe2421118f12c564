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

#ifndef NGTMST_TRUNCATED_SERIES_HPP
#define NGTMST_TRUNCATED_SERIES_HPP

#include <complex>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ngtmst/errors.hpp"

namespace ngtmst {

/// Coefficient ring for TruncatedSeries: complex scalars or BivariatePoly.
template <class C>
concept SeriesCoefficient = requires(C a, C b, std::complex<double> s) {
  { a + b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { a * s } -> std::convertible_to<C>;
  C{};
  C(s);
};

/// Upper bound on the number of stored coefficients of one series.
inline constexpr std::size_t kMaxSeriesEntries = std::size_t{1} << 20;

/// Dense multi-index box {0..cap_0} x ... x {0..cap_{n-1}}, last variable fastest.
class SeriesShape {
 public:
  explicit SeriesShape(std::vector<int> caps) : caps_(std::move(caps)), strides_(caps_.size()) {
    std::size_t size = 1;
    for (std::size_t k = caps_.size(); k-- > 0;) {
      if (caps_[k] < 0) throw ContractError("series caps must be non-negative");
      strides_[k] = size;
      size *= static_cast<std::size_t>(caps_[k]) + 1;
      if (size > kMaxSeriesEntries) {
        throw ResourceError("truncated series would need more than " +
                            std::to_string(kMaxSeriesEntries) + " coefficients");
      }
    }
    size_ = size;
  }

  const std::vector<int>& caps() const { return caps_; }
  std::size_t variables() const { return caps_.size(); }
  std::size_t size() const { return size_; }
  std::size_t stride(std::size_t var) const { return strides_[var]; }

  bool contains(std::span<const int> index) const {
    if (index.size() != caps_.size()) return false;
    for (std::size_t k = 0; k < caps_.size(); ++k) {
      if (index[k] < 0 || index[k] > caps_[k]) return false;
    }
    return true;
  }

  std::size_t offset(std::span<const int> index) const {
    if (!contains(index)) throw ContractError("multi-index outside the truncation box");
    std::size_t off = 0;
    for (std::size_t k = 0; k < caps_.size(); ++k) off += strides_[k] * static_cast<std::size_t>(index[k]);
    return off;
  }

  std::vector<int> index_of(std::size_t flat) const {
    std::vector<int> index(caps_.size());
    for (std::size_t k = 0; k < caps_.size(); ++k) {
      index[k] = static_cast<int>(flat / strides_[k]);
      flat %= strides_[k];
    }
    return index;
  }

  bool operator==(const SeriesShape& other) const { return caps_ == other.caps_; }

 private:
  std::vector<int> caps_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Multivariate power series truncated to a per-variable degree box. Products
/// drop every monomial outside the box, which leaves all coefficients inside
/// the box exact.
template <SeriesCoefficient C>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<int> caps) : shape_(std::move(caps)), coeffs_(shape_.size()) {}

  static TruncatedSeries constant(std::vector<int> caps, C value) {
    TruncatedSeries s(std::move(caps));
    s.coeffs_[0] = std::move(value);
    return s;
  }

  const SeriesShape& shape() const { return shape_; }
  const std::vector<int>& caps() const { return shape_.caps(); }
  std::size_t size() const { return coeffs_.size(); }

  const C& at(std::span<const int> index) const { return coeffs_[shape_.offset(index)]; }
  C& at(std::span<const int> index) { return coeffs_[shape_.offset(index)]; }
  const C& flat(std::size_t k) const { return coeffs_[k]; }
  C& flat(std::size_t k) { return coeffs_[k]; }

  template <SeriesCoefficient D>
    requires requires(C c, D d) { { c * d } -> std::convertible_to<C>; }
  TruncatedSeries multiplied(const TruncatedSeries<D>& other) const {
    if (!(shape_ == other.shape())) throw ContractError("multiplying series with different caps");
    TruncatedSeries out(shape_.caps());
    if (shape_.variables() == 0) {
      out.coeffs_[0] = coeffs_[0] * other.flat(0);
      return out;
    }
    convolve(other, out, 0, 0, 0, 0);
    return out;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.multiplied(b);
  }

 private:
  template <class D>
  void convolve(const TruncatedSeries<D>& b, TruncatedSeries& out, std::size_t var, std::size_t off_a,
                std::size_t off_b, std::size_t off_out) const {
    const int cap = shape_.caps()[var];
    const std::size_t stride = shape_.stride(var);
    const bool leaf = var + 1 == shape_.variables();
    for (int i = 0; i <= cap; ++i) {
      for (int j = 0; i + j <= cap; ++j) {
        const std::size_t oa = off_a + stride * static_cast<std::size_t>(i);
        const std::size_t ob = off_b + stride * static_cast<std::size_t>(j);
        const std::size_t oo = off_out + stride * static_cast<std::size_t>(i + j);
        if (leaf) {
          out.coeffs_[oo] = out.coeffs_[oo] + coeffs_[oa] * b.flat(ob);
        } else {
          convolve(b, out, var + 1, oa, ob, oo);
        }
      }
    }
  }

  SeriesShape shape_;
  std::vector<C> coeffs_;
};

using ScalarSeries = TruncatedSeries<std::complex<double>>;

/// Taylor coefficients of exp(u^T Q u) inside the box `caps`; Q symmetric.
ScalarSeries exp_quadratic_series(const Eigen::MatrixXcd& quadratic, std::vector<int> caps);

double factorial(int n);

namespace detail {

/// table[j] = value^j / j! for j = 0..cap.
template <SeriesCoefficient C>
std::vector<C> scaled_powers(const C& value, int cap) {
  std::vector<C> table;
  table.reserve(static_cast<std::size_t>(cap) + 1);
  table.push_back(C(std::complex<double>(1.0)));
  for (int j = 1; j <= cap; ++j) table.push_back(table.back() * value * std::complex<double>(1.0 / j));
  return table;
}

}  // namespace detail

/// Taylor coefficients of exp(u . L): coefficient at alpha is prod_k L_k^alpha_k / alpha_k!.
template <SeriesCoefficient C>
TruncatedSeries<C> exp_linear_series(std::span<const C> linear, std::vector<int> caps) {
  if (linear.size() != caps.size()) throw DimensionError("linear coefficient count does not match caps");
  TruncatedSeries<C> out(caps);
  std::vector<std::vector<C>> powers;
  for (std::size_t k = 0; k < caps.size(); ++k) powers.push_back(detail::scaled_powers(linear[k], caps[k]));
  for (std::size_t f = 0; f < out.size(); ++f) {
    const auto index = out.shape().index_of(f);
    C term(std::complex<double>(1.0));
    for (std::size_t k = 0; k < index.size(); ++k) term = term * powers[k][static_cast<std::size_t>(index[k])];
    out.flat(f) = std::move(term);
  }
  return out;
}

/// Taylor expansion of exp(u . L + u^T Q u) through the box `caps`.
template <SeriesCoefficient C>
TruncatedSeries<C> exp_series(std::span<const C> linear, const Eigen::MatrixXcd& quadratic,
                              std::vector<int> caps) {
  const ScalarSeries quad = exp_quadratic_series(quadratic, caps);
  return exp_linear_series(linear, std::move(caps)).multiplied(quad);
}

/// prefactor * (prod_k orders_k!) * coefficient at `orders`, i.e. the mixed
/// partial derivative at u = 0 scaled by `prefactor`. Orders must equal the caps.
template <SeriesCoefficient C>
C extract_derivative(const TruncatedSeries<C>& series, std::span<const int> orders,
                     std::complex<double> prefactor) {
  if (std::vector<int>(orders.begin(), orders.end()) != series.caps()) {
    throw ContractError("derivative orders must equal the series caps");
  }
  double weight = 1.0;
  for (int o : orders) weight *= factorial(o);
  return series.at(orders) * (prefactor * weight);
}

/// Same value as extract_derivative(exp_series(L, Q, orders), orders, prefactor)
/// given quad = exp_quadratic_series(Q, orders), but contracts only the one
/// coefficient instead of forming the full product.
template <SeriesCoefficient C>
C extract_exp_derivative(std::span<const C> linear, const ScalarSeries& quad, std::span<const int> orders,
                         std::complex<double> prefactor) {
  const auto& caps = quad.caps();
  if (std::vector<int>(orders.begin(), orders.end()) != caps) {
    throw ContractError("derivative orders must equal the series caps");
  }
  if (linear.size() != caps.size()) throw DimensionError("linear coefficient count does not match caps");
  double weight = 1.0;
  for (int o : orders) weight *= factorial(o);
  const std::complex<double> scale = prefactor * weight;
  const std::size_t n = caps.size();
  if (n == 0) return C(quad.flat(0) * scale);

  // Contract the last variable against the scalar coefficients first, then
  // fold the remaining variables one at a time.
  std::vector<std::vector<C>> powers;
  for (std::size_t k = 0; k < n; ++k) powers.push_back(detail::scaled_powers(linear[k], caps[k]));

  std::size_t width = static_cast<std::size_t>(caps[n - 1]) + 1;
  std::vector<C> level(quad.size() / width);
  for (std::size_t i = 0; i < level.size(); ++i) {
    C acc{};
    for (std::size_t b = 0; b < width; ++b) {
      const auto q = quad.flat(i * width + b);
      if (q == std::complex<double>(0.0)) continue;
      acc = acc + powers[n - 1][width - 1 - b] * q;
    }
    level[i] = std::move(acc);
  }
  for (std::size_t k = n - 1; k-- > 0;) {
    width = static_cast<std::size_t>(caps[k]) + 1;
    std::vector<C> next(level.size() / width);
    for (std::size_t i = 0; i < next.size(); ++i) {
      C acc{};
      for (std::size_t b = 0; b < width; ++b) acc = acc + level[i * width + b] * powers[k][width - 1 - b];
      next[i] = std::move(acc);
    }
    level = std::move(next);
  }
  return level[0] * scale;
}

}  // namespace ngtmst

#endif  // NGTMST_TRUNCATED_SERIES_HPP
