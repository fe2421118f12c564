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

#ifndef NGTMST_SWEEP_HPP
#define NGTMST_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <type_traits>
#include <vector>

#include "ngtmst/herald.hpp"
#include "ngtmst/teleport.hpp"

namespace ngtmst {

/// Inclusive arithmetic grid start, start + step, ..., <= stop.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  /// Parses "A:B:STEP". Throws ContractError on malformed text and DomainError
  /// for an empty or non-finite grid.
  static Range parse(std::string_view text);

  std::size_t size() const;
  double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
  std::vector<double> values() const;
  std::string to_string() const;
};

/// Transmissivity coupling of a heralding template.
enum class TieMode {
  Tied,          // T1 = T2 = T
  FirstModeOnly  // T1 = T, mode 2 untouched (m2 = n2 = 0, T2 = 1)
};

/// Photon counts of a heralding scheme with the transmissivity left free.
class SpecTemplate {
 public:
  SpecTemplate(int m1, int n1, int m2, int n2, TieMode tie, std::string name = {});

  /// Accepts sym-<k>ps, sym-<k>pa, sym-<k>pc, the asym- variants (mode 1 only),
  /// tmst (no operation) and custom:m1,n1,m2,n2.
  static SpecTemplate parse(std::string_view text);

  const std::string& name() const { return name_; }
  TieMode tie() const { return tie_; }

  /// True when some mode detects a different photon number than it receives,
  /// so the heralding probability vanishes at T = 1.
  bool vanishes_at_unit_transmissivity() const;

  /// Concrete spec at nominal transmissivity T in [0, 1]. T is clamped to
  /// [kMinTransmissivity, 1], and to 1 - kUnitGap when the probability would
  /// vanish at T = 1, so those schemes are evaluated in the T -> 1 limit.
  HeraldSpec at(double transmissivity) const;

  static constexpr double kMinTransmissivity = 1e-6;
  static constexpr double kUnitGap = 1e-6;

 private:
  int m1_, n1_, m2_, n2_;
  TieMode tie_;
  std::string name_;
};

enum class Objective { Fidelity, Enhancement, Product };

std::string to_string(Objective objective);
Objective parse_objective(std::string_view text);
double objective_value(const TeleportReport& report, Objective objective);

/// Report at one operating point, or nullopt when the heralding event has zero
/// probability there.
std::optional<TeleportReport> try_evaluate(const SpecTemplate& spec, double r, double kappa, double transmissivity,
                                           const InputState& input);

struct OptimizerSettings {
  Range t_grid{0.01, 1.0, 0.01};
  Range r_grid{0.0, 1.5, 0.01};
  double t_tolerance = 1e-5;
  double r_tolerance = 1e-5;
  int workers = 1;

  void validate() const;
};

struct OptResult {
  Objective objective = Objective::Fidelity;
  bool valid = false;  // false when no grid point could be evaluated
  double value = 0.0;
  double r_opt = 0.0;
  double t_opt = 0.0;  // nominal transmissivity, before limit clamping
  TeleportReport report;
  std::optional<double> r_threshold;  // filled by scans, see threshold_squeezing
};

/// Maximize the objective over T at fixed (r, kappa): grid search then golden
/// section to t_tolerance within one grid step. Ties resolve to the larger T.
OptResult optimize_over_T(const SpecTemplate& spec, const ThermalSqueezeParams& params, const InputState& input,
                          Objective objective, const OptimizerSettings& settings);

/// Maximize the objective jointly over (r, T) at fixed kappa: grid search over
/// r_grid x t_grid, then nested golden refinement around the best grid point.
OptResult optimize_joint(const SpecTemplate& spec, double kappa, const InputState& input, Objective objective,
                         const OptimizerSettings& settings);

/// optimize_joint with the DeltaF * P objective.
inline OptResult optimize_R(const SpecTemplate& spec, double kappa, const InputState& input,
                            const OptimizerSettings& settings) {
  return optimize_joint(spec, kappa, input, Objective::Product, settings);
}

/// Smallest r of a scan at which the optimal T exceeds 0.999.
std::optional<double> threshold_squeezing(std::span<const OptResult> scan);

struct SpecScan {
  SpecTemplate spec;
  std::vector<OptResult> points;
  std::optional<double> r_threshold;
};

/// Objective optimized over T at each r of settings.r_grid.
std::vector<SpecScan> fid_scan(std::span<const SpecTemplate> specs, double kappa, const InputState& input,
                               Objective objective, const OptimizerSettings& settings);

/// Fidelity optimized over T at each kappa of `kappas`; `r_for_spec[i]` is the
/// squeezing used for specs[i].
std::vector<SpecScan> kappa_scan(std::span<const SpecTemplate> specs, std::span<const double> r_for_spec,
                                 const Range& kappas, const InputState& input, Objective objective,
                                 const OptimizerSettings& settings);

struct HeatmapCell {
  double r = 0.0;
  double t = 0.0;
  std::optional<TeleportReport> report;
  /// DeltaF > 0 with F above the classical 1/2 (gray) or below it (black).
  bool gray = false;
  bool black = false;
};

std::vector<HeatmapCell> heatmap(const SpecTemplate& spec, double kappa, const InputState& input,
                                 const OptimizerSettings& settings);

struct Table1Entry {
  std::string label;
  SpecTemplate spec;
  double kappa = 0.5;
  OptResult optimum;
};

/// Product-optimal operating points of symmetric 1-PS and 1-PC on TMST
/// (kappa = 0.51) and TMSV (kappa = 0.5) resources with coherent input.
std::vector<Table1Entry> table1(const OptimizerSettings& settings);

/// Applies f to 0..n-1 on up to `workers` threads. Results keep index order;
/// the exception from the lowest failing index is rethrown.
template <class F>
auto parallel_map(std::size_t n, int workers, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::clamp(workers, 1, 256));
  if (threads == 1 || n < 2) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(std::min(threads, n));
    for (std::size_t t = 0; t < std::min(threads, n); ++t) pool.emplace_back(work);
  }
  std::vector<R> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace ngtmst

#endif  // NGTMST_SWEEP_HPP
