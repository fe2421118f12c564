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

#include "ngtmst/sweep.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <regex>
#include <sstream>
#include <utility>

#include "ngtmst/errors.hpp"

namespace ngtmst {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInvPhi = 0.6180339887498949;

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ContractError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return value;
}

struct Probe {
  double x = kNaN;  // coordinate being searched
  double t = kNaN;  // nominal transmissivity
  double value = -std::numeric_limits<double>::infinity();
  std::optional<TeleportReport> report;
};

// Golden-section maximization of a probe function on [lo, hi]; equal values
// keep the right-hand bracket so ties drift toward larger x.
template <class F>
Probe golden_max(F&& probe, double lo, double hi, double tol) {
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  Probe pc = probe(c);
  Probe pd = probe(d);
  while (b - a > tol) {
    if (pc.value > pd.value) {
      b = d;
      d = c;
      pd = std::move(pc);
      c = b - kInvPhi * (b - a);
      pc = probe(c);
    } else {
      a = c;
      c = d;
      pc = std::move(pd);
      d = a + kInvPhi * (b - a);
      pd = probe(d);
    }
  }
  return pc.value > pd.value ? pc : pd;
}

Probe probe_point(const SpecTemplate& spec, double r, double kappa, double t, const InputState& input,
                  Objective objective) {
  Probe p;
  p.x = t;
  p.t = t;
  p.report = try_evaluate(spec, r, kappa, t, input);
  if (p.report) {
    const double v = objective_value(*p.report, objective);
    if (std::isfinite(v)) p.value = v;
  }
  return p;
}

OptResult to_result(Objective objective, double r, const Probe& best) {
  OptResult out;
  out.objective = objective;
  out.r_opt = r;
  if (!best.report || !std::isfinite(best.value)) {
    out.value = kNaN;
    out.t_opt = kNaN;
    return out;
  }
  out.valid = true;
  out.value = best.value;
  out.t_opt = best.t;
  out.report = *best.report;
  return out;
}

// Best grid point (ties to the larger T) followed by local golden refinement.
Probe best_over_t(const SpecTemplate& spec, double r, double kappa, const InputState& input, Objective objective,
                  const OptimizerSettings& settings, double lo, double hi, bool use_grid) {
  Probe best;
  if (use_grid) {
    const Range& grid = settings.t_grid;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Probe p = probe_point(spec, r, kappa, grid.at(i), input, objective);
      if (p.report && p.value >= best.value) best = std::move(p);
    }
    if (!best.report) return best;
    lo = std::max(best.t - grid.step, SpecTemplate::kMinTransmissivity);
    hi = std::min(best.t + grid.step, 1.0);
  }
  Probe refined = golden_max(
      [&](double t) { return probe_point(spec, r, kappa, t, input, objective); }, lo, hi, settings.t_tolerance);
  if (refined.report && (refined.value > best.value)) best = std::move(refined);
  return best;
}

}  // namespace

Range Range::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 3) throw ContractError("grid must be A:B:STEP, got '" + std::string(text) + "'");
  Range out{parse_double(parts[0], "grid start"), parse_double(parts[1], "grid stop"),
            parse_double(parts[2], "grid step")};
  out.size();  // validates
  return out;
}

std::size_t Range::size() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) || step <= 0.0 || stop < start) {
    throw DomainError("empty grid " + to_string());
  }
  const double count = std::floor((stop - start) / step + 1e-9) + 1.0;
  if (count > 1e7) throw ResourceError("grid " + to_string() + " has too many points");
  return static_cast<std::size_t>(count);
}

std::vector<double> Range::values() const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i);
  return out;
}

std::string Range::to_string() const {
  std::ostringstream os;
  os << start << ':' << stop << ':' << step;
  return os.str();
}

SpecTemplate::SpecTemplate(int m1, int n1, int m2, int n2, TieMode tie, std::string name)
    : m1_(m1), n1_(n1), m2_(m2), n2_(n2), tie_(tie), name_(std::move(name)) {
  if (m1 < 0 || n1 < 0 || m2 < 0 || n2 < 0) throw DomainError("photon counts must be non-negative");
  if (tie == TieMode::FirstModeOnly && (m2 != 0 || n2 != 0)) {
    throw ContractError("single-mode template cannot act on mode 2");
  }
  if (name_.empty()) {
    std::ostringstream os;
    os << "custom:" << m1 << ',' << n1 << ',' << m2 << ',' << n2;
    if (tie == TieMode::FirstModeOnly) os << ",single";
    name_ = os.str();
  }
}

SpecTemplate SpecTemplate::parse(std::string_view text) {
  const std::string s(text);
  static const std::regex named(R"((sym|asym)-([0-9])(ps|pa|pc))");
  static const std::regex custom(R"(custom:([0-9]+),([0-9]+),([0-9]+),([0-9]+)(,single)?)");
  std::smatch m;
  if (s == "tmst") return {0, 0, 0, 0, TieMode::Tied, s};
  if (std::regex_match(s, m, named)) {
    const int k = std::stoi(m[2]);
    const std::string op = m[3];
    const int in = op == "pa" || op == "pc" ? k : 0;
    const int out = op == "ps" || op == "pc" ? k : 0;
    if (m[1] == "sym") return {in, out, in, out, TieMode::Tied, s};
    return {in, out, 0, 0, TieMode::FirstModeOnly, s};
  }
  if (std::regex_match(s, m, custom)) {
    const TieMode tie = m[5].matched ? TieMode::FirstModeOnly : TieMode::Tied;
    return {std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]), tie, s};
  }
  throw ContractError("unknown spec '" + s + "' (expected sym-1ps, asym-2pa, sym-1pc, tmst, custom:m1,n1,m2,n2)");
}

bool SpecTemplate::vanishes_at_unit_transmissivity() const { return m1_ != n1_ || m2_ != n2_; }

HeraldSpec SpecTemplate::at(double transmissivity) const {
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw DomainError("transmissivity must lie in [0, 1]");
  }
  const double upper = vanishes_at_unit_transmissivity() ? 1.0 - kUnitGap : 1.0;
  const double t = std::clamp(transmissivity, kMinTransmissivity, upper);
  HeraldSpec spec{m1_, m2_, n1_, n2_, t, t};
  if (tie_ == TieMode::FirstModeOnly) spec.T2 = 1.0;
  return spec;
}

std::string to_string(Objective objective) {
  switch (objective) {
    case Objective::Fidelity:
      return "F";
    case Objective::Enhancement:
      return "dF";
    case Objective::Product:
      return "R";
  }
  return "?";
}

Objective parse_objective(std::string_view text) {
  if (text == "F") return Objective::Fidelity;
  if (text == "dF") return Objective::Enhancement;
  if (text == "R") return Objective::Product;
  throw ContractError("objective must be F, dF or R, got '" + std::string(text) + "'");
}

double objective_value(const TeleportReport& report, Objective objective) {
  switch (objective) {
    case Objective::Fidelity:
      return report.fidelity;
    case Objective::Enhancement:
      return report.delta;
    case Objective::Product:
      return report.product;
  }
  return kNaN;
}

std::optional<TeleportReport> try_evaluate(const SpecTemplate& spec, double r, double kappa, double transmissivity,
                                           const InputState& input) {
  try {
    return report(spec.at(transmissivity), ThermalSqueezeParams(r, kappa), input);
  } catch (const DegenerateHeraldError&) {
    return std::nullopt;
  }
}

void OptimizerSettings::validate() const {
  if (t_grid.start < 0.0 || t_grid.stop > 1.0 || t_grid.size() == 0) {
    throw DomainError("T grid must lie within [0, 1]");
  }
  if (r_grid.start < 0.0 || r_grid.size() == 0) throw DomainError("r grid must be non-negative");
  if (!(t_tolerance > 0.0) || !(r_tolerance > 0.0)) throw DomainError("optimizer tolerances must be positive");
  if (workers < 1) throw DomainError("worker count must be at least 1");
}

OptResult optimize_over_T(const SpecTemplate& spec, const ThermalSqueezeParams& params, const InputState& input,
                          Objective objective, const OptimizerSettings& settings) {
  const Probe best = best_over_t(spec, params.r(), params.kappa(), input, objective, settings, 0.0, 1.0, true);
  return to_result(objective, params.r(), best);
}

OptResult optimize_joint(const SpecTemplate& spec, double kappa, const InputState& input, Objective objective,
                         const OptimizerSettings& settings) {
  settings.validate();
  const Range& rg = settings.r_grid;
  const Range& tg = settings.t_grid;
  const auto rows = parallel_map(rg.size(), settings.workers, [&](std::size_t i) {
    std::vector<Probe> row;
    row.reserve(tg.size());
    for (std::size_t j = 0; j < tg.size(); ++j) row.push_back(probe_point(spec, rg.at(i), kappa, tg.at(j), input, objective));
    return row;
  });

  std::size_t bi = 0;
  const Probe* best = nullptr;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const Probe& p : rows[i]) {
      if (p.report && (!best || p.value >= best->value)) {
        best = &p;
        bi = i;
      }
    }
  }
  if (!best) return to_result(objective, kNaN, Probe{});

  double r_best = rg.at(bi);
  Probe chosen = *best;
  const double t_lo = std::max(best->t - tg.step, SpecTemplate::kMinTransmissivity);
  const double t_hi = std::min(best->t + tg.step, 1.0);
  const double r_lo = std::max(r_best - rg.step, 0.0);
  const double r_hi = r_best + rg.step;

  const Probe outer = golden_max(
      [&](double r) {
        Probe inner = best_over_t(spec, r, kappa, input, objective, settings, t_lo, t_hi, false);
        inner.x = r;
        return inner;
      },
      r_lo, r_hi, settings.r_tolerance);
  if (outer.report && outer.value > chosen.value) {
    chosen = outer;
    r_best = outer.x;
  }
  return to_result(objective, r_best, chosen);
}

std::optional<double> threshold_squeezing(std::span<const OptResult> scan) {
  for (const OptResult& p : scan) {
    if (p.valid && p.t_opt > 0.999) return p.r_opt;
  }
  return std::nullopt;
}

std::vector<SpecScan> fid_scan(std::span<const SpecTemplate> specs, double kappa, const InputState& input,
                               Objective objective, const OptimizerSettings& settings) {
  settings.validate();
  const std::size_t nr = settings.r_grid.size();
  auto flat = parallel_map(specs.size() * nr, settings.workers, [&](std::size_t k) {
    return optimize_over_T(specs[k / nr], ThermalSqueezeParams(settings.r_grid.at(k % nr), kappa), input,
                           objective, settings);
  });
  std::vector<SpecScan> out;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    SpecScan scan{specs[s], {}, std::nullopt};
    scan.points.assign(std::make_move_iterator(flat.begin() + static_cast<std::ptrdiff_t>(s * nr)),
                       std::make_move_iterator(flat.begin() + static_cast<std::ptrdiff_t>((s + 1) * nr)));
    scan.r_threshold = threshold_squeezing(scan.points);
    out.push_back(std::move(scan));
  }
  return out;
}

std::vector<SpecScan> kappa_scan(std::span<const SpecTemplate> specs, std::span<const double> r_for_spec,
                                 const Range& kappas, const InputState& input, Objective objective,
                                 const OptimizerSettings& settings) {
  settings.validate();
  if (r_for_spec.size() != specs.size()) throw DimensionError("one squeezing value per spec is required");
  if (kappas.start < 0.5) throw DomainError("kappa grid must start at or above 1/2");
  const std::size_t nk = kappas.size();
  auto flat = parallel_map(specs.size() * nk, settings.workers, [&](std::size_t k) {
    const std::size_t s = k / nk;
    return optimize_over_T(specs[s], ThermalSqueezeParams(r_for_spec[s], kappas.at(k % nk)), input, objective,
                           settings);
  });
  std::vector<SpecScan> out;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    SpecScan scan{specs[s], {}, std::nullopt};
    scan.points.assign(std::make_move_iterator(flat.begin() + static_cast<std::ptrdiff_t>(s * nk)),
                       std::make_move_iterator(flat.begin() + static_cast<std::ptrdiff_t>((s + 1) * nk)));
    out.push_back(std::move(scan));
  }
  return out;
}

std::vector<HeatmapCell> heatmap(const SpecTemplate& spec, double kappa, const InputState& input,
                                 const OptimizerSettings& settings) {
  settings.validate();
  const Range& rg = settings.r_grid;
  const Range& tg = settings.t_grid;
  const std::size_t nt = tg.size();
  return parallel_map(rg.size() * nt, settings.workers, [&](std::size_t k) {
    HeatmapCell cell;
    cell.r = rg.at(k / nt);
    cell.t = tg.at(k % nt);
    cell.report = try_evaluate(spec, cell.r, kappa, cell.t, input);
    if (cell.report && cell.report->delta > 0.0) {
      cell.gray = cell.report->fidelity > 0.5;
      cell.black = cell.report->fidelity < 0.5;
    }
    return cell;
  });
}

std::vector<Table1Entry> table1(const OptimizerSettings& settings) {
  const SpecTemplate ps = SpecTemplate::parse("sym-1ps");
  const SpecTemplate pc = SpecTemplate::parse("sym-1pc");
  std::vector<Table1Entry> out{{"1-PSTMST", ps, 0.51, {}},
                               {"1-PSTMSV", ps, 0.5, {}},
                               {"1-PCTMST", pc, 0.51, {}},
                               {"1-PCTMSV", pc, 0.5, {}}};
  for (Table1Entry& e : out) e.optimum = optimize_R(e.spec, e.kappa, CoherentInput{}, settings);
  return out;
}

}  // namespace ngtmst
