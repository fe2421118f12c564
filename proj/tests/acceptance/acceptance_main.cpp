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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ngtmst/herald.hpp"
#include "ngtmst/phase_space.hpp"
#include "ngtmst/sweep.hpp"
#include "ngtmst/teleport.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

namespace {

using namespace ngtmst;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (!passed) detail << "; ";
    else detail.str("");
    passed = false;
    detail << what;
  }
};

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

bool within(double value, double lo, double hi) { return value >= lo && value <= hi; }

// Reference values carry two significant digits; the interval is one unit of the last one.
struct Quoted {
  double lo;
  double hi;
};
Quoted quoted(double value, double unit) { return {value - unit, value + unit}; }

Outcome table_reproduction() {
  struct Row {
    const char* label;
    Quoted R, r, T, F, dF, P;
  };
  const std::array<Row, 4> rows{{
      {"1-PSTMST", {7.7e-4, 8.7e-4}, quoted(0.64, 0.01), quoted(0.78, 0.01), quoted(0.81, 0.01),
       quoted(3.3e-2, 0.1e-2), quoted(2.5e-2, 0.1e-2)},
      {"1-PSTMSV", quoted(9.5e-4, 0.1e-4), quoted(0.64, 0.01), quoted(0.77, 0.01), quoted(0.82, 0.01),
       quoted(3.7e-2, 0.1e-2), quoted(2.6e-2, 0.1e-2)},
      {"1-PCTMST", quoted(2.2e-3, 0.1e-3), quoted(0.24, 0.01), quoted(0.18, 0.01), quoted(0.66, 0.01),
       quoted(5.5e-2, 0.1e-2), quoted(4.0e-2, 0.1e-2)},
      {"1-PCTMSV", quoted(2.9e-3, 0.1e-3), quoted(0.26, 0.01), {0.175, 0.185}, quoted(0.70, 0.01),
       quoted(7.1e-2, 0.1e-2), quoted(4.1e-2, 0.1e-2)},
  }};
  Outcome o;
  OptimizerSettings settings;
  settings.workers = workers();
  const auto start = std::chrono::steady_clock::now();
  const auto entries = table1(settings);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    const OptResult& opt = entries[i].optimum;
    const TeleportReport& rep = opt.report;
    auto check = [&](const char* name, double v, Quoted q) {
      if (!within(v, q.lo, q.hi)) {
        std::ostringstream m;
        m << row.label << " " << name << "=" << v << " outside [" << q.lo << ", " << q.hi << "]";
        o.fail(m.str());
      }
    };
    if (!opt.valid) {
      o.fail(std::string(row.label) + " optimizer found no valid point");
      continue;
    }
    check("R", rep.product, row.R);
    check("r", opt.r_opt, row.r);
    check("T", rep.spec.T1, row.T);
    check("F", rep.fidelity, row.F);
    check("dF", rep.delta, row.dF);
    check("P", rep.probability, row.P);
  }
  if (seconds > 300.0) o.fail("runtime " + std::to_string(seconds) + " s exceeds 300 s");
  if (o.passed) o.detail << "4 states x 6 quantities in range, " << seconds << " s";
  return o;
}

Outcome closed_form_baseline() {
  Outcome o;
  testing::Rng rng(2024);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double kappa = testing::uniform(rng, 0.5, 1.5);
    const double r = testing::uniform(rng, 0.0, 1.5);
    const double eps = testing::uniform(rng, -2.0, 2.0);
    const NgState s = normalized_char(HeraldSpec{0, 0, 0, 0, 1.0, 1.0}, ThermalSqueezeParams(r, kappa));
    const double noise = 2.0 * kappa * std::exp(-2.0 * r);
    const double coherent = 1.0 / (1.0 + noise);
    const double squeezed = 1.0 / std::sqrt((std::exp(2.0 * eps) + noise) * (std::exp(-2.0 * eps) + noise));
    worst = std::max(worst, std::abs(fidelity(s, CoherentInput{}) - coherent));
    worst = std::max(worst, std::abs(fidelity(s, SqueezedVacuumInput{eps}) - squeezed));
  }
  if (worst > 1e-12) o.fail("worst deviation " + std::to_string(worst));
  o.detail << "50 random points, worst deviation " << worst;
  return o;
}

void report_property(Outcome& o, const testing::PropertyResult& p) {
  if (!p.passed()) {
    std::ostringstream m;
    m << p.name << " worst " << p.worst << " > " << p.tolerance;
    o.fail(m.str());
  }
}

Outcome oracle_equivalence() {
  Outcome o;
  const testing::OracleGrid grid = testing::full_oracle_grid();
  const testing::OracleComparison c = testing::oracle_equivalence(grid);
  report_property(o, c.probability);
  report_property(o, c.chi);
  report_property(o, c.fidelity);
  if (o.passed) {
    o.detail << grid.specs.size() * grid.kappas.size() * grid.rs.size() * grid.ts.size()
             << " grid points; worst P rel " << c.probability.worst << ", chi " << c.chi.worst << ", F "
             << c.fidelity.worst;
  }
  return o;
}

Outcome identity_reductions() {
  Outcome o;
  testing::Rng rng(4);
  double worst_p = 0.0;
  double worst_df = 0.0;
  double worst_chi = 0.0;
  for (const HeraldSpec& spec : {HeraldSpec::symmetric(1, 1, 1.0), HeraldSpec::single_mode(1, 1, 1.0),
                                 HeraldSpec::symmetric(2, 2, 1.0), HeraldSpec{1, 2, 1, 2, 1.0, 1.0}}) {
    for (const ThermalSqueezeParams params : {ThermalSqueezeParams(0.3, 0.5), ThermalSqueezeParams(0.8, 0.51),
                                              ThermalSqueezeParams(0.5, 1.0)}) {
      const TeleportReport rep = report(spec, params, CoherentInput{});
      worst_p = std::max(worst_p, std::abs(rep.probability - 1.0));
      worst_df = std::max(worst_df, std::abs(rep.delta));
      const NgState s = normalized_char(spec, params);
      const GaussianState g = tmst_state(params);
      for (int k = 0; k < 20; ++k) {
        const Eigen::Vector4d l = testing::random_vector(rng, 4, 2.0);
        worst_chi = std::max(worst_chi, std::abs(s.chi(l) - gaussian_char(g, l)));
      }
    }
  }
  if (worst_p > 1e-12) o.fail("|P - 1| = " + std::to_string(worst_p));
  if (worst_df > 1e-12) o.fail("|dF| = " + std::to_string(worst_df));
  if (worst_chi > 1e-12) o.fail("chi deviation " + std::to_string(worst_chi));
  if (o.passed) o.detail << "|P-1| " << worst_p << ", |dF| " << worst_df << ", chi " << worst_chi;
  return o;
}

Outcome classical_ceiling() {
  Outcome o;
  const testing::PropertyResult p = testing::teleport_classical_ceiling({0.75, 1.0}, 20);
  report_property(o, p);
  if (o.passed) o.detail << "20x20 grid, kappa 0.75 and 1.0; worst excess " << p.worst;
  return o;
}

OptimizerSettings scan_settings() {
  OptimizerSettings s;
  s.r_grid = Range{0.05, 1.0, 0.05};
  s.workers = workers();
  return s;
}

Outcome scan_orderings() {
  Outcome o;
  const std::vector<SpecTemplate> specs{SpecTemplate::parse("sym-1ps"), SpecTemplate::parse("sym-2ps"),
                                        SpecTemplate::parse("sym-1pa"), SpecTemplate::parse("asym-1pa"),
                                        SpecTemplate::parse("sym-2pa"), SpecTemplate::parse("asym-2pa"),
                                        SpecTemplate::parse("sym-1pc")};
  const auto scans = fid_scan(specs, 0.51, CoherentInput{}, Objective::Fidelity, scan_settings());
  const auto& ps1 = scans[0].points;
  const auto& ps2 = scans[1].points;
  double worst_pa = -1.0;
  for (std::size_t i = 0; i < ps1.size(); ++i) {
    const double r = ps1[i].r_opt;
    if (!(ps1[i].report.fidelity > ps1[i].report.fidelity_base)) {
      o.fail("sym-1ps not above baseline at r=" + std::to_string(r));
    }
    if (!(ps2[i].report.fidelity > ps1[i].report.fidelity)) {
      o.fail("sym-2ps not above sym-1ps at r=" + std::to_string(r));
    }
    for (std::size_t s = 2; s <= 5; ++s) {
      const TeleportReport& rep = scans[s].points[i].report;
      worst_pa = std::max(worst_pa, rep.delta);
      if (rep.fidelity > rep.fidelity_base + 1e-9) {
        o.fail(scans[s].spec.name() + " above baseline at r=" + std::to_string(r));
      }
    }
  }
  const SpecScan& pc = scans[6];
  if (!pc.r_threshold) {
    o.fail("sym-1pc never reaches unit transmissivity");
  } else {
    for (const OptResult& p : pc.points) {
      const bool ok = p.r_opt < *pc.r_threshold ? p.t_opt < 0.5 : p.t_opt > 0.999;
      if (!ok) o.fail("sym-1pc T_opt=" + std::to_string(p.t_opt) + " at r=" + std::to_string(p.r_opt));
    }
  }
  if (o.passed) {
    o.detail << "20 r points; PS ordering holds, max PA dF " << worst_pa << ", 1-PC r_th " << *pc.r_threshold;
  }
  return o;
}

Outcome squeezed_contrast() {
  Outcome o;
  OptimizerSettings settings = scan_settings();
  settings.r_grid = Range{0.1, 1.0, 0.05};
  const std::vector<SpecTemplate> specs{SpecTemplate::parse("sym-1pa"), SpecTemplate::parse("sym-2pa")};
  const auto scans = fid_scan(specs, 0.51, SqueezedVacuumInput{1.7}, Objective::Fidelity, settings);
  double best = -1.0;
  std::string where;
  for (const SpecScan& scan : scans) {
    for (const OptResult& p : scan.points) {
      if (p.report.delta > best) {
        best = p.report.delta;
        where = scan.spec.name() + " at r=" + std::to_string(p.r_opt);
      }
    }
  }
  if (!(best > 1e-4)) o.fail("largest PA enhancement " + std::to_string(best));
  o.detail << "largest PA enhancement " << best << " (" << where << ")";
  return o;
}

Outcome property_suites() {
  Outcome o;
  const auto results = testing::all_properties();
  for (const auto& p : results) report_property(o, p);
  if (o.passed) o.detail << results.size() << " properties within tolerance";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"table reproduction", table_reproduction},
      {"closed-form baseline", closed_form_baseline},
      {"oracle equivalence", oracle_equivalence},
      {"identity reductions", identity_reductions},
      {"classical ceiling", classical_ceiling},
      {"scan orderings", scan_orderings},
      {"squeezed-input contrast", squeezed_contrast},
      {"property suites", property_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += o.passed ? 0 : 1;
    std::printf("[%s] criterion %zu: %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
