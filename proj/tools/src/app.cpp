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

#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "ngtmst/fock_oracle.hpp"
#include "ngtmst/sweep.hpp"

#ifndef NGTMST_VERSION
#define NGTMST_VERSION "unknown"
#endif

namespace ngtmst::cli {

namespace {

using Json = nlohmann::json;

const std::vector<std::string> kFidScanSpecs{"sym-1ps", "sym-2ps", "asym-1ps", "sym-1pa",
                                             "asym-1pa", "sym-1pc", "asym-1pc"};
const std::vector<std::string> kKappaScanSpecs{"sym-1ps", "sym-2ps", "sym-1pc"};

std::string flag_name(const std::string& key) {
  std::string flag = "--" + key;
  std::replace(flag.begin(), flag.end(), '_', '-');
  return flag;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
T get_as(const Json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const Json::exception&) {
    throw std::invalid_argument("config key '" + key + "' has the wrong type");
  }
}

std::string number_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Setter = std::function<void(const Json&, const std::string&, Settings&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table{
      {"out", [](const Json& v, const std::string& k, Settings& s) { s.out = get_as<std::string>(v, k); }},
      {"format", [](const Json& v, const std::string& k, Settings& s) { s.format = get_as<std::string>(v, k); }},
      {"workers", [](const Json& v, const std::string& k, Settings& s) { s.workers = get_as<int>(v, k); }},
      {"grid_r", [](const Json& v, const std::string& k, Settings& s) { s.grid_r = get_as<std::string>(v, k); }},
      {"grid_t", [](const Json& v, const std::string& k, Settings& s) { s.grid_t = get_as<std::string>(v, k); }},
      {"grid_kappa",
       [](const Json& v, const std::string& k, Settings& s) { s.grid_kappa = get_as<std::string>(v, k); }},
      {"input", [](const Json& v, const std::string& k, Settings& s) { s.input = get_as<std::string>(v, k); }},
      {"eps", [](const Json& v, const std::string& k, Settings& s) { s.eps = get_as<double>(v, k); }},
      {"kappa", [](const Json& v, const std::string& k, Settings& s) { s.kappa = get_as<double>(v, k); }},
      {"specs",
       [](const Json& v, const std::string& k, Settings& s) {
         s.specs = v.is_string() ? split_list(v.get<std::string>()) : get_as<std::vector<std::string>>(v, k);
       }},
      {"spec", [](const Json& v, const std::string& k, Settings& s) { s.spec = get_as<std::string>(v, k); }},
      {"r",
       [](const Json& v, const std::string& k, Settings& s) {
         s.r = v.is_number() ? number_text(v.get<double>()) : get_as<std::string>(v, k);
       }},
      {"objective",
       [](const Json& v, const std::string& k, Settings& s) { s.objective = get_as<std::string>(v, k); }},
      {"oracle", [](const Json& v, const std::string& k, Settings& s) { s.oracle = get_as<bool>(v, k); }},
      {"cutoff", [](const Json& v, const std::string& k, Settings& s) { s.cutoff = get_as<int>(v, k); }},
      {"t_tolerance",
       [](const Json& v, const std::string& k, Settings& s) { s.t_tolerance = get_as<double>(v, k); }},
      {"r_tolerance",
       [](const Json& v, const std::string& k, Settings& s) { s.r_tolerance = get_as<double>(v, k); }},
  };
  return table;
}

InputState make_input(const Settings& s) {
  if (s.input == "coherent") return CoherentInput{};
  if (s.input == "sqvac") return SqueezedVacuumInput{s.eps};
  throw std::invalid_argument("input must be coherent or sqvac, got '" + s.input + "'");
}

OptimizerSettings make_optimizer(const Settings& s) {
  OptimizerSettings opt;
  opt.t_grid = Range::parse(s.grid_t);
  opt.r_grid = Range::parse(s.grid_r);
  opt.t_tolerance = s.t_tolerance;
  opt.r_tolerance = s.r_tolerance;
  opt.workers = s.workers;
  opt.validate();
  return opt;
}

std::vector<SpecTemplate> make_specs(const Settings& s, const std::vector<std::string>& fallback) {
  std::vector<SpecTemplate> out;
  for (const auto& name : s.specs.empty() ? fallback : s.specs) out.push_back(SpecTemplate::parse(name));
  return out;
}

double kappa_or(const Settings& s, double fallback) { return std::isnan(s.kappa) ? fallback : s.kappa; }

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

CommandResult fid_scan_command(const Settings& s) {
  const auto specs = make_specs(s, kFidScanSpecs);
  const double kappa = kappa_or(s, 0.51);
  const auto scans = fid_scan(specs, kappa, make_input(s), parse_objective(s.objective), make_optimizer(s));
  CommandResult result{Table({"spec", "kappa", "r", "T_opt", "F", "F_base", "dF", "P", "R", "r_th"}), {}};
  Json thresholds = Json::object();
  for (const auto& scan : scans) {
    const double r_th = scan.r_threshold.value_or(std::nan(""));
    thresholds[scan.spec.name()] = optional_number(scan.r_threshold);
    for (const auto& p : scan.points) {
      const auto& rep = p.report;
      const double nan = std::nan("");
      result.table.add_row({scan.spec.name(), kappa, p.r_opt, p.t_opt, p.valid ? rep.fidelity : nan,
                            p.valid ? rep.fidelity_base : nan, p.valid ? rep.delta : nan,
                            p.valid ? rep.probability : nan, p.valid ? rep.product : nan, r_th});
    }
  }
  result.metadata["r_threshold"] = thresholds;
  return result;
}

CommandResult kappa_scan_command(const Settings& s) {
  const auto specs = make_specs(s, kKappaScanSpecs);
  const InputState input = make_input(s);
  const OptimizerSettings opt = make_optimizer(s);
  std::vector<double> rs;
  Json used = Json::object();
  for (const auto& spec : specs) {
    double r = 0.0;
    if (s.r == "auto") {
      // Squeezing that maximizes the T-optimized enhancement at kappa = 0.51.
      const OptResult best = optimize_joint(spec, 0.51, input, Objective::Enhancement, opt);
      if (!best.valid) throw std::runtime_error("no valid operating point for " + spec.name());
      r = best.r_opt;
    } else {
      r = std::stod(s.r);
    }
    rs.push_back(r);
    used[spec.name()] = r;
  }
  const auto scans = kappa_scan(specs, rs, Range::parse(s.grid_kappa), input, parse_objective(s.objective), opt);
  CommandResult result{Table({"spec", "kappa", "r", "T_opt", "F", "F_base", "dF", "P", "R"}), {}};
  const Range kappas = Range::parse(s.grid_kappa);
  for (std::size_t i = 0; i < scans.size(); ++i) {
    for (std::size_t k = 0; k < scans[i].points.size(); ++k) {
      const auto& p = scans[i].points[k];
      const double nan = std::nan("");
      result.table.add_row({scans[i].spec.name(), kappas.at(k), rs[i], p.t_opt, p.valid ? p.report.fidelity : nan,
                            p.valid ? p.report.fidelity_base : nan, p.valid ? p.report.delta : nan,
                            p.valid ? p.report.probability : nan, p.valid ? p.report.product : nan});
    }
  }
  result.metadata["r_used"] = used;
  return result;
}

CommandResult heatmap_command(const Settings& s) {
  const SpecTemplate spec = SpecTemplate::parse(s.spec);
  const double kappa = kappa_or(s, 1.0);
  const auto cells = heatmap(spec, kappa, make_input(s), make_optimizer(s));
  CommandResult result{Table({"spec", "kappa", "r", "T", "F", "F_base", "dF", "P", "R", "gray", "black"}), {}};
  for (const auto& c : cells) {
    const double nan = std::nan("");
    const auto& rep = c.report;
    result.table.add_row({spec.name(), kappa, c.r, c.t, rep ? rep->fidelity : nan, rep ? rep->fidelity_base : nan,
                          rep ? rep->delta : nan, rep ? rep->probability : nan, rep ? rep->product : nan, c.gray,
                          c.black});
  }
  return result;
}

struct Quantities {
  double r_max, r_opt, t_opt, f, df, p;
};

CommandResult table1_command(const Settings& s) {
  const auto entries = table1(make_optimizer(s));
  std::vector<std::string> columns{"quantity"};
  std::vector<Quantities> values;
  for (const auto& e : entries) {
    columns.push_back(e.label);
    const auto& o = e.optimum;
    values.push_back({o.value, o.r_opt, o.t_opt, o.report.fidelity, o.report.delta, o.report.probability});
  }
  if (s.oracle) {
    const fock::FidelityOverlap overlap(CoherentInput{}, s.cutoff);
    for (const auto& e : entries) {
      columns.push_back(e.label + "/oracle");
      const auto& o = e.optimum;
      const ThermalSqueezeParams params(o.r_opt, e.kappa);
      const auto herald = fock::herald_oracle(e.spec.at(o.t_opt), params, s.cutoff);
      const double f = overlap.fidelity(herald.state);
      const double df = f - overlap.fidelity(fock::tmst_density(params, s.cutoff));
      values.push_back({df * herald.probability, o.r_opt, o.t_opt, f, df, herald.probability});
    }
  }
  CommandResult result{Table(columns), {}};
  const std::vector<std::pair<std::string, double Quantities::*>> rows{
      {"R_max", &Quantities::r_max}, {"r_opt", &Quantities::r_opt}, {"T_opt", &Quantities::t_opt},
      {"F", &Quantities::f},         {"dF", &Quantities::df},       {"P", &Quantities::p}};
  for (const auto& [name, member] : rows) {
    std::vector<Cell> row{name};
    for (const auto& v : values) row.emplace_back(v.*member);
    result.table.add_row(std::move(row));
  }
  Json kappas = Json::object();
  for (const auto& e : entries) kappas[e.label] = e.kappa;
  result.metadata["kappa"] = kappas;
  return result;
}

void emit(const Settings& s, const CommandResult& result, std::ostream& out) {
  nlohmann::ordered_json meta;
  meta["tool"] = "ngtmst";
  meta["version"] = NGTMST_VERSION;
  meta["command"] = s.command;
  meta["config"] = describe(s);
  for (const auto& [k, v] : result.metadata.items()) meta[k] = v;

  auto write = [&](std::ostream& os) {
    if (s.format == "json") {
      write_json(os, result.table, meta);
    } else {
      write_csv(os, result.table);
    }
  };
  if (s.out.empty() || s.out == "-") {
    write(out);
    return;
  }
  std::ofstream file(s.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + s.out + "'");
  write(file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing output file '" + s.out + "'");
}

}  // namespace

void apply_config(const Json& config, const std::vector<std::string>& given, Settings& settings) {
  if (!config.is_object()) throw std::invalid_argument("config file must hold a JSON object");
  for (const auto& [key, value] : config.items()) {
    const auto it = setters().find(key);
    if (it == setters().end()) throw std::invalid_argument("unknown config key '" + key + "'");
    if (std::find(given.begin(), given.end(), key) != given.end()) continue;
    it->second(value, key, settings);
  }
}

nlohmann::ordered_json describe(const Settings& s) {
  nlohmann::ordered_json j;
  j["format"] = s.format;
  j["workers"] = s.workers;
  j["grid_r"] = s.grid_r;
  j["grid_t"] = s.grid_t;
  if (s.command == "kappa-scan") {
    j["grid_kappa"] = s.grid_kappa;
    j["r"] = s.r;
  }
  if (s.command != "table1") {
    j["input"] = s.input;
    if (s.input == "sqvac") j["eps"] = s.eps;
  }
  if (s.command == "fid-scan" || s.command == "heatmap") {
    j["kappa"] = kappa_or(s, s.command == "heatmap" ? 1.0 : 0.51);
  }
  if (s.command == "fid-scan" || s.command == "kappa-scan") {
    j["specs"] = s.specs.empty() ? (s.command == "fid-scan" ? kFidScanSpecs : kKappaScanSpecs) : s.specs;
    j["objective"] = s.objective;
  }
  if (s.command == "heatmap") j["spec"] = s.spec;
  if (s.command == "table1") {
    j["oracle"] = s.oracle;
    if (s.oracle) j["cutoff"] = s.cutoff;
  }
  j["t_tolerance"] = s.t_tolerance;
  j["r_tolerance"] = s.r_tolerance;
  return j;
}

CommandResult run_command(const Settings& s) {
  if (s.format != "csv" && s.format != "json") throw std::invalid_argument("format must be csv or json");
  if (s.command == "table1") return table1_command(s);
  if (s.command == "fid-scan") return fid_scan_command(s);
  if (s.command == "kappa-scan") return kappa_scan_command(s);
  if (s.command == "heatmap") return heatmap_command(s);
  throw std::invalid_argument("unknown command '" + s.command + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  s.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string config_path;

  CLI::App app{"Heralded non-Gaussian two-mode squeezed thermal states: teleportation sweeps", "ngtmst"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(NGTMST_VERSION));
  app.add_option("--config", config_path, "JSON file with default settings; flags take precedence");
  app.add_option("--out", s.out, "Output file (default: standard output)");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--workers", s.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--grid-r", s.grid_r, "Squeezing grid A:B:STEP")->capture_default_str();
  app.add_option("--grid-t", s.grid_t, "Transmissivity grid A:B:STEP")->capture_default_str();
  app.add_option("--t-tolerance", s.t_tolerance, "Golden-section tolerance in T")->capture_default_str();
  app.add_option("--r-tolerance", s.r_tolerance, "Golden-section tolerance in r")->capture_default_str();

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", s.input, "Teleported state")->check(CLI::IsMember({"coherent", "sqvac"}));
    sub->add_option("--eps", s.eps, "Input squeezing for sqvac")->capture_default_str();
  };

  auto* t1 = app.add_subcommand("table1", "Product-optimal operating points of 1-PS and 1-PC resources");
  t1->add_flag("--oracle", s.oracle, "Add truncated Fock-basis cross-check columns");
  t1->add_option("--cutoff", s.cutoff, "Fock cutoff for --oracle")->capture_default_str();

  auto* fs = app.add_subcommand("fid-scan", "T-optimized fidelity versus squeezing");
  add_input(fs);
  fs->add_option("--kappa", s.kappa, "Thermal parameter (default 0.51)");
  fs->add_option("--specs", s.specs, "Comma-separated spec names")->delimiter(',');
  fs->add_option("--objective", s.objective, "Quantity maximized over T")->check(CLI::IsMember({"F", "dF", "R"}));

  auto* ks = app.add_subcommand("kappa-scan", "T-optimized fidelity versus thermal parameter");
  add_input(ks);
  ks->add_option("--specs", s.specs, "Comma-separated spec names")->delimiter(',');
  ks->add_option("--r", s.r, "Squeezing, or 'auto' for the enhancement-optimal r at kappa 0.51");
  ks->add_option("--grid-kappa", s.grid_kappa, "Thermal-parameter grid A:B:STEP")->capture_default_str();
  ks->add_option("--objective", s.objective, "Quantity maximized over T")->check(CLI::IsMember({"F", "dF", "R"}));

  auto* hm = app.add_subcommand("heatmap", "F, dF, P and region flags over the (r, T) grid");
  add_input(hm);
  hm->add_option("--spec", s.spec, "Spec name")->capture_default_str();
  hm->add_option("--kappa", s.kappa, "Thermal parameter (default 1.0)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    s.command = active->get_name();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot open config file '" + config_path + "'");
      Json config;
      try {
        in >> config;
      } catch (const Json::exception& e) {
        throw std::runtime_error("config file '" + config_path + "': " + e.what());
      }
      std::vector<std::string> given;
      for (const auto& [key, setter] : setters()) {
        const std::string flag = flag_name(key);
        for (const CLI::App* scope : {static_cast<const CLI::App*>(&app), static_cast<const CLI::App*>(active)}) {
          const CLI::Option* opt = scope->get_option_no_throw(flag);
          if (opt && opt->count() > 0) given.push_back(key);
        }
      }
      apply_config(config, given, s);
    }
    emit(s, run_command(s), out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ngtmst::cli
