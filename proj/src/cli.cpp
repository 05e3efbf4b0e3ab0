// Copyright 2026 The globent Authors
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

#include "globent/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "globent/state_file.hpp"
#include "globent/verify.hpp"
#include "json.hpp"

namespace globent {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FamilyArgs {
  std::string family;
  std::optional<unsigned> n;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> coeffs;
  std::vector<std::string> factors;
};

void add_family_options(CLI::App* cmd, FamilyArgs& a, CLI::Option** family_opt) {
  *family_opt = cmd->add_option("--family", a.family,
                                "basis, bell, ghz, ghz-like, w, cluster-phi-plus, "
                                "cluster-phi-minus, g, product, haar");
  cmd->add_option("--n", a.n, "Qubit count");
  cmd->add_option("--alpha", a.alpha, "ghz-like |0...0> amplitude");
  cmd->add_option("--beta", a.beta, "ghz-like |1...1> amplitude (default sqrt(1 - alpha^2))");
  cmd->add_option("--index", a.index, "basis state index");
  cmd->add_option("--seed", a.seed, "haar sampling seed");
  cmd->add_option("--coeff", a.coeffs, "g-state coefficient <bits>=<re>[,<im>]");
  cmd->add_option("--factor", a.factors, "product factor state file");
}

double parse_double(std::string_view s, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw UsageError("invalid " + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::pair<std::string, Complex> parse_coeff(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw UsageError("--coeff expects <bits>=<re>[,<im>], got '" + text + "'");
  }
  const std::string key = text.substr(0, eq);
  const std::string value = text.substr(eq + 1);
  const auto comma = value.find(',');
  const double re = parse_double(value.substr(0, comma), "coefficient");
  const double im =
      comma == std::string::npos ? 0.0 : parse_double(value.substr(comma + 1), "coefficient");
  return {key, Complex(re, im)};
}

StateVector build_from_args(const FamilyArgs& a) {
  const std::string& f = a.family;
  if (f == "basis") return build_family(BasisFamily{a.n.value_or(1), a.index});
  if (f == "bell") {
    if (a.n && *a.n != 2) throw UsageError("bell is a 2-qubit state");
    return build_family(BellFamily{});
  }
  if (f == "ghz") return build_family(GhzFamily{a.n.value_or(3)});
  if (f == "w") return build_family(WFamily{a.n.value_or(3)});
  if (f == "ghz-like") {
    if (!a.alpha) throw UsageError("ghz-like requires --alpha");
    const double beta = a.beta.value_or(std::sqrt(std::max(0.0, 1.0 - *a.alpha * *a.alpha)));
    return build_family(GhzLikeFamily{a.n.value_or(3), *a.alpha, beta});
  }
  if (f == "cluster-phi-plus") return build_family(ClusterFamily{a.n.value_or(4), ClusterSign::kPlus});
  if (f == "cluster-phi-minus") {
    return build_family(ClusterFamily{a.n.value_or(4), ClusterSign::kMinus});
  }
  if (f == "g" || f == "g-state") {
    GFamily g{a.n.value_or(4), {}};
    for (const auto& c : a.coeffs) g.coefficients.push_back(parse_coeff(c));
    if (g.coefficients.empty()) throw UsageError("g-state requires at least one --coeff");
    return build_family(g);
  }
  if (f == "product") {
    ProductFamily p;
    for (const auto& path : a.factors) p.factors.push_back(read_state_file(path));
    if (p.factors.empty()) throw UsageError("product requires --factor files");
    return build_family(p);
  }
  if (f == "haar") return haar_random_state(a.n.value_or(3), a.seed);
  throw UsageError("unknown family '" + f + "'");
}

double rounded(double v) {
  return std::strtod(format_value(v).c_str(), nullptr);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--tolerance expects <property>=<value>, got '" + item + "'");
    }
    out[item.substr(0, eq)] = parse_double(item.substr(eq + 1), "tolerance");
  }
  return out;
}

std::string suite_summary(const SuiteReport& r) {
  std::ostringstream s;
  for (const auto& p : r.records) {
    s << (p.passed ? "PASS " : "FAIL ") << p.name << " max_residual=" << format_value(p.max_residual)
      << " tolerance=" << format_value(p.tolerance);
    if (p.violations > 0) s << " violations=" << p.violations;
    if (!p.passed && p.worst_seed) s << " seed=" << *p.worst_seed;
    s << '\n';
  }
  s << (r.passed ? "suite passed" : "suite FAILED") << " (" << r.records.size()
    << " properties)\n";
  return s.str();
}

}  // namespace

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string report_text(const MeasureReport& r) {
  std::ostringstream s;
  s << "n: " << r.n << '\n';
  s << "e_ad: " << format_value(r.e_ad) << '\n';
  s << "e_mw: " << format_value(r.e_mw) << '\n';
  s << "one_tangles:";
  for (double t : r.one_tangles) s << ' ' << format_value(t);
  s << '\n';
  s << "avg_linear_entropy: " << format_value(r.avg_linear_entropy) << '\n';
  s << "avg_von_neumann: " << format_value(r.avg_von_neumann) << '\n';
  s << "taylor_residual: " << format_value(r.taylor_residual) << '\n';
  if (r.tangles) {
    s << "tau12: " << format_value(r.tangles->tau12) << '\n';
    s << "tau13: " << format_value(r.tangles->tau13) << '\n';
    s << "tau23: " << format_value(r.tangles->tau23) << '\n';
    s << "tau123: " << format_value(r.tangles->tau123) << '\n';
  }
  for (const auto& [l, v] : r.e_ad_levels) {
    s << "e_ad_level_" << l << ": " << format_value(v) << '\n';
  }
  if (r.e_ad_global) s << "e_ad_global: " << format_value(*r.e_ad_global) << '\n';
  return s.str();
}

std::string report_json(const MeasureReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["e_ad"] = rounded(r.e_ad);
  j["e_mw"] = rounded(r.e_mw);
  j["one_tangles"] = ordered_json::array();
  for (double t : r.one_tangles) j["one_tangles"].push_back(rounded(t));
  j["avg_linear_entropy"] = rounded(r.avg_linear_entropy);
  j["avg_von_neumann"] = rounded(r.avg_von_neumann);
  j["taylor_residual"] = rounded(r.taylor_residual);
  if (r.tangles) {
    j["tau12"] = rounded(r.tangles->tau12);
    j["tau13"] = rounded(r.tangles->tau13);
    j["tau23"] = rounded(r.tangles->tau23);
    j["tau123"] = rounded(r.tangles->tau123);
  }
  if (!r.e_ad_levels.empty()) {
    j["e_ad_levels"] = ordered_json::array();
    for (const auto& [l, v] : r.e_ad_levels) {
      j["e_ad_levels"].push_back({{"level", l}, {"value", rounded(v)}});
    }
  }
  if (r.e_ad_global) j["e_ad_global"] = rounded(*r.e_ad_global);
  return j.dump(2) + "\n";
}

std::string report_csv(const MeasureReport& r) {
  std::vector<std::pair<std::string, double>> cols;
  cols.emplace_back("e_ad", r.e_ad);
  cols.emplace_back("e_mw", r.e_mw);
  for (std::size_t i = 0; i < r.one_tangles.size(); ++i) {
    cols.emplace_back("one_tangle_" + std::to_string(i + 1), r.one_tangles[i]);
  }
  cols.emplace_back("avg_linear_entropy", r.avg_linear_entropy);
  cols.emplace_back("avg_von_neumann", r.avg_von_neumann);
  cols.emplace_back("taylor_residual", r.taylor_residual);
  if (r.tangles) {
    cols.emplace_back("tau12", r.tangles->tau12);
    cols.emplace_back("tau13", r.tangles->tau13);
    cols.emplace_back("tau23", r.tangles->tau23);
    cols.emplace_back("tau123", r.tangles->tau123);
  }
  for (const auto& [l, v] : r.e_ad_levels) cols.emplace_back("e_ad_level_" + std::to_string(l), v);
  if (r.e_ad_global) cols.emplace_back("e_ad_global", *r.e_ad_global);
  std::string header = "n";
  std::string row = std::to_string(r.n);
  for (const auto& [name, v] : cols) {
    header += "," + name;
    row += "," + format_value(v);
  }
  return header + "\n" + row + "\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Global entanglement measures for pure multi-qubit states", "globent"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // measure
  auto* measure = app.add_subcommand("measure", "Print the measure report of one state");
  FamilyArgs m_family;
  CLI::Option* m_family_opt = nullptr;
  add_family_options(measure, m_family, &m_family_opt);
  std::string m_in;
  bool m_tangles = false, m_json = false, m_csv = false, m_renormalize = false;
  unsigned m_subsets = 0;
  auto* in_opt = measure->add_option("--in", m_in, "PSI 1 state file");
  in_opt->excludes(m_family_opt);
  measure->add_flag("--tangles", m_tangles, "Two- and three-tangles (n = 3)");
  measure->add_option("--subsets", m_subsets, "Subset measure levels 1..L");
  auto* json_flag = measure->add_flag("--json", m_json, "JSON output");
  measure->add_flag("--csv", m_csv, "CSV output")->excludes(json_flag);
  measure->add_flag("--renormalize", m_renormalize, "Rescale input amplitudes to unit norm");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Tabulate a family over a qubit range as CSV");
  std::string s_family, s_out;
  unsigned s_min = 2, s_max = 12;
  sweep->add_option("--family", s_family, "w, ghz, cluster-phi-plus or cluster-phi-minus")
      ->required()
      ->check(CLI::IsMember({"w", "ghz", "cluster-phi-plus", "cluster-phi-minus"}));
  sweep->add_option("--n-min", s_min, "Smallest n (default 2)");
  sweep->add_option("--n-max", s_max, "Largest n (default 12)");
  sweep->add_option("--out", s_out, "CSV file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the seeded property suite");
  SuiteConfig v_config;
  std::string v_report;
  std::vector<std::string> v_tolerances;
  bool v_json = false;
  verify->add_option("--seed", v_config.seed, "Suite seed (default 42)");
  verify->add_option("--trials", v_config.trials, "Trials per property (default 200)");
  verify->add_option("--n-min", v_config.n_min, "Smallest random n (default 2)");
  verify->add_option("--n-max", v_config.n_max, "Largest random n (default 8)");
  verify->add_option("--tolerance", v_tolerances, "Override <property>=<value>; '*' for all");
  verify->add_option("--threads", v_config.threads, "Worker threads (0 = all cores)");
  verify->add_option("--report", v_report, "Write the JSON report to this file");
  verify->add_flag("--json", v_json, "Print the JSON report instead of the summary");

  // make
  auto* make = app.add_subcommand("make", "Write a family state as a PSI 1 file");
  FamilyArgs k_family;
  CLI::Option* k_family_opt = nullptr;
  add_family_options(make, k_family, &k_family_opt);
  k_family_opt->required();
  std::string k_out;
  make->add_option("--out", k_out, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*measure) {
      if (m_in.empty() && m_family.family.empty()) {
        throw UsageError("measure needs --in <file> or --family <name>");
      }
      const StateVector state =
          m_in.empty() ? build_from_args(m_family) : read_state_file(m_in, m_renormalize);
      ReportOptions options;
      options.tangles = m_tangles;
      options.subset_levels = m_subsets;
      const auto report = full_report(state, options);
      out << (m_json ? report_json(report) : m_csv ? report_csv(report) : report_text(report));
      return kExitOk;
    }
    if (*sweep) {
      std::string csv = "n,e_ad,e_mw,avg_von_neumann\n";
      for (unsigned n = s_min; n <= s_max; ++n) {
        const bool cluster = s_family.rfind("cluster", 0) == 0;
        if (cluster && n % 2 != 0) {
          csv += "# skipped n=" + std::to_string(n) + ": cluster states need even n\n";
          continue;
        }
        FamilyArgs fa;
        fa.family = s_family;
        fa.n = n;
        const auto r = full_report(build_from_args(fa));
        csv += std::to_string(n) + "," + format_value(r.e_ad) + "," + format_value(r.e_mw) +
               "," + format_value(r.avg_von_neumann) + "\n";
      }
      write_output(s_out, csv, out);
      return kExitOk;
    }
    if (*verify) {
      v_config.tolerances = parse_tolerances(v_tolerances);
      const auto report = run_suite(v_config);
      if (!v_report.empty()) write_output(v_report, to_json(report), out);
      out << (v_json ? to_json(report) : suite_summary(report));
      return report.passed ? kExitOk : kExitPropertyFailure;
    }
    if (*make) {
      write_output(k_out, format_state_file(build_from_args(k_family)), out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace globent
