// Copyright 2026 The lorflats Authors.
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

#include "cli/commands.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include <CLI/CLI.hpp>

#include "lorflats/basis_poly.hpp"
#include "lorflats/chow.hpp"
#include "lorflats/error.hpp"
#include "lorflats/json_io.hpp"
#include "lorflats/lorentzian.hpp"
#include "lorflats/matroid.hpp"

namespace lorflats::cli {

namespace {

struct Input {
  std::optional<Matroid> matroid;
  GradedSubposet poset;
  std::function<std::string(int)> label;
  Subset lower;
  Subset upper;
};

Subset parse_subset(std::string text) {
  std::string cleaned;
  for (char c : text) {
    if (c != '[' && c != ']' && c != '{' && c != '}' && c != ' ') cleaned += c;
  }
  Subset s;
  std::stringstream in(cleaned);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int e = -1;
    try {
      e = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || e < 0 || e >= kMaxGroundSize) {
      throw Error(ErrorCode::ParseError, "bad element \"" + item + "\" in \"" + text + "\"");
    }
    s = s.with(e);
  }
  return s;
}

Matroid load_graphic(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_array()) j = Json{{"edges", j}};
  j["type"] = "graphic";
  return matroid_from_json(j);
}

Input load_input(const RunConfig& c) {
  const int sources = (c.matroid_file ? 1 : 0) + (c.graphic_file ? 1 : 0) + (c.uniform ? 1 : 0) +
                      (c.fano ? 1 : 0) + (c.poset_file ? 1 : 0);
  if (sources != 1) {
    throw Error(ErrorCode::InvalidParams,
                "give exactly one of --matroid, --graphic, --uniform, --fano, --poset");
  }
  Input in;
  if (c.poset_file) {
    in.poset = poset_from_json(read_json_file(*c.poset_file));
    in.label = [](int e) { return std::to_string(e + 1); };
  } else {
    if (c.matroid_file) in.matroid = matroid_from_json(read_json_file(*c.matroid_file));
    if (c.graphic_file) in.matroid = load_graphic(*c.graphic_file);
    if (c.uniform) in.matroid = uniform_matroid(c.uniform->first, c.uniform->second);
    if (c.fano) in.matroid = fano_matroid();
    in.poset = flats_lattice(*in.matroid).poset();
    const GroundSet ground = in.matroid->ground();
    in.label = [ground](int e) { return ground.label(e); };
  }
  if (c.interval) {
    in.lower = parse_subset(c.interval->first);
    in.upper = parse_subset(c.interval->second);
    const auto k = in.poset.index_of(in.lower);
    const auto l = in.poset.index_of(in.upper);
    if (!k || !l || !in.poset.less(*k, *l)) {
      throw Error(ErrorCode::NotAnInterval, "(" + to_string(in.lower) + ", " +
                                                to_string(in.upper) + ") is not K < L in the poset");
    }
  } else {
    const auto bottom = in.poset.bottom();
    const auto top = in.poset.top();
    if (!bottom || !top || *bottom == *top) {
      throw Error(ErrorCode::NotAnInterval, "poset has no proper bottom-to-top interval");
    }
    in.lower = in.poset.element(*bottom);
    in.upper = in.poset.element(*top);
  }
  return in;
}

std::string subset_label(Subset s, const std::function<std::string(int)>& label) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += label(e);
    first = false;
  }
  return out + "}";
}

Json rationals_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& q : values) out.push_back(to_string(q));
  return out;
}

std::string rationals_text(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(values[i]);
  }
  return out + ")";
}

bool json_mode(const RunConfig& c) { return c.format == "json"; }

int cmd_charpoly(const RunConfig& c, std::ostream& out) {
  const Input in = load_input(c);
  if (!in.matroid) throw Error(ErrorCode::InvalidParams, "charpoly needs a matroid input");
  const Matroid& m = *in.matroid;
  const UniPoly chi = characteristic_polynomial(m);
  const UniPoly reduced = reduced_characteristic_polynomial(m, 0);
  const auto coeffs = reduced.absolute_coefficients_leading_first();
  const bool log_concave = is_log_concave(coeffs);
  if (json_mode(c)) {
    Json j = Json::object();
    j["rank"] = m.rank();
    j["chi"] = chi.to_string();
    j["reduced_chi"] = reduced.to_string();
    j["abs_coefficients"] = rationals_json(coeffs);
    j["log_concave"] = log_concave;
    out << j.dump(2) << "\n";
  } else {
    out << "chi(t) = " << chi.to_string() << "\n";
    out << "reduced chi(t) = " << reduced.to_string() << "\n";
    out << "|coefficients| = " << rationals_text(coeffs) << "\n";
    out << "log-concave = " << (log_concave ? "true" : "false") << "\n";
  }
  return log_concave ? kOk : kFailed;
}

int cmd_pol(const RunConfig& c, std::ostream& out) {
  const Input in = load_input(c);
  PolCache cache(in.poset);
  const MultiPoly& p = cache.pol(in.lower, in.upper);
  const std::string text = p.to_string(flat_namer(p.variables(), in.label));
  std::optional<Rational> value;
  if (c.eval) {
    const CoordsPtr coords = IntervalCoords::make(in.lower, in.upper);
    if (*c.eval == "alpha") {
      value = eval_at(cache, in.lower, in.upper, alpha(coords));
    } else if (*c.eval == "beta") {
      value = eval_at(cache, in.lower, in.upper, beta(coords));
    } else {
      value = eval_at(cache, in.lower, in.upper,
                      interval_vector_from_json(read_json_file(*c.eval)));
    }
  }
  if (json_mode(c)) {
    Json j = Json::object();
    j["interval"] = {{"K", subset_to_json(in.lower)}, {"L", subset_to_json(in.upper)}};
    j["degree"] = std::max(p.degree(), 0);
    Json vars = Json::array();
    for (Subset v : p.variables()) vars.push_back(subset_to_json(v));
    j["variables"] = vars;
    j["pol"] = text;
    if (value) j["eval"] = {{"point", *c.eval}, {"value", to_string(*value)}};
    out << j.dump(2) << "\n";
  } else {
    out << text << "\n";
    if (value) out << "pol(" << *c.eval << ") = " << to_string(*value) << "\n";
  }
  return kOk;
}

int cmd_certify(const RunConfig& c, std::ostream& out) {
  const Input in = load_input(c);
  PolCache cache(in.poset);
  const int d = cache.pol(in.lower, in.upper).degree();
  std::vector<DirectionTuple> tuples;
  if (c.directions_file) {
    tuples = direction_tuples_from_json(read_json_file(*c.directions_file));
  } else {
    if (c.samples < 1) throw Error(ErrorCode::InvalidParams, "--samples must be at least 1");
    tuples = sample_direction_tuples(IntervalCoords::make(in.lower, in.upper), d, c.samples,
                                     c.seed);
  }
  const LorentzianCertificate cert =
      certify_C_lorentzian(cache, in.lower, in.upper, std::move(tuples), c.seed, c.jobs);
  if (json_mode(c)) {
    out << certificate_to_json(cert).dump(2) << "\n";
  } else {
    out << "interval " << subset_label(in.lower, in.label) << " < "
        << subset_label(in.upper, in.label) << ", degree " << cert.degree << ", seed " << cert.seed
        << "\n";
    std::size_t passed = 0;
    for (std::size_t i = 0; i < cert.results.size(); ++i) {
      const SampleResult& r = cert.results[i];
      out << "sample " << i << ": (P) " << to_string(r.contraction);
      if (r.hessian) out << "  (H) " << to_string(*r.hessian);
      out << "  " << (r.passed ? "pass" : "FAIL " + r.witness) << "\n";
      passed += r.passed ? 1 : 0;
    }
    out << "verdict: " << (cert.verdict ? "certified" : "failed") << " (" << passed << "/"
        << cert.results.size() << " samples)\n";
  }
  return cert.verdict ? kOk : kFailed;
}

int cmd_chow_verify(const RunConfig& c, std::ostream& out) {
  const Input in = load_input(c);
  const ChowLimits limits{c.max_flats, c.max_degree};
  PolCache cache(in.poset);
  std::vector<std::pair<Subset, Subset>> intervals;
  if (c.all_intervals) {
    const auto& p = in.poset;
    for (std::size_t k = 0; k < p.size(); ++k) {
      for (std::size_t l = k + 1; l < p.size(); ++l) {
        if (p.less(k, l) && p.d(k, l) <= c.max_d) intervals.emplace_back(p.element(k), p.element(l));
      }
    }
  } else {
    intervals.emplace_back(in.lower, in.upper);
  }
  std::vector<ChowReport> reports;
  for (const auto& [k, l] : intervals) reports.push_back(verify_vol_eq_pol(cache, k, l, limits));
  bool all = true;
  for (const auto& r : reports) all = all && r.ok();
  if (json_mode(c)) {
    Json j = Json::object();
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(chow_report_to_json(r));
    j["reports"] = list;
    j["verdict"] = all;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << subset_label(r.lower, in.label) << " < " << subset_label(r.upper, in.label)
          << ": dims (";
      for (std::size_t i = 0; i < r.graded_dimensions.size(); ++i) {
        out << (i > 0 ? ", " : "") << r.graded_dimensions[i];
      }
      out << ") " << (r.ok() ? "vol = pol" : "MISMATCH " + r.witness) << "\n";
    }
    out << "verdict: " << (all ? "equal" : "not equal") << " (" << reports.size()
        << " intervals)\n";
  }
  return all ? kOk : kFailed;
}

int cmd_poset_check(const RunConfig& c, std::ostream& out) {
  const Input in = load_input(c);
  const GradedSubposet p =
      c.interval ? in.poset.interval(in.poset.require(in.lower), in.poset.require(in.upper))
                 : in.poset;
  const MobiusTable mu = mobius(p);
  const Check semimodular = check_semimodular(p);
  std::vector<std::pair<std::string, Check>> checks = {
      {"graded", Check::pass()},
      {"balanced", check_balanced(p)},
      {"one_balanced", check_one_balanced(p)},
      {"interval_connected", check_interval_connected(p)},
      {"semimodular", semimodular},
      {"lattice_of_flats", check_lattice_of_flats(p)},
      {"mobius_sign_alternation", check_mobius_sign_alternation(p, mu)},
  };
  if (semimodular) checks.emplace_back("weisner", check_weisner_all(p, mu));
  if (json_mode(c)) {
    Json j = Json::object();
    j["elements"] = p.size();
    for (const auto& [name, check] : checks) {
      Json item = {{"ok", check.ok}};
      if (!check.ok) item["witness"] = check.witness;
      j[name] = item;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "elements: " << p.size() << "\n";
    for (const auto& [name, check] : checks) {
      out << name << ": " << (check.ok ? "true" : "false");
      if (!check.ok) out << " (" << check.witness << ")";
      out << "\n";
    }
  }
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeLimitExceeded:
      return kSizeGuard;
    case ErrorCode::CertificationFailure:
    case ErrorCode::MismatchWithDirectComputation:
    case ErrorCode::TopDegreeNotOneDimensional:
    case ErrorCode::FlagInconsistency:
    case ErrorCode::FeasibilityFailure:
    case ErrorCode::InternalAxiomFailure:
    case ErrorCode::DivisibilityFailure:
      return kFailed;
    default:
      return kInvalidInput;
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "text" && config.format != "json") {
      err << "error: --format must be text or json\n";
      return kUsage;
    }
    if (config.command == "charpoly") return cmd_charpoly(config, out);
    if (config.command == "pol") return cmd_pol(config, out);
    if (config.command == "certify") return cmd_certify(config, out);
    if (config.command == "chow-verify") return cmd_chow_verify(config, out);
    if (config.command == "poset-check") return cmd_poset_check(config, out);
    err << "error: unknown command \"" << config.command << "\"\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Basis polynomials of graded posets, Lorentzian certification and Chow rings",
               "lorflats"};
  app.require_subcommand(1);
  RunConfig config;
  std::vector<int> uniform;
  std::vector<std::string> interval;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--matroid", config.matroid_file, "Matroid JSON file");
    sub->add_option("--graphic", config.graphic_file, "Graph edge list JSON file");
    sub->add_option("--uniform", uniform, "Uniform matroid U(r, n)")->expected(2);
    sub->add_flag("--fano", config.fano, "The Fano plane");
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_interval = [&](CLI::App* sub) {
    sub->add_option("--poset", config.poset_file, "Graded poset JSON file");
    // Bracketed lists must reach us intact rather than as CLI11 array syntax.
    sub->add_option("--interval", interval, "Interval K L as element lists, e.g. [] [0,1]")
        ->expected(2)
        ->allow_extra_args(false);
  };

  CLI::App* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial and log-concavity");
  add_common(charpoly);

  CLI::App* pol = app.add_subcommand("pol", "Basis polynomial of an interval");
  add_common(pol);
  add_interval(pol);
  pol->add_option("--eval", config.eval, "Evaluate at alpha, beta or an interval vector file");

  CLI::App* certify = app.add_subcommand("certify", "Sampled Lorentzian certificate");
  add_common(certify);
  add_interval(certify);
  certify->add_option("--samples", config.samples, "Number of direction tuples");
  certify->add_option("--seed", config.seed, "Random seed");
  certify->add_option("--directions", config.directions_file, "Direction tuples JSON file");
  certify->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);

  CLI::App* chow = app.add_subcommand("chow-verify", "Compare the Chow volume polynomial with pol");
  add_common(chow);
  add_interval(chow);
  chow->add_flag("--all", config.all_intervals, "Every interval with d <= --max-d");
  chow->add_option("--max-d", config.max_d, "Largest d for --all");
  chow->add_option("--max-flats", config.max_flats, "Size guard on open flats");
  chow->add_option("--max-degree", config.max_degree, "Size guard on d");

  CLI::App* poset = app.add_subcommand("poset-check", "Poset predicates");
  add_common(poset);
  add_interval(poset);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  config.command = app.get_subcommands().front()->get_name();
  if (uniform.size() == 2) config.uniform = std::make_pair(uniform[0], uniform[1]);
  if (interval.size() == 2) config.interval = std::make_pair(interval[0], interval[1]);
  return run(config, out, err);
}

}  // namespace lorflats::cli
