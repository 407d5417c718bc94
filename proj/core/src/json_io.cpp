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

#include "lorflats/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "lorflats/error.hpp"

namespace lorflats {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

Rational as_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("rational values must be \"p/q\" strings or integers");
}

Json interval_json(Subset k, Subset l) {
  Json out = Json::object();
  out["K"] = subset_to_json(k);
  out["L"] = subset_to_json(l);
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

Json subset_to_json(Subset s) {
  Json out = Json::array();
  for (int e : s.elements()) out.push_back(e);
  return out;
}

Subset subset_from_json(const Json& j) {
  if (!j.is_array()) fail("subsets must be arrays of element indices");
  Subset s;
  for (const auto& e : j) {
    const int v = as_int(e, "element");
    if (v < 0 || v >= kMaxGroundSize) fail("element " + std::to_string(v) + " out of range");
    s = s.with(v);
  }
  return s;
}

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object()) fail("matroid must be a JSON object");
  std::string type = "bases";
  if (j.contains("type")) {
    if (!j.at("type").is_string()) fail("type must be a string");
    type = j.at("type").get<std::string>();
  }
  if (type == "uniform") {
    return uniform_matroid(as_int(field(j, "r"), "r"), as_int(field(j, "n"), "n"));
  }
  if (type == "fano") return fano_matroid();
  if (type == "graphic") {
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) fail("edges must be an array");
    std::vector<std::pair<int, int>> list;
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2) fail("each edge must be a pair of vertices");
      list.emplace_back(as_int(e[0], "vertex"), as_int(e[1], "vertex"));
    }
    return graphic_matroid(list);
  }
  if (type != "bases") fail("unknown matroid type \"" + type + "\"");
  const int n = as_int(field(j, "n"), "n");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) fail("labels must be an array");
    for (const auto& label : j.at("labels")) {
      if (!label.is_string()) fail("labels must be strings");
      labels.push_back(label.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != n) fail("need exactly n labels");
  }
  const Json& bases = field(j, "bases");
  if (!bases.is_array()) fail("bases must be an array");
  std::vector<Subset> list;
  for (const auto& b : bases) {
    const Subset s = subset_from_json(b);
    if (!s.is_subset_of(Subset::full(n))) fail("basis " + to_string(s) + " outside ground set");
    list.push_back(s);
  }
  return Matroid::from_bases(GroundSet(n, std::move(labels)), std::move(list));
}

Json matroid_to_json(const Matroid& m) {
  Json out = Json::object();
  out["n"] = m.ground().size();
  if (m.ground().has_labels()) {
    Json labels = Json::array();
    for (int e = 0; e < m.ground().size(); ++e) labels.push_back(m.ground().label(e));
    out["labels"] = labels;
  }
  std::vector<Subset> bases = m.bases();
  std::sort(bases.begin(), bases.end(), CanonicalLess{});
  Json list = Json::array();
  for (Subset b : bases) list.push_back(subset_to_json(b));
  out["bases"] = list;
  return out;
}

GradedSubposet poset_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const Json& elements = field(j, "elements");
  if (!elements.is_array()) fail("elements must be an array");
  std::vector<Subset> list;
  for (const auto& e : elements) list.push_back(subset_from_json(e));
  return GradedSubposet::from_sets(n, std::move(list));
}

Json poset_to_json(const GradedSubposet& p) {
  Json out = Json::object();
  out["n"] = p.ground_size();
  Json list = Json::array();
  for (Subset s : p.elements()) list.push_back(subset_to_json(s));
  out["elements"] = list;
  return out;
}

IntervalVector interval_vector_from_json(const Json& j) {
  const Subset k = subset_from_json(field(j, "K"));
  const Subset l = subset_from_json(field(j, "L"));
  IntervalVector v(IntervalCoords::make(k, l));
  if (!j.contains("values")) return v;
  const Json& values = j.at("values");
  if (!values.is_object()) fail("values must be an object keyed by subsets");
  for (const auto& [key, value] : values.items()) {
    const Subset s = subset_from_json(parse_json(key));
    v.set(s, as_rational(value));
  }
  return v;
}

Json interval_vector_to_json(const IntervalVector& v) {
  Json out = interval_json(v.coords().lower(), v.coords().upper());
  Json values = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) values[to_string(v.coords().subset_at(i))] = to_string(v[i]);
  }
  out["values"] = values;
  return out;
}

std::vector<DirectionTuple> direction_tuples_from_json(const Json& j) {
  const Json& tuples = j.is_object() ? field(j, "tuples") : j;
  if (!tuples.is_array()) fail("direction tuples must be an array");
  std::vector<DirectionTuple> out;
  for (const auto& tuple : tuples) {
    if (!tuple.is_array()) fail("each tuple must be an array of interval vectors");
    DirectionTuple t;
    for (const auto& v : tuple) t.push_back(interval_vector_from_json(v));
    out.push_back(std::move(t));
  }
  return out;
}

Json certificate_to_json(const LorentzianCertificate& cert) {
  Json out = Json::object();
  out["interval"] = interval_json(cert.lower, cert.upper);
  out["degree"] = cert.degree;
  out["seed"] = cert.seed;
  Json samples = Json::array();
  for (std::size_t i = 0; i < cert.samples.size(); ++i) {
    Json sample = Json::object();
    sample["index"] = i;
    Json directions = Json::array();
    Json slacks = Json::array();
    for (const auto& v : cert.samples[i]) {
      directions.push_back(interval_vector_to_json(v));
      // Smallest submodular slack: the membership witness for the open cone.
      std::optional<Rational> least;
      for_each_incomparable_pair(v.coords(), [&](Subset s, Subset t) {
        const Rational slack = submodular_slack(v, s, t);
        if (!least || slack < *least) least = slack;
        return true;
      });
      slacks.push_back(least ? Json(to_string(*least)) : Json(nullptr));
    }
    sample["directions"] = directions;
    sample["min_slack"] = slacks;
    const SampleResult& r = cert.results[i];
    sample["contraction"] = to_string(r.contraction);
    if (r.hessian) {
      sample["inertia"] = Json::array({r.hessian->n_plus, r.hessian->n_zero, r.hessian->n_minus});
    } else {
      sample["inertia"] = nullptr;
    }
    sample["passed"] = r.passed;
    if (!r.witness.empty()) sample["witness"] = r.witness;
    samples.push_back(sample);
  }
  out["samples"] = samples;
  out["verdict"] = cert.verdict;
  return out;
}

Json chow_report_to_json(const ChowReport& report) {
  Json out = Json::object();
  out["interval"] = interval_json(report.lower, report.upper);
  out["graded_dimensions"] = report.graded_dimensions;
  out["top_one_dimensional"] = report.top_one_dimensional;
  out["flags_consistent"] = report.flags_consistent;
  out["equal"] = report.equal;
  out["verdict"] = report.ok();
  if (!report.witness.empty()) out["witness"] = report.witness;
  return out;
}

Json engine_report_to_json(const EngineReport& report) {
  Json out = Json::object();
  out["degree"] = report.degree;
  Json list = Json::array();
  for (const auto& h : report.hypotheses) {
    Json item = Json::object();
    item["number"] = h.number;
    item["name"] = h.name;
    item["status"] = std::string(to_string(h.status));
    if (!h.witness.empty()) item["witness"] = h.witness;
    list.push_back(item);
  }
  out["hypotheses"] = list;
  out["ok"] = report.ok();
  return out;
}

}  // namespace lorflats
