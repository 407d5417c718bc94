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

#ifndef LORFLATS_JSON_IO_HPP_
#define LORFLATS_JSON_IO_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lorflats/chow.hpp"
#include "lorflats/cone.hpp"
#include "lorflats/lorentzian.hpp"
#include "lorflats/matroid.hpp"
#include "lorflats/poset.hpp"

namespace lorflats {

using Json = nlohmann::ordered_json;

// Every reader throws ParseError on malformed input; validation errors from
// the constructors propagate unchanged.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

Json subset_to_json(Subset s);
Subset subset_from_json(const Json& j);

// {"n": 4, "labels": [...], "bases": [[0, 1], ...]}
// {"type": "uniform", "r": 2, "n": 3}
// {"type": "graphic", "edges": [[0, 1], ...]}
// {"type": "fano"}
Matroid matroid_from_json(const Json& j);
Json matroid_to_json(const Matroid& m);

// {"n": 4, "elements": [[], [0], ...]}
GradedSubposet poset_from_json(const Json& j);
Json poset_to_json(const GradedSubposet& p);

// {"K": [...], "L": [...], "values": {"[0,1]": "p/q", ...}}; omitted
// coordinates are zero. Integers are accepted in place of strings.
IntervalVector interval_vector_from_json(const Json& j);
Json interval_vector_to_json(const IntervalVector& v);

// A bare array of tuples or {"tuples": [...]}, each tuple an array of
// interval vectors.
std::vector<DirectionTuple> direction_tuples_from_json(const Json& j);

Json certificate_to_json(const LorentzianCertificate& cert);
Json chow_report_to_json(const ChowReport& report);
Json engine_report_to_json(const EngineReport& report);

}  // namespace lorflats

#endif  // LORFLATS_JSON_IO_HPP_
