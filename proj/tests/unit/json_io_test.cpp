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

#include <gtest/gtest.h>

#include "lorflats/basis_poly.hpp"
#include "lorflats/error.hpp"
#include "lorflats/matroid.hpp"

namespace lorflats {
namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidParams;
}

TEST(JsonIoTest, SubsetRoundTrip) {
  const Subset s = Subset::of({0, 4, 9});
  EXPECT_EQ(subset_to_json(s).dump(), "[0,4,9]");
  EXPECT_EQ(subset_from_json(parse_json("[9,0,4]")), s);
  EXPECT_EQ(code_of([] { subset_from_json(parse_json("[70]")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { subset_from_json(parse_json("{}")); }), ErrorCode::ParseError);
}

TEST(JsonIoTest, MatroidSources) {
  EXPECT_EQ(matroid_from_json(parse_json(R"({"type":"uniform","r":2,"n":4})")).bases().size(), 6U);
  EXPECT_EQ(matroid_from_json(parse_json(R"({"type":"fano"})")).rank(), 3);
  EXPECT_EQ(matroid_from_json(parse_json(R"({"type":"graphic","edges":[[0,1],[1,2],[0,2]]})"))
                .rank(),
            2);
  const Matroid m = matroid_from_json(
      parse_json(R"({"n":3,"labels":["a","b","c"],"bases":[[0,1],[0,2],[1,2]]})"));
  EXPECT_EQ(m.ground().label(2), "c");
  const Matroid back = matroid_from_json(matroid_to_json(m));
  EXPECT_EQ(back.bases(), m.bases());
  EXPECT_EQ(back.ground().label(0), "a");
}

TEST(JsonIoTest, MatroidErrors) {
  EXPECT_EQ(code_of([] { parse_json("{"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { matroid_from_json(parse_json(R"({"type":"weird"})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { matroid_from_json(parse_json(R"({"type":3})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { matroid_from_json(parse_json(R"({"n":2,"bases":[[0],[0,1]]})")); }),
            ErrorCode::UnequalBasisSizes);
  EXPECT_EQ(code_of([] { matroid_from_json(parse_json(R"({"n":2,"bases":[[0,5]]})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { read_json_file("/nonexistent/file.json"); }), ErrorCode::ParseError);
}

TEST(JsonIoTest, PosetRoundTrip) {
  const GradedSubposet p = flats_lattice(uniform_matroid(2, 3)).poset();
  const Json j = poset_to_json(p);
  EXPECT_EQ(j.dump(), R"({"n":3,"elements":[[],[0],[1],[2],[0,1,2]]})");
  EXPECT_EQ(poset_from_json(j).elements(), p.elements());
}

TEST(JsonIoTest, IntervalVectorRoundTrip) {
  const CoordsPtr c = IntervalCoords::make(Subset(), Subset::full(3));
  IntervalVector v = interior_point(c);
  v[0] = ratio(-7, 3);
  const Json j = interval_vector_to_json(v);
  EXPECT_EQ(j["values"]["[0]"], "-7/3");
  EXPECT_EQ(interval_vector_from_json(j), v);
  const IntervalVector w = interval_vector_from_json(
      parse_json(R"({"K":[],"L":[0,1],"values":{"[0]":2,"[1]":"1/2"}})"));
  EXPECT_EQ(w.at(Subset::of({1})), ratio(1, 2));
  EXPECT_EQ(code_of([] {
              interval_vector_from_json(parse_json(R"({"K":[],"L":[0,1],"values":{"[]":1}})"));
            }),
            ErrorCode::MissingCoordinate);
  EXPECT_EQ(code_of([] {
              interval_vector_from_json(parse_json(R"({"K":[],"L":[0,1],"values":{"[0]":0.5}})"));
            }),
            ErrorCode::ParseError);
}

TEST(JsonIoTest, DirectionTuplesAcceptBothShapes) {
  const std::string v = R"({"K":[],"L":[0,1],"values":{"[0]":1,"[1]":1}})";
  EXPECT_EQ(direction_tuples_from_json(parse_json("[[" + v + "," + v + "]]")).size(), 1U);
  EXPECT_EQ(direction_tuples_from_json(parse_json(R"({"tuples":[[)" + v + "]]}")).front().size(),
            1U);
}

TEST(JsonIoTest, CertificateLayout) {
  const FlatLattice lat = flats_lattice(uniform_matroid(3, 3));
  PolCache cache(lat.poset());
  const auto cert = certify_sampled(cache, Subset(), Subset::full(3), 2, 9);
  const Json j = certificate_to_json(cert);
  EXPECT_EQ(j["interval"]["K"].dump(), "[]");
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(j["seed"], 9);
  ASSERT_EQ(j["samples"].size(), 2U);
  EXPECT_EQ(j["samples"][0]["inertia"][0], 1);
  EXPECT_TRUE(j["samples"][0]["contraction"].is_string());
  EXPECT_TRUE(j["verdict"].get<bool>());
  EXPECT_EQ(certificate_to_json(certify_sampled(cache, Subset(), Subset::full(3), 2, 9)).dump(),
            j.dump());
}

TEST(JsonIoTest, ReportLayouts) {
  ChowReport r;
  r.graded_dimensions = {1, 1};
  r.top_one_dimensional = r.flags_consistent = r.equal = true;
  const Json j = chow_report_to_json(r);
  EXPECT_TRUE(j["verdict"].get<bool>());
  EXPECT_FALSE(j.contains("witness"));
  EngineReport e;
  e.hypotheses.push_back({1, "x", HypothesisStatus::NotApplicable, ""});
  EXPECT_EQ(engine_report_to_json(e)["hypotheses"][0]["status"], "n/a");
}

}  // namespace
}  // namespace lorflats
