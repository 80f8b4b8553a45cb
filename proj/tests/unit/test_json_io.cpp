// Copyright 2026 The entcap Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <entcap/error.hpp>
#include <entcap/json_io.hpp>

#include "reference.hpp"
#include "test_util.hpp"

using namespace entcap;
using test::code_of;

TEST_CASE("matrix JSON round trip is exact", "[json]") {
  Rng rng(71);
  const UnitaryMatrix u = haar_random_unitary(4, rng);
  const Json j = matrix_to_json(u.matrix());
  CHECK(j["dim"] == 4);
  CHECK(j["entries"].size() == 4);
  CHECK(j["entries"][0][0].size() == 2);
  const Json reparsed = Json::parse(j.dump());
  CHECK(ref::distance(matrix_from_json(reparsed), u.matrix()) == 0.0);
  CHECK_NOTHROW(unitary_from_json(reparsed));
}

TEST_CASE("malformed matrix JSON", "[json]") {
  CHECK(code_of([] { matrix_from_json(Json::array()); }) == ErrorCode::kParse);
  CHECK(code_of([] { matrix_from_json(Json{{"dim", 2}}); }) == ErrorCode::kParse);
  CHECK(code_of([] {
          matrix_from_json(Json::parse(R"({"dim": 2, "entries": [[[1,0],[0,0]]]})"));
        }) == ErrorCode::kParse);
  CHECK(code_of([] {
          matrix_from_json(Json::parse(R"({"dim": 1, "entries": [[[1,"x"]]]})"));
        }) == ErrorCode::kParse);
  CHECK(code_of([] {
          unitary_from_json(Json::parse(R"({"dim": 2, "entries": [[[2,0],[0,0]],[[0,0],[1,0]]]})"));
        }) == ErrorCode::kNotUnitary);
}

TEST_CASE("state JSON round trip", "[json]") {
  Rng rng(72);
  const PureState s = random_pure_state(4, rng);
  const Json j = state_to_json(s);
  CHECK(j["dim"] == 4);
  CHECK(ref::distance(state_from_json(Json::parse(j.dump())).amplitudes(), s.amplitudes()) ==
        0.0);
  CHECK(code_of([] {
          state_from_json(Json::parse(R"({"dim": 2, "amplitudes": [[1,0],[1,0]]})"));
        }) == ErrorCode::kNotNormalized);
}

TEST_CASE("canonical form JSON schema", "[json]") {
  Rng rng(73);
  const CanonicalForm f = cartan_decompose(haar_random4(rng));
  const Json j = f;
  for (const char* key : {"d", "global_phase", "XA", "XB", "YA", "YB", "residual"}) {
    CHECK(j.contains(key));
  }
  const CanonicalForm back = canonical_form_from_json(Json::parse(j.dump()));
  CHECK(back.d == f.d);
  CHECK(ref::distance(back.reconstruct(), f.reconstruct()) == 0.0);
}

TEST_CASE("report schemas", "[json]") {
  const Json c = CapacityReport{0.5, 0.7, 0.2, false};
  CHECK(c.size() == 4);
  CHECK(c["perfect_entangler"] == false);
  const Json t = theorem_residual(Route::kGeometric, 0.6, 0.8);
  CHECK(t["route"] == "geometric");
  CHECK(t.contains("c_prod_sq"));
  CHECK(t.contains("d_min_sq"));
  CapacityRelationReport r;
  r.literal_capacity_term = 1.0;
  const Json rj = r;
  CHECK(rj.contains("literal_capacity_term"));
  CHECK(rj.contains("relation_residual"));
}

TEST_CASE("search config JSON keeps defaults for missing keys", "[json]") {
  const SearchConfig cfg = Json::parse(R"({"grid": 8, "seed": 5})").get<SearchConfig>();
  CHECK(cfg.coarse_grid_per_angle == 8);
  CHECK(cfg.seed == 5);
  CHECK(cfg.restarts == SearchConfig{}.restarts);
  CHECK(code_of([] { (void)Json::parse(R"({"grid": 0})").get<SearchConfig>(); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(code_of([] { (void)Json::parse(R"({"grid": "x"})").get<SearchConfig>(); }) ==
        ErrorCode::kParse);
  const Json round = SearchConfig{};
  CHECK(round.get<SearchConfig>().tolerance == SearchConfig{}.tolerance);
}
