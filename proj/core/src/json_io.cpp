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

#include "entcap/json_io.hpp"

#include <string>

#include "entcap/error.hpp"

namespace entcap {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parse_error("complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

int dim_from_json(const Json& j) {
  if (!j.is_object()) parse_error("expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    parse_error("missing integer field \"dim\"");
  }
  const int dim = j["dim"].get<int>();
  if (dim <= 0) parse_error("\"dim\" must be positive");
  return dim;
}

}  // namespace

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.rows()}, {"entries", std::move(rows)}};
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  const int dim = dim_from_json(j);
  if (!j.contains("entries") || !j["entries"].is_array() ||
      j["entries"].size() != static_cast<std::size_t>(dim)) {
    parse_error("\"entries\" must hold dim rows");
  }
  Eigen::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const Json& row = j["entries"][static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      parse_error("every row of \"entries\" must hold dim entries");
    }
    for (int c = 0; c < dim; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

UnitaryMatrix unitary_from_json(const Json& j, double tol) {
  return UnitaryMatrix::checked(matrix_from_json(j), tol);
}

Json state_to_json(const PureState& s) {
  Json amps = Json::array();
  for (Eigen::Index k = 0; k < s.amplitudes().size(); ++k) {
    amps.push_back(complex_to_json(s.amplitudes()(k)));
  }
  return {{"dim", s.dim()}, {"amplitudes", std::move(amps)}};
}

PureState state_from_json(const Json& j, double tol) {
  const int dim = dim_from_json(j);
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array() ||
      j["amplitudes"].size() != static_cast<std::size_t>(dim)) {
    parse_error("\"amplitudes\" must hold dim entries");
  }
  Eigen::VectorXcd v(dim);
  for (int k = 0; k < dim; ++k) v(k) = complex_from_json(j["amplitudes"][static_cast<std::size_t>(k)]);
  return PureState::checked(std::move(v), tol);
}

void to_json(Json& j, const WeylVector& d) {
  j = Json::array({d.alpha_x, d.alpha_y, d.alpha_z});
}

void from_json(const Json& j, WeylVector& d) {
  if (!j.is_array() || j.size() != 3) parse_error("a Weyl vector is [ax, ay, az]");
  for (const auto& v : j)
    if (!v.is_number()) parse_error("Weyl vector entries must be numbers");
  d = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

void to_json(Json& j, const EigenPhases& e) {
  j = Json::array({e.lambda_1, e.lambda_2, e.lambda_3, e.lambda_4});
}

void to_json(Json& j, const CanonicalForm& f) {
  j = Json{{"d", f.d},
           {"global_phase", f.global_phase},
           {"XA", matrix_to_json(f.xa)},
           {"XB", matrix_to_json(f.xb)},
           {"YA", matrix_to_json(f.ya)},
           {"YB", matrix_to_json(f.yb)},
           {"residual", f.residual}};
}

CanonicalForm canonical_form_from_json(const Json& j) {
  if (!j.is_object()) parse_error("canonical form must be an object");
  for (const char* key : {"d", "global_phase", "XA", "XB", "YA", "YB"}) {
    if (!j.contains(key)) parse_error(std::string("canonical form lacks \"") + key + "\"");
  }
  auto local = [&](const char* key) -> Matrix2 {
    const Eigen::MatrixXcd m = matrix_from_json(j[key]);
    if (m.rows() != 2) parse_error(std::string(key) + " must be 2x2");
    return m;
  };
  CanonicalForm f;
  f.d = j["d"].get<WeylVector>();
  if (!j["global_phase"].is_number()) parse_error("global_phase must be a number");
  f.global_phase = j["global_phase"].get<double>();
  f.xa = local("XA");
  f.xb = local("XB");
  f.ya = local("YA");
  f.yb = local("YB");
  f.residual = j.value("residual", 0.0);
  return f;
}

void to_json(Json& j, const CapacityReport& r) {
  j = Json{{"c_max_prod", r.c_max_prod},
           {"c_max", r.c_max},
           {"e_max_prod", r.e_max_prod},
           {"perfect_entangler", r.perfect_entangler}};
}

void to_json(Json& j, const TheoremResidual& r) {
  j = Json{{"c_prod_sq", r.c_prod_sq},
           {"d_min_sq", r.d_min_sq},
           {"residual", r.residual},
           {"route", to_string(r.route)}};
}

void to_json(Json& j, const CapacityRelationReport& r) {
  j = Json{{"e_max_prod", r.e_max_prod},
           {"capacity_term", r.capacity_term},
           {"relation_residual", r.relation_residual},
           {"overlap", r.overlap}};
  if (r.literal_capacity_term) {
    j["literal_capacity_term"] = *r.literal_capacity_term;
    j["literal_reading_differs"] = r.literal_reading_differs;
  }
}

void to_json(Json& j, const SearchConfig& c) {
  j = Json{{"grid", c.coarse_grid_per_angle},
           {"restarts", c.restarts},
           {"refine_iterations", c.refine_iterations},
           {"tol", c.tolerance},
           {"seed", c.seed}};
}

void from_json(const Json& j, SearchConfig& c) {
  if (!j.is_object()) parse_error("search config must be an object");
  try {
    c.coarse_grid_per_angle = j.value("grid", c.coarse_grid_per_angle);
    c.restarts = j.value("restarts", c.restarts);
    c.refine_iterations = j.value("refine_iterations", c.refine_iterations);
    c.tolerance = j.value("tol", c.tolerance);
    c.seed = j.value("seed", c.seed);
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("search config: ") + e.what());
  }
  c.validate();
}

}  // namespace entcap
