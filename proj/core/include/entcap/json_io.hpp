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

#pragma once

#include <nlohmann/json.hpp>

#include "entcap/canonical.hpp"
#include "entcap/capacities.hpp"
#include "entcap/distinguishability.hpp"
#include "entcap/entanglement.hpp"
#include "entcap/linalg.hpp"
#include "entcap/oracle.hpp"

namespace entcap {

using Json = nlohmann::json;

/// {"dim": n, "entries": [[[re, im], ...], ...]}, row-major.
Json matrix_to_json(const Eigen::MatrixXcd& m);
/// Throws kParse on any schema violation.
Eigen::MatrixXcd matrix_from_json(const Json& j);
UnitaryMatrix unitary_from_json(const Json& j, double tol = kUnitarityTol);

/// {"dim": n, "amplitudes": [[re, im], ...]}
Json state_to_json(const PureState& s);
PureState state_from_json(const Json& j, double tol = kNormTol);

void to_json(Json& j, const WeylVector& d);
void from_json(const Json& j, WeylVector& d);
void to_json(Json& j, const EigenPhases& e);
/// {"d", "global_phase", "XA", "XB", "YA", "YB", "residual"}
void to_json(Json& j, const CanonicalForm& f);
CanonicalForm canonical_form_from_json(const Json& j);
/// {"c_max_prod", "c_max", "e_max_prod", "perfect_entangler"}
void to_json(Json& j, const CapacityReport& r);
/// {"c_prod_sq", "d_min_sq", "residual", "route"}
void to_json(Json& j, const TheoremResidual& r);
void to_json(Json& j, const CapacityRelationReport& r);
void to_json(Json& j, const SearchConfig& c);
/// Missing keys keep their defaults.
void from_json(const Json& j, SearchConfig& c);

}  // namespace entcap
