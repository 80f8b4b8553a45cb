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

#include <optional>

#include "entcap/canonical.hpp"
#include "entcap/linalg.hpp"
#include "entcap/oracle.hpp"

namespace entcap {

/// First-order (per-carrier decoding) capacity of two equiprobable pure
/// signals with overlap s: 1 - h((1 + sqrt(1 - s^2)) / 2).
double c1_two_pure(double overlap);

/// Collective-decoding (Holevo) capacity of two pure signals with overlap s:
/// h((1 + s) / 2).
double c_inf_two_pure(double overlap);

/// Von Neumann entropy of p1 |psi1><psi1| + (1 - p1) |psi2><psi2|.
double ensemble_entropy_two_pure(double p1, double overlap);

struct SignalPair {
  PureState psi1;
  PureState psi2;
  /// |<psi1|psi2>|
  double overlap = 0.0;
};

/// psi1 = U_d |a>|b>, psi2 = (Y (x) Y) U_d^dagger |a*>|b*>. Their overlap is
/// the concurrence of psi1.
SignalPair relation1_signals(const WeylVector& d, const PureState& a,
                             const PureState& b);

/// psi1 = U_d^dagger |phi>, psi2 = U_d |phi>; overlap |<phi|U_d^2|phi>|.
SignalPair relation2_signals(const WeylVector& d, const PureState& phi);

struct CapacityRelationReport {
  double e_max_prod = 0.0;
  double capacity_term = 0.0;
  /// Relation 1: |E + C1 - 1|. Relation 2: |E - C_inf|.
  double relation_residual = 0.0;
  /// Overlap of the signal pair at the optimiser's input.
  double overlap = 0.0;
  /// Relation 1 only: max of C1 over all product inputs (the unconstrained
  /// reading), and whether it departs from capacity_term by more than the
  /// search tolerance.
  std::optional<double> literal_capacity_term;
  bool literal_reading_differs = false;
};

/// E_prod + C1 = 1 with C1 evaluated on the signal pair built from the
/// concurrence-maximising product input.
CapacityRelationReport verify_relation1(const WeylVector& d,
                                        const SearchConfig& cfg);

/// E_prod = max over |phi> of C_inf(U_d^dagger|phi>, U_d|phi>), the maximum
/// found by minimising the probe overlap.
CapacityRelationReport verify_relation2(const WeylVector& d,
                                        const SearchConfig& cfg);

}  // namespace entcap
