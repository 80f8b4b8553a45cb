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

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Tolerances are fixed here and never read from flags.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <entcap/canonical.hpp>
#include <entcap/capacities.hpp>
#include <entcap/distinguishability.hpp>
#include <entcap/entanglement.hpp>
#include <entcap/oracle.hpp>

#include "reference.hpp"

using namespace entcap;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Gate {
 public:
  template <typename F>
  void run(int id, const char* name, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %d: %s | %s | %.1fs\n", o.pass ? "PASS" : "FAIL", id, name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures_ += o.pass ? 0 : 1;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string fmt(const char* label, double value, double tol) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s=%.3e (tol %.0e)", label, value, tol);
  return buf;
}

std::string join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

Matrix4 square(const Matrix4& u) { return u * u; }

WeylVector negative_z_vector(Rng& rng) {
  for (;;) {
    const WeylVector d = random_weyl_vector(rng);
    if (d.alpha_z < 0) return d;
    if (d.alpha_z > 0) return {d.alpha_x, d.alpha_y, -d.alpha_z};
  }
}

Matrix4 cnot() {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

}  // namespace

int main() {
  Gate gate;
  const SearchConfig search;  // documented oracle defaults

  // 1 and 2 share one Haar sample.
  std::vector<WeylVector> haar_d;
  {
    Rng rng(1001);
    for (int k = 0; k < 1000; ++k) haar_d.push_back(cartan_decompose(haar_random4(rng)).d);
  }

  gate.run(1, "main identity on 1000 Haar unitaries (closed C, geometric D_min)", [&] {
    double worst = 0.0;
    for (const auto& d : haar_d) worst = std::max(worst, verify_theorem(d).geometric.residual);
    return Outcome{worst <= 1e-9, fmt("max |C^2 + D^2 - 1|", worst, 1e-9)};
  });

  gate.run(2, "quartic form on the same sample", [&] {
    double worst = 0.0;
    for (const auto& d : haar_d) {
      const TheoremCheck t = verify_theorem(d);
      worst = std::max({worst, t.quartic_closed, t.quartic_geometric});
    }
    return Outcome{worst <= 1e-9, fmt("max |C_max^4 + D^2 - 1|", worst, 1e-9)};
  });

  gate.run(3, "D_min route agreement", [&] {
    Rng rng(1003);
    double hull = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const WeylVector d = random_weyl_vector(rng);
      const auto phases = eig_unitary(Eigen::MatrixXcd(square(canonical_unitary(d)))).phases;
      hull = std::max(hull, std::abs(d_min_canonical(d) - hull_min_distance(phases).d_min));
    }
    double probe = 0.0;
    for (int k = 0; k < 50; ++k) {
      const WeylVector d = random_weyl_vector(rng);
      const ProbeSearchResult r =
          min_probe_overlap(UnitaryMatrix(square(canonical_unitary(d))), search);
      const double closed = d_min_canonical(d);
      probe = std::max({probe, std::abs(r.direct.value - closed), std::abs(r.exact.value - closed)});
    }
    return Outcome{hull <= 1e-10 && probe <= 1e-6,
                   join({fmt("closed vs hull", hull, 1e-10), fmt("probe vs closed", probe, 1e-6)})};
  });

  gate.run(4, "oracle vs closed form on 50 Haar unitaries", [&] {
    Rng rng(1004);
    double prod = 0.0, delta = 0.0, gain_vs_prod = 0.0;
    int below_one = 0;
    for (int k = 0; k < 50; ++k) {
      const Matrix4 u = haar_random4(rng);
      const double closed = capacities_closed_form(cartan_decompose(u).d).c_max_prod;
      SearchConfig cfg = search;
      cfg.seed = static_cast<std::uint64_t>(k);
      const double c = max_concurrence_product(u, cfg).value;
      const double g = max_delta_concurrence(u, cfg).value;
      prod = std::max(prod, std::abs(c - closed));
      delta = std::max(delta, std::abs(g - std::sqrt(c)));
      gain_vs_prod = std::max(gain_vs_prod, std::abs(g - c));
      below_one += closed < 1.0 - 1e-9 ? 1 : 0;
    }
    // Diagnostic only: on the samples with C_prod < 1 the gain search lands
    // on C_prod itself rather than its square root.
    char diag[128];
    std::snprintf(diag, sizeof diag, "diagnostic: |gain - C_prod|=%.3e, samples with C_prod<1: %d",
                  gain_vs_prod, below_one);
    return Outcome{prod <= 1e-3 && delta <= 1e-2,
                   join({fmt("product search", prod, 1e-3), fmt("gain vs sqrt", delta, 1e-2),
                         diag})};
  });

  gate.run(5, "decomposition round trip and local invariance on 1000 Haar unitaries", [&] {
    Rng rng(1005);
    double recon = 0.0, invariance = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const Matrix4 u = haar_random4(rng);
      const CanonicalForm f = cartan_decompose(u);
      recon = std::max(recon, ref::distance(f.reconstruct(), u));
      const Matrix4 v = kron(haar_random2(rng), haar_random2(rng)) * u *
                        kron(haar_random2(rng), haar_random2(rng));
      const WeylVector e = cartan_decompose(v).d;
      invariance = std::max({invariance, std::abs(e.alpha_x - f.d.alpha_x),
                             std::abs(e.alpha_y - f.d.alpha_y), std::abs(e.alpha_z - f.d.alpha_z)});
    }
    return Outcome{recon <= 1e-9 && invariance <= 1e-9,
                   join({fmt("reconstruction", recon, 1e-9), fmt("invariance", invariance, 1e-9)})};
  });

  gate.run(6, "concurrence forms and entropy consistency on 1000 states", [&] {
    Rng rng(1006);
    double forms = 0.0, entropy = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const PureState psi = random_pure_state(4, rng);
      const double c = concurrence(psi);
      forms = std::max({forms, std::abs(c - concurrence_conjugate_form(psi)),
                        std::abs(c - ref::concurrence_partial_trace(psi.as4()))});
      entropy = std::max(entropy,
                         std::abs(entropy_of_entanglement(psi) - entropy_from_concurrence(c)));
    }
    return Outcome{forms <= 1e-12 && entropy <= 1e-10,
                   join({fmt("concurrence forms", forms, 1e-12), fmt("entropy", entropy, 1e-10)})};
  });

  gate.run(7, "alpha_z mirror on 100 vectors", [&] {
    Rng rng(1007);
    const Matrix4 zi = kron(pauli::z(), pauli::identity());
    int mismatches = 0;
    double identity = 0.0;
    for (int k = 0; k < 100; ++k) {
      const WeylVector d = negative_z_vector(rng);
      const MirrorResult m = mirror_negative_alpha_z(d);
      const CapacityReport a = capacities_closed_form(d);
      const CapacityReport b = capacities_closed_form(m.d);
      const bool same = m.mirrored && a.c_max_prod == b.c_max_prod && a.c_max == b.c_max &&
                        a.e_max_prod == b.e_max_prod &&
                        a.perfect_entangler == b.perfect_entangler &&
                        d_min_canonical(d) == d_min_canonical(m.d);
      mismatches += same ? 0 : 1;
      identity = std::max(identity, ref::distance(zi * canonical_unitary(d) * zi,
                                                  canonical_unitary(m.d).adjoint()));
    }
    return Outcome{mismatches == 0 && identity <= 1e-12,
                   join({"exact mismatches=" + std::to_string(mismatches),
                         fmt("matrix identity", identity, 1e-12)})};
  });

  gate.run(8, "capacity relations on 50 Weyl vectors", [&] {
    Rng rng(1008);
    double r1 = 0.0, r2 = 0.0;
    for (int k = 0; k < 50; ++k) {
      const WeylVector d = random_weyl_vector(rng);
      SearchConfig cfg = search;
      cfg.seed = static_cast<std::uint64_t>(k);
      r2 = std::max(r2, verify_relation2(d, cfg).relation_residual);
      r1 = std::max(r1, verify_relation1(d, cfg).relation_residual);
    }
    return Outcome{r1 <= 1e-3 && r2 <= 1e-3,
                   join({fmt("relation 1", r1, 1e-3), fmt("relation 2", r2, 1e-3)})};
  });

  gate.run(9, "spot values", [&] {
    const WeylVector p8{kPi / 8, 0, 0};
    const CapacityReport c8 = capacities_closed_form(p8);
    const double d8 = d_min_canonical(p8);
    const CapacityReport cs = capacities_closed_form({kPi / 4, kPi / 4, kPi / 4});
    const double ds = d_min_canonical({kPi / 4, kPi / 4, kPi / 4});
    const CanonicalForm f = cartan_decompose(cnot());
    const double cnot_err = std::max({std::abs(f.d.alpha_x - kPi / 4), std::abs(f.d.alpha_y),
                                      std::abs(f.d.alpha_z)});
    const bool cnot_pe = capacities_closed_form(f.d).perfect_entangler;
    // 0.70711 is 1/sqrt(2) printed to five places: the 1e-9 band is taken
    // around the exact value and the printed digits must match.
    auto five_places = [](double v) { return std::round(v * 1e5) / 1e5; };
    const bool ok = five_places(c8.c_max_prod) == 0.70711 && five_places(d8) == 0.70711 &&
                    std::abs(c8.c_max_prod - std::sqrt(0.5)) <= 1e-9 &&
                    std::abs(d8 - std::sqrt(0.5)) <= 1e-9 &&
                    std::abs(c8.e_max_prod - 0.6009) <= 1e-4 && cs.c_max_prod <= 1e-12 &&
                    std::abs(ds - 1.0) <= 1e-12 && cnot_err <= 1e-9 && cnot_pe;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "pi/8: c=%.12f d_min=%.12f e=%.6f; swap class: c=%.1e d_min=%.12f; "
                  "cnot: |d-(pi/4,0,0)|=%.1e pe=%s",
                  c8.c_max_prod, d8, c8.e_max_prod, cs.c_max_prod, ds, cnot_err,
                  cnot_pe ? "yes" : "no");
    return Outcome{ok, buf};
  });

  std::printf("%s: %d of 9 criteria failed\n", gate.failures() ? "FAIL" : "PASS",
              gate.failures());
  return gate.failures() == 0 ? 0 : 1;
}
