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

#include "entcap/analysis.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "entcap/error.hpp"
#include "entcap/linalg.hpp"
#include "entcap/optimize.hpp"

namespace entcap {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Rng derived_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string input_hash(const Eigen::MatrixXcd& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](double v) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof v);
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  };
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      feed(m(r, c).real());
      feed(m(r, c).imag());
    }
  }
  static const char* kHex = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k, h >>= 4) out[static_cast<std::size_t>(k)] = kHex[h & 0xf];
  return out;
}

AnalysisReport analyze(const UnitaryMatrix& u, const AnalysisOptions& opts) {
  if (u.dim() != 4) throw Error(ErrorCode::kDimensionMismatch, "analyze expects a 4x4 unitary");
  AnalysisReport r;
  r.input_hash = input_hash(u.matrix());

  auto t0 = Clock::now();
  r.canonical = cartan_decompose(u, opts.decompose);
  r.timings_ms["decompose"] = ms_since(t0);

  const WeylVector& d = r.canonical.d;
  r.eigenphases = eigenphases(d);
  r.capacities = capacities_closed_form(d);

  t0 = Clock::now();
  r.theorem = verify_theorem(d);
  r.timings_ms["theorem"] = ms_since(t0);
  r.d_min.closed = r.theorem.d_min_closed;
  r.d_min.geometric = r.theorem.d_min_geometric;
  r.hermiticity = hermiticity(d);

  if (opts.numeric || opts.relations) {
    opts.search.validate();
    r.search = opts.search;
  }
  if (opts.numeric) {
    t0 = Clock::now();
    const double c = max_concurrence_product(u.as4(), opts.search).value;
    const Matrix4 ud = canonical_unitary(d);
    const double dmin = min_probe_overlap(UnitaryMatrix(Matrix4(ud * ud)), opts.search).direct.value;
    r.c_max_prod_numeric = c;
    r.d_min.numeric = dmin;
    r.numeric = theorem_residual(Route::kNumeric, c, dmin);
    r.timings_ms["numeric"] = ms_since(t0);
  }
  if (opts.relations) {
    t0 = Clock::now();
    r.relation1 = verify_relation1(d, opts.search);
    r.relation2 = verify_relation2(d, opts.search);
    r.timings_ms["relations"] = ms_since(t0);
  }
  return r;
}

Json report_to_json(const AnalysisReport& r, bool include_timings) {
  Json j;
  j["input_hash"] = r.input_hash;
  j["canonical"] = {{"d", r.canonical.d},
                    {"global_phase", r.canonical.global_phase},
                    {"residual", r.canonical.residual}};
  j["eigenphases"] = r.eigenphases;
  j["capacities"] = r.capacities;
  Json dmin = {{"closed", r.d_min.closed}, {"geometric", r.d_min.geometric}};
  if (r.d_min.numeric) dmin["numeric"] = *r.d_min.numeric;
  j["d_min"] = std::move(dmin);
  Json quadratic = Json::array({r.theorem.closed, r.theorem.geometric});
  if (r.numeric) quadratic.push_back(*r.numeric);
  j["theorem"] = {{"quadratic", std::move(quadratic)},
                  {"quartic", {{"closed", r.theorem.quartic_closed},
                               {"geometric", r.theorem.quartic_geometric}}}};
  if (r.c_max_prod_numeric) j["c_max_prod_numeric"] = *r.c_max_prod_numeric;
  j["hermitian"] = {{"up_to_phase", r.hermiticity.up_to_phase},
                    {"strict", r.hermiticity.strict}};
  if (r.relation1 || r.relation2) {
    Json rel = Json::object();
    if (r.relation1) rel["relation1"] = *r.relation1;
    if (r.relation2) rel["relation2"] = *r.relation2;
    j["relations"] = std::move(rel);
  }
  if (r.search) j["search"] = *r.search;
  if (include_timings) j["timings_ms"] = r.timings_ms;
  return j;
}

void VerifyOptions::validate() const {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be at least 1");
  if (!(tol > 0.0) || !(numeric_tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerances must be positive");
  }
  if (!closed && !geometric && !numeric) {
    throw Error(ErrorCode::kInvalidArgument, "no verification route selected");
  }
  if (numeric) search.validate();
}

VerifySummary verify_batch(const VerifyOptions& opts) {
  opts.validate();
  VerifySummary s;
  s.options = opts;
  const auto n = static_cast<std::size_t>(opts.trials);
  s.samples.resize(n);

  auto run = [&](std::size_t i) {
    Rng rng = derived_rng(opts.seed, i);
    const UnitaryMatrix u = haar_random_unitary(4, rng);
    const CanonicalForm f = cartan_decompose(u);
    VerifySample row;
    row.index = static_cast<int>(i);
    row.d = f.d;
    row.decomposition_residual = f.residual;
    row.theorem = verify_theorem(f.d);
    if (opts.numeric) {
      SearchConfig cfg = opts.search;
      cfg.seed = opts.search.seed + i;
      const double c = max_concurrence_product(u.as4(), cfg).value;
      const Matrix4 ud = canonical_unitary(f.d);
      const double dmin = min_probe_overlap(UnitaryMatrix(Matrix4(ud * ud)), cfg).direct.value;
      row.c_max_prod_numeric = c;
      row.d_min_numeric = dmin;
      row.residual_numeric = theorem_residual(Route::kNumeric, c, dmin).residual;
      row.oracle_deviation = std::max(std::abs(c - row.theorem.c_max_prod),
                                      std::abs(dmin - row.theorem.d_min_closed));
    }
    s.samples[i] = std::move(row);
  };
  // The oracles already fan out internally, so numeric trials run in order.
  if (opts.numeric) {
    for (std::size_t i = 0; i < n; ++i) run(i);
  } else {
    parallel_for(n, run);
  }

  auto add = [&](const std::string& key, double threshold, auto value_of) {
    ResidualStats st;
    st.threshold = threshold;
    double sum = 0.0;
    for (const auto& row : s.samples) {
      const double v = value_of(row);
      st.max = std::max(st.max, v);
      sum += v;
    }
    st.mean = sum / static_cast<double>(n);
    s.passed = s.passed && st.passed();
    s.stats[key] = st;
  };
  if (opts.closed) {
    add("closed", opts.tol, [](const VerifySample& r) { return r.theorem.closed.residual; });
    add("closed-quartic", opts.tol, [](const VerifySample& r) { return r.theorem.quartic_closed; });
  }
  if (opts.geometric) {
    add("geometric", opts.tol, [](const VerifySample& r) { return r.theorem.geometric.residual; });
    add("geometric-quartic", opts.tol,
        [](const VerifySample& r) { return r.theorem.quartic_geometric; });
  }
  if (opts.closed && opts.geometric) {
    add("closed-geometric", opts.tol, [](const VerifySample& r) {
      return std::abs(r.theorem.d_min_closed - r.theorem.d_min_geometric);
    });
  }
  if (opts.numeric) {
    add("numeric", opts.numeric_tol, [](const VerifySample& r) { return *r.residual_numeric; });
    add("numeric-closed", opts.numeric_tol,
        [](const VerifySample& r) { return *r.oracle_deviation; });
  }
  return s;
}

std::string verify_csv(const VerifySummary& s) {
  std::ostringstream os;
  os << "index,alpha_x,alpha_y,alpha_z,decomposition_residual,c_max_prod,c_max,"
        "d_min_closed,d_min_geometric,residual_closed,residual_geometric,"
        "quartic_closed,quartic_geometric";
  if (s.options.numeric) os << ",c_max_prod_numeric,d_min_numeric,residual_numeric,oracle_deviation";
  os << '\n';
  for (const auto& r : s.samples) {
    const TheoremCheck& t = r.theorem;
    os << r.index;
    for (double v : {r.d.alpha_x, r.d.alpha_y, r.d.alpha_z, r.decomposition_residual,
                     t.c_max_prod, t.c_max, t.d_min_closed, t.d_min_geometric,
                     t.closed.residual, t.geometric.residual, t.quartic_closed,
                     t.quartic_geometric}) {
      os << ',' << format_double(v);
    }
    if (s.options.numeric) {
      for (double v : {*r.c_max_prod_numeric, *r.d_min_numeric, *r.residual_numeric,
                       *r.oracle_deviation}) {
        os << ',' << format_double(v);
      }
    }
    os << '\n';
  }
  return os.str();
}

Json summary_to_json(const VerifySummary& s) {
  Json routes = Json::object();
  for (const auto& [key, st] : s.stats) {
    routes[key] = {{"max", st.max}, {"mean", st.mean}, {"threshold", st.threshold},
                   {"passed", st.passed()}};
  }
  return {{"trials", s.options.trials},
          {"seed", s.options.seed},
          {"stats", std::move(routes)},
          {"passed", s.passed}};
}

}  // namespace entcap
