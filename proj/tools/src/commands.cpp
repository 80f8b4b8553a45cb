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

#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <entcap/analysis.hpp>
#include <entcap/error.hpp>
#include <entcap/json_io.hpp>

#include "format.hpp"

namespace entcap::cli {

namespace {

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

UnitaryMatrix read_unitary4(const std::string& path) {
  const Eigen::MatrixXcd m = matrix_from_json(read_json(path));
  if (m.rows() != 4) throw Error(ErrorCode::kDimensionMismatch, "expected a 4x4 matrix");
  return UnitaryMatrix::checked(m);
}

void write_text(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + g.out);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void add_weyl(Table& t, const WeylVector& d, bool degrees) {
  t.add("d", angles({d.alpha_x, d.alpha_y, d.alpha_z}, degrees));
}

void add_closed_form(Table& t, const CapacityReport& c) {
  t.add("c_max_prod", num(c.c_max_prod));
  t.add("c_max", num(c.c_max));
  t.add("e_max_prod", num(c.e_max_prod));
  t.add("perfect_entangler", yes_no(c.perfect_entangler));
}

void add_relation(Table& t, const std::string& name, const CapacityRelationReport& r,
                  const std::string& term) {
  t.section(name);
  t.add("e_max_prod", num(r.e_max_prod));
  t.add(term, num(r.capacity_term));
  t.add("overlap", num(r.overlap));
  t.add("residual", num(r.relation_residual));
  if (r.literal_capacity_term) {
    t.add("literal max C1", num(*r.literal_capacity_term));
    t.add("literal reading differs", yes_no(r.literal_reading_differs));
  }
}

WeylVector parse_weyl(const std::string& text, bool degrees) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "--d expects three comma-separated numbers");
    }
    if (used != item.size()) throw Error(ErrorCode::kParse, "--d: trailing characters in " + item);
    v.push_back(degrees ? x * kPi / 180.0 : x);
  }
  if (v.size() != 3) throw Error(ErrorCode::kParse, "--d expects three comma-separated numbers");
  const WeylVector d{v[0], v[1], v[2]};
  if (!in_weyl_chamber(d)) throw Error(ErrorCode::kOutOfRange, "--d lies outside the Weyl chamber");
  return d;
}

Rng item_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

}  // namespace

SearchConfig search_config(const GlobalOptions& g, bool tol_is_search_tol) {
  SearchConfig cfg;
  if (!g.search_config.empty()) cfg = read_json(g.search_config).get<SearchConfig>();
  cfg.seed = g.seed;
  if (g.grid) cfg.coarse_grid_per_angle = *g.grid;
  if (g.restarts) cfg.restarts = *g.restarts;
  if (g.refine) cfg.refine_iterations = *g.refine;
  if (tol_is_search_tol && g.tol) cfg.tolerance = *g.tol;
  if (g.search_tol) cfg.tolerance = *g.search_tol;
  cfg.validate();
  return cfg;
}

int cmd_analyze(const GlobalOptions& g, const AnalyzeArgs& a) {
  const UnitaryMatrix u = read_unitary4(a.input);
  AnalysisOptions opts;
  opts.numeric = a.numeric;
  opts.relations = a.relations;
  if (a.numeric || a.relations) opts.search = search_config(g, true);
  const AnalysisReport r = analyze(u, opts);

  if (g.json) {
    write_text(g, dump(report_to_json(r, a.timings)));
    return 0;
  }
  Table t;
  t.add("input_hash", r.input_hash);
  t.section("canonical form");
  add_weyl(t, r.canonical.d, g.degrees);
  t.add("global_phase", angle(r.canonical.global_phase, g.degrees));
  t.add("residual", num(r.canonical.residual));
  const EigenPhases& e = r.eigenphases;
  t.add("eigenphases", angles({e.lambda_1, e.lambda_2, e.lambda_3, e.lambda_4}, g.degrees));
  t.section("capacities");
  add_closed_form(t, r.capacities);
  if (r.c_max_prod_numeric) t.add("c_max_prod (oracle)", num(*r.c_max_prod_numeric));
  t.section("d_min");
  t.add("closed", num(r.d_min.closed));
  t.add("geometric", num(r.d_min.geometric));
  if (r.d_min.numeric) t.add("numeric", num(*r.d_min.numeric));
  t.add("hermitian (up to phase)", yes_no(r.hermiticity.up_to_phase));
  t.section("theorem residuals");
  t.add("closed", num(r.theorem.closed.residual));
  t.add("geometric", num(r.theorem.geometric.residual));
  if (r.numeric) t.add("numeric", num(r.numeric->residual));
  t.add("quartic closed", num(r.theorem.quartic_closed));
  t.add("quartic geometric", num(r.theorem.quartic_geometric));
  if (r.relation1) add_relation(t, "relation 1", *r.relation1, "c1_at_max_concurrence");
  if (r.relation2) add_relation(t, "relation 2", *r.relation2, "max_c_inf");
  if (a.timings) {
    t.section("timings (ms)");
    for (const auto& [k, v] : r.timings_ms) t.add(k, num(v));
  }
  write_text(g, t.str());
  return 0;
}

int cmd_decompose(const GlobalOptions& g, const std::string& input) {
  const CanonicalForm f = cartan_decompose(read_unitary4(input));
  if (g.json) {
    write_text(g, dump(Json(f)));
    return 0;
  }
  Table t;
  add_weyl(t, f.d, g.degrees);
  t.add("global_phase", angle(f.global_phase, g.degrees));
  t.add("residual", num(f.residual));
  std::string text = t.str();
  for (const auto& [name, m] : {std::pair<const char*, const Matrix2*>{"XA", &f.xa},
                                {"XB", &f.xb}, {"YA", &f.ya}, {"YB", &f.yb}}) {
    text += std::string("  ") + name + "\n" + matrix_rows(*m);
  }
  write_text(g, text);
  return 0;
}

int cmd_verify(const GlobalOptions& g, const VerifyArgs& a) {
  VerifyOptions opts;
  opts.trials = a.trials;
  opts.seed = g.seed;
  if (g.tol) opts.tol = *g.tol;
  opts.numeric_tol = a.numeric_tol;
  opts.closed = opts.geometric = opts.numeric = false;
  std::stringstream ss(a.routes);
  std::string route;
  while (std::getline(ss, route, ',')) {
    if (route == "closed") {
      opts.closed = true;
    } else if (route == "geometric") {
      opts.geometric = true;
    } else if (route == "numeric") {
      opts.numeric = true;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown route '" + route + "'");
    }
  }
  if (opts.numeric) opts.search = search_config(g, false);
  opts.validate();

  const VerifySummary s = verify_batch(opts);
  if (!g.out.empty()) {
    std::ofstream out(g.out);
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + g.out);
    out << verify_csv(s);
  }
  if (g.json) {
    std::cout << dump(summary_to_json(s));
  } else {
    Table t;
    t.add("trials", std::to_string(opts.trials));
    t.add("seed", std::to_string(opts.seed));
    for (const auto& [key, st] : s.stats) {
      t.section(key);
      t.add("max", num(st.max));
      t.add("mean", num(st.mean));
      t.add("threshold", num(st.threshold));
      t.add("status", st.passed() ? "PASS" : "FAIL");
    }
    t.section("overall");
    t.add("status", s.passed ? "PASS" : "FAIL");
    std::cout << t.str();
  }
  return s.passed ? 0 : 1;
}

int cmd_capacities(const GlobalOptions& g, const CapacitiesArgs& a) {
  if (a.d.empty() == a.input.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "give exactly one of --d or a matrix file");
  }
  const WeylVector d =
      a.d.empty() ? cartan_decompose(read_unitary4(a.input)).d : parse_weyl(a.d, g.degrees);
  const SearchConfig cfg = search_config(g, true);
  const CapacityReport closed = capacities_closed_form(d);
  const CapacityRelationReport r1 = verify_relation1(d, cfg);
  const CapacityRelationReport r2 = verify_relation2(d, cfg);

  if (g.json) {
    write_text(g, dump({{"d", d},
                        {"closed_form", closed},
                        {"relation1", r1},
                        {"relation2", r2},
                        {"search", cfg}}));
    return 0;
  }
  Table t;
  add_weyl(t, d, g.degrees);
  t.section("closed form");
  add_closed_form(t, closed);
  add_relation(t, "relation 1", r1, "c1_at_max_concurrence");
  add_relation(t, "relation 2", r2, "max_c_inf");
  write_text(g, t.str());
  return 0;
}

int cmd_random(const GlobalOptions& g, const RandomArgs& a) {
  if (a.weyl && a.haar) throw Error(ErrorCode::kInvalidArgument, "--weyl and --haar are exclusive");
  if (a.count < 1) throw Error(ErrorCode::kInvalidArgument, "--count must be at least 1");
  const bool weyl = a.weyl;
  Json items = Json::array();
  Table t;
  for (int i = 0; i < a.count; ++i) {
    Rng rng = item_rng(g.seed, static_cast<std::uint64_t>(i));
    if (weyl) {
      const WeylVector d = random_weyl_vector(rng);
      items.push_back(d);
      t.add(std::to_string(i), angles({d.alpha_x, d.alpha_y, d.alpha_z}, g.degrees));
    } else {
      items.push_back(matrix_to_json(haar_random_unitary(4, rng).matrix()));
    }
  }
  // Matrices are data, so they are always written as JSON. A single matrix is
  // emitted bare so it can be fed straight back to analyze.
  if (g.json || !weyl) {
    write_text(g, dump(a.count == 1 ? items[0] : items));
  } else {
    write_text(g, t.str());
  }
  return 0;
}

}  // namespace entcap::cli
