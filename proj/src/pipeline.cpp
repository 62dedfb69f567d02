// Copyright 2026 The sktholo Authors
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

#include "skt/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "skt/compactform.hpp"
#include "skt/connection.hpp"
#include "skt/errors.hpp"
#include "skt/holonomy.hpp"
#include "skt/submersion.hpp"
#include "skt/version.hpp"

namespace skt {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("config line " + std::to_string(line) + ": " + what);
}

Scalar parse_number(const std::string& text, std::size_t line, const std::string& key) {
  try {
    return Scalar::parse(text);
  } catch (const std::exception& e) {
    fail(line, key + ": " + e.what());
  }
}

bool parse_bool(const std::string& text, std::size_t line, const std::string& key) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  fail(line, key + ": expected true or false, got '" + text + "'");
}

RunConfig::Assignment parse_assignment(const std::string& text, std::size_t line, const std::string& key) {
  RunConfig::Assignment out;
  std::set<std::string> seen;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(line, key + ": expected label=value, got '" + item + "'");
    std::string label = trim(std::string_view(item).substr(0, eq));
    label.erase(std::remove_if(label.begin(), label.end(), [](char c) { return c == ' ' || c == '\t'; }), label.end());
    if (label.empty()) fail(line, key + ": empty root label");
    if (!seen.insert(label).second) fail(line, key + ": duplicate label '" + label + "'");
    out.emplace_back(label, parse_number(trim(std::string_view(item).substr(eq + 1)), line, key));
  }
  return out;
}

std::string defect_text(const Scalar& s) { return s.to_string(); }

json defect_json(const Defect& d, const CompactAlgebra* alg) {
  json j;
  j["pass"] = d.ok();
  j["max_defect"] = defect_text(d.max);
  if (d.witness.empty()) {
    j["witness"] = nullptr;
  } else if (alg != nullptr) {
    json w = json::array();
    for (std::size_t i : d.witness) w.push_back(alg->basis_name(i));
    j["witness"] = std::move(w);
  } else {
    j["witness"] = d.witness;
  }
  return j;
}

json scalars_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(scalars_json(m.row(r)));
  return out;
}

json echo(const RunConfig& c) {
  json in;
  in["group"] = c.group.name();
  in["j_torus"] = matrix_json(c.j_torus);
  in["lambda"] = scalars_json(c.lambda);
  auto assignment = [](const RunConfig::Assignment& a) {
    json o = json::object();
    for (const auto& [k, v] : a) o[k] = v.to_string();
    return o;
  };
  if (c.c_simple) in["c_simple"] = assignment(*c.c_simple);
  if (c.c_roots) in["c_roots"] = assignment(*c.c_roots);
  switch (c.set_mode) {
    case RunConfig::SetMode::All: in["submersion_sets"] = "all"; break;
    case RunConfig::SetMode::None: in["submersion_sets"] = "none"; break;
    case RunConfig::SetMode::Explicit: in["submersion_sets"] = c.sets; break;
  }
  in["mode"] = {{"skip_holonomy", c.skip_holonomy}, {"checks_only", c.checks_only}};
  return in;
}

std::vector<std::string> simple_labels(const RootSystem& rs, std::span<const std::size_t> idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(rs.simple_label(i));
  return out;
}

std::vector<std::string> root_labels(const RootSystem& rs, std::span<const std::size_t> idx) {
  std::vector<std::string> out;
  for (std::size_t k : idx) out.push_back(rs.root_label(rs.positive_root(k)));
  return out;
}

std::vector<std::size_t> resolve_simple_set(const RootSystem& rs, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& l : labels) {
    std::size_t i = 0;
    while (i < rs.rank() && rs.simple_label(i) != l) ++i;
    if (i == rs.rank()) throw ParseError("submersion.sets: unknown simple root '" + l + "'");
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Simple-root parameters by label; every simple root must be assigned.
std::vector<Scalar> resolve_simple(const RootSystem& rs, const RunConfig::Assignment& a) {
  std::vector<std::optional<Scalar>> vals(rs.rank());
  for (const auto& [label, value] : a) {
    std::size_t i = 0;
    while (i < rs.rank() && rs.simple_label(i) != label) ++i;
    if (i == rs.rank()) throw ParseError("metric.c_simple: unknown simple root '" + label + "'");
    vals[i] = value;
  }
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (!vals[i]) throw ParseError("metric.c_simple: missing value for " + rs.simple_label(i));
    out.push_back(*vals[i]);
  }
  return out;
}

std::vector<Scalar> resolve_roots(const RootSystem& rs, const RunConfig::Assignment& a) {
  std::map<std::string, std::size_t> by_label;
  for (std::size_t k = 0; k < rs.num_positive(); ++k) by_label[rs.root_label(rs.positive_root(k))] = k;
  std::vector<std::optional<Scalar>> vals(rs.num_positive());
  for (const auto& [label, value] : a) {
    const auto it = by_label.find(label);
    if (it == by_label.end()) throw ParseError("metric.c_roots: '" + label + "' is not a positive root");
    vals[it->second] = value;
  }
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    if (!vals[k]) throw ParseError("metric.c_roots: missing value for " + rs.root_label(rs.positive_root(k)));
    out.push_back(*vals[k]);
  }
  return out;
}

class Timer {
 public:
  explicit Timer(json& sink) : sink_(sink), last_(std::chrono::steady_clock::now()) {}
  void lap(const char* name) {
    const auto now = std::chrono::steady_clock::now();
    sink_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  json& sink_;
  std::chrono::steady_clock::time_point last_;
};

// Accumulates named pass/fail checks for the summary and exit code.
struct CheckLedger {
  std::vector<std::string> failed;
  std::size_t total = 0;
  json record(const std::string& name, const Defect& d, const CompactAlgebra* alg) {
    ++total;
    if (!d.ok()) failed.push_back(name);
    return defect_json(d, alg);
  }
  void flag(const std::string& name, bool ok) {
    ++total;
    if (!ok) failed.push_back(name);
  }
};

json submersion_json(const SubmersionReport& r, const CompactAlgebra& alg, CheckLedger* ledger, Stage stage) {
  json s;
  s["I"] = subset_label(r.subset);
  s["vertical_dimension"] = r.vertical_dim;
  s["horizontal_dimension"] = r.horizontal_dim;
  json checks = json::array();
  for (const auto& c : r.checks) {
    const bool basis_witness = c.name != "holonomy_invariant";
    json cj = {{"name", c.name}};
    const std::string qualified = "submersion" + subset_label(r.subset) + "." + c.name;
    json d = ledger ? ledger->record(qualified, c.defect, basis_witness ? &alg : nullptr)
                    : defect_json(c.defect, basis_witness ? &alg : nullptr);
    for (auto& [k, v] : d.items()) cj[k] = v;
    checks.push_back(std::move(cj));
  }
  s["checks"] = std::move(checks);
  s["all_pass"] = r.all_pass();
  s["base_obstruction"] = {{"max_abs_sigma_Tm", defect_text(r.base_obstruction.max)},
                           {"base_closed_torsion", r.base_obstruction.ok()}};
  if (stage == Stage::Report) {
    s["diagnostics"] = {{"connection_without_bracket_term", defect_json(r.connection_literal, &alg)}};
  }
  return s;
}

}  // namespace

RunConfig RunConfig::parse(std::string_view text) {
  RunConfig c;
  std::set<std::string> seen;
  bool have_group = false, have_j = false, have_lambda = false;
  std::size_t line_no = 0;
  std::istringstream is{std::string(text)};
  std::string raw;
  while (std::getline(is, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (!seen.insert(key).second) fail(line_no, "duplicate key '" + key + "'");
    if (value.empty()) fail(line_no, key + ": empty value");

    if (key == "group.factors") {
      c.group_text = value;
      try {
        c.group = CartanSpec::parse(value);
      } catch (const ParseError& e) {
        fail(line_no, e.what());
      }
      have_group = true;
    } else if (key == "complex_structure.j_torus") {
      const auto rows = split(value, ';');
      std::vector<std::vector<Scalar>> m;
      for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (const auto& e : split(r, ',')) row.push_back(parse_number(e, line_no, key));
        m.push_back(std::move(row));
      }
      for (const auto& r : m)
        if (r.size() != m.size()) fail(line_no, key + ": matrix must be square");
      c.j_torus = Matrix(m.size(), m.size());
      for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t s = 0; s < m.size(); ++s) c.j_torus(r, s) = m[r][s];
      have_j = true;
    } else if (key == "metric.lambda") {
      for (const auto& e : split(value, ',')) c.lambda.push_back(parse_number(e, line_no, key));
      have_lambda = true;
    } else if (key == "metric.c_simple") {
      c.c_simple = parse_assignment(value, line_no, key);
    } else if (key == "metric.c_roots") {
      c.c_roots = parse_assignment(value, line_no, key);
    } else if (key == "submersion.sets") {
      if (value == "all") {
        c.set_mode = SetMode::All;
      } else if (value == "none") {
        c.set_mode = SetMode::None;
      } else {
        c.set_mode = SetMode::Explicit;
        for (const auto& item : split(value, ';')) {
          if (item.size() < 2 || item.front() != '{' || item.back() != '}')
            fail(line_no, key + ": expected '{...}', got '" + item + "'");
          std::vector<std::string> labels;
          const std::string inner = trim(std::string_view(item).substr(1, item.size() - 2));
          if (!inner.empty())
            for (const auto& l : split(inner, ',')) {
              if (l.empty()) fail(line_no, key + ": empty label in '" + item + "'");
              labels.push_back(l);
            }
          c.sets.push_back(std::move(labels));
        }
      }
    } else if (key == "output.path") {
      c.output_path = value;
    } else if (key == "mode.skip_holonomy") {
      c.skip_holonomy = parse_bool(value, line_no, key);
    } else if (key == "mode.checks_only") {
      c.checks_only = parse_bool(value, line_no, key);
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  if (!have_group) throw ParseError("config: missing group.factors");
  if (!have_j) throw ParseError("config: missing complex_structure.j_torus");
  if (!have_lambda) throw ParseError("config: missing metric.lambda");
  if (c.c_simple.has_value() == c.c_roots.has_value())
    throw ParseError("config: give exactly one of metric.c_simple and metric.c_roots");
  return c;
}

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::Check: return "check";
    case Stage::Holonomy: return "holonomy";
    case Stage::Submersion: return "submersion";
    case Stage::Report: return "report";
  }
  return "unknown";
}

std::vector<std::vector<std::size_t>> enumerate_submersions(const SktParameters& skt, std::size_t cap,
                                                            std::vector<std::string>* warnings) {
  const std::size_t m = skt.i_max.size();
  if (m >= 8 * sizeof(std::size_t) - 1) throw PreconditionError("I_max is too large to enumerate");
  const std::size_t count = std::size_t{1} << m;
  if (count > cap && warnings != nullptr) {
    warnings->push_back("enumerating " + std::to_string(count) + " subsets of I_max (cap " + std::to_string(cap) + ")");
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 0; k <= m; ++k)
    for_each_combination(m, k, [&](std::span<const std::size_t> pick) {
      std::vector<std::size_t> s;
      for (std::size_t p : pick) s.push_back(skt.i_max[p]);
      out.push_back(std::move(s));
    });
  return out;
}

json without_timings(json report) {
  report.erase("timings_ms");
  return report;
}

RunResult run(const RunConfig& config, const RunOptions& options) {
  RunResult res;
  json& rep = res.report;
  json timings = json::object();
  Timer timer(timings);
  CheckLedger ledger;
  const Stage stage = config.checks_only ? Stage::Check : options.stage;

  rep["tool"] = "sktholo";
  rep["version"] = kVersionString;
  rep["stage"] = stage_name(stage);
  rep["input"] = echo(config);

  try {
    // Algebra.
    const RootSystem rs = build_root_system(config.group);
    const std::size_t dim = rs.rank() + 2 * rs.num_positive();
    if (dim > options.max_dim) {
      throw PreconditionError("algebra " + config.group.name() + " has dimension " + std::to_string(dim) +
                              ", above the limit " + std::to_string(options.max_dim));
    }
    const CompactAlgebra alg = build_compact_algebra(rs, cached_chevalley_constants(rs, options.cache_dir));
    timer.lap("algebra");

    // Metric parameters.
    std::vector<Scalar> c_all;
    SktParameters skt;
    if (config.c_simple) {
      skt = extend_pluriclosed(rs, resolve_simple(rs, *config.c_simple));
      c_all = skt.c_all;
    } else {
      c_all = resolve_roots(rs, *config.c_roots);
      skt.c_all = c_all;
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        skt.c_simple.push_back(c_all[i]);
        if (c_all[i] == Scalar(1)) skt.i_max.push_back(i);
      }
      skt.delta_i_max = roots_supported_on(rs, skt.i_max);
    }

    json a;
    a["type"] = rs.factors().empty() ? "" : CartanSpec{rs.factors()}.name();
    a["rank"] = rs.rank();
    a["dimension"] = alg.dim();
    a["positive_root_count"] = rs.num_positive();
    json roots = json::array();
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
      roots.push_back({{"label", rs.root_label(rs.positive_root(k))},
                       {"coordinates", rs.positive_root(k)},
                       {"factor", rs.factor_of_root(k)},
                       {"c", c_all[k].to_string()}});
    }
    a["positive_roots"] = std::move(roots);
    json basis = json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i) basis.push_back(alg.basis_name(i));
    a["basis"] = std::move(basis);
    a["killing_torus"] = matrix_json(killing_restriction(alg, alg.torus_indices()));
    rep["algebra"] = std::move(a);

    if (config.lambda.size() != rs.factors().size()) {
      throw PreconditionError("metric.lambda has " + std::to_string(config.lambda.size()) + " values for " +
                              std::to_string(rs.factors().size()) + " simple factors");
    }
    if (config.j_torus.rows() != rs.rank()) {
      throw PreconditionError("complex_structure.j_torus is " + std::to_string(config.j_torus.rows()) + "x" +
                              std::to_string(config.j_torus.rows()) + " but the rank is " + std::to_string(rs.rank()));
    }
    const HermitianStructure h = make_hermitian(alg, config.j_torus, config.lambda, c_all);
    const CompatibilityResult compat = check_compatibility(h.g, h.j);
    json herm;
    herm["compatible"] = compat.compatible;
    herm["max_defect"] = defect_text(compat.max_defect);
    herm["witness"] = compat.witness ? json::array({alg.basis_name(compat.witness->first),
                                                    alg.basis_name(compat.witness->second)})
                                     : json(nullptr);
    herm["metric_torus"] = matrix_json(h.g.restrict(alg.torus_indices(), alg.torus_indices()));
    rep["hermitian"] = std::move(herm);
    if (!compat.compatible) {
      throw PreconditionError("J is not g-orthogonal: (J^T g J - g)(" + alg.basis_name(compat.witness->first) + ", " +
                              alg.basis_name(compat.witness->second) + ") != 0");
    }
    timer.lap("hermitian");

    // SKT verdict: root formula against the exact dT.
    const InvariantForm t = bismut_torsion(h, alg);
    const InvariantForm dt = exterior_derivative(t, alg);
    const PluriclosedRelation rel = pluriclosed_relation(rs, c_all);
    const bool pluriclosed = dt.is_zero();
    {
      json s;
      s["pluriclosed"] = pluriclosed;
      s["formula_holds"] = rel.holds();
      s["formula_max_defect"] = defect_text(rel.max_defect);
      s["formula_witness"] = rel.witness ? json::array({rs.root_label(rs.positive_root(rel.witness->first)),
                                                         rs.root_label(rs.positive_root(rel.witness->second))})
                                         : json(nullptr);
      s["dT_max_abs"] = defect_text(dt.max_abs());
      ledger.flag("skt_verdicts_agree", rel.holds() == pluriclosed);
      s["verdicts_agree"] = rel.holds() == pluriclosed;
      s["i_max"] = simple_labels(rs, skt.i_max);
      s["delta_i_max"] = root_labels(rs, skt.delta_i_max);
      rep["skt"] = std::move(s);
    }
    timer.lap("skt");

    // Identity suite.
    const InvariantForm omega = fundamental_form(h.g, h.j);
    const NomizuOperator lambda = nomizu(h.g, t, alg);
    const NomizuOperator lambda_j = nomizu_from_complex_structure(h, alg);
    const CurvatureSet r = curvature(lambda, alg);
    {
      json id;
      id["torsion_equals_minus_dc_omega"] = ledger.record("torsion_equals_minus_dc_omega",
                                                          t.difference(minus_dc(omega, h.j, alg)), &alg);
      if (alg.dim() >= 4) {
        const InvariantForm ddo = exterior_derivative(exterior_derivative(omega, alg), alg);
        id["d_squared_omega"] = ledger.record("d_squared_omega", ddo.difference(InvariantForm(alg.dim(), 4)), &alg);
      }
      if (alg.dim() >= 5) {
        const InvariantForm ddt = exterior_derivative(dt, alg);
        id["d_squared_torsion"] = ledger.record("d_squared_torsion", ddt.difference(InvariantForm(alg.dim(), 5)), &alg);
      }
      id["nomizu_metric"] = ledger.record("nomizu_metric", nomizu_metric_defect(lambda, h.g), &alg);
      id["nomizu_hermitian"] = ledger.record("nomizu_hermitian", nomizu_hermitian_defect(lambda, h.j), &alg);
      id["nomizu_torsion"] = ledger.record("nomizu_torsion", nomizu_torsion_defect(lambda, t, h.g, alg), &alg);
      id["nomizu_two_routes"] = ledger.record("nomizu_two_routes", nomizu_difference(lambda, lambda_j), &alg);
      id["curvature_skew"] = ledger.record("curvature_skew", curvature_skew_defect(r, h.g), &alg);
      id["curvature_hermitian"] = ledger.record("curvature_hermitian", curvature_hermitian_defect(r, h.j), &alg);
      id["bianchi"] = ledger.record("bianchi", bianchi_check(r, t, lambda, h.g, alg), &alg);
      rep["identities"] = std::move(id);
      std::size_t nonzero = 0;
      for (const auto& m : r.all_upper())
        if (!m.is_zero()) ++nonzero;
      rep["curvature"] = {{"flat", nonzero == 0}, {"nonzero_pairs", nonzero}, {"total_pairs", r.all_upper().size()}};
    }
    timer.lap("identities");

    // Holonomy.
    std::optional<OperatorSpan> span;
    if (stage >= Stage::Holonomy && !config.skip_holonomy) {
      span = generate_span(lambda, r, alg);
      const HolonomyDecomposition dec = invariant_decomposition(*span, h.g, alg);
      const DecompositionVerification ver = verify_decomposition(dec, *span, h.g);
      json ho;
      ho["span_dimension"] = span->dimension();
      ho["generation_log"] = span->generation_log;
      ho["trivial_part_dimension"] = dec.trivial_part.dimension();
      json blocks = json::array();
      for (const auto& b : dec.blocks) {
        json bj = {{"label", block_label(b, alg)}, {"dimension", b.space.dimension()}, {"trivial", b.trivial}};
        json vecs = json::array();
        for (std::size_t i = 0; i < b.space.dimension(); ++i) vecs.push_back(scalars_json(b.space.vector(i)));
        bj["basis"] = std::move(vecs);
        blocks.push_back(std::move(bj));
      }
      ho["blocks"] = std::move(blocks);
      ho["verification"] = {{"block_invariance", ledger.record("holonomy.block_invariance", ver.invariance, nullptr)},
                            {"complement_invariance",
                             ledger.record("holonomy.complement_invariance", ver.complement_invariance, nullptr)},
                            {"orthogonality", ledger.record("holonomy.orthogonality", ver.orthogonality, nullptr)},
                            {"spans_algebra", ver.spans_algebra}};
      ledger.flag("holonomy.spans_algebra", ver.spans_algebra);
      if (pluriclosed) {
        const ComparisonReport cmp = label_and_compare(dec, *span, skt, alg);
        json clauses = json::array();
        for (const auto& c : cmp.clauses) {
          ledger.flag("holonomy." + c.name, c.pass);
          json cj = {{"name", c.name}, {"pass", c.pass}, {"max_defect", defect_text(c.defect.max)}};
          cj["witness"] = c.defect.witness.empty() ? json(nullptr) : json(c.defect.witness);
          cj["detail"] = c.detail;
          clauses.push_back(std::move(cj));
        }
        ho["comparison"] = {{"clauses", std::move(clauses)},
                            {"residual_blocks_found", cmp.residual_blocks_found},
                            {"residual_note", cmp.residual_note}};
      } else {
        ho["comparison"] = "skipped: structure is not pluriclosed";
      }
      rep["holonomy"] = std::move(ho);
      timer.lap("holonomy");
    }

    // Submersions.
    if (stage >= Stage::Submersion) {
      if (!pluriclosed) {
        rep["submersions"] = "skipped: structure is not pluriclosed";
      } else {
        std::vector<std::vector<std::size_t>> sets;
        switch (config.set_mode) {
          case RunConfig::SetMode::All: sets = enumerate_submersions(skt, options.subset_cap, &res.warnings); break;
          case RunConfig::SetMode::None: break;
          case RunConfig::SetMode::Explicit:
            for (const auto& s : config.sets) sets.push_back(resolve_simple_set(rs, s));
            break;
        }
        json subs = json::array();
        const OperatorSpan* sp = span ? &*span : nullptr;
        for (const auto& subset : sets) {
          const SplitData split = build_split(skt, subset, h, alg);
          subs.push_back(submersion_json(check_submersion(split, h, t, lambda, r, sp, alg), alg, &ledger, stage));
        }
        rep["submersions"] = std::move(subs);

        if (options.negative_controls) {
          // Bypassed splits on single simple roots outside I_max; defects are expected, not required.
          json neg = json::array();
          for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (std::find(skt.i_max.begin(), skt.i_max.end(), i) != skt.i_max.end()) continue;
            const SplitData split = build_split_unchecked({i}, h, alg);
            const SubmersionReport sr = check_submersion(split, h, t, lambda, r, sp, alg);
            json nj = submersion_json(sr, alg, nullptr, stage);
            json detected = json::array();
            for (const auto& c : sr.checks)
              if (!c.pass) detected.push_back(c.name);
            nj["bypassed_precondition"] = "I subset of I_max";
            nj["nonzero_checks"] = std::move(detected);
            neg.push_back(std::move(nj));
          }
          rep["negative_controls"] = std::move(neg);
        }
      }
      timer.lap("submersion");
    }
  } catch (const ParseError& e) {
    res.exit_code = exit_code::kParse;
    res.error = e.what();
  } catch (const PreconditionError& e) {
    res.exit_code = exit_code::kPrecondition;
    res.error = e.what();
  } catch (const StructuralError& e) {
    res.exit_code = exit_code::kCheckFailed;
    res.error = std::string("structural check failed: ") + e.what();
  }

  if (!res.error.empty()) {
    rep["error"] = {{"kind", res.exit_code == exit_code::kParse          ? "parse"
                             : res.exit_code == exit_code::kPrecondition ? "precondition"
                                                                         : "structural"},
                    {"message", res.error}};
  } else if (!ledger.failed.empty()) {
    res.exit_code = exit_code::kCheckFailed;
  }
  rep["warnings"] = res.warnings;
  rep["summary"] = {{"checks_run", ledger.total},
                    {"failed_checks", ledger.failed},
                    {"all_checks_pass", res.error.empty() && ledger.failed.empty()},
                    {"exit_code", res.exit_code}};
  rep["timings_ms"] = std::move(timings);
  return res;
}

}  // namespace skt
