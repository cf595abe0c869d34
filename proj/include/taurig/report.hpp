#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "taurig/dynkin.hpp"
#include "taurig/hereditary.hpp"
#include "taurig/quiver.hpp"
#include "taurig/rsz.hpp"
#include "taurig/single_subquiver.hpp"

namespace taurig {

using ordered_json = nlohmann::ordered_json;

struct Params {
  std::uint32_t field = 32003;
  std::uint64_t seed = 0;
};

// Root row for the roots listing: presentation data plus sincerity.
struct RootRow {
  DimensionVector d;
  Presentation presentation;
  bool sincere = false;
};

// Per-class oracle verdict.
struct OracleClass {
  DimensionVector dims;
  bool tau_rigid = false;
  bool crosschecked = false;
  bool crosscheck_agrees = false;
};

struct OracleReport {
  OracleBounds bounds;
  bool complete = false;
  std::vector<OracleClass> classes;
  long long tau_rigid_within_bounds = 0;
  bool has_count = false;       // equality against the subquiver formula ran
  long long formula_count = 0;  // meaningful when has_count
  bool matches = false;         // meaningful when has_count
};

namespace fmt {

inline std::string signed_set(const std::vector<SignedVertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += vs[i].str();
  }
  return out + "}";
}

inline std::string name_set(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ' ';
    out += names[i];
  }
  return out + "}";
}

inline std::string dim_vector(const DimensionVector& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out + ")";
}

}  // namespace fmt

namespace detail {

inline ordered_json input_summary(const Quiver& q) {
  return {{"vertices", q.num_vertices()}, {"arrows", q.num_arrows()}};
}

inline ordered_json params_json(const Params& p) {
  return {{"field", p.field}, {"seed", p.seed}};
}

inline ordered_json signed_vertices_json(const std::vector<SignedVertex>& vs) {
  ordered_json a = ordered_json::array();
  for (const auto& v : vs) a.push_back(v.str());
  return a;
}

inline ordered_json components_json(const std::vector<std::pair<Graph, DynkinType>>& report) {
  ordered_json a = ordered_json::array();
  for (const auto& [g, t] : report)
    a.push_back({{"vertices", g.vertices}, {"type", t.str()}});
  return a;
}

inline ordered_json witness_json(const FinitenessDecision& d) {
  if (!d.witness) return nullptr;
  ordered_json w;
  w["vertices"] = signed_vertices_json(d.witness->chosen);
  w["components"] = components_json(d.component_report);
  return w;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// JSON reports. Key order is fixed; serialization with dump() is therefore
// byte-deterministic for a given input, seed, field and flag set.

inline ordered_json report_check_finite(const Quiver& q, const FinitenessDecision& d,
                                        const Params& params) {
  ordered_json r;
  r["input"] = detail::input_summary(q);
  r["decision"] = {{"tau_rigid_finite", d.finite}, {"witness", detail::witness_json(d)}};
  r["params"] = detail::params_json(params);
  return r;
}

inline ordered_json report_count(const Quiver& q, const TauRigidCount& c, bool with_breakdown,
                                 const Params& params) {
  ordered_json r;
  r["input"] = detail::input_summary(q);
  r["decision"] = {{"tau_rigid_finite", c.finite}, {"witness", detail::witness_json(c.decision)}};
  if (c.finite)
    r["count"] = c.count;
  else
    r["count"] = "infinite";
  if (with_breakdown && c.finite) {
    ordered_json b = ordered_json::array();
    for (const auto& e : c.breakdown)
      b.push_back({{"vertices", detail::signed_vertices_json(e.subquiver.chosen)},
                   {"type", e.type.str()},
                   {"sincere_count", e.sincere_count}});
    r["breakdown"] = b;
  }
  r["params"] = detail::params_json(params);
  return r;
}

inline ordered_json report_rep_finite(const Quiver& q, const FinitenessDecision& d,
                                      const Params& params) {
  ordered_json r;
  r["input"] = detail::input_summary(q);
  r["decision"] = {{"rep_finite", d.finite},
                   {"components", detail::components_json(d.component_report)},
                   {"witness", detail::witness_json(d)}};
  r["params"] = detail::params_json(params);
  return r;
}

inline ordered_json report_roots(const Quiver& q, const DynkinType& type,
                                 const std::vector<RootRow>& rows, const Params& params) {
  ordered_json r;
  r["input"] = detail::input_summary(q);
  r["type"] = type.str();
  ordered_json a = ordered_json::array();
  long long sincere = 0;
  for (const auto& row : rows) {
    a.push_back({{"d", row.d},
                 {"n", row.presentation.n},
                 {"m", row.presentation.m},
                 {"sincere", row.sincere}});
    sincere += row.sincere;
  }
  r["roots"] = a;
  r["sincere"] = sincere;
  r["params"] = detail::params_json(params);
  return r;
}

inline ordered_json report_oracle(const Quiver& q, const OracleReport& o, const Params& params) {
  ordered_json r;
  r["input"] = detail::input_summary(q);
  ordered_json js;
  js["bounds"] = {{"max_per_vertex", o.bounds.max_per_vertex}, {"max_total", o.bounds.max_total}};
  js["complete"] = o.complete;
  ordered_json cls = ordered_json::array();
  for (const auto& c : o.classes) {
    ordered_json e = {{"dims", c.dims}, {"tau_rigid", c.tau_rigid}};
    if (c.crosschecked) e["crosscheck"] = c.crosscheck_agrees ? "agree" : "disagree";
    cls.push_back(e);
  }
  js["classes"] = cls;
  js["tau_rigid_within_bounds"] = o.tau_rigid_within_bounds;
  if (o.has_count) {
    js["count"] = o.formula_count;
    js["matches_count"] = o.matches;
  }
  r["oracle"] = js;
  r["params"] = detail::params_json(params);
  return r;
}

// ---------------------------------------------------------------------------
// Plain text renderings of the same reports.

inline std::string text_input(const Quiver& q) {
  std::ostringstream os;
  os << "input: " << q.num_vertices() << " vertices, " << q.num_arrows() << " arrows\n";
  return os.str();
}

inline std::string text_witness(const FinitenessDecision& d) {
  std::ostringstream os;
  if (!d.witness) return {};
  os << "witness:";
  for (const auto& v : d.witness->chosen) os << ' ' << v.str();
  os << '\n';
  for (const auto& [g, t] : d.component_report)
    os << "  component " << fmt::name_set(g.vertices) << ": " << t.str() << '\n';
  return os.str();
}

inline std::string text_check_finite(const Quiver& q, const FinitenessDecision& d) {
  std::ostringstream os;
  os << text_input(q) << "tau-rigid-finite: " << (d.finite ? "yes" : "no") << '\n'
     << text_witness(d);
  return os.str();
}

inline std::string text_count(const Quiver& q, const TauRigidCount& c, bool with_breakdown) {
  std::ostringstream os;
  os << text_input(q) << "tau-rigid-finite: " << (c.finite ? "yes" : "no") << '\n';
  if (c.finite)
    os << "count: " << c.count << '\n';
  else
    os << "count: infinite\n" << text_witness(c.decision);
  if (with_breakdown && c.finite) {
    os << "breakdown:\n";
    for (const auto& e : c.breakdown)
      os << "  " << fmt::signed_set(e.subquiver.chosen) << ' ' << e.type.str() << ' '
         << e.sincere_count << '\n';
  }
  return os.str();
}

inline std::string text_rep_finite(const Quiver& q, const FinitenessDecision& d) {
  std::ostringstream os;
  os << text_input(q) << "representation-finite: " << (d.finite ? "yes" : "no") << '\n';
  for (const auto& [g, t] : d.component_report)
    os << "  component " << fmt::name_set(g.vertices) << ": " << t.str() << '\n';
  return os.str();
}

inline std::string text_roots(const Quiver& q, const DynkinType& type,
                              const std::vector<RootRow>& rows) {
  std::ostringstream os;
  os << text_input(q) << "type: " << type.str() << '\n' << "roots: " << rows.size() << '\n';
  long long sincere = 0;
  for (const auto& row : rows) {
    os << "  d=" << fmt::dim_vector(row.d) << " n=" << fmt::dim_vector(row.presentation.n)
       << " m=" << fmt::dim_vector(row.presentation.m)
       << " sincere=" << (row.sincere ? "yes" : "no") << '\n';
    sincere += row.sincere;
  }
  os << "sincere: " << sincere << '\n';
  return os.str();
}

inline std::string text_oracle(const Quiver& q, const OracleReport& o) {
  std::ostringstream os;
  os << text_input(q) << "bounds: per-vertex " << o.bounds.max_per_vertex << ", total "
     << o.bounds.max_total << '\n'
     << "complete: " << (o.complete ? "yes" : "no") << '\n'
     << "classes: " << o.classes.size() << '\n';
  for (const auto& c : o.classes) {
    os << "  dim=" << fmt::dim_vector(c.dims) << " tau-rigid=" << (c.tau_rigid ? "yes" : "no");
    if (c.crosschecked) os << " crosscheck=" << (c.crosscheck_agrees ? "agree" : "disagree");
    os << '\n';
  }
  os << "tau-rigid within bounds: " << o.tau_rigid_within_bounds << '\n';
  if (o.has_count)
    os << "count via subquiver formula: " << o.formula_count << ' '
       << (o.matches ? "(matches)" : "(MISMATCH)") << '\n';
  return os.str();
}

}  // namespace taurig
