#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "taurig/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw taurig::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t seed_from_env_or_zero() {
  const char* s = std::getenv("TAURIG_SEED");
  if (!s) return 0;
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (errno != 0 || end == s || *end != '\0')
    throw taurig::Error("invalid TAURIG_SEED value '" + std::string(s) + "'");
  return v;
}

void emit(const taurig::ordered_json& j) { std::cout << j.dump(2) << '\n'; }

struct CommonArgs {
  std::string file;
  bool json = false;
  std::uint32_t field = 32003;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

taurig::Params make_params(const CommonArgs& a) {
  if (!is_prime(a.field)) throw std::invalid_argument("field must be a prime number");
  taurig::Params p;
  p.field = a.field;
  p.seed = a.seed_given ? a.seed : seed_from_env_or_zero();
  return p;
}

int run_check_finite(const CommonArgs& a) {
  taurig::Quiver q = taurig::parse_quiver(read_file(a.file));
  taurig::Params params = make_params(a);
  taurig::FinitenessDecision d = taurig::is_tau_rigid_finite(q);
  if (a.json)
    emit(taurig::report_check_finite(q, d, params));
  else
    std::cout << taurig::text_check_finite(q, d);
  return d.finite ? 0 : 3;
}

int run_count(const CommonArgs& a, bool breakdown) {
  taurig::Quiver q = taurig::parse_quiver(read_file(a.file));
  taurig::Params params = make_params(a);
  taurig::TauRigidCount c = taurig::count_tau_rigid(q, params.field, params.seed);
  if (a.json)
    emit(taurig::report_count(q, c, breakdown, params));
  else
    std::cout << taurig::text_count(q, c, breakdown);
  return c.finite ? 0 : 3;
}

int run_rep_finite(const CommonArgs& a) {
  taurig::Quiver q = taurig::parse_quiver(read_file(a.file));
  taurig::Params params = make_params(a);
  taurig::FinitenessDecision d = taurig::is_representation_finite(q);
  if (a.json)
    emit(taurig::report_rep_finite(q, d, params));
  else
    std::cout << taurig::text_rep_finite(q, d);
  return d.finite ? 0 : 3;
}

int run_separated(const CommonArgs& a, bool dot) {
  taurig::Quiver q = taurig::parse_quiver(read_file(a.file));
  taurig::Quiver qs = taurig::separated_quiver(q);
  std::cout << (dot ? taurig::emit_dot(qs) : taurig::emit_text(qs));
  return 0;
}

int run_roots(const CommonArgs& a) {
  taurig::Quiver q = taurig::parse_quiver(read_file(a.file));
  taurig::Params params = make_params(a);
  taurig::Graph g = taurig::underlying_graph(q);
  taurig::DynkinType type = taurig::classify_connected(g);
  if (!type.is_dynkin())
    throw std::invalid_argument("not a Dynkin quiver: " + type.str());

  std::vector<taurig::RootRow> rows;
  auto roots = taurig::enumerate_positive_roots(g);
  for (std::size_t r = 0; r < roots.size(); ++r) {
    taurig::RootRow row;
    row.d = roots[r];
    taurig::Representation x = taurig::generic_indecomposable(
        q, row.d, params.field, taurig::mix_seed(params.seed, r));
    row.presentation = taurig::min_presentation(x);
    row.sincere = true;
    for (int di : row.d) row.sincere = row.sincere && di > 0;
    rows.push_back(std::move(row));
  }
  if (a.json)
    emit(taurig::report_roots(q, type, rows, params));
  else
    std::cout << taurig::text_roots(q, type, rows);
  return 0;
}

int run_oracle(const CommonArgs& a, taurig::OracleBounds bounds, bool crosscheck) {
  taurig::Quiver q = taurig::parse_quiver(read_file(a.file));
  taurig::Params params = make_params(a);

  taurig::OracleReport report;
  report.bounds = bounds;
  report.complete = taurig::oracle_bounds_complete(q, bounds);
  auto classes = taurig::enumerate_indecomposables(q, params.field, bounds);
  for (const taurig::RszModule& x : classes) {
    taurig::OracleClass c;
    c.dims = x.rep.dims;
    c.tau_rigid = taurig::is_tau_rigid(x);
    if (crosscheck) {
      c.crosschecked = true;
      c.crosscheck_agrees = taurig::crosscheck_separation(x);
    }
    report.tau_rigid_within_bounds += c.tau_rigid;
    report.classes.push_back(std::move(c));
  }
  if (report.complete) {
    taurig::TauRigidCount formula = taurig::count_tau_rigid(q, 32003, params.seed);
    if (!formula.finite)
      throw std::logic_error("representation finite input judged tau-rigid infinite");
    report.has_count = true;
    report.formula_count = formula.count;
    report.matches = formula.count == report.tau_rigid_within_bounds;
  }
  if (a.json)
    emit(taurig::report_oracle(q, report, params));
  else
    std::cout << taurig::text_oracle(q, report);
  if (report.has_count && !report.matches) {
    std::cerr << "error: oracle count disagrees with the subquiver formula\n";
    return 1;
  }
  bool all_agree = true;
  for (const auto& c : report.classes)
    if (c.crosschecked && !c.crosscheck_agrees) all_agree = false;
  if (!all_agree) {
    std::cerr << "error: separation crosscheck failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tau-rigidity decisions and counts for radical square zero algebras"};
  app.require_subcommand(1);

  CommonArgs check_args, count_args, rep_args, sep_args, roots_args, oracle_args;
  bool count_breakdown = false;
  bool sep_dot = false;
  bool oracle_crosscheck = false;
  taurig::OracleBounds bounds;
  oracle_args.field = 2;

  auto add_common = [](CLI::App* sub, CommonArgs& args, bool with_params) {
    sub->add_option("file", args.file, "quiver file")->required();
    sub->add_flag("--json", args.json, "emit JSON");
    if (with_params) {
      sub->add_option("--field", args.field, "prime field for linear algebra");
      sub->add_option("--seed", args.seed, "seed for generic sampling")
          ->each([&args](const std::string&) { args.seed_given = true; });
    }
  };

  CLI::App* check = app.add_subcommand("check-finite", "decide tau-rigid finiteness");
  add_common(check, check_args, true);
  CLI::App* count = app.add_subcommand("count", "count indecomposable tau-rigid modules");
  add_common(count, count_args, true);
  count->add_flag("--breakdown", count_breakdown, "per-subquiver counts");
  CLI::App* rep = app.add_subcommand("rep-finite", "decide representation finiteness");
  add_common(rep, rep_args, true);
  CLI::App* sep = app.add_subcommand("separated", "emit the separated quiver");
  add_common(sep, sep_args, false);
  sep->add_flag("--dot", sep_dot, "emit DOT instead of quiver text");
  CLI::App* roots = app.add_subcommand("roots", "positive roots with presentations");
  add_common(roots, roots_args, true);
  CLI::App* oracle = app.add_subcommand("oracle", "brute force module enumeration");
  add_common(oracle, oracle_args, true);
  oracle->add_option("--max-total-dim", bounds.max_total, "total dimension bound");
  oracle->add_option("--max-per-vertex", bounds.max_per_vertex, "per-vertex dimension bound");
  oracle->add_flag("--crosscheck", oracle_crosscheck, "verify the separation criterion per class");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(check)) return run_check_finite(check_args);
    if (app.got_subcommand(count)) return run_count(count_args, count_breakdown);
    if (app.got_subcommand(rep)) return run_rep_finite(rep_args);
    if (app.got_subcommand(sep)) return run_separated(sep_args, sep_dot);
    if (app.got_subcommand(roots)) return run_roots(roots_args);
    if (app.got_subcommand(oracle)) return run_oracle(oracle_args, bounds, oracle_crosscheck);
  } catch (const taurig::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
