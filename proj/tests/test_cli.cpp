#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "support/corpus.hpp"
#include "support/run_cli.hpp"
#include "taurig/quiver.hpp"

using Catch::Matchers::ContainsSubstring;
using json = nlohmann::json;

namespace {

std::string file_for(const taurig::Quiver& q) {
  return cli::temp_quiver_file(taurig::emit_text(q));
}

}  // namespace

TEST_CASE("count command") {
  auto file = file_for(corpus::double_path(2));
  auto r = cli::run("count " + file);
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out, ContainsSubstring("tau-rigid-finite: yes"));
  REQUIRE_THAT(r.out, ContainsSubstring("count: 4"));

  SECTION("breakdown lines") {
    auto b = cli::run("count --breakdown " + file);
    REQUIRE(b.exit_code == 0);
    REQUIRE_THAT(b.out, ContainsSubstring("breakdown:"));
    REQUIRE_THAT(b.out, ContainsSubstring("{1+} A1 1"));
    REQUIRE_THAT(b.out, ContainsSubstring("{1+ 2-} A2 1"));
  }
  SECTION("infinite input") {
    auto inf = cli::run("count " + file_for(corpus::double_cycle(4)));
    REQUIRE(inf.exit_code == 3);
    REQUIRE_THAT(inf.out, ContainsSubstring("count: infinite"));
    REQUIRE_THAT(inf.out, ContainsSubstring("witness: 1+ 2- 3+ 4-"));
    REQUIRE_THAT(inf.out, ContainsSubstring("NotDynkin(cycle)"));
  }
  SECTION("json shape") {
    auto j = json::parse(cli::run("count --json --breakdown " + file).out);
    REQUIRE(j["decision"]["tau_rigid_finite"] == true);
    REQUIRE(j["decision"]["witness"].is_null());
    REQUIRE(j["count"] == 4);
    REQUIRE(j["input"]["vertices"] == 2);
    REQUIRE(j["params"]["field"] == 32003);
    REQUIRE(j["params"]["seed"] == 0);
    long long sum = 0;
    for (const auto& e : j["breakdown"]) sum += e["sincere_count"].get<long long>();
    REQUIRE(sum == 4);
    auto inf = json::parse(cli::run("count --json " + file_for(corpus::double_cycle(4))).out);
    REQUIRE(inf["count"] == "infinite");
    REQUIRE(inf["decision"]["witness"]["vertices"].size() == 4);
  }
}

TEST_CASE("check-finite and rep-finite verdicts and exit codes") {
  auto odd = file_for(corpus::double_cycle(3));
  REQUIRE(cli::run("check-finite " + odd).exit_code == 0);
  auto rep = cli::run("rep-finite " + odd);
  REQUIRE(rep.exit_code == 3);
  REQUIRE_THAT(rep.out, ContainsSubstring("representation-finite: no"));
  REQUIRE_THAT(rep.out, ContainsSubstring("NotDynkin(cycle)"));

  auto even = cli::run("check-finite " + file_for(corpus::double_cycle(4)));
  REQUIRE(even.exit_code == 3);
  REQUIRE_THAT(even.out, ContainsSubstring("tau-rigid-finite: no"));

  auto fin = cli::run("rep-finite " + file_for(corpus::double_path(2)));
  REQUIRE(fin.exit_code == 0);
  REQUIRE_THAT(fin.out, ContainsSubstring("component {1+ 2-}: A2"));
}

TEST_CASE("separated command round trips") {
  auto file = file_for(corpus::double_path(2));
  auto r = cli::run("separated " + file);
  REQUIRE(r.exit_code == 0);
  auto qs = taurig::parse_quiver(r.out);
  REQUIRE(qs == taurig::separated_quiver(corpus::double_path(2)));

  auto dot = cli::run("separated --dot " + file);
  REQUIRE_THAT(dot.out, ContainsSubstring("digraph quiver {"));
  REQUIRE_THAT(dot.out, ContainsSubstring("\"1+\" -> \"2-\""));
}

TEST_CASE("roots command") {
  auto file = file_for(corpus::a2());
  auto r = cli::run("roots " + file);
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out, ContainsSubstring("type: A2"));
  REQUIRE_THAT(r.out, ContainsSubstring("roots: 3"));
  REQUIRE_THAT(r.out, ContainsSubstring("d=(1,0) n=(1,0) m=(0,1) sincere=no"));
  REQUIRE_THAT(r.out, ContainsSubstring("d=(1,1) n=(1,0) m=(0,0) sincere=yes"));
  REQUIRE_THAT(r.out, ContainsSubstring("sincere: 1"));

  SECTION("json") {
    auto j = json::parse(cli::run("roots --json " + file).out);
    REQUIRE(j["type"] == "A2");
    REQUIRE(j["roots"].size() == 3);
    REQUIRE(j["sincere"] == 1);
  }
  SECTION("non-Dynkin input exits 2") {
    REQUIRE(cli::run("roots " + file_for(corpus::loops(1))).exit_code == 2);
    REQUIRE(cli::run("roots " + file_for(corpus::double_path(2))).exit_code == 2);
  }
}

TEST_CASE("oracle command") {
  auto file = file_for(corpus::double_path(2));
  auto r = cli::run("oracle --crosscheck " + file);
  REQUIRE(r.exit_code == 0);
  REQUIRE_THAT(r.out, ContainsSubstring("complete: yes"));
  REQUIRE_THAT(r.out, ContainsSubstring("classes: 4"));
  REQUIRE_THAT(r.out, ContainsSubstring("tau-rigid within bounds: 4"));
  REQUIRE_THAT(r.out, ContainsSubstring("count via subquiver formula: 4 (matches)"));

  SECTION("json") {
    auto j = json::parse(cli::run("oracle --crosscheck --json " + file).out);
    REQUIRE(j["oracle"]["complete"] == true);
    REQUIRE(j["oracle"]["classes"].size() == 4);
    for (const auto& c : j["oracle"]["classes"]) {
      REQUIRE(c["tau_rigid"] == true);
      REQUIRE(c["crosscheck"] == "agree");
    }
    REQUIRE(j["oracle"]["count"] == 4);
    REQUIRE(j["oracle"]["matches_count"] == true);
    REQUIRE(j["params"]["field"] == 2);
  }
  SECTION("bounds flags show up and tight bounds stay complete") {
    auto b = cli::run("oracle --max-total-dim 3 --max-per-vertex 1 " + file);
    REQUIRE_THAT(b.out, ContainsSubstring("bounds: per-vertex 1, total 3"));
    REQUIRE_THAT(b.out, ContainsSubstring("complete: yes"));
  }
  SECTION("incomplete bounds skip the formula comparison") {
    auto loop = file_for(corpus::loops(1));
    auto b = cli::run("oracle --max-per-vertex 1 " + loop);
    REQUIRE_THAT(b.out, ContainsSubstring("complete: no"));
    REQUIRE_THAT(b.out, ContainsSubstring("classes: 1"));
    REQUIRE_THAT(b.out, !ContainsSubstring("count via subquiver formula"));
  }
}

TEST_CASE("deterministic output") {
  auto file = file_for(corpus::double_path(3));
  auto a = cli::run("count --json --breakdown " + file);
  auto b = cli::run("count --json --breakdown " + file);
  REQUIRE(a.out == b.out);

  auto d4 = file_for(corpus::d4_subspace());
  REQUIRE(cli::run("roots --json " + d4).out == cli::run("roots --json " + d4).out);
}

TEST_CASE("seed and field plumbing") {
  auto file = file_for(corpus::a2());
  SECTION("seed from flag") {
    auto j = json::parse(cli::run("count --json --seed 9 " + file).out);
    REQUIRE(j["params"]["seed"] == 9);
  }
  SECTION("seed from environment") {
    auto j = json::parse(cli::run("count --json " + file, "TAURIG_SEED=123 ").out);
    REQUIRE(j["params"]["seed"] == 123);
  }
  SECTION("flag beats environment") {
    auto j = json::parse(cli::run("count --json --seed 7 " + file, "TAURIG_SEED=123 ").out);
    REQUIRE(j["params"]["seed"] == 7);
  }
  SECTION("invalid environment seed") {
    REQUIRE(cli::run("count " + file, "TAURIG_SEED=abc ").exit_code == 1);
  }
  SECTION("field must be prime") {
    REQUIRE(cli::run("count --field 6 " + file).exit_code == 2);
    REQUIRE(cli::run("count --field 101 " + file).exit_code == 0);
  }
  SECTION("counts agree across fields and seeds") {
    auto base = json::parse(cli::run("count --json " + file).out);
    auto other = json::parse(cli::run("count --json --field 101 --seed 5 " + file).out);
    REQUIRE(base["count"] == other["count"]);
  }
}

TEST_CASE("input failures") {
  REQUIRE(cli::run("count /nonexistent/path.quiver").exit_code == 1);
  auto bad = cli::temp_quiver_file("vertex a\nfrob b\n");
  REQUIRE(cli::run("count " + bad).exit_code == 1);
  auto empty = cli::temp_quiver_file("# only comments\n");
  REQUIRE(cli::run("check-finite " + empty).exit_code == 1);
  REQUIRE(cli::run("").exit_code != 0);
  REQUIRE(cli::run("count").exit_code != 0);
}
