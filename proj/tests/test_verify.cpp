#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <unistd.h>

#include "cache.hpp"
#include "verify.hpp"
#include "version.hpp"

using namespace rrps;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string &tag) {
  fs::path d = fs::temp_directory_path() /
               ("rrps_test_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("command names round-trip") {
  for (Command c : {Command::character, Command::exactness, Command::recursion,
                    Command::hilbert, Command::identities, Command::all})
    CHECK(command_from_name(command_name(c)) == c);
  CHECK_FALSE(command_from_name("verify").has_value());
  CHECK_FALSE(command_from_name("").has_value());
}

TEST_CASE("run rejects bad configs") {
  RunConfig cfg;
  cfg.command = Command::identities;
  cfg.max_weight = 5;
  cfg.jobs = 0;
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
  cfg.jobs = 1;
  cfg.format = "yaml";
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
  cfg.format = "text";
  cfg.max_charge = -1;
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("character run: series, checks, and report fields") {
  RunConfig cfg;
  cfg.command = Command::character;
  cfg.module = Label::vacuum;
  cfg.max_charge = 3;
  cfg.max_weight = 10;
  Report rep = run(cfg);
  CHECK(rep.passed());
  CHECK(rep.command == "character");
  CHECK(rep.version == kVersion);
  REQUIRE(rep.series.has_value());
  CHECK(*rep.series == rr_sum(0, 40, 3));
  REQUIRE(rep.checks.size() == 2);
  CHECK(rep.checks[0].name == "vacuum-dimension-matches-gap-count");
  CHECK(rep.checks[1].name == "vacuum-character-matches-sum-side");

  cfg.module = Label::charged;
  Report rep1 = run(cfg);
  CHECK(rep1.passed());
  REQUIRE(rep1.series.has_value());
  CHECK(*rep1.series == rr_sum(1, 40, 3).offset(1, 1));
  CHECK(rep1.checks[0].name == "charged-dimension-matches-gap-count");
}

TEST_CASE("operator sweeps pass on a small window") {
  CHECK(check_square_zero(12).pass);
  CHECK(check_mode_translation(12, -3, 3).pass);
  CHECK(check_o_commutes(12, -3, 2).pass);
}

TEST_CASE("exactness run assembles its full check list") {
  RunConfig cfg;
  cfg.command = Command::exactness;
  cfg.max_charge = 2;
  cfg.max_weight = 6;
  Report rep = run(cfg);
  CHECK(rep.passed());
  CHECK_FALSE(rep.series.has_value());
  std::vector<std::string> names;
  for (const auto &c : rep.checks) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{
                     "square-sum-vanishes", "mode-translation-relation",
                     "o-commutes-with-modes", "exactness-composite-zero",
                     "exactness-left-injective", "exactness-right-surjective",
                     "exactness-middle-kernel", "shift-relation-dimensions",
                     "euler-identity-characters", "character-recursion-corollary"});
}

TEST_CASE("recursion and identities runs") {
  RunConfig cfg;
  cfg.command = Command::recursion;
  cfg.max_weight = 30;
  Report rep = run(cfg);
  CHECK(rep.passed());
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].name == "recursion-residual-zero");

  cfg.command = Command::identities;
  Report rep2 = run(cfg);
  CHECK(rep2.passed());
  REQUIRE(rep2.checks.size() == 2);
  CHECK(rep2.checks[0].name == "product-identity-residues-1-4");
  CHECK(rep2.checks[1].name == "product-identity-residues-2-3");
}

TEST_CASE("hilbert run cross-checks the quotient against the module") {
  RunConfig cfg;
  cfg.command = Command::hilbert;
  cfg.max_charge = 2;
  cfg.max_weight = 8;
  Report rep = run(cfg);
  CHECK(rep.passed());
  REQUIRE(rep.series.has_value());
  CHECK(rep.series->coeff({4, 24}) == 2);
  std::vector<std::string> names;
  for (const auto &c : rep.checks) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"hilbert-matches-character",
                                          "relation-shift-identity",
                                          "ideal-shift-into-ideal",
                                          "ideal-shift-preimage"});
}

TEST_CASE("the all run is the union of the others") {
  RunConfig cfg;
  cfg.command = Command::all;
  cfg.max_charge = 2;
  cfg.max_weight = 5;
  Report rep = run(cfg);
  CHECK(rep.passed());
  CHECK_FALSE(rep.series.has_value());
  CHECK(rep.checks.size() == 21);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  RunConfig cfg;
  cfg.command = Command::character;
  cfg.max_charge = 2;
  cfg.max_weight = 8;
  cfg.jobs = 1;
  Report a = run(cfg);
  cfg.jobs = 4;
  Report b = run(cfg);
  a.elapsed_ms = 0;
  b.elapsed_ms = 0;
  CHECK(a.render("json") == b.render("json"));
  CHECK(a.render("csv") == b.render("csv"));
  CHECK(a.render("text") == b.render("text"));
}

TEST_CASE("json report schema") {
  RunConfig cfg;
  cfg.command = Command::identities;
  cfg.max_charge = 0;
  cfg.max_weight = 20;
  Report rep = run(cfg);
  auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["command"] == "identities");
  CHECK(j["config"]["max_charge"] == 0);
  CHECK(j["config"]["max_weight"] == 20);
  CHECK(j["config"]["cache_dir"].is_null());
  CHECK_FALSE(j["config"].contains("jobs"));
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][0]["counterexample"].is_null());
  CHECK(j["series"].is_null());
  CHECK(j["version"] == kVersion);
  CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("failing checks render with their counterexample") {
  Report rep;
  rep.command = "character";
  rep.module = Label::vacuum;
  rep.max_charge = 1;
  rep.max_weight = 1;
  rep.version = kVersion;
  rep.checks.push_back(
      CheckOutcome::fail("vacuum-dimension-matches-gap-count", Bidegree{2, 4},
                         "dim 7 != gap-partition count 1, see \"notes\""));
  CHECK_FALSE(rep.passed());

  auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["checks"][0]["status"] == "fail");
  CHECK(j["checks"][0]["counterexample"]["charge2"] == 2);
  CHECK(j["checks"][0]["counterexample"]["weight4"] == 4);
  CHECK(j["checks"][0]["counterexample"]["detail"] ==
        "dim 7 != gap-partition count 1, see \"notes\"");

  std::string text = rep.to_text();
  CHECK(text.find("FAIL vacuum-dimension-matches-gap-count at (2/2, 4/4)") !=
        std::string::npos);
  CHECK(text.find("result: FAILED") != std::string::npos);

  // commas and quotes in the detail stay inside one quoted csv field
  std::string csv = rep.to_csv();
  CHECK(csv.find("vacuum-dimension-matches-gap-count,fail,\"at (2/2, 4/4): dim 7 != "
                 "gap-partition count 1, see \"\"notes\"\"\"") != std::string::npos);
}

TEST_CASE("csv dimension table, exact bytes") {
  RunConfig cfg;
  cfg.command = Command::character;
  cfg.max_charge = 1;
  cfg.max_weight = 2;
  Report rep = run(cfg);
  CHECK(rep.to_csv() ==
        "label,charge2,weight4,dim\n"
        "vacuum,0,0,1\n"
        "vacuum,2,4,1\n"
        "vacuum,2,8,1\n");

  cfg.command = Command::hilbert;
  Report h = run(cfg);
  CHECK(h.to_csv() ==
        "label,charge2,weight4,dim\n"
        "hilbert,0,0,1\n"
        "hilbert,2,4,1\n"
        "hilbert,2,8,1\n");
}

TEST_CASE("render rejects unknown formats") {
  Report rep;
  CHECK_THROWS_AS(rep.render("xml"), std::invalid_argument);
}

TEST_CASE("component store round-trips through the disk cache") {
  fs::path dir = fresh_dir("cache");
  Bidegree bd{4, 24};
  {
    ComponentStore store(dir);
    auto b = store.get(Label::vacuum, bd);
    CHECK(b->dim == 2);
    CHECK(fs::exists(store.entry_path(Label::vacuum, bd)));
  }
  {
    // fresh store, same directory: the entry is loaded, not recomputed,
    // and carries the same reduced basis
    ComponentStore store(dir);
    auto b = store.get(Label::vacuum, bd);
    CHECK(b->dim == 2);
    CHECK(b->spanning.empty());  // not persisted
    CHECK(component_to_json(*b, kVersion) ==
          component_to_json(*ComponentStore().get(Label::vacuum, bd), kVersion));
  }
  fs::remove_all(dir);
}

TEST_CASE("corrupt cache entries are recomputed and rewritten") {
  fs::path dir = fresh_dir("corrupt");
  Bidegree bd{2, 8};
  ComponentStore first(dir);
  first.get(Label::vacuum, bd);
  auto path = first.entry_path(Label::vacuum, bd);
  {
    std::ofstream out(path, std::ios::trunc);
    out << "not json at all";
  }
  ComponentStore second(dir);
  auto b = second.get(Label::vacuum, bd);  // warns on stderr, recomputes
  CHECK(b->dim == 1);
  // the rewritten entry parses again
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(component_from_json(text, kVersion).dim == 1);
  fs::remove_all(dir);
}

TEST_CASE("cache entries are keyed by version") {
  fs::path dir = fresh_dir("version");
  ComponentStore a(dir, "one");
  ComponentStore b(dir, "two");
  Bidegree bd{2, 4};
  a.get(Label::vacuum, bd);
  b.get(Label::vacuum, bd);
  CHECK(a.entry_path(Label::vacuum, bd) != b.entry_path(Label::vacuum, bd));
  CHECK(fs::exists(a.entry_path(Label::vacuum, bd)));
  CHECK(fs::exists(b.entry_path(Label::vacuum, bd)));
  // a version-stamped entry refuses to load under another version
  std::ifstream in(a.entry_path(Label::vacuum, bd));
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(component_from_json(text, "one").dim == 1);
  CHECK_THROWS_AS(component_from_json(text, "two"), std::invalid_argument);
  fs::remove_all(dir);
}

TEST_CASE("runs with a cache directory match runs without") {
  fs::path dir = fresh_dir("rundir");
  RunConfig cfg;
  cfg.command = Command::character;
  cfg.max_charge = 3;
  cfg.max_weight = 12;
  Report plain = run(cfg);
  cfg.cache_dir = dir.string();
  Report cold = run(cfg);
  Report warmed = run(cfg);
  CHECK(plain.passed());
  CHECK(cold.passed());
  CHECK(warmed.passed());
  plain.elapsed_ms = cold.elapsed_ms = warmed.elapsed_ms = 0;
  // cache_dir is echoed, so compare the checks payload across cache states
  CHECK(plain.to_csv() == cold.to_csv());
  CHECK(cold.to_json() == warmed.to_json());
  CHECK_FALSE(fs::is_empty(dir));
  fs::remove_all(dir);
}
