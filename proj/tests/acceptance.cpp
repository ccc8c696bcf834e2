// Acceptance suite: runs the "paper" verification table (published closed
// forms and strategy guarantees) criterion by criterion
// and prints one line per row. The same table backs `satgame verify`.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "satgame/verify.hpp"

using namespace satgame;

namespace {

void run_criterion(const std::string& key) {
  auto rows = run_paper_criterion(key);
  REQUIRE(!rows.empty());
  bool all = true;
  for (const auto& row : rows) {
    all = all && row.pass;
    std::printf("%s  [%s] %s — %s\n", row.pass ? "PASS" : "FAIL", row.criterion.c_str(),
                row.name.c_str(), row.detail.c_str());
    CHECK_MESSAGE(row.pass, row.criterion, ": ", row.name, " — ", row.detail);
  }
  std::printf("criterion %s: %s\n", key.c_str(), all ? "PASS" : "FAIL");
  std::fflush(stdout);
}

}  // namespace

TEST_CASE("1: odd-cycle game values on K_{2k}") { run_criterion("1-odd-cycle-values"); }

TEST_CASE("2: tree game values") { run_criterion("2-tree-values"); }

TEST_CASE("3: claw game values") { run_criterion("3-claw-values"); }

TEST_CASE("4: star-game computer check reproduction") { run_criterion("4-star-computer-check"); }

TEST_CASE("5: P_4 on K_n window") { run_criterion("5-p4-kn-window"); }

TEST_CASE("6: P_4 on K_{m,n} exact values") { run_criterion("6-p4-kmn-values"); }

TEST_CASE("7: strategy certification by best response") {
  run_criterion("7-strategy-certificates");
}

TEST_CASE("8: C_4 star-builder structural suite") { run_criterion("8-c4-builder-structure"); }

TEST_CASE("9: matching lemma, exhaustive hosts") { run_criterion("9-matching-lemma"); }

TEST_CASE("10: bound constants") { run_criterion("10-c4-bound-constant"); }

TEST_CASE("11: property suites") { run_criterion("11-property-suites"); }
