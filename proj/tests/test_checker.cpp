#include <chrono>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "wpo/bench.hpp"
#include "wpo/checker.hpp"
#include "wpo/deadline.hpp"
#include "wpo/orders.hpp"
#include "wpo/term.hpp"

using wpo::BasePair;
using wpo::certify;
using wpo::Deadline;
using wpo::Engine;
using wpo::engine_name;
using wpo::format_report;
using wpo::gen_family;
using wpo::make_order_config;
using wpo::OrderConfig;
using wpo::OrderKind;
using wpo::orient_trs;
using wpo::OrientationReport;
using wpo::Precedence;
using wpo::report_to_csv;
using wpo::Rule;
using wpo::Term;
using wpo::Trs;

namespace {

// Mirrors configs/rpo.cfg and configs/wpo.cfg.
Precedence family_precedence() {
  return Precedence{{{"f", 3}, {"g", 2}, {"h", 2}, {"s", 1}}};
}

OrderConfig family_rpo() {
  return make_order_config(OrderKind::Rpo, family_precedence(), BasePair::trivial());
}

OrderConfig family_wpo() {
  return make_order_config(OrderKind::Wpo, family_precedence(),
                           BasePair::sum_weight(1, {{"f", 1}, {"g", 0}, {"h", 0}, {"s", 0}}, 0));
}

Trs single_rule_trs(const std::string& text) {
  return wpo::parse_trs(text);
}

}  // namespace

TEST_CASE("engine names") {
  CHECK(engine_name(Engine::Naive) == "naive");
  CHECK(engine_name(Engine::Memoized) == "memoized");
}

TEST_CASE("the empty system is certified") {
  const Trs trs = wpo::parse_trs("(VAR x)\n(RULES\n)\n");
  for (const Engine e : {Engine::Naive, Engine::Memoized}) {
    const OrientationReport report = orient_trs(family_rpo(), trs, e);
    CHECK(report.certified);
    CHECK_FALSE(report.timed_out);
    CHECK(report.rules.empty());
  }
  CHECK(certify(family_rpo(), trs));
}

TEST_CASE("embedding a variable into itself fails") {
  const Trs trs = single_rule_trs("(VAR x)\n(RULES\nx -> f(x)\n)\n");
  const OrientationReport report = orient_trs(family_rpo(), trs, Engine::Memoized);
  REQUIRE(report.rules.size() == 1);
  CHECK_FALSE(report.rules[0].strict);
  CHECK_FALSE(report.certified);
  CHECK_FALSE(report.timed_out);
  CHECK_FALSE(certify(family_rpo(), trs));
}

TEST_CASE("variable duplication defeats the weighted base") {
  // weight(f(x)) = 2 = weight(g(x,x)) but x occurs twice on the right.
  const OrderConfig cfg = make_order_config(
      OrderKind::Wpo, Precedence{{{"f", 1}, {"g", 0}}}, BasePair::sum_weight(1, {{"f", 1}}, 0));
  const Trs trs = single_rule_trs("(VAR x)\n(RULES\nf(x) -> g(x,x)\n)\n");
  const OrientationReport report = orient_trs(cfg, trs, Engine::Memoized);
  REQUIRE(report.rules.size() == 1);
  CHECK_FALSE(report.rules[0].strict);
  CHECK_FALSE(report.rules[0].nonstrict);
  CHECK_FALSE(report.certified);
}

TEST_CASE("the generated family is certified by both engines and orders") {
  const Trs trs = gen_family(10, 20250825);
  REQUIRE(trs.rules.size() == 12);
  for (const OrderConfig& cfg : {family_rpo(), family_wpo()}) {
    for (const Engine e : {Engine::Naive, Engine::Memoized}) {
      const OrientationReport report = orient_trs(cfg, trs, e);
      CHECK(report.certified);
      CHECK_FALSE(report.timed_out);
      REQUIRE(report.rules.size() == 12);
      for (const auto& v : report.rules) {
        CHECK(v.strict);
        CHECK(v.nonstrict);
        CHECK(v.calls >= 1);
      }
    }
  }
  CHECK(certify(family_rpo(), trs));
  CHECK(certify(family_wpo(), trs));
}

TEST_CASE("certification survives rule removal") {
  const Trs full = gen_family(8, 7);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    Trs sub = full;
    sub.rules.clear();
    for (const Rule& r : full.rules) {
      if (rng() % 2 == 0) sub.rules.push_back(r);
    }
    CHECK(certify(family_rpo(), sub));
    CHECK(certify(family_wpo(), sub));
  }
}

TEST_CASE("both engines agree on random systems") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 60; ++i) {
    const OrderConfig cfg = wpo::testing::random_config(rng);
    Trs trs;
    trs.signature.insert(wpo::testing::test_signature().begin(),
                         wpo::testing::test_signature().end());
    trs.variables.insert(wpo::testing::test_vars().begin(), wpo::testing::test_vars().end());
    const std::size_t count = 1 + rng() % 4;
    for (std::size_t k = 0; k < count; ++k) {
      trs.rules.push_back(
          {wpo::testing::random_term(rng, 3, 10), wpo::testing::random_term(rng, 3, 10)});
    }
    const OrientationReport a = orient_trs(cfg, trs, Engine::Naive);
    const OrientationReport b = orient_trs(cfg, trs, Engine::Memoized);
    CHECK(a.certified == b.certified);
    REQUIRE(a.rules.size() == b.rules.size());
    bool all_strict = true;
    for (std::size_t k = 0; k < a.rules.size(); ++k) {
      CHECK(a.rules[k].strict == b.rules[k].strict);
      CHECK(a.rules[k].nonstrict == b.rules[k].nonstrict);
      all_strict = all_strict && a.rules[k].strict;
    }
    CHECK(a.certified == all_strict);
  }
}

TEST_CASE("a deadline aborts the naive engine on a deep chain instance") {
  const Trs trs = gen_family(40, 20250825);
  const auto t0 = std::chrono::steady_clock::now();
  const OrientationReport report = orient_trs(family_rpo(), trs, Engine::Naive,
                                              Deadline::after_ms(50));
  const auto elapsed = std::chrono::steady_clock::now() - t0;
  CHECK(report.timed_out);
  CHECK_FALSE(report.certified);
  CHECK(report.rules.size() < trs.rules.size());
  CHECK(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() < 5000);
}

TEST_CASE("an expired deadline aborts the memoized engine immediately") {
  const Trs trs = gen_family(10, 20250825);
  const OrientationReport report = orient_trs(family_wpo(), trs, Engine::Memoized,
                                              Deadline::after(std::chrono::nanoseconds(0)));
  CHECK(report.timed_out);
  CHECK_FALSE(report.certified);
}

TEST_CASE("report formatting") {
  const Trs trs = single_rule_trs("(VAR x y)\n(RULES\nf(x,y) -> x\n)\n");
  const OrientationReport report = orient_trs(family_rpo(), trs, Engine::Memoized);

  const std::string text = format_report(report);
  CHECK(text.find("f(x,y) -> x") != std::string::npos);
  CHECK(text.find("strict=true") != std::string::npos);
  CHECK(text.find("certified=true") != std::string::npos);

  const std::string csv = report_to_csv(report);
  std::istringstream lines(csv);
  std::string header;
  REQUIRE(std::getline(lines, header));
  CHECK(header == "rule,lhs,rhs,strict,nonstrict,calls,wall_ns");
  std::string row;
  std::size_t rows = 0;
  while (std::getline(lines, row)) {
    if (!row.empty()) ++rows;
  }
  CHECK(rows == report.rules.size());
}
