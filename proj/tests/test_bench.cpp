#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "wpo/bench.hpp"
#include "wpo/checker.hpp"
#include "wpo/orders.hpp"
#include "wpo/term.hpp"

using wpo::BasePair;
using wpo::BenchRow;
using wpo::Engine;
using wpo::format_term;
using wpo::format_trs;
using wpo::gen_example1;
using wpo::gen_family;
using wpo::make_order_config;
using wpo::OrderConfig;
using wpo::OrderKind;
using wpo::order_kind_name;
using wpo::Precedence;
using wpo::run_scaling;
using wpo::Term;
using wpo::Trs;
using wpo::write_csv;

namespace {

OrderConfig family_rpo() {
  return make_order_config(OrderKind::Rpo, Precedence{{{"f", 3}, {"g", 2}, {"h", 2}, {"s", 1}}},
                           BasePair::trivial());
}

OrderConfig family_wpo() {
  return make_order_config(OrderKind::Wpo, Precedence{{{"f", 3}, {"g", 2}, {"h", 2}, {"s", 1}}},
                           BasePair::sum_weight(1, {{"f", 1}, {"g", 0}, {"h", 0}, {"s", 0}}, 0));
}

}  // namespace

TEST_CASE("gen_example1 builds equal unary towers") {
  SUBCASE("n = 0") {
    const auto [s, t] = gen_example1(0);
    CHECK(s == t);
    CHECK(format_term(s) == "f(x)");
    CHECK(size(s) == 2);
  }
  SUBCASE("n = 2") {
    const auto [s, t] = gen_example1(2);
    CHECK(s == t);
    CHECK(format_term(s) == "f(f(f(x)))");
    CHECK(size(s) == 4);
  }
  SUBCASE("sizes") {
    for (std::size_t n : {std::size_t{1}, std::size_t{5}, std::size_t{40}}) {
      const auto [s, t] = gen_example1(n);
      CHECK(size(s) == n + 2);
      CHECK(s == t);
    }
  }
}

TEST_CASE("order_kind_name") {
  CHECK(order_kind_name(OrderKind::Wpo) == "wpo");
  CHECK(order_kind_name(OrderKind::Rpo) == "rpo");
}

TEST_CASE("gen_family is deterministic in n and seed") {
  const Trs a = gen_family(25, 42);
  const Trs b = gen_family(25, 42);
  CHECK(format_trs(a) == format_trs(b));

  const Trs c = gen_family(25, 43);
  CHECK(format_trs(a) != format_trs(c));
  const Trs d = gen_family(24, 42);
  CHECK(format_trs(a) != format_trs(d));
}

TEST_CASE("gen_family shape") {
  const std::size_t n = 17;
  const Trs trs = gen_family(n, 99);

  CHECK(trs.signature == wpo::Signature{{"f", 2}, {"g", 1}, {"h", 1}, {"s", 1}});
  CHECK(trs.variables == std::set<std::string>{"x", "y"});
  REQUIRE(trs.rules.size() == 12);

  CHECK(format_term(trs.rules[0].lhs) == "f(x,y)");
  CHECK(format_term(trs.rules[0].rhs) == "x");
  CHECK(format_term(trs.rules[5].lhs) == "f(g(x),y)");
  CHECK(format_term(trs.rules[5].rhs) == "g(f(x,y))");

  // The parametrized rule shares one chain of n unary g/h symbols between
  // both sides, so a self-comparison of the chains is unavoidable.
  const Term& lhs = trs.rules[11].lhs;
  const Term& rhs = trs.rules[11].rhs;
  REQUIRE(lhs.is_app());
  CHECK(lhs.name() == "f");
  REQUIRE(lhs.args().size() == 2);
  REQUIRE(rhs.is_app());
  CHECK(rhs.name() == "f");
  REQUIRE(rhs.args().size() == 2);
  CHECK(lhs.args()[0] == rhs.args()[0]);
  CHECK(format_term(lhs.args()[1]) == "g(s(y))");
  CHECK(format_term(rhs.args()[1]) == "s(s(g(y)))");

  Term walk = lhs.args()[0];
  std::size_t links = 0;
  while (walk.is_app()) {
    CHECK((walk.name() == "g" || walk.name() == "h"));
    REQUIRE(walk.args().size() == 1);
    walk = walk.args()[0];
    ++links;
  }
  CHECK(links == n);
  CHECK(walk == Term::var("x"));
}

TEST_CASE("gen_family rejects n = 0") {
  CHECK_THROWS_AS(gen_family(0, 1), std::invalid_argument);
}

TEST_CASE("run_scaling sweeps the cartesian product in order") {
  const std::vector<BenchRow> rows =
      run_scaling({1, 2}, {Engine::Memoized}, {family_rpo(), family_wpo()}, 5, 0);
  REQUIRE(rows.size() == 4);

  CHECK(rows[0].n == 1);
  CHECK(rows[0].order_kind == "rpo");
  CHECK(rows[1].n == 1);
  CHECK(rows[1].order_kind == "wpo");
  CHECK(rows[2].n == 2);
  CHECK(rows[3].n == 2);

  for (const BenchRow& row : rows) {
    CHECK(row.engine == "memoized");
    CHECK(row.certified);
    CHECK_FALSE(row.timed_out);
    CHECK(row.calls >= 12);
  }
}

TEST_CASE("run_scaling reports naive timeouts as rows") {
  const std::vector<BenchRow> rows = run_scaling({40}, {Engine::Naive}, {family_rpo()}, 5, 50);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].timed_out);
  CHECK_FALSE(rows[0].certified);
  CHECK(rows[0].engine == "naive");
}

TEST_CASE("write_csv emits the fixed header and one line per row") {
  const std::vector<BenchRow> rows =
      run_scaling({1}, {Engine::Memoized, Engine::Naive}, {family_rpo()}, 5, 0);
  std::ostringstream os;
  write_csv(os, rows);

  std::istringstream lines(os.str());
  std::string header;
  REQUIRE(std::getline(lines, header));
  CHECK(header == "n,engine,order_kind,wall_ns,calls,certified,timed_out");

  std::vector<std::string> body;
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) body.push_back(line);
  }
  REQUIRE(body.size() == 2);
  CHECK(body[0].substr(0, 11) == "1,memoized,");
  CHECK(body[1].substr(0, 8) == "1,naive,");
  for (const std::string& row : body) {
    CHECK(row.find(",true,false") != std::string::npos);
  }
}
