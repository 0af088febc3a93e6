// Command-line front end: compare two terms, certify a TRS, generate
// family instances, run scaling benchmarks, run the built-in self test.
//
// Exit codes: 0 = evaluated with a positive verdict (or nothing to judge),
// 1 = evaluated with a negative verdict, 2 = usage/parse/IO error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wpo/bench.hpp"
#include "wpo/checker.hpp"
#include "wpo/config.hpp"
#include "wpo/memo.hpp"
#include "wpo/reference.hpp"
#include "wpo/term.hpp"

namespace {

std::set<std::string> split_vars(const std::string& vars) {
  std::set<std::string> out;
  std::istringstream in(vars);
  std::string v;
  while (in >> v) out.insert(v);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

wpo::Engine parse_engine(const std::string& name) {
  return name == "naive" ? wpo::Engine::Naive : wpo::Engine::Memoized;
}

int cmd_compare(const std::string& config_path, const std::string& term_s,
                const std::string& term_t, const std::string& vars, const std::string& engine,
                bool stats) {
  const wpo::OrderConfig cfg = wpo::load_order_config(config_path);
  const std::set<std::string> declared = split_vars(vars);
  const wpo::Term s = wpo::parse_term(term_s, declared);
  const wpo::Term t = wpo::parse_term(term_t, declared);

  wpo::CompareResult result;
  std::string stat_line;
  if (parse_engine(engine) == wpo::Engine::Naive) {
    auto [res, ref_stats] = wpo::wpo_naive_counted(cfg, s, t);
    result = res;
    stat_line = "calls=" + std::to_string(ref_stats.calls);
  } else {
    wpo::MemoProbe probe;
    result = wpo::wpo_mem_impl(cfg, s, t, &probe);
    stat_line = "main_calls=" + std::to_string(probe.stats.main_calls) +
                " lookups=" + std::to_string(probe.stats.lookups) +
                " hits=" + std::to_string(probe.stats.hits);
  }
  std::cout << "strict=" << (result.strict ? "true" : "false")
            << " nonstrict=" << (result.nonstrict ? "true" : "false") << '\n';
  if (stats) std::cout << stat_line << '\n';
  return 0;
}

int cmd_check(const std::string& config_path, const std::string& trs_path,
              const std::string& engine, std::uint64_t timeout_ms, bool stats,
              const std::string& csv_path) {
  const wpo::OrderConfig cfg = wpo::load_order_config(config_path);
  std::vector<std::string> warnings;
  const wpo::Trs trs = wpo::parse_trs(read_file(trs_path), &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';

  const wpo::Deadline deadline =
      timeout_ms == 0 ? wpo::Deadline{} : wpo::Deadline::after_ms(timeout_ms);
  const wpo::OrientationReport report = wpo::orient_trs(cfg, trs, parse_engine(engine), deadline);

  std::cout << wpo::format_report(report);
  if (stats) {
    std::uint64_t total = 0;
    for (const auto& v : report.rules) total += v.calls;
    std::cout << "total_calls=" << total << '\n';
  }
  if (!csv_path.empty()) write_output(csv_path, wpo::report_to_csv(report));
  return report.certified ? 0 : 1;
}

int cmd_gen(std::size_t n, std::uint64_t seed, const std::string& out_path) {
  const wpo::Trs trs = wpo::gen_family(n, seed);
  write_output(out_path, wpo::format_trs(trs));
  return 0;
}

int cmd_bench(const std::vector<std::size_t>& ns, const std::vector<std::string>& engines,
              const std::vector<std::string>& config_paths, std::uint64_t seed,
              std::uint64_t timeout_ms, const std::string& csv_path) {
  std::vector<wpo::OrderConfig> cfgs;
  cfgs.reserve(config_paths.size());
  for (const std::string& path : config_paths) cfgs.push_back(wpo::load_order_config(path));
  std::vector<wpo::Engine> parsed_engines;
  parsed_engines.reserve(engines.size());
  for (const std::string& e : engines) parsed_engines.push_back(parse_engine(e));

  const std::vector<wpo::BenchRow> rows =
      wpo::run_scaling(ns, parsed_engines, cfgs, seed, timeout_ms);
  std::ostringstream csv;
  wpo::write_csv(csv, rows);
  write_output(csv_path, csv.str());
  return 0;
}

// Deterministic smoke checks over a fixed pool of terms: the memoized
// engine must agree with the reference engine everywhere, counters must
// respect their laws, and the shipped family must certify.
int cmd_selftest() {
  using namespace wpo;
  std::size_t failures = 0;
  const auto expect = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok" : "FAIL") << ": " << what << '\n';
    if (!ok) ++failures;
  };

  const std::set<std::string> vars{"x", "y"};
  std::vector<Term> pool;
  for (const char* text :
       {"x", "y", "f(x,y)", "f(y,x)", "f(x,x)", "g(x)", "g(y)", "s(x)", "s(y)", "g(s(y))",
        "s(s(g(y)))", "g(g(x))", "h(h(x))", "h(f(x,y))", "f(g(x),y)", "g(f(x,y))", "f(s(x),y)",
        "s(f(x,y))", "f(x,s(y))", "a", "f(a,a)", "g(a)", "s(g(s(x)))", "f(f(x,y),g(x))"}) {
    pool.push_back(parse_term(text, vars));
  }
  pool.push_back(gen_example1(3).first);
  pool.push_back(gen_family(6, 42).rules.back().lhs);
  pool.push_back(gen_family(6, 42).rules.back().rhs);

  std::vector<OrderConfig> cfgs;
  cfgs.push_back(make_order_config(
      OrderKind::Rpo, Precedence{{{"f", 3}, {"g", 2}, {"h", 2}, {"s", 1}}}, BasePair::trivial()));
  cfgs.push_back(make_order_config(
      OrderKind::Wpo, Precedence{{{"f", 3}, {"g", 2}, {"h", 2}, {"s", 1}}},
      BasePair::sum_weight(1, {{"f", 1}, {"g", 0}, {"h", 0}, {"s", 0}})));
  cfgs.push_back(make_order_config(OrderKind::Rpo, Precedence{{{"g", 1}}}, BasePair::trivial()));

  bool oracle_ok = true;
  bool bound_ok = true;
  bool law_ok = true;
  for (const OrderConfig& cfg : cfgs) {
    for (const Term& s : pool) {
      for (const Term& t : pool) {
        MemoProbe probe;
        const CompareResult fast = wpo_mem_impl(cfg, s, t, &probe);
        const CompareResult slow = wpo_naive(cfg, s, t);
        oracle_ok = oracle_ok && fast == slow && (!fast.strict || fast.nonstrict);
        bound_ok = bound_ok && probe.stats.main_calls <= size(s) * size(t);
        law_ok = law_ok && probe.stats.hits <= probe.stats.lookups &&
                 probe.stats.main_calls == probe.stats.lookups - probe.stats.hits;
      }
    }
  }
  expect(oracle_ok, "memoized engine agrees with the reference engine on the term pool");
  expect(bound_ok, "main_calls within size(s)*size(t) on the term pool");
  expect(law_ok, "counter laws (hits <= lookups, main_calls = lookups - hits)");

  bool doubling_ok = true;
  std::uint64_t prev = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto [s, t] = gen_example1(n);
    const auto [res, stats] = wpo_naive_counted(cfgs[0], s, t);
    if (n > 1 && stats.calls < 2 * prev) doubling_ok = false;
    if (!(res == CompareResult{false, true})) doubling_ok = false;
    prev = stats.calls;
  }
  expect(doubling_ok, "reference-engine call count doubles on self-comparisons");

  expect(certify(cfgs[0], gen_family(10, 7)) && certify(cfgs[1], gen_family(10, 7)),
         "generated family R_10 certifies under both shipped configurations");

  if (failures == 0) {
    std::cout << "selftest: all checks passed\n";
    return 0;
  }
  std::cout << "selftest: " << failures << " check(s) failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted / recursive path order toolkit"};
  app.require_subcommand(1);
  const std::vector<std::string> engine_names{"naive", "memoized"};

  std::string config_path, term_s, term_t, vars, engine = "memoized";
  std::string trs_path, out_path, csv_path;
  bool stats = false;
  std::uint64_t seed = 0, timeout_ms = 0;
  std::size_t gen_n = 0;
  std::vector<std::size_t> ns;
  std::vector<std::string> engines;
  std::vector<std::string> config_paths;

  CLI::App* compare = app.add_subcommand("compare", "compare two terms");
  compare->add_option("s", term_s, "left term")->required();
  compare->add_option("t", term_t, "right term")->required();
  compare->add_option("--config", config_path, "order configuration file")->required();
  compare->add_option("--engine", engine, "naive|memoized")->check(CLI::IsMember(engine_names));
  compare->add_option("--vars", vars, "space-separated variable names");
  compare->add_flag("--stats", stats, "print call counters");

  CLI::App* check = app.add_subcommand("check", "orient every rule of a TRS");
  check->add_option("trs", trs_path, "TRS file")->required();
  check->add_option("--config", config_path, "order configuration file")->required();
  check->add_option("--engine", engine, "naive|memoized")->check(CLI::IsMember(engine_names));
  check->add_option("--timeout-ms", timeout_ms, "wall-clock budget, 0 = unlimited");
  check->add_option("--csv", csv_path, "write the per-rule report as CSV");
  check->add_flag("--stats", stats, "print total call count");

  CLI::App* gen = app.add_subcommand("gen", "generate a family instance R_n");
  gen->add_option("n", gen_n, "chain length (>= 1)")->required();
  gen->add_option("--seed", seed, "chain generator seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* bench = app.add_subcommand("bench", "run scaling benchmarks");
  bench->add_option("ns", ns, "family sizes to run")->required();
  bench->add_option("--config", config_paths, "order configuration file (repeatable)")
      ->required();
  bench->add_option("--engine", engines, "engine (repeatable)")
      ->check(CLI::IsMember(engine_names));
  bench->add_option("--seed", seed, "chain generator seed");
  bench->add_option("--timeout-ms", timeout_ms, "per-run budget, 0 = unlimited")
      ->default_val(600000);
  bench->add_option("--csv", csv_path, "output CSV file (default stdout)");

  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(compare)) {
      return cmd_compare(config_path, term_s, term_t, vars, engine, stats);
    }
    if (app.got_subcommand(check)) {
      return cmd_check(config_path, trs_path, engine, timeout_ms, stats, csv_path);
    }
    if (app.got_subcommand(gen)) {
      return cmd_gen(gen_n, seed, out_path);
    }
    if (app.got_subcommand(bench)) {
      if (engines.empty()) engines.push_back("memoized");
      return cmd_bench(ns, engines, config_paths, seed, timeout_ms, csv_path);
    }
    if (app.got_subcommand(selftest)) {
      return cmd_selftest();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
