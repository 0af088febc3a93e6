#include "wpo/bench.hpp"

#include <chrono>
#include <ostream>
#include <stdexcept>

namespace wpo {

std::pair<Term, Term> gen_example1(std::size_t n) {
  Term t = Term::var("x");
  for (std::size_t i = 0; i < n + 1; ++i) t = Term::app("f", {std::move(t)});
  return {t, t};
}

namespace {

// Knuth's MMIX linear congruential generator; documented in the README so
// generated families are reproducible from (n, seed) alone.
constexpr std::uint64_t kLcgMul = 6364136223846793005ull;
constexpr std::uint64_t kLcgAdd = 1442695040888963407ull;

std::uint64_t lcg_next(std::uint64_t state) { return state * kLcgMul + kLcgAdd; }

// Chain c_1(c_2(...c_n(x)...)) with c_k = g when the k-th draw's top bit
// is clear, h otherwise.
Term gen_chain(std::size_t n, std::uint64_t seed, const Term& leaf) {
  std::vector<std::string> symbols;
  symbols.reserve(n);
  std::uint64_t state = seed;
  for (std::size_t k = 0; k < n; ++k) {
    state = lcg_next(state);
    symbols.push_back((state >> 63) == 0 ? "g" : "h");
  }
  Term t = leaf;
  for (std::size_t k = n; k-- > 0;) t = Term::app(symbols[k], {std::move(t)});
  return t;
}

Term parse(const std::string& s, const std::set<std::string>& vars) {
  return parse_term(s, vars);
}

}  // namespace

Trs gen_family(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_family: n must be at least 1");

  const std::set<std::string> vars{"x", "y"};
  Trs trs;
  trs.variables = vars;

  const char* fixed[][2] = {
      {"f(x,y)", "x"},          {"f(x,y)", "y"},          {"g(g(x))", "g(x)"},
      {"h(h(x))", "h(x)"},      {"s(s(x))", "s(x)"},      {"f(g(x),y)", "g(f(x,y))"},
      {"f(s(x),y)", "s(f(x,y))"}, {"f(x,s(y))", "f(x,y)"}, {"g(f(x,y))", "s(x)"},
      {"h(f(x,y))", "s(y)"},    {"f(h(x),y)", "h(f(x,y))"},
  };
  for (const auto& [lhs, rhs] : fixed) {
    trs.rules.push_back(Rule{parse(lhs, vars), parse(rhs, vars)});
  }

  const Term chain = gen_chain(n, seed, Term::var("x"));
  const Term lhs = Term::app("f", {chain, parse("g(s(y))", vars)});
  const Term rhs = Term::app("f", {chain, parse("s(s(g(y)))", vars)});
  trs.rules.push_back(Rule{lhs, rhs});

  trs.signature = Signature{{"f", 2}, {"g", 1}, {"h", 1}, {"s", 1}};
  return trs;
}

std::string order_kind_name(OrderKind kind) { return kind == OrderKind::Wpo ? "wpo" : "rpo"; }

std::vector<BenchRow> run_scaling(const std::vector<std::size_t>& ns,
                                  const std::vector<Engine>& engines,
                                  const std::vector<OrderConfig>& cfgs, std::uint64_t seed,
                                  std::uint64_t timeout_ms) {
  std::vector<BenchRow> rows;
  rows.reserve(ns.size() * engines.size() * cfgs.size());
  for (const std::size_t n : ns) {
    const Trs trs = gen_family(n, seed);
    for (const Engine engine : engines) {
      for (const OrderConfig& cfg : cfgs) {
        const Deadline deadline = timeout_ms == 0 ? Deadline{} : Deadline::after_ms(timeout_ms);
        const auto start = std::chrono::steady_clock::now();
        const OrientationReport report = orient_trs(cfg, trs, engine, deadline);
        const auto elapsed = std::chrono::steady_clock::now() - start;

        BenchRow row;
        row.n = n;
        row.engine = engine_name(engine);
        row.order_kind = order_kind_name(cfg.kind);
        row.wall_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count());
        for (const RuleVerdict& v : report.rules) row.calls += v.calls;
        row.certified = report.certified;
        row.timed_out = report.timed_out;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "n,engine,order_kind,wall_ns,calls,certified,timed_out\n";
  for (const BenchRow& row : rows) {
    os << row.n << ',' << row.engine << ',' << row.order_kind << ',' << row.wall_ns << ','
       << row.calls << ',' << (row.certified ? "true" : "false") << ','
       << (row.timed_out ? "true" : "false") << '\n';
  }
}

}  // namespace wpo
