#include "wpo/checker.hpp"

#include <chrono>
#include <sstream>

namespace wpo {

OrientationReport orient_trs(const OrderConfig& cfg, const Trs& trs, Engine engine,
                             const Deadline& deadline) {
  OrientationReport report;
  report.certified = true;
  for (const Rule& rule : trs.rules) {
    RuleVerdict verdict{rule};
    const auto start = std::chrono::steady_clock::now();
    try {
      CompareResult result;
      if (engine == Engine::Naive) {
        auto [res, stats] = wpo_naive_counted(cfg, rule.lhs, rule.rhs, deadline);
        result = res;
        verdict.calls = stats.calls;
      } else {
        MemoProbe probe;
        result = wpo_mem_impl(cfg, rule.lhs, rule.rhs, &probe, deadline);
        verdict.calls = probe.stats.main_calls;
      }
      verdict.strict = result.strict;
      verdict.nonstrict = result.nonstrict;
    } catch (const TimeoutError&) {
      report.timed_out = true;
      report.certified = false;
      return report;
    }
    verdict.wall_ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                                     std::chrono::steady_clock::now() - start)
                                                     .count());
    report.certified = report.certified && verdict.strict;
    report.rules.push_back(std::move(verdict));
  }
  return report;
}

bool certify(const OrderConfig& cfg, const Trs& trs) {
  return orient_trs(cfg, trs, Engine::Memoized).certified;
}

std::string format_report(const OrientationReport& report) {
  std::ostringstream os;
  std::size_t i = 0;
  for (const RuleVerdict& v : report.rules) {
    os << "rule " << ++i << ": " << format_term(v.rule.lhs) << " -> " << format_term(v.rule.rhs)
       << "  strict=" << (v.strict ? "true" : "false")
       << " nonstrict=" << (v.nonstrict ? "true" : "false") << " calls=" << v.calls << '\n';
  }
  if (report.timed_out) os << "timed_out=true\n";
  os << "certified=" << (report.certified ? "true" : "false") << '\n';
  return os.str();
}

std::string report_to_csv(const OrientationReport& report) {
  std::ostringstream os;
  os << "rule,lhs,rhs,strict,nonstrict,calls,wall_ns\n";
  std::size_t i = 0;
  for (const RuleVerdict& v : report.rules) {
    // Terms contain commas, so the two term fields are quoted.
    os << ++i << ",\"" << format_term(v.rule.lhs) << "\",\"" << format_term(v.rule.rhs) << "\","
       << (v.strict ? "true" : "false") << ',' << (v.nonstrict ? "true" : "false") << ','
       << v.calls << ',' << v.wall_ns << '\n';
  }
  return os.str();
}

std::string engine_name(Engine e) { return e == Engine::Naive ? "naive" : "memoized"; }

}  // namespace wpo
