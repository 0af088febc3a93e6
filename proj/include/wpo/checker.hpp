#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wpo/deadline.hpp"
#include "wpo/memo.hpp"
#include "wpo/orders.hpp"
#include "wpo/reference.hpp"
#include "wpo/term.hpp"

namespace wpo {

enum class Engine { Naive, Memoized };

// Per-rule outcome. calls is the engine's own counter: recursive
// invocations for Naive, wpo_main invocations for Memoized. Timing is
// informational only.
struct RuleVerdict {
  Rule rule;
  bool strict = false;
  bool nonstrict = false;
  std::uint64_t calls = 0;
  std::uint64_t wall_ns = 0;
};

// Verdict for a whole TRS, rules in input order. certified is the
// conjunction of the per-rule strict flags. On a deadline hit, timed_out
// is set, certified is false, and later rules are left unevaluated.
struct OrientationReport {
  std::vector<RuleVerdict> rules;
  bool certified = false;
  bool timed_out = false;
};

// Checks lhs > rhs for every rule with the selected engine; a fresh
// memory per rule for Memoized. An unorientable rule is a negative
// verdict, not an error.
OrientationReport orient_trs(const OrderConfig& cfg, const Trs& trs, Engine engine,
                             const Deadline& deadline = {});

// Orientation verdict with the memoized engine.
bool certify(const OrderConfig& cfg, const Trs& trs);

std::string format_report(const OrientationReport& report);
std::string report_to_csv(const OrientationReport& report);

std::string engine_name(Engine e);

}  // namespace wpo
