#include "wpo/reference.hpp"

namespace wpo {

namespace {

struct NaiveRun {
  const OrderConfig& cfg;
  const Deadline& deadline;
  std::uint64_t calls = 0;

  // The recursive case analysis. Case order: base strict; base-nonstrict
  // gate; some argument of s nonstrictly above t; variable cases; head
  // symbols (precedence, then lexicographic arguments); finally s strictly
  // above every argument of t. The head comparison runs before the
  // all-arguments check and a dead head skips it — same verdicts, since
  // the application case needs both.
  CompareResult compare(const Term& s, const Term& t) {
    ++calls;
    if (deadline.active()) deadline.check();

    const CompareResult base = base_compare(cfg.base, s, t);
    if (base.strict) return {true, true};
    if (!base.nonstrict) return {false, false};

    if (s.is_app()) {
      for (const Term& si : s.args()) {
        if (compare(si, t).nonstrict) return {true, true};
      }
    }

    if (s.is_var() && t.is_var()) return {false, s.name() == t.name()};
    if (s.is_var() || t.is_var()) return {false, false};

    CompareResult head{false, false};
    if (prec_gt(cfg.precedence, s.name(), t.name())) {
      head = {true, true};
    } else if (s.name() == t.name() && s.arity() == t.arity()) {
      head = lex_ext([this](const Term& a, const Term& b) { return compare(a, b); }, s.args(),
                     t.args());
    }
    if (!head.nonstrict) return {false, false};

    for (const Term& tj : t.args()) {
      if (!compare(s, tj).strict) return {false, false};
    }
    return head;
  }
};

}  // namespace

CompareResult wpo_naive(const OrderConfig& cfg, const Term& s, const Term& t) {
  return wpo_naive_counted(cfg, s, t).first;
}

std::pair<CompareResult, RefStats> wpo_naive_counted(const OrderConfig& cfg, const Term& s,
                                                     const Term& t, const Deadline& deadline) {
  NaiveRun run{cfg, deadline};
  const CompareResult result = run.compare(s, t);
  return {result, RefStats{run.calls}};
}

}  // namespace wpo
