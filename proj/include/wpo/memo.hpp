#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "wpo/deadline.hpp"
#include "wpo/indexed_term.hpp"
#include "wpo/orders.hpp"
#include "wpo/term.hpp"

namespace wpo {

// Memoization state of one in-flight comparison: packed (left index,
// right index) pair -> result. Keys are pair-local to the two top-level
// indexed terms; memories are never reused across term pairs.
using Memory = std::unordered_map<std::uint64_t, CompareResult>;

constexpr std::uint64_t memory_key(std::uint32_t left, std::uint32_t right) {
  return (static_cast<std::uint64_t>(left) << 32) | right;
}

constexpr std::uint32_t memory_key_left(std::uint64_t key) {
  return static_cast<std::uint32_t>(key >> 32);
}

constexpr std::uint32_t memory_key_right(std::uint64_t key) {
  return static_cast<std::uint32_t>(key & 0xffffffffu);
}

// Counters for the memoized engine. main_calls = lookups - hits holds by
// construction: every miss triggers exactly one wpo_main invocation.
struct MemoStats {
  std::uint64_t main_calls = 0;
  std::uint64_t lookups = 0;
  std::uint64_t hits = 0;
};

// Opt-in instrumentation; the production path passes nullptr and carries
// no counter overhead. after_return, when set, is invoked with the
// current memory after every wpo_mem return (hit or store).
struct MemoProbe {
  MemoStats stats;
  std::function<void(const Memory&)> after_return;
};

// Memoized comparison entry point: look up (index s, index t); on a hit
// return the stored result unchanged, on a miss run wpo_main and store.
// The result equals wpo_naive on the unindexed pair, and a valid memory
// stays valid.
CompareResult wpo_mem(const OrderConfig& cfg, Memory& mem, const IndexedTerm& s,
                      const IndexedTerm& t, MemoProbe* probe = nullptr,
                      const Deadline& deadline = {});

// One unmemoized comparison step on indexed terms. Base tests read the
// stored subterms; all recursion goes back through wpo_mem.
CompareResult wpo_main(const OrderConfig& cfg, Memory& mem, const IndexedTerm& s,
                       const IndexedTerm& t, MemoProbe* probe = nullptr,
                       const Deadline& deadline = {});

// True iff every memory entry agrees with the reference engine on the
// subterms named by its key. rli/rri are the reverse indexes of the left
// and right top-level terms; out-of-range keys raise IntegrityError.
bool check_valid_memory(const OrderConfig& cfg, const Memory& mem, const ReverseIndex& rli,
                        const ReverseIndex& rri);

// Indexes both terms and runs wpo_mem on an empty memory. Agrees with
// wpo_naive on every input, in at most size(s) * size(t) wpo_main calls.
CompareResult wpo_mem_impl(const OrderConfig& cfg, const Term& s, const Term& t,
                           MemoProbe* probe = nullptr, const Deadline& deadline = {});

// RPO as memoized WPO over the trivial base pair: base case 1 never
// applies and the case-2 gate always passes.
CompareResult rpo_mem_impl(const Precedence& p, const Term& s, const Term& t,
                           MemoProbe* probe = nullptr, const Deadline& deadline = {});

// Memory-threading combinators used by wpo_main's cases. Generic so tests
// can drive them with stub implementations and count invocations.

// Left-to-right existential: stops at the first element whose projected
// result is true; elements after the deciding one are never evaluated.
template <typename Xs, typename Convert, typename Impl, typename Project>
bool exists_mem(Memory& mem, const Xs& xs, Convert&& convert, Impl&& impl, Project&& project) {
  for (const auto& x : xs) {
    if (project(impl(mem, convert(x)))) return true;
  }
  return false;
}

// Dual of exists_mem: stops at the first projected false.
template <typename Xs, typename Convert, typename Impl, typename Project>
bool forall_mem(Memory& mem, const Xs& xs, Convert&& convert, Impl&& impl, Project&& project) {
  for (const auto& x : xs) {
    if (!project(impl(mem, convert(x)))) return false;
  }
  return true;
}

// Memory-threading lexicographic extension; same decision rule as lex_ext.
template <typename Xs, typename Impl>
CompareResult lex_ext_mem(Memory& mem, Impl&& impl, const Xs& ss, const Xs& ts) {
  if (ss.size() != ts.size()) {
    throw std::invalid_argument("lex_ext_mem: argument lists differ in length");
  }
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const CompareResult head = impl(mem, ss[i], ts[i]);
    if (head.strict) return {true, true};
    if (!head.nonstrict) return {false, false};
  }
  return {false, true};
}

}  // namespace wpo
