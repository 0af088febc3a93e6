#pragma once

#include <cstdint>
#include <utility>

#include "wpo/deadline.hpp"
#include "wpo/orders.hpp"
#include "wpo/term.hpp"

namespace wpo {

// Instrumentation for the reference engine: number of entries into the
// recursive comparison (one per (sub)term pair evaluation, no sharing).
struct RefStats {
  std::uint64_t calls = 0;
};

// Direct recursive WPO. Deliberately unmemoized: identical subcomparisons
// are recomputed, which blows up exponentially on self-similar inputs.
// Serves as the ground-truth oracle for the memoized engine.
CompareResult wpo_naive(const OrderConfig& cfg, const Term& s, const Term& t);

std::pair<CompareResult, RefStats> wpo_naive_counted(const OrderConfig& cfg, const Term& s,
                                                     const Term& t,
                                                     const Deadline& deadline = {});

}  // namespace wpo
