#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>

#include "wpo/term.hpp"

namespace wpo {

// Paired verdict of one order comparison: (s > t, s >= t).
// Every engine maintains strict implies nonstrict.
struct CompareResult {
  bool strict = false;
  bool nonstrict = false;
  friend bool operator==(const CompareResult&, const CompareResult&) = default;
};

// Precedence on function symbols given by natural-number ranks.
// Symbols without an explicit rank get rank 0, so partial precedence
// declarations stay usable. rank(f) > rank(g) is transitive and
// well-founded by construction.
struct Precedence {
  std::map<std::string, std::uint64_t> rank;

  std::uint64_t rank_of(const std::string& name) const {
    auto it = rank.find(name);
    return it == rank.end() ? 0 : it->second;
  }
};

bool prec_gt(const Precedence& p, const std::string& f, const std::string& g);

enum class BaseKind { Trivial, SumWeight };

// Base reduction pair plugged into WPO.
//   Trivial: strict part empty, nonstrict part total (the RPO instantiation).
//   SumWeight: linear weight sum with variable-multiset containment;
//     weight(Var) = w0, weight(f(ts)) = weight(f) + sum weight(ti).
struct BasePair {
  BaseKind kind = BaseKind::Trivial;
  std::uint64_t w0 = 1;
  std::map<std::string, std::uint64_t> weight;
  std::uint64_t default_weight = 0;

  static BasePair trivial();
  static BasePair sum_weight(std::uint64_t w0, std::map<std::string, std::uint64_t> weight,
                             std::uint64_t default_weight = 0);

  std::uint64_t weight_of(const std::string& name) const {
    auto it = weight.find(name);
    return it == weight.end() ? default_weight : it->second;
  }
};

enum class OrderKind { Wpo, Rpo };

// One fully determined order instance. Rpo requires the trivial base pair.
struct OrderConfig {
  Precedence precedence;
  BasePair base;
  OrderKind kind = OrderKind::Wpo;
};

// Checked constructor: rejects Rpo combined with a nontrivial base.
OrderConfig make_order_config(OrderKind kind, Precedence precedence, BasePair base);

// Weight of a term under a SumWeight base; rejects a Trivial base.
std::uint64_t term_weight(const BasePair& base, const Term& t);

CompareResult base_compare(const BasePair& base, const Term& s, const Term& t);

// Left-to-right lexicographic extension of a paired comparison to
// equal-length argument lists: first strict position decides; a
// (false,false) position kills both flags; all-nonstrict yields (false,true).
template <typename Cmp>
CompareResult lex_ext(Cmp&& cmp, std::span<const Term> ss, std::span<const Term> ts) {
  if (ss.size() != ts.size()) {
    throw std::invalid_argument("lex_ext: argument lists differ in length");
  }
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const CompareResult head = cmp(ss[i], ts[i]);
    if (head.strict) return {true, true};
    if (!head.nonstrict) return {false, false};
  }
  return {false, true};
}

}  // namespace wpo
