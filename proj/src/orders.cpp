#include "wpo/orders.hpp"

#include <utility>

namespace wpo {

bool prec_gt(const Precedence& p, const std::string& f, const std::string& g) {
  return p.rank_of(f) > p.rank_of(g);
}

BasePair BasePair::trivial() { return BasePair{}; }

BasePair BasePair::sum_weight(std::uint64_t w0, std::map<std::string, std::uint64_t> weight,
                              std::uint64_t default_weight) {
  BasePair base;
  base.kind = BaseKind::SumWeight;
  base.w0 = w0;
  base.weight = std::move(weight);
  base.default_weight = default_weight;
  return base;
}

OrderConfig make_order_config(OrderKind kind, Precedence precedence, BasePair base) {
  if (kind == OrderKind::Rpo && base.kind != BaseKind::Trivial) {
    throw std::invalid_argument("rpo requires the trivial base pair");
  }
  return OrderConfig{std::move(precedence), std::move(base), kind};
}

std::uint64_t term_weight(const BasePair& base, const Term& t) {
  if (base.kind != BaseKind::SumWeight) {
    throw std::invalid_argument("term_weight: base pair carries no weights");
  }
  if (t.is_var()) return base.w0;
  std::uint64_t w = base.weight_of(t.name());
  for (const Term& arg : t.args()) w += term_weight(base, arg);
  return w;
}

namespace {

// vars(t) contained in vars(s), counting multiplicity.
bool vars_contained(const Term& s, const Term& t) {
  const auto sv = var_multiset(s);
  for (const auto& [name, count] : var_multiset(t)) {
    auto it = sv.find(name);
    if (it == sv.end() || it->second < count) return false;
  }
  return true;
}

}  // namespace

CompareResult base_compare(const BasePair& base, const Term& s, const Term& t) {
  if (base.kind == BaseKind::Trivial) return {false, true};
  const std::uint64_t ws = term_weight(base, s);
  const std::uint64_t wt = term_weight(base, t);
  if (ws < wt || !vars_contained(s, t)) return {false, false};
  return {ws > wt, true};
}

}  // namespace wpo
