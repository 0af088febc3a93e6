#include "wpo/memo.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "wpo/reference.hpp"

namespace wpo {

namespace {

// Per-node weight and variable-occurrence counts for one indexed term,
// computed in a single pass so the hot path never re-walks stored
// subterms. Var counts are kept as small name-sorted vectors; realistic
// inputs have a handful of distinct variables.
struct SideTables {
  std::vector<std::uint64_t> weight;
  std::vector<std::vector<std::pair<std::string, std::uint64_t>>> vars;

  void build(const BasePair& base, const IndexedTerm& node) {
    const std::uint32_t i = node.index();
    if (i >= weight.size()) {
      weight.resize(i + 1, 0);
      vars.resize(i + 1);
    }
    std::uint64_t w = 0;
    std::vector<std::pair<std::string, std::uint64_t>> vs;
    if (node.is_var()) {
      w = base.w0;
      vs.emplace_back(node.name(), 1);
    } else {
      w = base.weight_of(node.name());
      for (const IndexedTerm& arg : node.args()) {
        build(base, arg);
        w += weight[arg.index()];
        for (const auto& [name, count] : vars[arg.index()]) {
          auto it = std::lower_bound(vs.begin(), vs.end(), name,
                                     [](const auto& entry, const std::string& key) {
                                       return entry.first < key;
                                     });
          if (it != vs.end() && it->first == name) {
            it->second += count;
          } else {
            vs.insert(it, {name, count});
          }
        }
      }
    }
    weight[i] = w;
    vars[i] = std::move(vs);
  }
};

// Precomputed base comparison between nodes of the left and the right
// top-level term. Only built for SumWeight under wpo_mem_impl; the
// stand-alone wpo_main falls back to walking the stored subterms.
struct BaseCache {
  SideTables left;
  SideTables right;

  BaseCache(const BasePair& base, const IndexedTerm& s_root, const IndexedTerm& t_root) {
    left.build(base, s_root);
    right.build(base, t_root);
  }

  CompareResult compare(const IndexedTerm& s, const IndexedTerm& t) const {
    const std::uint64_t ws = left.weight[s.index()];
    const std::uint64_t wt = right.weight[t.index()];
    if (ws < wt) return {false, false};
    const auto& sv = left.vars[s.index()];
    for (const auto& [name, count] : right.vars[t.index()]) {
      auto it = std::lower_bound(
          sv.begin(), sv.end(), name,
          [](const auto& entry, const std::string& key) { return entry.first < key; });
      if (it == sv.end() || it->first != name || it->second < count) return {false, false};
    }
    return {ws > wt, true};
  }
};

class MemoEngine {
 public:
  MemoEngine(const OrderConfig& cfg, MemoProbe* probe, const Deadline& deadline)
      : cfg_(cfg), probe_(probe), deadline_(deadline) {}

  void build_cache(const IndexedTerm& s_root, const IndexedTerm& t_root) {
    if (cfg_.base.kind == BaseKind::SumWeight) {
      cache_.emplace(cfg_.base, s_root, t_root);
    }
  }

  CompareResult mem(Memory& m, const IndexedTerm& s, const IndexedTerm& t) {
    const std::uint64_t key = memory_key(s.index(), t.index());
    if (probe_ != nullptr) ++probe_->stats.lookups;
    if (auto it = m.find(key); it != m.end()) {
      if (probe_ != nullptr) {
        ++probe_->stats.hits;
        if (probe_->after_return) probe_->after_return(m);
      }
      return it->second;
    }
    const CompareResult result = main(m, s, t);
    m.emplace(key, result);
    if (probe_ != nullptr && probe_->after_return) probe_->after_return(m);
    return result;
  }

  // Same case analysis and order as the reference engine; arguments are
  // compared through mem only.
  CompareResult main(Memory& m, const IndexedTerm& s, const IndexedTerm& t) {
    if (probe_ != nullptr) ++probe_->stats.main_calls;
    if (deadline_.active()) deadline_.check();

    const CompareResult base =
        cache_ ? cache_->compare(s, t) : base_compare(cfg_.base, s.stored(), t.stored());
    if (base.strict) return {true, true};
    if (!base.nonstrict) return {false, false};

    if (s.is_app()) {
      const bool some_arg_ge = exists_mem(
          m, s.args(), [](const IndexedTerm& si) { return &si; },
          [&](Memory& mm, const IndexedTerm* si) { return mem(mm, *si, t); },
          [](const CompareResult& r) { return r.nonstrict; });
      if (some_arg_ge) return {true, true};
    }

    if (s.is_var() && t.is_var()) return {false, s.name() == t.name()};
    if (s.is_var() || t.is_var()) return {false, false};

    CompareResult head{false, false};
    if (prec_gt(cfg_.precedence, s.name(), t.name())) {
      head = {true, true};
    } else if (s.name() == t.name() && s.args().size() == t.args().size()) {
      head = lex_ext_mem(
          m, [&](Memory& mm, const IndexedTerm& a, const IndexedTerm& b) { return mem(mm, a, b); },
          s.args(), t.args());
    }
    if (!head.nonstrict) return {false, false};

    const bool all_args_lt = forall_mem(
        m, t.args(), [](const IndexedTerm& tj) { return &tj; },
        [&](Memory& mm, const IndexedTerm* tj) { return mem(mm, s, *tj); },
        [](const CompareResult& r) { return r.strict; });
    return all_args_lt ? head : CompareResult{false, false};
  }

 private:
  const OrderConfig& cfg_;
  MemoProbe* probe_;
  const Deadline& deadline_;
  std::optional<BaseCache> cache_;
};

}  // namespace

CompareResult wpo_mem(const OrderConfig& cfg, Memory& mem, const IndexedTerm& s,
                      const IndexedTerm& t, MemoProbe* probe, const Deadline& deadline) {
  MemoEngine engine(cfg, probe, deadline);
  return engine.mem(mem, s, t);
}

CompareResult wpo_main(const OrderConfig& cfg, Memory& mem, const IndexedTerm& s,
                       const IndexedTerm& t, MemoProbe* probe, const Deadline& deadline) {
  MemoEngine engine(cfg, probe, deadline);
  return engine.main(mem, s, t);
}

bool check_valid_memory(const OrderConfig& cfg, const Memory& mem, const ReverseIndex& rli,
                        const ReverseIndex& rri) {
  for (const auto& [key, value] : mem) {
    const std::uint32_t i = memory_key_left(key);
    const std::uint32_t j = memory_key_right(key);
    if (i >= rli.size() || j >= rri.size()) {
      throw IntegrityError("memory key (" + std::to_string(i) + "," + std::to_string(j) +
                           ") outside the reverse indexes");
    }
    if (!(wpo_naive(cfg, rli[i], rri[j]) == value)) return false;
  }
  return true;
}

CompareResult wpo_mem_impl(const OrderConfig& cfg, const Term& s, const Term& t, MemoProbe* probe,
                           const Deadline& deadline) {
  const IndexedTerm is = index_term(s);
  const IndexedTerm it = index_term(t);
  MemoEngine engine(cfg, probe, deadline);
  engine.build_cache(is, it);
  Memory mem;
  mem.reserve(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(size(s)) * static_cast<std::uint64_t>(size(t)), 1u << 21));
  return engine.mem(mem, is, it);
}

CompareResult rpo_mem_impl(const Precedence& p, const Term& s, const Term& t, MemoProbe* probe,
                           const Deadline& deadline) {
  const OrderConfig cfg = make_order_config(OrderKind::Rpo, p, BasePair::trivial());
  return wpo_mem_impl(cfg, s, t, probe, deadline);
}

}  // namespace wpo
