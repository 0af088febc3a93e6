#include "wpo/indexed_term.hpp"

#include <utility>

namespace wpo {

IndexedTerm IndexedTerm::make_node(std::string label, bool is_var, Term stored,
                                   std::uint32_t index, std::vector<IndexedTerm> args) {
  return IndexedTerm(std::make_shared<const Node>(
      Node{std::move(label), is_var, std::move(stored), index, std::move(args)}));
}

namespace {

IndexedTerm index_from(const Term& t, std::uint32_t& next) {
  const std::uint32_t here = next++;
  std::vector<IndexedTerm> args;
  args.reserve(t.args().size());
  for (const Term& arg : t.args()) args.push_back(index_from(arg, next));
  return IndexedTerm::make_node(t.name(), t.is_var(), t, here, std::move(args));
}

}  // namespace

IndexedTerm index_term(const Term& t) {
  std::uint32_t next = 0;
  return index_from(t, next);
}

std::uint32_t node_index(const IndexedTerm& it) { return it.index(); }

const Term& node_stored(const IndexedTerm& it) { return it.stored(); }

Term unindex(const IndexedTerm& it) {
  if (it.is_var()) return Term::var(it.name());
  std::vector<Term> args;
  args.reserve(it.args().size());
  for (const IndexedTerm& arg : it.args()) args.push_back(unindex(arg));
  return Term::app(it.name(), std::move(args));
}

namespace {

std::size_t count_nodes(const IndexedTerm& it) {
  std::size_t n = 1;
  for (const IndexedTerm& arg : it.args()) n += count_nodes(arg);
  return n;
}

void fill_reverse(const IndexedTerm& it, std::vector<bool>& seen, ReverseIndex& table) {
  const std::uint32_t i = it.index();
  if (i >= table.size()) {
    throw IntegrityError("reverse index: node index " + std::to_string(i) +
                         " out of range for size " + std::to_string(table.size()));
  }
  if (seen[i]) {
    throw IntegrityError("reverse index: duplicate node index " + std::to_string(i));
  }
  seen[i] = true;
  table[i] = unindex(it);
  for (const IndexedTerm& arg : it.args()) fill_reverse(arg, seen, table);
}

}  // namespace

ReverseIndex build_reverse_index(const IndexedTerm& it) {
  const std::size_t n = count_nodes(it);
  ReverseIndex table(n, Term::var("_"));
  std::vector<bool> seen(n, false);
  fill_reverse(it, seen, table);
  return table;
}

}  // namespace wpo
