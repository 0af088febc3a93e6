#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpo/term.hpp"

namespace wpo {

// Violation of a structural invariant in data handed to a checker
// (duplicate indices, out-of-range memory keys, ...).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Term whose every node additionally carries a unique consecutive index
// and the original subterm it annotates. index() and stored() are
// constant-time; the index is the node's identity in memoization keys.
//
// index_term is the only producer of well-formed values; make_node exists
// so tests can forge inconsistent annotations.
class IndexedTerm {
 public:
  static IndexedTerm make_node(std::string label, bool is_var, Term stored, std::uint32_t index,
                               std::vector<IndexedTerm> args = {});

  bool is_var() const { return node_->is_var; }
  bool is_app() const { return !node_->is_var; }
  const std::string& name() const { return node_->name; }
  std::uint32_t index() const { return node_->index; }
  const Term& stored() const { return node_->stored; }
  std::span<const IndexedTerm> args() const { return node_->args; }

 private:
  struct Node {
    std::string name;
    bool is_var;
    Term stored;
    std::uint32_t index;
    std::vector<IndexedTerm> args;
  };

  explicit IndexedTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Annotates every subterm occurrence of t with its pre-order index
// (root = 0) and the subterm itself; indices cover 0..size(t)-1.
IndexedTerm index_term(const Term& t);

std::uint32_t node_index(const IndexedTerm& it);

// The annotated original subterm; equals unindex(it) for index_term output.
const Term& node_stored(const IndexedTerm& it);

// Strips all annotations by structural recursion over the tree shape.
// Does not consult the stored field, so forged annotations are ignored.
Term unindex(const IndexedTerm& it);

// Table from node index to the original subterm at that index.
// Test/validation infrastructure; never used by the comparison path.
using ReverseIndex = std::vector<Term>;

// Requires the indices of it to be exactly {0..n-1}; duplicates or gaps
// raise IntegrityError.
ReverseIndex build_reverse_index(const IndexedTerm& it);

}  // namespace wpo
