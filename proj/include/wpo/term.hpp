#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wpo {

// A function symbol with the arity recorded for it in a signature.
struct Symbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// First-order term over function symbols and variables: either a variable
// or an application f(t1,...,tn). Immutable; copies share structure, so
// extracting subterms is cheap.
class Term {
 public:
  static Term var(std::string name);
  static Term app(std::string symbol, std::vector<Term> args = {});

  bool is_var() const { return node_->is_var; }
  bool is_app() const { return !node_->is_var; }
  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }

  // Syntactic equality (with a shared-node fast path).
  friend bool operator==(const Term& a, const Term& b) {
    return a.node_ == b.node_ || equal_nodes(*a.node_, *b.node_);
  }

 private:
  struct Node {
    std::string name;
    bool is_var;
    std::vector<Term> args;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool equal_nodes(const Node& a, const Node& b);

  std::shared_ptr<const Node> node_;
};

// Number of subterm occurrences (nodes) in t.
std::size_t size(const Term& t);

// All subterm occurrences of t in pre-order, t itself first.
// Occurrences, not distinct subterms: f(x,x) yields [f(x,x), x, x].
std::vector<Term> subterm_occurrences(const Term& t);

// Multiset of variable occurrences, as name -> count.
std::map<std::string, std::size_t> var_multiset(const Term& t);

// Canonical printer: f(a,b) with no spaces, variables bare.
std::string format_term(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

struct Rule {
  Term lhs;
  Term rhs;
};

// Symbol name -> arity. Ordered so printing is deterministic.
using Signature = std::map<std::string, std::size_t>;

struct Trs {
  Signature signature;
  std::set<std::string> variables;
  std::vector<Rule> rules;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Parses a single term. An identifier is a variable iff it is in
// declared_vars; undeclared identifiers without arguments are constants.
// Arities are checked against earlier occurrences within this parse.
Term parse_term(std::string_view input, const std::set<std::string>& declared_vars);

// Parses a TRS file: an optional `(VAR x y ...)` block followed by a
// `(RULES l -> r ...)` block. The signature is inferred from usage and
// arity conflicts are errors. A rule whose right-hand side introduces
// fresh variables is kept but reported through `warnings`.
Trs parse_trs(std::string_view input, std::vector<std::string>* warnings = nullptr);

std::string format_trs(const Trs& trs);

}  // namespace wpo
