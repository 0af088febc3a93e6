#include "wpo/term.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace wpo {

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{std::move(name), true, {}}));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{std::move(symbol), false, std::move(args)}));
}

bool Term::equal_nodes(const Node& a, const Node& b) {
  if (a.is_var != b.is_var || a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!(a.args[i] == b.args[i])) return false;
  }
  return true;
}

std::size_t size(const Term& t) {
  std::size_t n = 1;
  for (const Term& arg : t.args()) n += size(arg);
  return n;
}

namespace {

void collect_occurrences(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  for (const Term& arg : t.args()) collect_occurrences(arg, out);
}

void collect_vars(const Term& t, std::map<std::string, std::size_t>& out) {
  if (t.is_var()) {
    ++out[t.name()];
    return;
  }
  for (const Term& arg : t.args()) collect_vars(arg, out);
}

void print_term(const Term& t, std::ostream& os) {
  os << t.name();
  if (t.is_app() && t.arity() > 0) {
    os << '(';
    bool first = true;
    for (const Term& arg : t.args()) {
      if (!first) os << ',';
      first = false;
      print_term(arg, os);
    }
    os << ')';
  }
}

}  // namespace

std::vector<Term> subterm_occurrences(const Term& t) {
  std::vector<Term> out;
  out.reserve(size(t));
  collect_occurrences(t, out);
  return out;
}

std::map<std::string, std::size_t> var_multiset(const Term& t) {
  std::map<std::string, std::size_t> out;
  collect_vars(t, out);
  return out;
}

std::string format_term(const Term& t) {
  std::ostringstream os;
  print_term(t, os);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  print_term(t, os);
  return os;
}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view input, std::size_t pos) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < pos && i < input.size(); ++i) {
    if (input[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Recursive-descent parser shared by parse_term and parse_trs. The token
// alphabet is identifiers, parentheses, commas and the rule arrow.
class Parser {
 public:
  Parser(std::string_view input, const std::set<std::string>* declared_vars)
      : input_(input), vars_(declared_vars) {}

  [[noreturn]] void fail(const std::string& message, std::size_t pos) const {
    auto [line, column] = line_column(input_, pos);
    throw ParseError(message, line, column);
  }

  void skip_ws() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= input_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < input_.size() ? input_[pos_] : '\0';
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (pos_ >= input_.size() || input_[pos_] != c) fail("expected " + what, pos_);
    ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < input_.size() && input_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_arrow() {
    skip_ws();
    if (pos_ + 1 >= input_.size() || input_[pos_] != '-' || input_[pos_ + 1] != '>') {
      fail("expected '->'", pos_);
    }
    pos_ += 2;
  }

  bool at_ident() {
    skip_ws();
    return pos_ < input_.size() && is_ident_char(input_[pos_]);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < input_.size() && is_ident_char(input_[pos_])) ++pos_;
    if (pos_ == start) fail("expected identifier", start);
    return std::string(input_.substr(start, pos_ - start));
  }

  // term := ident | ident '(' term (',' term)* ')'
  Term term() {
    skip_ws();
    std::size_t start = pos_;
    std::string name = ident();
    bool declared_var = vars_ != nullptr && vars_->count(name) > 0;
    skip_ws();
    if (pos_ < input_.size() && input_[pos_] == '(') {
      if (declared_var) fail("variable '" + name + "' used with arguments", start);
      ++pos_;
      std::vector<Term> args;
      if (!try_consume(')')) {
        args.push_back(term());
        while (try_consume(',')) args.push_back(term());
        expect(')', "')' or ','");
      }
      record_arity(name, args.size(), start);
      return Term::app(std::move(name), std::move(args));
    }
    if (declared_var) return Term::var(std::move(name));
    record_arity(name, 0, start);
    return Term::app(std::move(name));
  }

  void record_arity(const std::string& name, std::size_t arity, std::size_t pos) {
    auto [it, inserted] = signature_.emplace(name, arity);
    if (!inserted && it->second != arity) {
      fail("symbol '" + name + "' used with arity " + std::to_string(arity) +
               " but previously with arity " + std::to_string(it->second),
           pos);
    }
  }

  std::size_t pos() {
    skip_ws();
    return pos_;
  }

  const Signature& signature() const { return signature_; }
  void set_vars(const std::set<std::string>* vars) { vars_ = vars; }

 private:
  std::string_view input_;
  const std::set<std::string>* vars_;
  std::size_t pos_ = 0;
  Signature signature_;
};

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Term parse_term(std::string_view input, const std::set<std::string>& declared_vars) {
  Parser p(input, &declared_vars);
  Term t = p.term();
  if (!p.at_end()) p.fail("trailing input after term", p.pos());
  return t;
}

Trs parse_trs(std::string_view input, std::vector<std::string>* warnings) {
  Parser p(input, nullptr);
  Trs trs;

  p.expect('(', "'('");
  std::string block = p.ident();
  if (block == "VAR") {
    while (p.at_ident()) trs.variables.insert(p.ident());
    p.expect(')', "')'");
    p.expect('(', "'('");
    block = p.ident();
  }
  if (block != "RULES") p.fail("expected RULES block", p.pos());

  p.set_vars(&trs.variables);
  while (!p.at_end() && p.peek() != ')') {
    Term lhs = p.term();
    p.expect_arrow();
    Term rhs = p.term();
    if (warnings != nullptr) {
      auto lhs_vars = var_multiset(lhs);
      for (const auto& [name, count] : var_multiset(rhs)) {
        (void)count;
        if (lhs_vars.count(name) == 0) {
          warnings->push_back("rule " + std::to_string(trs.rules.size() + 1) + ": variable '" +
                              name + "' occurs only in the right-hand side");
        }
      }
    }
    trs.rules.push_back(Rule{std::move(lhs), std::move(rhs)});
  }
  p.expect(')', "')'");
  if (!p.at_end()) p.fail("trailing input after RULES block", p.pos());

  trs.signature = p.signature();
  return trs;
}

std::string format_trs(const Trs& trs) {
  std::ostringstream os;
  os << "(VAR";
  for (const std::string& v : trs.variables) os << ' ' << v;
  os << ")\n(RULES\n";
  for (const Rule& rule : trs.rules) {
    os << format_term(rule.lhs) << " -> " << format_term(rule.rhs) << '\n';
  }
  os << ")\n";
  return os.str();
}

}  // namespace wpo
