#include "wpo/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "wpo/term.hpp"

namespace wpo {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

[[noreturn]] void fail(const Token& at, const std::string& message) {
  throw ParseError(message, at.line, at.column);
}

std::uint64_t parse_nat(const Token& at, std::string_view digits) {
  std::uint64_t value = 0;
  const char* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (ec != std::errc{} || ptr != end || digits.empty()) {
    fail(at, "expected a natural number, got '" + std::string(digits) + "'");
  }
  return value;
}

// name=nat assignments for `prec` and `weight` lines.
std::pair<std::string, std::uint64_t> parse_assignment(const Token& tok) {
  const std::size_t eq = tok.text.find('=');
  if (eq == std::string::npos || eq == 0) {
    fail(tok, "expected name=value, got '" + tok.text + "'");
  }
  return {tok.text.substr(0, eq), parse_nat(tok, std::string_view(tok.text).substr(eq + 1))};
}

std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.push_back(Token{std::string(line.substr(start, i - start)), line_no, start + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

}  // namespace

OrderConfig parse_order_config(std::string_view text) {
  std::optional<std::string> order;
  std::optional<std::string> base;
  std::optional<std::uint64_t> w0;
  std::optional<std::uint64_t> default_weight;
  std::optional<Token> first_weight_token;
  Precedence precedence;
  std::map<std::string, std::uint64_t> weights;

  for (const auto& tokens : tokenize(text)) {
    const Token& key = tokens.front();
    const auto single_value = [&]() -> const Token& {
      if (tokens.size() != 2) fail(key, "'" + key.text + "' takes exactly one value");
      return tokens[1];
    };
    if (key.text == "order") {
      const Token& value = single_value();
      if (order) fail(key, "duplicate 'order'");
      if (value.text != "wpo" && value.text != "rpo") {
        fail(value, "order must be 'wpo' or 'rpo'");
      }
      order = value.text;
    } else if (key.text == "base") {
      const Token& value = single_value();
      if (base) fail(key, "duplicate 'base'");
      if (value.text != "trivial" && value.text != "sum") {
        fail(value, "base must be 'trivial' or 'sum'");
      }
      base = value.text;
    } else if (key.text == "prec") {
      if (tokens.size() < 2) fail(key, "'prec' needs at least one name=rank");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto [name, rank] = parse_assignment(tokens[i]);
        if (precedence.rank.count(name) != 0) {
          fail(tokens[i], "symbol '" + name + "' ranked twice");
        }
        precedence.rank.emplace(std::move(name), rank);
      }
    } else if (key.text == "weight") {
      if (tokens.size() < 2) fail(key, "'weight' needs at least one name=nat");
      if (!first_weight_token) first_weight_token = key;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto [name, w] = parse_assignment(tokens[i]);
        if (weights.count(name) != 0) fail(tokens[i], "symbol '" + name + "' weighted twice");
        weights.emplace(std::move(name), w);
      }
    } else if (key.text == "w0") {
      if (w0) fail(key, "duplicate 'w0'");
      if (!first_weight_token) first_weight_token = key;
      const Token& value = single_value();
      w0 = parse_nat(value, value.text);
    } else if (key.text == "default_weight") {
      if (default_weight) fail(key, "duplicate 'default_weight'");
      if (!first_weight_token) first_weight_token = key;
      const Token& value = single_value();
      default_weight = parse_nat(value, value.text);
    } else {
      fail(key, "unknown key '" + key.text + "'");
    }
  }

  if (!order) throw ParseError("missing 'order' line", 1, 1);
  const bool sum = base.has_value() && *base == "sum";
  if (*order == "rpo" && sum) {
    throw ParseError("order rpo requires the trivial base pair", 1, 1);
  }
  if (!sum && first_weight_token) {
    fail(*first_weight_token,
         "'" + first_weight_token->text + "' requires 'base sum'");
  }

  BasePair base_pair = sum ? BasePair::sum_weight(w0.value_or(1), std::move(weights),
                                                  default_weight.value_or(0))
                           : BasePair::trivial();
  return make_order_config(*order == "wpo" ? OrderKind::Wpo : OrderKind::Rpo,
                           std::move(precedence), std::move(base_pair));
}

OrderConfig load_order_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_order_config(buffer.str());
}

}  // namespace wpo
