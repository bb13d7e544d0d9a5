#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "relloc/obsexpr.hpp"

namespace relloc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const AliasMap& aliases) : text_(text), aliases_(aliases) {}

  Expression parse_all() {
    Expression e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " + what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  Expression expr() {
    Expression e = term();
    for (;;) {
      if (accept('+'))
        e = e + term();
      else if (accept('-'))
        e = e - term();
      else
        return e;
    }
  }

  Expression term() {
    Expression e = unary();
    for (;;) {
      if (accept('*'))
        e = e * unary();
      else if (accept('/'))
        e = e / unary();
      else
        return e;
    }
  }

  Expression unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expression power() {
    Expression base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    Expression ex = unary();
    if (!ex.is_constant() || ex.constant_value() != std::trunc(ex.constant_value()) ||
        std::abs(ex.constant_value()) > 1e6) {
      pos_ = at;
      fail("exponent must be an integer constant");
    }
    return pow(base, static_cast<int>(ex.constant_value()));
  }

  Expression primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Expression e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') return name();
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  Expression number() {
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(res.ptr - first);
    return Expression(v);
  }

  Expression name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view id = text_.substr(start, pos_ - start);
    if (id == "sqrt") {
      expect('(');
      Expression arg = expr();
      expect(')');
      return sqrt(arg);
    }
    if (auto s = symbol_from_name(id)) return Expression(*s);
    if (auto it = aliases_.find(id); it != aliases_.end()) return it->second;
    std::string msg = "unknown symbol '" + std::string(id) + "'; valid names are";
    for (std::size_t i = 0; i < kSymbolCount; ++i) msg += " " + std::string(symbol_name(static_cast<Symbol>(i)));
    for (const auto& [alias, _] : aliases_) msg += " " + alias;
    msg += " sqrt";
    pos_ = start;
    fail(msg);
  }

  std::string_view text_;
  const AliasMap& aliases_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view text, const AliasMap& aliases) { return Parser(text, aliases).parse_all(); }

}  // namespace relloc
