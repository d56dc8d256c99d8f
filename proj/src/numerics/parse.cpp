#include "adw/numerics/parse.hpp"

#include <cctype>
#include <cstdlib>

#include "adw/core/error.hpp"

namespace adw {
namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("polynomial parse error at position " +
                      std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MultiPoly expr() {
    MultiPoly p = eat('-') ? MultiPoly::constant(nvars(), 0.0) - term()
                           : (eat('+'), term());
    for (;;) {
      if (eat('+'))
        p = p + term();
      else if (eat('-'))
        p = p - term();
      else
        return p;
    }
  }

  MultiPoly term() {
    MultiPoly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  MultiPoly factor() {
    if (eat('-')) return MultiPoly::constant(nvars(), 0.0) - factor();
    if (eat('+')) return factor();
    MultiPoly base = atom();
    if (eat('^')) {
      skip_ws();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected a nonnegative integer exponent after '^'");
      return base.pow(std::atoi(text_.substr(start, pos_ - start).c_str()));
    }
    return base;
  }

  MultiPoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  MultiPoly number() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      size_t mark = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        pos_ = mark;  // 'e' belongs to something else, not an exponent
      else
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    double mag = std::strtod(text_.substr(start, pos_ - start).c_str(), nullptr);
    cplx value = mag;
    if (pos_ < text_.size() && text_[pos_] == 'i' && !is_ident_char(pos_ + 1)) {
      ++pos_;
      value = cplx(0.0, mag);
    }
    return MultiPoly::constant(nvars(), value);
  }

  bool is_ident_char(size_t at) const {
    if (at >= text_.size()) return false;
    unsigned char c = static_cast<unsigned char>(text_[at]);
    return std::isalnum(c) || c == '_';
  }

  MultiPoly identifier() {
    size_t start = pos_;
    while (is_ident_char(pos_)) ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    if (name == "i") return MultiPoly::constant(nvars(), kI);
    for (int v = 0; v < nvars(); ++v)
      if (vars_[v] == name) return MultiPoly::variable(nvars(), v);
    pos_ = start;
    fail("unknown variable '" + name + "'");
  }

  int nvars() const { return static_cast<int>(vars_.size()); }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).run();
}

}  // namespace adw
