#include <cctype>

#include "tangentia/error.hpp"
#include "tangentia/polycore.hpp"

namespace tangentia {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const Ring& ring, std::string_view text)
      : ring_(ring), text_(text) {}

  Polynomial parse_single() {
    Polynomial p = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  std::vector<Polynomial> parse_list() {
    std::vector<Polynomial> out;
    skip_space();
    if (pos_ == text_.size()) return out;
    out.push_back(expression());
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(expression());
      skip_space();
    }
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    skip_space();
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("exponent must be a nonnegative integer");
      const Integer e = integer();
      if (e > 4096) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected an operand");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer());
      const std::size_t save = pos_;
      if (accept('/')) {
        skip_space();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("'/' is only allowed inside rational literals a/b");
        const Integer den = integer();
        if (den == 0) fail("zero denominator");
        value = Rational(value.get_num(), den);
        value.canonicalize();
      } else {
        pos_ = save;
      }
      return Polynomial::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto index = ring_->index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *index);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const Ring& ring, std::string_view text) {
  return ExpressionParser(ring, text).parse_single();
}

std::vector<Polynomial> parse_polynomial_list(const Ring& ring,
                                              std::string_view text) {
  return ExpressionParser(ring, text).parse_list();
}

std::vector<std::string> scan_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string name(text.substr(start, i - start));
      bool seen = false;
      for (const auto& n : out) seen = seen || n == name;
      if (!seen) out.push_back(std::move(name));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace tangentia
