#include <cctype>
#include <set>

#include "cli_internal.hpp"
#include "tangentia/error.hpp"
#include "tangentia/polycore.hpp"

namespace tangentia::cli {

namespace {

const std::set<std::string, std::less<>> kVerbs = {
    "gb",     "dim",   "saturate", "eliminate", "dual",      "bidual",       "tangency",
    "span",   "whitney", "stratum", "veronese", "veronese_cone", "osc",     "bitangent",
    "secant", "r_of",  "boundary", "resecant"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ScriptParser {
 public:
  explicit ScriptParser(std::string_view source) : src_(source) {
    // Blank out comments so positions survive.
    for (std::size_t i = 0; i < src_.size(); ++i) {
      if (src_[i] != '#') continue;
      while (i < src_.size() && src_[i] != '\n') src_[i++] = ' ';
    }
  }

  Script parse() {
    Script script;
    for (;;) {
      skip_space();
      if (at_end()) break;
      script.statements.push_back(statement());
    }
    return script;
  }

 private:
  std::string src_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  SourcePos where(std::size_t offset) const {
    SourcePos p;
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    return p;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    const SourcePos p = where(offset);
    throw ParseError(what, p.line, p.column);
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  std::string found() const {
    if (at_end()) return " but reached the end of input";
    return std::string(" before '") + src_[pos_] + "'";
  }

  std::string identifier() {
    skip_space();
    if (!ident_start(peek())) fail("expected a name" + found());
    const std::size_t start = pos_;
    while (ident_char(peek())) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  // Raw text up to the next top-level `stop` character (not consumed).
  std::pair<std::string, std::size_t> raw_until(std::string_view stops) {
    skip_space();
    const std::size_t start = pos_;
    int depth = 0;
    while (!at_end()) {
      const char c = src_[pos_];
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0) fail("unbalanced '" + std::string(1, c) + "'");
        --depth;
      }
      ++pos_;
    }
    if (at_end()) fail("missing ';' at the end of the statement", start);
    std::size_t end = pos_;
    while (end > start && std::isspace(static_cast<unsigned char>(src_[end - 1]))) --end;
    return {src_.substr(start, end - start), start};
  }

  Value expression_value(const std::string& text, std::size_t offset) {
    Value v;
    v.kind = Value::Kind::Expression;
    v.text = text;
    v.pos = where(offset);
    check_syntax(v);
    return v;
  }

  Value value() {
    skip_space();
    Value v;
    v.pos = where(pos_);
    const char c = peek();
    if (c == '[') {
      ++pos_;
      v.kind = Value::Kind::List;
      if (!accept(']')) {
        do v.items.push_back(value());
        while (accept(','));
        expect(']');
      }
      return v;
    }
    if (c == '(') {
      ++pos_;
      auto [text, offset] = raw_until(")");
      expect(')');
      return expression_value(text, offset);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      const std::size_t start = pos_;
      if (c == '-' || c == '+') ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number", start);
      auto digits = [&] {
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      };
      digits();
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        digits();
      } else {
        if (peek() == '.') {
          ++pos_;
          digits();
        }
        if (peek() == 'e' || peek() == 'E') {
          ++pos_;
          if (peek() == '-' || peek() == '+') ++pos_;
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
          digits();
        }
      }
      if (ident_char(peek())) fail("expected a separator after the number");
      v.kind = Value::Kind::Number;
      v.text = src_.substr(start, pos_ - start);
      return v;
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (ident_char(peek()) || (peek() == '-' && pos_ + 1 < src_.size() && ident_start(src_[pos_ + 1]))) ++pos_;
      v.kind = Value::Kind::Identifier;
      v.text = src_.substr(start, pos_ - start);
      return v;
    }
    fail("expected an argument" + found());
  }

  // Polynomial syntax is checked against a ring holding every identifier.
  static void check_syntax(const Value& v) {
    std::vector<std::string> names = scan_identifiers(v.text);
    if (names.empty()) names.push_back("_");
    try {
      (void)parse_polynomial_list(make_ring(names), v.text);
    } catch (const ParseError& e) {
      throw relocate(e, v.pos);
    }
  }

  Statement statement() {
    skip_space();
    const std::size_t start = pos_;
    Statement st;
    st.pos = where(start);
    std::string word = identifier();
    if (word == "ring") {
      st.command = word;
      st.name = identifier();
      expect('=');
      skip_space();
      st.body.push_back(value());
      if (st.body.front().kind != Value::Kind::List) fail("ring variables must be a bracketed list");
      for (const auto& v : st.body.front().items)
        if (v.kind != Value::Kind::Identifier) fail("ring variables must be names", start);
      while (!accept(';')) {
        skip_space();
        if (at_end()) fail("missing ';' at the end of the statement");
        Argument a;
        a.value = value();
        if (a.value.kind == Value::Kind::Identifier && accept('(')) {
          a.key = a.value.text;
          a.value = value();
          expect(')');
        }
        st.args.push_back(std::move(a));
      }
    } else if (word == "ideal") {
      st.command = word;
      st.name = identifier();
      skip_space();
      if (src_.compare(pos_, 2, "in") == 0 && pos_ + 2 < src_.size() && !ident_char(src_[pos_ + 2])) {
        pos_ += 2;
        st.args.push_back({"in", Value{Value::Kind::Identifier, identifier(), {}, where(pos_)}});
      }
      expect('=');
      auto [text, offset] = raw_until(";");
      expect(';');
      st.body.push_back(expression_value(text, offset));
    } else if (word == "scheme") {
      st.command = word;
      st.name = identifier();
      expect('=');
      const std::string fn = identifier();
      if (fn != "projective") fail("expected projective(IDEAL)", start);
      expect('(');
      st.body.push_back(Value{Value::Kind::Identifier, identifier(), {}, where(pos_)});
      expect(')');
      expect(';');
    } else if (word == "curve") {
      st.command = word;
      st.name = identifier();
      expect('=');
      expect('[');
      for (;;) {
        auto [text, offset] = raw_until(",]");
        if (text.empty()) fail("empty curve component", offset);
        st.body.push_back(expression_value(text, offset));
        if (accept(']')) break;
        expect(',');
      }
      expect(';');
    } else {
      skip_space();
      if (peek() == '=') {
        ++pos_;
        st.name = word;
        word = identifier();
      }
      if (!kVerbs.count(word)) fail("unknown command '" + word + "'", start);
      st.command = word;
      if (word == "span") {
        expect('(');
        st.qualifier = identifier();
        expect(')');
      }
      while (!accept(';')) {
        skip_space();
        if (at_end()) fail("missing ';' at the end of the statement");
        Argument a;
        a.value = value();
        if (a.value.kind == Value::Kind::Identifier && accept('=')) {
          a.key = a.value.text;
          a.value = value();
        }
        st.args.push_back(std::move(a));
      }
    }
    std::string text = src_.substr(start, pos_ - start);
    std::string squeezed;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!squeezed.empty() && squeezed.back() != ' ') squeezed.push_back(' ');
      } else {
        squeezed.push_back(c);
      }
    }
    st.source = squeezed;
    return st;
  }
};

}  // namespace

ParseError relocate(const ParseError& e, const SourcePos& origin) {
  std::string what = e.what();
  const auto cut = what.rfind(" at line ");
  if (cut != std::string::npos) what.resize(cut);
  const std::size_t line = origin.line + e.line() - 1;
  const std::size_t column = e.line() == 1 ? origin.column + e.column() - 1 : e.column();
  return ParseError(what, line, column);
}

Script parse_script(std::string_view source) { return ScriptParser(source).parse(); }

}  // namespace tangentia::cli
