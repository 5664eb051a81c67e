#include "uaw/parser.hpp"

#include <cctype>

namespace uaw {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  size_t offset;
  std::string text;  // for Int / Ident
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    current_.offset = pos_;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      current_.kind = Tok::Int;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_.kind = Tok::Ident;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_.kind = Tok::Plus; return;
      case '-': current_.kind = Tok::Minus; return;
      case '*': current_.kind = Tok::Star; return;
      case '/': current_.kind = Tok::Slash; return;
      case '^': current_.kind = Tok::Caret; return;
      case '(': current_.kind = Tok::LParen; return;
      case ')': current_.kind = Tok::RParen; return;
      default:
        throw ParseError(pos_ - 1, std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  Token current_;
};

class ExprParser {
 public:
  ExprParser(const std::string& text, const ParseContext& ctx)
      : lexer_(text), ctx_(ctx) {}

  NCPoly parse() {
    NCPoly p = expression();
    if (lexer_.peek().kind != Tok::End)
      throw ParseError(lexer_.peek().offset, "trailing input");
    return p;
  }

 private:
  NCPoly expression() {
    NCPoly acc = term();
    while (true) {
      Tok k = lexer_.peek().kind;
      if (k == Tok::Plus) {
        lexer_.take();
        acc += term();
      } else if (k == Tok::Minus) {
        lexer_.take();
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  static bool starts_atom(Tok k) {
    return k == Tok::Int || k == Tok::Ident || k == Tok::LParen;
  }

  NCPoly term() {
    NCPoly acc = factor();
    while (true) {
      Tok k = lexer_.peek().kind;
      if (k == Tok::Star) {
        lexer_.take();
        acc = acc * factor();
      } else if (k == Tok::Slash) {
        size_t off = lexer_.peek().offset;
        lexer_.take();
        NCPoly divisor = factor();
        acc = divide(acc, divisor, off);
      } else if (starts_atom(k)) {  // juxtaposition is multiplication
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  NCPoly divide(const NCPoly& a, const NCPoly& b, size_t off) {
    std::optional<QScalar> s = as_scalar(b);
    if (!s) throw ParseError(off, "division by a non-scalar expression");
    if (s->is_zero()) throw ParseError(off, "division by zero");
    return a * s->inverse();
  }

  static std::optional<QScalar> as_scalar(const NCPoly& p) {
    if (p.is_zero()) return QScalar();
    if (p.term_count() == 1 && p.terms().begin()->first.empty())
      return p.terms().begin()->second;
    return std::nullopt;
  }

  NCPoly factor() {
    int sign = 1;
    while (lexer_.peek().kind == Tok::Plus || lexer_.peek().kind == Tok::Minus) {
      if (lexer_.take().kind == Tok::Minus) sign = -sign;
    }
    NCPoly base = atom();
    if (lexer_.peek().kind == Tok::Caret) {
      size_t off = lexer_.peek().offset;
      lexer_.take();
      int e = signed_int();
      base = power(base, e, off);
    }
    return sign < 0 ? -base : base;
  }

  int signed_int() {
    int sign = 1;
    if (lexer_.peek().kind == Tok::Minus || lexer_.peek().kind == Tok::Plus) {
      if (lexer_.take().kind == Tok::Minus) sign = -1;
    }
    Token t = lexer_.peek();
    if (t.kind != Tok::Int) throw ParseError(t.offset, "expected integer exponent");
    lexer_.take();
    try {
      return sign * std::stoi(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError(t.offset, "exponent out of range");
    }
  }

  NCPoly power(const NCPoly& base, int e, size_t off) {
    if (std::optional<QScalar> s = as_scalar(base)) {
      if (e < 0 && s->is_zero()) throw ParseError(off, "zero to a negative power");
      return NCPoly::unit(ctx_.alphabet, s->pow(e));
    }
    // single letter with coefficient 1: generator power
    if (base.term_count() == 1 && base.terms().begin()->first.size() == 1 &&
        base.terms().begin()->second.is_one()) {
      GenId g = base.terms().begin()->first[0];
      if (e >= 0) {
        NCPoly r = NCPoly::unit(ctx_.alphabet);
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
      }
      if (ctx_.negative_letter_power) {
        if (auto expansion = ctx_.negative_letter_power(g, -e)) return *expansion;
      }
      throw ParseError(off, "negative power of non-invertible generator " +
                                ctx_.alphabet->name(g));
    }
    if (e < 0) throw ParseError(off, "negative power of a compound expression");
    return base.pow(static_cast<unsigned>(e));
  }

  NCPoly atom() {
    Token t = lexer_.peek();
    switch (t.kind) {
      case Tok::Int: {
        lexer_.take();
        return NCPoly::unit(ctx_.alphabet, QScalar::integer(BigInt(t.text)));
      }
      case Tok::Ident: {
        lexer_.take();
        if (t.text == "q")
          return NCPoly::unit(ctx_.alphabet, QScalar::q_power(1));
        if (auto id = ctx_.alphabet->find(t.text))
          return NCPoly::single(ctx_.alphabet, *id);
        if (ctx_.resolve_name) {
          if (auto p = ctx_.resolve_name(t.text)) return *p;
        }
        throw ParseError(t.offset, "unknown identifier " + t.text);
      }
      case Tok::LParen: {
        lexer_.take();
        NCPoly p = expression();
        if (lexer_.peek().kind != Tok::RParen)
          throw ParseError(lexer_.peek().offset, "expected ')'");
        lexer_.take();
        return p;
      }
      default:
        throw ParseError(t.offset, "expected integer, identifier or '('");
    }
  }

  Lexer lexer_;
  const ParseContext& ctx_;
};

}  // namespace

NCPoly parse_expr(const std::string& text, const ParseContext& ctx) {
  return ExprParser(text, ctx).parse();
}

QScalar parse_scalar(const std::string& text) {
  static const AlphabetPtr empty_alphabet = std::make_shared<Alphabet>(
      std::vector<std::string>{});
  ParseContext ctx{empty_alphabet, nullptr, nullptr};
  NCPoly p = parse_expr(text, ctx);
  if (p.is_zero()) return QScalar();
  if (p.term_count() == 1 && p.terms().begin()->first.empty())
    return p.terms().begin()->second;
  throw ParseError(0, "expression is not a scalar");
}

}  // namespace uaw
