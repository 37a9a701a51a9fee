#include "polysyn/parser.hpp"

#include <cctype>
#include <optional>

namespace polysyn {

ParseError::ParseError(const std::string& msg, SourceSpan where)
    : std::runtime_error(msg + " at offset " + std::to_string(where.start)),
      where_(where) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Colon, Comma, End };

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { tokenize(); }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  Token next() {
    const Token& t = peek();
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

 private:
  void tokenize() {
    std::size_t i = 0;
    while (i < src_.size()) {
      char c = src_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
        // fraction literal: digits '/' digits is a single token
        if (i + 1 < src_.size() && src_[i] == '/' &&
            std::isdigit(static_cast<unsigned char>(src_[i + 1]))) {
          ++i;
          while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i;
        }
        push(Tok::Number, start, i);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        while (i < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i])) || src_[i] == '_'))
          ++i;
        push(Tok::Ident, start, i);
        continue;
      }
      ++i;
      switch (c) {
        case '+': push(Tok::Plus, start, i); break;
        case '-': push(Tok::Minus, start, i); break;
        case '*': push(Tok::Star, start, i); break;
        case '^': push(Tok::Caret, start, i); break;
        case '(': push(Tok::LParen, start, i); break;
        case ')': push(Tok::RParen, start, i); break;
        case ':': push(Tok::Colon, start, i); break;
        case ',': push(Tok::Comma, start, i); break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", {start, i});
      }
    }
    tokens_.push_back({Tok::End, src_.substr(src_.size()), {src_.size(), src_.size()}});
  }

  void push(Tok kind, std::size_t start, std::size_t end) {
    tokens_.push_back({kind, src_.substr(start, end - start), {start, end}});
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Rational parse_rational_text(std::string_view text, SourceSpan span) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
  BigInt num{std::string(text.substr(0, slash))};
  BigInt den{std::string(text.substr(slash + 1))};
  if (den == 0) throw ParseError("zero denominator in rational literal", span);
  return Rational(num, den);
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : lex_(src) {}

  Expr parse() {
    Expr e = expr();
    expect_end();
    return e;
  }

 private:
  Expr expr() {
    Expr e = term();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Plus) {
        lex_.next();
        e = Expr::add(std::move(e), term());
      } else if (k == Tok::Minus) {
        lex_.next();
        e = Expr::sub(std::move(e), term());
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = unary();
    while (lex_.peek().kind == Tok::Star) {
      lex_.next();
      e = Expr::mul(std::move(e), unary());
    }
    return e;
  }

  Expr unary() {
    if (lex_.peek().kind == Tok::Minus) {
      Token minus = lex_.next();
      // a literal directly after the minus (and not a power base) becomes a
      // signed constant; anything else is 0 - e
      if (lex_.peek().kind == Tok::Number && lex_.peek(1).kind != Tok::Caret) {
        Token num = lex_.next();
        Rational value = parse_rational_text(num.text, num.span);
        return Expr::constant(-value);
      }
      (void)minus;
      return Expr::sub(Expr::constant(0L), unary());
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (lex_.peek().kind != Tok::Caret) return base;
    lex_.next();
    Token t = lex_.peek();
    if (t.kind != Tok::Number || t.text.find('/') != std::string_view::npos) {
      throw ParseError("exponent must be a natural number literal", t.span);
    }
    lex_.next();
    BigInt n{std::string(t.text)};
    if (n > kMaxExponent) {
      throw ParseError("exponent exceeds the cap of " + std::to_string(kMaxExponent), t.span);
    }
    if (lex_.peek().kind == Tok::Caret) {
      throw ParseError("exponent must be a natural number literal (chained '^')",
                       lex_.peek().span);
    }
    return Expr::pow(std::move(base), static_cast<std::uint32_t>(n));
  }

  Expr atom() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Number: {
        lex_.next();
        return Expr::constant(parse_rational_text(t.text, t.span));
      }
      case Tok::LParen: {
        lex_.next();
        Expr e = expr();
        expect(Tok::RParen, "expected ')'");
        return e;
      }
      case Tok::Ident: {
        lex_.next();
        if (t.text == "quote") {
          expect(Tok::LParen, "expected '(' after 'quote'");
          Expr e = expr();
          expect(Tok::RParen, "expected ')'");
          return Expr::quote(std::move(e));
        }
        if (t.text == "eval") {
          expect(Tok::LParen, "expected '(' after 'eval'");
          Expr e = expr();
          expect(Tok::Colon, "expected ':' in eval annotation");
          TypeTag tag = type_tag();
          expect(Tok::RParen, "expected ')'");
          return Expr::eval(std::move(e), tag);
        }
        if (t.text == "opd") {
          auto [a, b] = call2("opd");
          return Expr::opd_apply(std::move(a), std::move(b));
        }
        if (t.text == "not") {
          expect(Tok::LParen, "expected '(' after 'not'");
          Expr e = expr();
          expect(Tok::RParen, "expected ')'");
          return Expr::logical_not(std::move(e));
        }
        if (t.text == "syneq") {
          auto [a, b] = call2("syneq");
          return Expr::syn_eq(std::move(a), std::move(b));
        }
        return Expr::var(std::string(t.text));
      }
      default:
        throw ParseError("expected an expression", t.span);
    }
  }

  std::pair<Expr, Expr> call2(const std::string& name) {
    expect(Tok::LParen, "expected '(' after '" + name + "'");
    Expr a = expr();
    expect(Tok::Comma, "expected ','");
    Expr b = expr();
    expect(Tok::RParen, "expected ')'");
    return {std::move(a), std::move(b)};
  }

  TypeTag type_tag() {
    Token t = lex_.peek();
    if (t.kind == Tok::Ident) {
      lex_.next();
      if (t.text == "real") return TypeTag::Real;
      if (t.text == "syn") return TypeTag::Syn;
      if (t.text == "bool") return TypeTag::Bool;
    }
    throw ParseError("expected a type (real, syn or bool)", t.span);
  }

  void expect(Tok kind, const std::string& msg) {
    if (lex_.peek().kind != kind) throw ParseError(msg, lex_.peek().span);
    lex_.next();
  }

  void expect_end() {
    if (lex_.peek().kind != Tok::End) {
      throw ParseError("unexpected trailing input", lex_.peek().span);
    }
  }

  Lexer lex_;
};

// Precedence: Add/Sub 1, Mul 2, negative constant 3 (parses as unary minus),
// Pow 4, everything else atomic.
int precedence(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
      return 2;
    case ExprKind::Const:
      return e.const_value() < 0 ? 3 : 5;
    case ExprKind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string render(const Expr& e, int min_prec);

std::string raw(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var:
      return e.var_name().str();
    case ExprKind::Const:
      return rat_to_string(e.const_value());
    case ExprKind::NamedConst:
      return e.const_name();
    case ExprKind::Add:
      return render(e.lhs(), 1) + " + " + render(e.rhs(), 2);
    case ExprKind::Sub:
      return render(e.lhs(), 1) + " - " + render(e.rhs(), 2);
    case ExprKind::Mul:
      return render(e.lhs(), 2) + " * " + render(e.rhs(), 3);
    case ExprKind::Pow:
      return render(e.operand(), 5) + "^" + std::to_string(e.exponent());
    case ExprKind::Quote:
      return "quote(" + render(e.operand(), 1) + ")";
    case ExprKind::Eval:
      return "eval(" + render(e.operand(), 1) + " : " + to_string(e.eval_tag()) + ")";
    case ExprKind::OpdApply:
      return "opd(" + render(e.lhs(), 1) + ", " + render(e.rhs(), 1) + ")";
    case ExprKind::Not:
      return "not(" + render(e.operand(), 1) + ")";
    case ExprKind::SynEq:
      return "syneq(" + render(e.lhs(), 1) + ", " + render(e.rhs(), 1) + ")";
    case ExprKind::Deriv:
      return "d/d" + e.deriv_var().str() + "(" + render(e.operand(), 1) + ")";
  }
  return "?";
}

std::string render(const Expr& e, int min_prec) {
  std::string s = raw(e);
  if (precedence(e) < min_prec) return "(" + s + ")";
  return s;
}

// --- SynValue constructor syntax ---------------------------------------

class SynParser {
 public:
  explicit SynParser(std::string_view src) : src_(src) {}

  SynValue parse() {
    SynValue s = value();
    skip_ws();
    if (pos_ != src_.size()) {
      throw ParseError("unexpected trailing input", {pos_, pos_ + 1});
    }
    return s;
  }

 private:
  SynValue value() {
    skip_ws();
    std::size_t start = pos_;
    std::string head = ident();
    expect('(');
    if (head == "con") {
      SynValue s = SynValue::con(s_rational());
      expect(')');
      return s;
    }
    if (head == "var") {
      SynValue s = SynValue::var(s_ident());
      expect(')');
      return s;
    }
    if (head == "plus" || head == "minus" || head == "times") {
      SynValue a = value();
      expect(',', head + " takes 2 arguments");
      SynValue b = value();
      expect(')');
      if (head == "plus") return SynValue::plus(std::move(a), std::move(b));
      if (head == "minus") return SynValue::minus(std::move(a), std::move(b));
      return SynValue::times(std::move(a), std::move(b));
    }
    if (head == "power") {
      SynValue base = value();
      expect(',', "power takes 2 arguments");
      std::uint32_t n = natural();
      expect(')');
      return SynValue::power(std::move(base), n);
    }
    throw ParseError("unknown constructor '" + head + "'", {start, pos_});
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= src_.size() || !std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      throw ParseError("expected a constructor name", {pos_, pos_ + 1});
    }
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  // the payload of con()/var() carries the s_ prefix convention
  void s_prefix() {
    skip_ws();
    if (pos_ + 1 >= src_.size() || src_[pos_] != 's' || src_[pos_ + 1] != '_') {
      throw ParseError("expected 's_' prefix", {pos_, pos_ + 1});
    }
    pos_ += 2;
  }

  Rational s_rational() {
    s_prefix();
    std::size_t start = pos_;
    if (pos_ < src_.size() && src_[pos_] == '-') ++pos_;
    digits();
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      digits();
    }
    return parse_rational_text(src_.substr(start, pos_ - start), {start, pos_});
  }

  VarName s_ident() {
    s_prefix();
    std::size_t start = pos_;
    std::string name = ident();
    if (!is_valid_identifier(name)) {
      throw ParseError("invalid variable name", {start, pos_});
    }
    return VarName(std::move(name));
  }

  std::uint32_t natural() {
    skip_ws();
    std::size_t start = pos_;
    digits();
    BigInt n{std::string(src_.substr(start, pos_ - start))};
    if (n > kMaxExponent) {
      throw ParseError("exponent exceeds the cap of " + std::to_string(kMaxExponent),
                       {start, pos_});
    }
    return static_cast<std::uint32_t>(n);
  }

  void digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected digits", {start, start + 1});
  }

  void expect(char c, const std::string& context = "") {
    skip_ws();
    if (pos_ >= src_.size() || src_[pos_] != c) {
      std::string msg = std::string("expected '") + c + "'";
      if (!context.empty()) msg += " (" + context + ")";
      throw ParseError(msg, {pos_, pos_ + 1});
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string print_expr(const Expr& e) { return raw(e); }

SynValue parse_synvalue(std::string_view text) { return SynParser(text).parse(); }

std::string print_synvalue(const SynValue& s) {
  switch (s.kind()) {
    case SynKind::Con:
      return "con(s_" + rat_to_string(s.con_value()) + ")";
    case SynKind::Var:
      return "var(s_" + s.var_name().str() + ")";
    case SynKind::Plus:
      return "plus(" + print_synvalue(s.lhs()) + "," + print_synvalue(s.rhs()) + ")";
    case SynKind::Minus:
      return "minus(" + print_synvalue(s.lhs()) + "," + print_synvalue(s.rhs()) + ")";
    case SynKind::Times:
      return "times(" + print_synvalue(s.lhs()) + "," + print_synvalue(s.rhs()) + ")";
    case SynKind::Power:
      return "power(" + print_synvalue(s.base()) + "," + std::to_string(s.exponent()) + ")";
  }
  return "?";
}

std::vector<std::pair<std::size_t, Expr>> parse_expr_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, Expr>> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) out.emplace_back(line_no, parse_expr(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace polysyn
