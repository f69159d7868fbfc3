#pragma once

// Operator-expression grammar (whitespace-insensitive):
//
//   expr    := unary { ("+" | "-") unary }
//   unary   := "-" unary | product
//   product := power { ["*" | "/"] power }        juxtaposition is a product
//   power   := atom { "^" INT }
//   atom    := INT | "p" | GEN | NAMED
//            | "(" expr ")" | "[" expr "," expr "]" | "{" expr "," expr "}"
//   GEN     := "b+" | "b-" | "f+" | "f-"
//   NAMED   := "R+" | "R-" | "Q+" | "Q-" | "Nb" | "Nf" | "Ns" | "T"
//
// "[x,y]" is the commutator and "{x,y}" the anticommutator. The right operand of
// "/" must be a scalar (numbers and p only).

#include "rpbs/free_algebra.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rpbs {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Lexical, Syntax, Arity };

  ParseError(Kind kind, std::size_t offset, const std::string& what)
      : std::runtime_error(describe(kind) + " at offset " + std::to_string(offset) + ": " + what),
        kind(kind),
        offset(offset) {}

  Kind kind;
  std::size_t offset;

 private:
  static std::string describe(Kind k) {
    switch (k) {
      case Kind::Lexical: return "lexical error";
      case Kind::Syntax: return "syntax error";
      case Kind::Arity: return "arity error";
    }
    return "error";
  }
};

struct Expr {
  enum class Kind {
    Number,
    Symbol,  // p
    Generator,
    Named,
    Sum,
    Difference,
    Negate,
    Product,
    Quotient,
    Power,
    Commutator,
    Anticommutator,
    Group,
  };

  Kind kind = Kind::Number;
  std::string token;  // digits, generator or named-operator spelling
  int exponent = 0;   // Power only
  std::vector<Expr> children;
  std::size_t offset = 0;
};

namespace detail {

enum class Tok { Int, Symbol, Gen, Named, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBrack, RBrack, LBrace, RBrace, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto sign_follows = [&](std::size_t at) { return at < src.size() && (src[at] == '+' || src[at] == '-'); };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Int, std::string(src.substr(start, i - start)), start});
      continue;
    }
    switch (c) {
      case 'b':
      case 'f':
      case 'R':
      case 'Q':
        if (!sign_follows(i + 1)) {
          throw ParseError(ParseError::Kind::Lexical, start,
                           std::string("'") + c + "' must be followed directly by '+' or '-'");
        }
        out.push_back({(c == 'b' || c == 'f') ? Tok::Gen : Tok::Named, std::string(src.substr(i, 2)), start});
        i += 2;
        continue;
      case 'N':
        if (i + 1 < src.size() && (src[i + 1] == 'b' || src[i + 1] == 'f' || src[i + 1] == 's')) {
          out.push_back({Tok::Named, std::string(src.substr(i, 2)), start});
          i += 2;
          continue;
        }
        throw ParseError(ParseError::Kind::Lexical, start, "expected Nb, Nf or Ns");
      case 'T': out.push_back({Tok::Named, "T", start}); break;
      case 'p': out.push_back({Tok::Symbol, "p", start}); break;
      case '+': out.push_back({Tok::Plus, "+", start}); break;
      case '-': out.push_back({Tok::Minus, "-", start}); break;
      case '*': out.push_back({Tok::Star, "*", start}); break;
      case '/': out.push_back({Tok::Slash, "/", start}); break;
      case '^': out.push_back({Tok::Caret, "^", start}); break;
      case '(': out.push_back({Tok::LParen, "(", start}); break;
      case ')': out.push_back({Tok::RParen, ")", start}); break;
      case '[': out.push_back({Tok::LBrack, "[", start}); break;
      case ']': out.push_back({Tok::RBrack, "]", start}); break;
      case '{': out.push_back({Tok::LBrace, "{", start}); break;
      case '}': out.push_back({Tok::RBrace, "}", start}); break;
      case ',': out.push_back({Tok::Comma, ",", start}); break;
      default: throw ParseError(ParseError::Kind::Lexical, start, std::string("unknown character '") + c + "'");
    }
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

inline bool is_scalar(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Symbol: return true;
    case Expr::Kind::Generator:
    case Expr::Kind::Named:
    case Expr::Kind::Commutator:
    case Expr::Kind::Anticommutator: return false;
    default:
      for (const auto& c : e.children)
        if (!is_scalar(c)) return false;
      return true;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != Tok::End) fail_syntax("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail_syntax(const std::string& msg) const {
    const auto& t = peek();
    throw ParseError(ParseError::Kind::Syntax, t.offset, t.kind == Tok::End ? msg + " (end of input)" : msg);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail_syntax(std::string("expected ") + what);
    ++pos_;
  }

  static Expr node(Expr::Kind k, std::size_t offset, std::vector<Expr> children = {}) {
    Expr e;
    e.kind = k;
    e.offset = offset;
    e.children = std::move(children);
    return e;
  }

  Expr expr() {
    Expr lhs = unary();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Token op = take();
      Expr rhs = unary();
      lhs = node(op.kind == Tok::Plus ? Expr::Kind::Sum : Expr::Kind::Difference, op.offset,
                 {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr unary() {
    if (peek().kind == Tok::Minus) {
      Token op = take();
      return node(Expr::Kind::Negate, op.offset, {unary()});
    }
    return product();
  }

  static bool starts_atom(Tok k) {
    return k == Tok::Int || k == Tok::Symbol || k == Tok::Gen || k == Tok::Named || k == Tok::LParen ||
           k == Tok::LBrack || k == Tok::LBrace;
  }

  Expr product() {
    Expr lhs = power();
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::Star || t.kind == Tok::Slash) {
        Token op = take();
        Expr rhs = power();
        if (op.kind == Tok::Slash && !is_scalar(rhs)) {
          throw ParseError(ParseError::Kind::Syntax, rhs.offset, "divisor must be a scalar");
        }
        lhs = node(op.kind == Tok::Star ? Expr::Kind::Product : Expr::Kind::Quotient, op.offset,
                   {std::move(lhs), std::move(rhs)});
      } else if (starts_atom(t.kind)) {
        const std::size_t at = t.offset;
        Expr rhs = power();
        lhs = node(Expr::Kind::Product, at, {std::move(lhs), std::move(rhs)});
      } else {
        return lhs;
      }
    }
  }

  Expr power() {
    Expr base = atom();
    while (peek().kind == Tok::Caret) {
      Token op = take();
      if (peek().kind != Tok::Int) fail_syntax("expected a nonnegative integer exponent");
      Token k = take();
      if (k.text.size() > 6) throw ParseError(ParseError::Kind::Syntax, k.offset, "exponent too large");
      Expr e = node(Expr::Kind::Power, op.offset, {std::move(base)});
      e.exponent = std::stoi(k.text);
      base = std::move(e);
    }
    return base;
  }

  Expr bracket(Expr::Kind kind, Tok close, const char* close_text) {
    Token open = take();
    Expr a = expr();
    if (peek().kind == close) {
      throw ParseError(ParseError::Kind::Arity, open.offset, "bracket needs two arguments, got one");
    }
    expect(Tok::Comma, "','");
    Expr b = expr();
    if (peek().kind == Tok::Comma) {
      throw ParseError(ParseError::Kind::Arity, peek().offset, "bracket takes exactly two arguments");
    }
    expect(close, close_text);
    return node(kind, open.offset, {std::move(a), std::move(b)});
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        Token k = take();
        Expr e = node(Expr::Kind::Number, k.offset);
        e.token = k.text;
        return e;
      }
      case Tok::Symbol: {
        Token k = take();
        Expr e = node(Expr::Kind::Symbol, k.offset);
        e.token = "p";
        return e;
      }
      case Tok::Gen:
      case Tok::Named: {
        Token k = take();
        Expr e = node(k.kind == Tok::Gen ? Expr::Kind::Generator : Expr::Kind::Named, k.offset);
        e.token = k.text;
        return e;
      }
      case Tok::LParen: {
        Token open = take();
        Expr inner = expr();
        expect(Tok::RParen, "')'");
        return node(Expr::Kind::Group, open.offset, {std::move(inner)});
      }
      case Tok::LBrack: return bracket(Expr::Kind::Commutator, Tok::RBrack, "']'");
      case Tok::LBrace: return bracket(Expr::Kind::Anticommutator, Tok::RBrace, "'}'");
      default: fail_syntax("expected an operand");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sum:
    case Expr::Kind::Difference: return 1;
    case Expr::Kind::Negate: return 2;
    case Expr::Kind::Product:
    case Expr::Kind::Quotient: return 3;
    case Expr::Kind::Power: return 4;
    default: return 5;
  }
}

inline void print(const Expr& e, std::string& out, int min_prec);

inline void print_child(const Expr& e, std::string& out, int min_prec) {
  if (precedence(e) < min_prec) {
    out += "(";
    print(e, out, 0);
    out += ")";
  } else {
    print(e, out, min_prec);
  }
}

inline void print(const Expr& e, std::string& out, int /*min_prec*/) {
  const auto& ch = e.children;
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Symbol:
    case Expr::Kind::Generator:
    case Expr::Kind::Named: out += e.token; break;
    case Expr::Kind::Sum:
    case Expr::Kind::Difference:
      print_child(ch[0], out, 1);
      out += e.kind == Expr::Kind::Sum ? " + " : " - ";
      print_child(ch[1], out, 2);
      break;
    case Expr::Kind::Negate:
      out += "-";
      print_child(ch[0], out, 2);
      break;
    case Expr::Kind::Product:
    case Expr::Kind::Quotient:
      print_child(ch[0], out, 3);
      out += e.kind == Expr::Kind::Product ? "*" : "/";
      print_child(ch[1], out, 4);
      break;
    case Expr::Kind::Power:
      print_child(ch[0], out, 4);
      out += "^" + std::to_string(e.exponent);
      break;
    case Expr::Kind::Commutator:
    case Expr::Kind::Anticommutator:
      out += e.kind == Expr::Kind::Commutator ? "[" : "{";
      print(ch[0], out, 0);
      out += ",";
      print(ch[1], out, 0);
      out += e.kind == Expr::Kind::Commutator ? "]" : "}";
      break;
    case Expr::Kind::Group:
      out += "(";
      print(ch[0], out, 0);
      out += ")";
      break;
  }
}

}  // namespace detail

/// Parses an operator expression; throws ParseError carrying a byte offset.
inline Expr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Canonical spelling: products with '*', single spaces around binary + and -.
inline std::string to_string(const Expr& e) {
  std::string out;
  detail::print(e, out, 0);
  return out;
}

/// Lowers a tree to a fully expanded free-algebra element.
inline FAElement lower(const Expr& e) {
  const auto& ch = e.children;
  switch (e.kind) {
    case Expr::Kind::Number: return FAElement::scalar(LaurentPoly(Rational(Integer(e.token))));
    case Expr::Kind::Symbol: return FAElement::scalar(LaurentPoly::p());
    case Expr::Kind::Generator: return gen(*generator_from_string(e.token));
    case Expr::Kind::Named: return named_operator(*named_operator_from_string(e.token));
    case Expr::Kind::Sum: return lower(ch[0]) + lower(ch[1]);
    case Expr::Kind::Difference: return lower(ch[0]) - lower(ch[1]);
    case Expr::Kind::Negate: return -lower(ch[0]);
    case Expr::Kind::Product: return lower(ch[0]) * lower(ch[1]);
    case Expr::Kind::Quotient: {
      FAElement divisor = lower(ch[1]);
      LaurentPoly d;
      if (!divisor.is_zero()) d = divisor.terms().begin()->second;
      if (divisor.is_zero() || divisor.terms().size() != 1 || !divisor.terms().begin()->first.empty() ||
          !d.is_monomial()) {
        throw std::domain_error("division by a scalar that is not a nonzero monomial c*p^k");
      }
      FAElement num = lower(ch[0]);
      FAElement out;
      for (const auto& [w, c] : num.terms()) out.add_term(w, c / d);
      return out;
    }
    case Expr::Kind::Power: return power(lower(ch[0]), e.exponent);
    case Expr::Kind::Commutator: return commutator(lower(ch[0]), lower(ch[1]));
    case Expr::Kind::Anticommutator: return anticommutator(lower(ch[0]), lower(ch[1]));
    case Expr::Kind::Group: return lower(ch[0]);
  }
  return {};
}

inline FAElement parse_element(std::string_view text) { return lower(parse(text)); }

}  // namespace rpbs
