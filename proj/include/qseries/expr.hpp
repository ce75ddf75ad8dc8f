#ifndef QSERIES_EXPR_HPP_
#define QSERIES_EXPR_HPP_

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qseries/stringfn.hpp"

namespace qseries {

// ---------------------------------------------------------------------------
// AST
// ---------------------------------------------------------------------------

struct IntExpr;
using IntPtr = std::shared_ptr<const IntExpr>;

struct IntExpr {
  enum class Kind { Literal, Param, Add, Sub, Mul, Neg, Pow, Binom, FloorDiv, Delta };
  Kind kind;
  Int value;
  std::string name;
  IntPtr a, b;

  static IntPtr literal(Int v) {
    auto e = std::make_shared<IntExpr>();
    e->kind = Kind::Literal;
    e->value = std::move(v);
    return e;
  }
  static IntPtr param(std::string n) {
    auto e = std::make_shared<IntExpr>();
    e->kind = Kind::Param;
    e->name = std::move(n);
    return e;
  }
  static IntPtr node(Kind k, IntPtr a, IntPtr b = nullptr) {
    auto e = std::make_shared<IntExpr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
  }
};

// sign * (-1)^{sign_exp} * q^{exponent}
struct MonoExpr {
  int sign = 1;
  IntPtr sign_exp;  // optional
  IntPtr exponent;  // optional, defaults to 0
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    Rational,    // value
    IntConst,    // integer expression used as a constant series factor
    QPow,        // q^{ints[0]}
    Add, Sub, Mul, Neg,
    Pow,         // kids[0] ^ ints[0], nonnegative
    ThetaJ,      // j(monos[0]; monos[1])
    ThetaJInv,   // jinv(monos[0]; monos[1])
    JAB, JbarAB, JSingle,          // ints
    JABInv, JbarABInv, JSingleInv, // ints
    HeckeF,      // f[ints[0..2]](monos[0], monos[1]; monos[2])
    AppellM,     // m(monos[0], monos[1]; monos[2])
    MockF,       // name_tag in {mu2,f3,omega3,psi3,chi3}; monos[0] = base
    G3,          // g3(monos[0]; monos[1])
    Poch,        // poch(monos[0], ints[0] or inf; monos[1])
    PochInv,
    StringC,     // C[ints[0], ints[1]](ints[2], ints[3])
    EulerInv3,
    Sum,         // sum(var, ints[0], ints[1], kids[0])
    ThetaPart,   // thetaPart[ints[0]](monos[0], monos[1]; monos[2])
    HPart,
    GenEuler,    // genEuler[ints[0], ints[1]](ints[2], ints[3])
    QuasiPeriod, // quasiPeriodDelta[tag](ints[0..4]); name_tag in {even,odd}
  };

  Kind kind = Kind::Rational;
  Rational value;
  std::string name_tag;  // mock name / quasi parity / sum variable
  bool poch_infinite = false;
  std::vector<ExprPtr> kids;
  std::vector<IntPtr> ints;
  std::vector<MonoExpr> monos;
};

struct ParamDecl {
  std::string name;
  Int lo, hi;
  std::vector<Int> skip;
};

struct Identity {
  std::string name;
  std::string anchor;  // paper anchor text; empty for user files
  std::vector<ParamDecl> params;
  ExprPtr lhs, rhs;
  Exp default_order = 60;
};

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
  enum class Type { Ident, Integer, Symbol, End };
  Type type = Type::End;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  bool at_symbol(std::string_view s) const {
    return tok_.type == Token::Type::Symbol && tok_.text == s;
  }
  bool at_ident(std::string_view s) const {
    return tok_.type == Token::Type::Ident && tok_.text == s;
  }
  void expect_symbol(std::string_view s) {
    if (!at_symbol(s))
      throw SyntaxError("expected '" + std::string(s) + "', found '" + tok_.text + "'",
                        tok_.pos);
    advance();
  }
  std::string expect_ident() {
    if (tok_.type != Token::Type::Ident)
      throw SyntaxError("expected identifier, found '" + tok_.text + "'", tok_.pos);
    return take().text;
  }
  Int expect_integer() {
    if (tok_.type != Token::Type::Integer)
      throw SyntaxError("expected integer, found '" + tok_.text + "'", tok_.pos);
    return Int(take().text);
  }

 private:
  void advance() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') ++i_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i_;
      } else {
        break;
      }
    }
    tok_.pos = i_;
    if (i_ >= src_.size()) {
      tok_ = {Token::Type::End, "<end>", i_};
      return;
    }
    char c = src_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
        ++j;
      tok_ = {Token::Type::Ident, std::string(src_.substr(i_, j - i_)), i_};
      i_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      tok_ = {Token::Type::Integer, std::string(src_.substr(i_, j - i_)), i_};
      i_ = j;
      return;
    }
    if (c == '.' && i_ + 1 < src_.size() && src_[i_ + 1] == '.') {
      tok_ = {Token::Type::Symbol, "..", i_};
      i_ += 2;
      return;
    }
    static const std::string singles = "+-*^()[],;=/";
    if (singles.find(c) != std::string::npos) {
      tok_ = {Token::Type::Symbol, std::string(1, c), i_};
      ++i_;
      return;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", i_);
  }

  std::string_view src_;
  std::size_t i_ = 0;
  Token tok_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  ExprPtr parse_expression() {
    ExprPtr e = expr();
    if (lex_.peek().type != detail::Token::Type::End)
      throw SyntaxError("trailing input after expression; expected end", lex_.peek().pos);
    return e;
  }

  std::vector<Identity> parse_identities() {
    std::vector<Identity> out;
    while (lex_.peek().type != detail::Token::Type::End) out.push_back(identity());
    return out;
  }

 private:
  static std::shared_ptr<Expr> mut(Expr::Kind k) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    return e;
  }

  Identity identity() {
    if (!lex_.at_ident("identity"))
      throw SyntaxError("expected 'identity', found '" + lex_.peek().text + "'",
                        lex_.peek().pos);
    lex_.take();
    Identity id;
    id.name = lex_.expect_ident();
    if (lex_.at_ident("params")) {
      lex_.take();
      while (lex_.peek().type == detail::Token::Type::Ident && !lex_.at_ident("lhs")) {
        ParamDecl d;
        d.name = lex_.expect_ident();
        if (!lex_.at_ident("in"))
          throw SyntaxError("expected 'in' in parameter declaration", lex_.peek().pos);
        lex_.take();
        d.lo = signed_integer();
        lex_.expect_symbol("..");
        d.hi = signed_integer();
        if (lex_.at_ident("skip")) {
          lex_.take();
          d.skip.push_back(signed_integer());
          while (lex_.at_symbol(",")) {
            lex_.take();
            d.skip.push_back(signed_integer());
          }
        }
        id.params.push_back(std::move(d));
      }
    }
    if (!lex_.at_ident("lhs"))
      throw SyntaxError("expected 'lhs', found '" + lex_.peek().text + "'", lex_.peek().pos);
    lex_.take();
    lex_.expect_symbol("=");
    id.lhs = expr();
    if (!lex_.at_ident("rhs"))
      throw SyntaxError("expected 'rhs', found '" + lex_.peek().text + "'", lex_.peek().pos);
    lex_.take();
    lex_.expect_symbol("=");
    id.rhs = expr();
    check_declared(id);
    return id;
  }

  Int signed_integer() {
    bool neg = false;
    if (lex_.at_symbol("-")) {
      lex_.take();
      neg = true;
    }
    Int v = lex_.expect_integer();
    return neg ? -v : v;
  }

  ExprPtr expr() {
    ExprPtr acc = term();
    while (lex_.at_symbol("+") || lex_.at_symbol("-")) {
      bool plus = lex_.take().text == "+";
      ExprPtr rhs = term();
      auto n = mut(plus ? Expr::Kind::Add : Expr::Kind::Sub);
      n->kids = {acc, rhs};
      acc = n;
    }
    return acc;
  }

  ExprPtr term() {
    ExprPtr acc = factor();
    while (lex_.at_symbol("*")) {
      lex_.take();
      ExprPtr rhs = factor();
      auto n = mut(Expr::Kind::Mul);
      n->kids = {acc, rhs};
      acc = n;
    }
    return acc;
  }

  ExprPtr factor() {
    if (lex_.at_symbol("-")) {
      lex_.take();
      ExprPtr inner = factor();
      auto n = mut(Expr::Kind::Neg);
      n->kids = {inner};
      return n;
    }
    ExprPtr base = primary();
    while (lex_.at_symbol("^")) {
      lex_.take();
      auto n = mut(Expr::Kind::Pow);
      n->kids = {base};
      n->ints = {int_atom()};
      base = n;
    }
    return base;
  }

  ExprPtr primary() {
    const auto& t = lex_.peek();
    if (t.type == detail::Token::Type::Integer) {
      Int num = lex_.expect_integer();
      if (lex_.at_symbol("/")) {
        lex_.take();
        Int den = lex_.expect_integer();
        if (den == 0) throw SyntaxError("zero denominator in rational literal", t.pos);
        auto n = mut(Expr::Kind::Rational);
        n->value = Rational(num, den);
        return n;
      }
      auto n = mut(Expr::Kind::Rational);
      n->value = Rational(num);
      return n;
    }
    if (lex_.at_symbol("(")) {
      lex_.take();
      ExprPtr inner = expr();
      lex_.expect_symbol(")");
      return inner;
    }
    if (t.type == detail::Token::Type::Ident) return func_or_q();
    throw SyntaxError("expected a factor, found '" + t.text + "'", t.pos);
  }

  IntPtr int_atom() {
    const auto& t = lex_.peek();
    if (t.type == detail::Token::Type::Integer)
      return IntExpr::literal(lex_.expect_integer());
    if (lex_.at_symbol("(")) {
      lex_.take();
      IntPtr e = int_expr();
      lex_.expect_symbol(")");
      return e;
    }
    if (lex_.at_symbol("-")) {
      lex_.take();
      return IntExpr::node(IntExpr::Kind::Neg, int_atom());
    }
    if (t.type == detail::Token::Type::Ident) return int_ident();
    throw SyntaxError("expected integer expression, found '" + t.text + "'", t.pos);
  }

  IntPtr int_ident() {
    std::string name = lex_.expect_ident();
    if (name == "binom" || name == "delta") {
      lex_.expect_symbol("(");
      IntPtr a = int_expr();
      lex_.expect_symbol(",");
      IntPtr b = int_expr();
      lex_.expect_symbol(")");
      return IntExpr::node(name == "binom" ? IntExpr::Kind::Binom : IntExpr::Kind::Delta,
                           a, b);
    }
    if (name == "floor") {
      lex_.expect_symbol("(");
      IntPtr a = int_expr();
      lex_.expect_symbol("/");
      IntPtr b = int_expr();
      lex_.expect_symbol(")");
      return IntExpr::node(IntExpr::Kind::FloorDiv, a, b);
    }
    return IntExpr::param(name);
  }

  IntPtr int_unary() {
    if (lex_.at_symbol("-")) {
      lex_.take();
      return IntExpr::node(IntExpr::Kind::Neg, int_unary());
    }
    IntPtr base = int_atom();
    while (lex_.at_symbol("^")) {
      lex_.take();
      base = IntExpr::node(IntExpr::Kind::Pow, base, int_atom());
    }
    return base;
  }

  IntPtr int_term() {
    IntPtr acc = int_unary();
    while (lex_.at_symbol("*")) {
      lex_.take();
      acc = IntExpr::node(IntExpr::Kind::Mul, acc, int_unary());
    }
    return acc;
  }

  IntPtr int_expr() {
    IntPtr acc = int_term();
    while (lex_.at_symbol("+") || lex_.at_symbol("-")) {
      bool plus = lex_.take().text == "+";
      acc = IntExpr::node(plus ? IntExpr::Kind::Add : IntExpr::Kind::Sub, acc, int_term());
    }
    return acc;
  }

  // mono := ["-"] "q" ["^" intatom] | "(-1)"^e ["*" q-part] | "(-q)"^e
  //       | "1" | "-1"
  MonoExpr mono() {
    MonoExpr m;
    if (lex_.at_symbol("(")) {
      lex_.take();
      lex_.expect_symbol("-");
      if (lex_.peek().type == detail::Token::Type::Integer && lex_.peek().text == "1") {
        lex_.take();
        lex_.expect_symbol(")");
        lex_.expect_symbol("^");
        m.sign_exp = int_atom();
        if (lex_.at_symbol("*")) {
          lex_.take();
          if (!lex_.at_ident("q"))
            throw SyntaxError("expected 'q' after (-1)^e *", lex_.peek().pos);
          lex_.take();
          if (lex_.at_symbol("^")) {
            lex_.take();
            m.exponent = int_atom();
          } else {
            m.exponent = IntExpr::literal(1);
          }
        }
        return m;
      }
      if (lex_.at_ident("q")) {
        lex_.take();
        lex_.expect_symbol(")");
        lex_.expect_symbol("^");
        m.sign_exp = int_atom();
        m.exponent = m.sign_exp;  // (-q)^e = (-1)^e q^e
        return m;
      }
      throw SyntaxError("expected '(-1)^e' or '(-q)^e' monomial", lex_.peek().pos);
    }
    if (lex_.at_symbol("-")) {
      lex_.take();
      m.sign = -1;
    }
    if (lex_.peek().type == detail::Token::Type::Integer && lex_.peek().text == "1") {
      lex_.take();
      return m;  // 1 or -1
    }
    if (!lex_.at_ident("q"))
      throw SyntaxError("expected a monomial (q-power, 1, -1, (-1)^e*q^e or (-q)^e), found '" +
                            lex_.peek().text + "'",
                        lex_.peek().pos);
    lex_.take();
    if (lex_.at_symbol("^")) {
      lex_.take();
      m.exponent = int_atom();
    } else {
      m.exponent = IntExpr::literal(1);
    }
    return m;
  }

  std::vector<IntPtr> bracket_ints(std::size_t count) {
    lex_.expect_symbol("[");
    std::vector<IntPtr> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) lex_.expect_symbol(",");
      out.push_back(int_expr());
    }
    lex_.expect_symbol("]");
    return out;
  }

  ExprPtr func_or_q() {
    std::string name = lex_.expect_ident();
    if (name == "q") {
      auto n = mut(Expr::Kind::QPow);
      if (lex_.at_symbol("^")) {
        lex_.take();
        n->ints = {int_atom()};
      } else {
        n->ints = {IntExpr::literal(1)};
      }
      return n;
    }
    if (name == "j" || name == "jinv") {
      auto n = mut(name == "j" ? Expr::Kind::ThetaJ : Expr::Kind::ThetaJInv);
      lex_.expect_symbol("(");
      n->monos.push_back(mono());
      lex_.expect_symbol(";");
      n->monos.push_back(mono());
      lex_.expect_symbol(")");
      return n;
    }
    if (name == "J" || name == "Jbar" || name == "Jinv" || name == "Jbarinv") {
      auto kind = name == "J"      ? Expr::Kind::JAB
                  : name == "Jbar" ? Expr::Kind::JbarAB
                  : name == "Jinv" ? Expr::Kind::JABInv
                                   : Expr::Kind::JbarABInv;
      auto n = mut(kind);
      n->ints = bracket_ints(2);
      return n;
    }
    if (name == "Jsingle" || name == "Jsingleinv") {
      auto n = mut(name == "Jsingle" ? Expr::Kind::JSingle : Expr::Kind::JSingleInv);
      n->ints = bracket_ints(1);
      return n;
    }
    if (name == "f") {
      auto n = mut(Expr::Kind::HeckeF);
      n->ints = bracket_ints(3);
      lex_.expect_symbol("(");
      n->monos.push_back(mono());
      lex_.expect_symbol(",");
      n->monos.push_back(mono());
      lex_.expect_symbol(";");
      n->monos.push_back(mono());
      lex_.expect_symbol(")");
      return n;
    }
    if (name == "m") {
      auto n = mut(Expr::Kind::AppellM);
      lex_.expect_symbol("(");
      n->monos.push_back(mono());
      lex_.expect_symbol(",");
      n->monos.push_back(mono());
      lex_.expect_symbol(";");
      n->monos.push_back(mono());
      lex_.expect_symbol(")");
      return n;
    }
    if (name == "mu2" || name == "f3" || name == "omega3" || name == "psi3" ||
        name == "chi3") {
      auto n = mut(Expr::Kind::MockF);
      n->name_tag = name;
      lex_.expect_symbol("(");
      n->monos.push_back(mono());
      lex_.expect_symbol(")");
      return n;
    }
    if (name == "g3") {
      auto n = mut(Expr::Kind::G3);
      lex_.expect_symbol("(");
      n->monos.push_back(mono());
      lex_.expect_symbol(";");
      n->monos.push_back(mono());
      lex_.expect_symbol(")");
      return n;
    }
    if (name == "poch" || name == "pochinv") {
      auto n = mut(name == "poch" ? Expr::Kind::Poch : Expr::Kind::PochInv);
      lex_.expect_symbol("(");
      n->monos.push_back(mono());
      lex_.expect_symbol(",");
      if (lex_.at_ident("inf")) {
        lex_.take();
        n->poch_infinite = true;
      } else {
        n->ints = {int_expr()};
      }
      lex_.expect_symbol(";");
      n->monos.push_back(mono());
      lex_.expect_symbol(")");
      return n;
    }
    if (name == "C") {
      auto n = mut(Expr::Kind::StringC);
      n->ints = bracket_ints(2);
      lex_.expect_symbol("(");
      n->ints.push_back(int_expr());
      lex_.expect_symbol(",");
      n->ints.push_back(int_expr());
      lex_.expect_symbol(")");
      return n;
    }
    if (name == "genEuler") {
      auto n = mut(Expr::Kind::GenEuler);
      n->ints = bracket_ints(2);
      lex_.expect_symbol("(");
      n->ints.push_back(int_expr());
      lex_.expect_symbol(",");
      n->ints.push_back(int_expr());
      lex_.expect_symbol(")");
      return n;
    }
    if (name == "quasiPeriodDelta") {
      auto n = mut(Expr::Kind::QuasiPeriod);
      lex_.expect_symbol("[");
      std::string tag = lex_.expect_ident();
      if (tag != "even" && tag != "odd")
        throw SyntaxError("quasiPeriodDelta parity must be 'even' or 'odd'", lex_.peek().pos);
      n->name_tag = tag;
      lex_.expect_symbol("]");
      lex_.expect_symbol("(");
      for (int i = 0; i < 5; ++i) {
        if (i) lex_.expect_symbol(",");
        n->ints.push_back(int_expr());
      }
      lex_.expect_symbol(")");
      return n;
    }
    if (name == "thetaPart" || name == "hPart") {
      auto n = mut(name == "thetaPart" ? Expr::Kind::ThetaPart : Expr::Kind::HPart);
      n->ints = bracket_ints(1);
      lex_.expect_symbol("(");
      n->monos.push_back(mono());
      lex_.expect_symbol(",");
      n->monos.push_back(mono());
      lex_.expect_symbol(";");
      n->monos.push_back(mono());
      lex_.expect_symbol(")");
      return n;
    }
    if (name == "sum") {
      auto n = mut(Expr::Kind::Sum);
      lex_.expect_symbol("(");
      n->name_tag = lex_.expect_ident();
      lex_.expect_symbol(",");
      n->ints.push_back(int_expr());
      lex_.expect_symbol(",");
      n->ints.push_back(int_expr());
      lex_.expect_symbol(",");
      n->kids.push_back(expr());
      lex_.expect_symbol(")");
      return n;
    }
    if (name == "eulerInv3") return mut(Expr::Kind::EulerInv3);
    if (name == "binom" || name == "floor" || name == "delta") {
      // integer helper in factor position: a constant series
      auto n = mut(Expr::Kind::IntConst);
      if (name == "floor") {
        lex_.expect_symbol("(");
        IntPtr a = int_expr();
        lex_.expect_symbol("/");
        IntPtr b = int_expr();
        lex_.expect_symbol(")");
        n->ints = {IntExpr::node(IntExpr::Kind::FloorDiv, a, b)};
      } else {
        lex_.expect_symbol("(");
        IntPtr a = int_expr();
        lex_.expect_symbol(",");
        IntPtr b = int_expr();
        lex_.expect_symbol(")");
        n->ints = {IntExpr::node(
            name == "binom" ? IntExpr::Kind::Binom : IntExpr::Kind::Delta, a, b)};
      }
      return n;
    }
    throw UnknownIdentifier("unknown function or identifier '" + name + "'");
  }

  // Every referenced parameter must be declared (sum variables shadow).
  void check_declared(const Identity& id) {
    std::set<std::string> declared;
    for (const auto& p : id.params) declared.insert(p.name);
    scan_expr(id.lhs, declared);
    scan_expr(id.rhs, declared);
  }
  static void scan_int(const IntPtr& e, const std::set<std::string>& declared) {
    if (!e) return;
    if (e->kind == IntExpr::Kind::Param && !declared.count(e->name))
      throw UndeclaredParameter("parameter '" + e->name + "' is not declared");
    scan_int(e->a, declared);
    scan_int(e->b, declared);
  }
  static void scan_mono(const MonoExpr& m, const std::set<std::string>& declared) {
    scan_int(m.sign_exp, declared);
    scan_int(m.exponent, declared);
  }
  static void scan_expr(const ExprPtr& e, std::set<std::string> declared) {
    if (!e) return;
    if (e->kind == Expr::Kind::Sum) declared.insert(e->name_tag);
    for (const auto& i : e->ints) scan_int(i, declared);
    for (const auto& m : e->monos) scan_mono(m, declared);
    for (const auto& k : e->kids) scan_expr(k, declared);
  }

  detail::Lexer lex_;
};

inline ExprPtr parse_expression(std::string_view text) {
  return Parser(text).parse_expression();
}
inline std::vector<Identity> parse_identities(std::string_view text) {
  return Parser(text).parse_identities();
}
inline Identity parse_identity(std::string_view text) {
  auto ids = parse_identities(text);
  if (ids.size() != 1) throw SyntaxError("expected exactly one identity block", 0);
  return ids.front();
}

// ---------------------------------------------------------------------------
// Printer (canonical; parse(print(e)) reproduces the tree)
// ---------------------------------------------------------------------------

inline std::string print_int(const IntPtr& e) {
  using K = IntExpr::Kind;
  switch (e->kind) {
    case K::Literal: return e->value.str();
    case K::Param: return e->name;
    case K::Add: return "(" + print_int(e->a) + "+" + print_int(e->b) + ")";
    case K::Sub: return "(" + print_int(e->a) + "-" + print_int(e->b) + ")";
    case K::Mul: return "(" + print_int(e->a) + "*" + print_int(e->b) + ")";
    case K::Neg: return "(-" + print_int(e->a) + ")";
    case K::Pow: return "(" + print_int(e->a) + "^" + print_int(e->b) + ")";
    case K::Binom: return "binom(" + print_int(e->a) + "," + print_int(e->b) + ")";
    case K::FloorDiv: return "floor(" + print_int(e->a) + "/" + print_int(e->b) + ")";
    case K::Delta: return "delta(" + print_int(e->a) + "," + print_int(e->b) + ")";
  }
  throw Error("print_int: bad node");
}

inline std::string print_mono(const MonoExpr& m) {
  std::string s;
  if (m.sign < 0) s += "-";
  if (m.sign_exp) s += "(-1)^" + print_int(m.sign_exp) + "*";
  if (m.exponent)
    s += "q^" + print_int(m.exponent);
  else
    s += "1";
  return s;
}

inline std::string print_expr(const ExprPtr& e) {
  using K = Expr::Kind;
  auto monos3 = [&](const char* head) {
    return std::string(head) + "(" + print_mono(e->monos[0]) + "," +
           print_mono(e->monos[1]) + ";" + print_mono(e->monos[2]) + ")";
  };
  switch (e->kind) {
    case K::Rational: {
      std::string s = numerator(e->value).str();
      if (denominator(e->value) != 1) s += "/" + denominator(e->value).str();
      return s;
    }
    case K::IntConst: return print_int(e->ints[0]);
    case K::QPow: return "q^" + print_int(e->ints[0]);
    case K::Add: return "(" + print_expr(e->kids[0]) + " + " + print_expr(e->kids[1]) + ")";
    case K::Sub: return "(" + print_expr(e->kids[0]) + " - " + print_expr(e->kids[1]) + ")";
    case K::Mul: return "(" + print_expr(e->kids[0]) + " * " + print_expr(e->kids[1]) + ")";
    case K::Neg: return "-(" + print_expr(e->kids[0]) + ")";
    case K::Pow: return "(" + print_expr(e->kids[0]) + ")^" + print_int(e->ints[0]);
    case K::ThetaJ:
      return "j(" + print_mono(e->monos[0]) + ";" + print_mono(e->monos[1]) + ")";
    case K::ThetaJInv:
      return "jinv(" + print_mono(e->monos[0]) + ";" + print_mono(e->monos[1]) + ")";
    case K::JAB: return "J[" + print_int(e->ints[0]) + "," + print_int(e->ints[1]) + "]";
    case K::JbarAB:
      return "Jbar[" + print_int(e->ints[0]) + "," + print_int(e->ints[1]) + "]";
    case K::JABInv:
      return "Jinv[" + print_int(e->ints[0]) + "," + print_int(e->ints[1]) + "]";
    case K::JbarABInv:
      return "Jbarinv[" + print_int(e->ints[0]) + "," + print_int(e->ints[1]) + "]";
    case K::JSingle: return "Jsingle[" + print_int(e->ints[0]) + "]";
    case K::JSingleInv: return "Jsingleinv[" + print_int(e->ints[0]) + "]";
    case K::HeckeF:
      return "f[" + print_int(e->ints[0]) + "," + print_int(e->ints[1]) + "," +
             print_int(e->ints[2]) + "]" + "(" + print_mono(e->monos[0]) + "," +
             print_mono(e->monos[1]) + ";" + print_mono(e->monos[2]) + ")";
    case K::AppellM: return monos3("m");
    case K::MockF: return e->name_tag + "(" + print_mono(e->monos[0]) + ")";
    case K::G3:
      return "g3(" + print_mono(e->monos[0]) + ";" + print_mono(e->monos[1]) + ")";
    case K::Poch:
    case K::PochInv: {
      std::string head = e->kind == K::Poch ? "poch" : "pochinv";
      std::string n = e->poch_infinite ? "inf" : print_int(e->ints[0]);
      return head + "(" + print_mono(e->monos[0]) + "," + n + ";" +
             print_mono(e->monos[1]) + ")";
    }
    case K::StringC:
      return "C[" + print_int(e->ints[0]) + "," + print_int(e->ints[1]) + "](" +
             print_int(e->ints[2]) + "," + print_int(e->ints[3]) + ")";
    case K::GenEuler:
      return "genEuler[" + print_int(e->ints[0]) + "," + print_int(e->ints[1]) + "](" +
             print_int(e->ints[2]) + "," + print_int(e->ints[3]) + ")";
    case K::QuasiPeriod: {
      std::string s = "quasiPeriodDelta[" + e->name_tag + "](";
      for (int i = 0; i < 5; ++i) s += (i ? "," : "") + print_int(e->ints[i]);
      return s + ")";
    }
    case K::ThetaPart:
      return "thetaPart[" + print_int(e->ints[0]) + "](" + print_mono(e->monos[0]) + "," +
             print_mono(e->monos[1]) + ";" + print_mono(e->monos[2]) + ")";
    case K::HPart:
      return "hPart[" + print_int(e->ints[0]) + "](" + print_mono(e->monos[0]) + "," +
             print_mono(e->monos[1]) + ";" + print_mono(e->monos[2]) + ")";
    case K::Sum:
      return "sum(" + e->name_tag + "," + print_int(e->ints[0]) + "," +
             print_int(e->ints[1]) + "," + print_expr(e->kids[0]) + ")";
    case K::EulerInv3: return "eulerInv3";
  }
  throw Error("print_expr: bad node");
}

inline std::string print_identity(const Identity& id) {
  std::string s = "identity " + id.name;
  if (!id.params.empty()) {
    s += " params";
    for (const auto& p : id.params) {
      s += " " + p.name + " in " + p.lo.str() + ".." + p.hi.str();
      for (std::size_t i = 0; i < p.skip.size(); ++i)
        s += (i ? "," : " skip ") + p.skip[i].str();
    }
  }
  s += "\n  lhs = " + print_expr(id.lhs);
  s += "\n  rhs = " + print_expr(id.rhs);
  return s;
}

// ---------------------------------------------------------------------------
// Evaluator
// ---------------------------------------------------------------------------

using Bindings = std::map<std::string, Int>;

inline Int eval_int(const IntPtr& e, const Bindings& env) {
  using K = IntExpr::Kind;
  switch (e->kind) {
    case K::Literal: return e->value;
    case K::Param: {
      auto it = env.find(e->name);
      if (it == env.end())
        throw UndeclaredParameter("unbound parameter '" + e->name + "'");
      return it->second;
    }
    case K::Add: return eval_int(e->a, env) + eval_int(e->b, env);
    case K::Sub: return eval_int(e->a, env) - eval_int(e->b, env);
    case K::Mul: return eval_int(e->a, env) * eval_int(e->b, env);
    case K::Neg: return -eval_int(e->a, env);
    case K::Pow: {
      Int base = eval_int(e->a, env), ex = eval_int(e->b, env);
      if (ex < 0) throw EvaluationError("negative integer power");
      Int acc = 1;
      for (Int i = 0; i < ex; ++i) acc *= base;
      return acc;
    }
    case K::Binom: {
      Int n = eval_int(e->a, env), k = eval_int(e->b, env);
      if (k < 0 || k > 1000000) throw EvaluationError("binom: k out of range");
      return binomial(n, k.convert_to<long long>());
    }
    case K::FloorDiv: {
      Int a = eval_int(e->a, env), b = eval_int(e->b, env);
      if (b == 0) throw EvaluationError("floor: division by zero");
      Int q = a / b, r = a % b;
      if (r != 0 && ((a < 0) != (b < 0))) --q;
      return q;
    }
    case K::Delta:
      return eval_int(e->a, env) == eval_int(e->b, env) ? 1 : 0;
  }
  throw Error("eval_int: bad node");
}

inline Exp eval_exp(const IntPtr& e, const Bindings& env) {
  Int v = eval_int(e, env);
  if (v > Int(1) << 40 || v < -(Int(1) << 40))
    throw EvaluationError("exponent out of machine range: " + v.str());
  return v.convert_to<long long>();
}

inline SignedMonomial eval_mono(const MonoExpr& m, const Bindings& env) {
  int sign = m.sign;
  if (m.sign_exp) {
    Int se = eval_int(m.sign_exp, env);
    if (((se % 2) + 2) % 2 == 1) sign = -sign;
  }
  Exp e = m.exponent ? eval_exp(m.exponent, env) : 0;
  return {sign, e};
}

inline Series evaluate(const ExprPtr& e, const Bindings& env, Exp O);

namespace detail {

inline Series eval_node(const Expr& e, const Bindings& env, Exp O) {
  using K = Expr::Kind;
  auto mono_at = [&](std::size_t i) { return eval_mono(e.monos[i], env); };
  auto int_at = [&](std::size_t i) { return eval_exp(e.ints[i], env); };
  switch (e.kind) {
    case K::Rational: return Series::constant(e.value);
    case K::IntConst: return Series::constant(Rational(eval_int(e.ints[0], env)));
    case K::QPow: return Series::monomial(Rational(1), int_at(0));
    case K::Add: return evaluate(e.kids[0], env, O) + evaluate(e.kids[1], env, O);
    case K::Sub: return evaluate(e.kids[0], env, O) - evaluate(e.kids[1], env, O);
    case K::Mul: return evaluate(e.kids[0], env, O) * evaluate(e.kids[1], env, O);
    case K::Neg: return -evaluate(e.kids[0], env, O);
    case K::Pow: {
      Exp k = int_at(0);
      Series base = evaluate(e.kids[0], env, O);
      if (k >= 0) return base.pow(k);
      // Negative powers only for exact monomials (units after content
      // factoring); general division stays unrepresentable.
      if (!base.exact() || base.term_count() != 1)
        throw EvaluationError("negative series power requires an exact monomial base");
      auto [exp, coeff] = *base.terms().begin();
      Series inv = Series::monomial(Rational(1) / coeff, -exp);
      return inv.pow(-k);
    }
    case K::ThetaJ: return theta_j(mono_at(0), mono_at(1), O);
    case K::ThetaJInv: return theta_j_inverse(mono_at(0), mono_at(1), O);
    case K::JAB: return J(int_at(0), int_at(1), O);
    case K::JbarAB: return Jbar(int_at(0), int_at(1), O);
    case K::JSingle: return Jsingle(int_at(0), O);
    case K::JABInv: return theta_j_inverse(qpow(int_at(0)), qpow(int_at(1)), O);
    case K::JbarABInv: return theta_j_inverse(mono(-1, int_at(0)), qpow(int_at(1)), O);
    case K::JSingleInv: return invert(Jsingle(int_at(0), O));
    case K::HeckeF:
      return hecke_f(int_at(0), int_at(1), int_at(2), mono_at(0), mono_at(1), mono_at(2), O);
    case K::AppellM: return appell_m(mono_at(0), mono_at(1), mono_at(2), O);
    case K::MockF: {
      MockName name = e.name_tag == "mu2"      ? MockName::Mu2
                      : e.name_tag == "f3"     ? MockName::F3
                      : e.name_tag == "omega3" ? MockName::Omega3
                      : e.name_tag == "psi3"   ? MockName::Psi3
                                               : MockName::Chi3;
      return mock(name, mono_at(0), O);
    }
    case K::G3: return universal_g3(mono_at(0), mono_at(1), O);
    case K::Poch:
    case K::PochInv: {
      std::optional<Exp> n;
      if (!e.poch_infinite) n = int_at(0);
      Series p = pochhammer(mono_at(0), n, mono_at(1), O);
      if (e.kind == K::Poch) return p;
      if (p.is_zero()) throw NonUnitDenominator("pochinv: product vanishes");
      return invert(p.truncated(O));
    }
    case K::StringC:
      return string_c(int_at(0), int_at(1), int_at(2), int_at(3), O);
    case K::GenEuler:
      return gen_euler_check(int_at(0), int_at(1), int_at(2), int_at(3), O);
    case K::QuasiPeriod:
      return quasi_period_delta(e.name_tag == "even" ? Spin::Even : Spin::Odd, int_at(0),
                                int_at(1), int_at(2), int_at(3), int_at(4), O);
    case K::ThetaPart:
    case K::HPart: {
      Exp n = int_at(0);
      if (n != 4 && n != 5 && n != 7)
        throw EvaluationError("thetaPart/hPart: n must be 4, 5 or 7");
      HeckeSplit s = hecke_split(static_cast<int>(n), mono_at(0), mono_at(1), mono_at(2), O);
      return e.kind == K::ThetaPart ? s.theta_part : s.h;
    }
    case K::Sum: {
      Int lo = eval_int(e.ints[0], env), hi = eval_int(e.ints[1], env);
      auto body_at = [&](const Int& v) {
        Bindings inner = env;
        inner[e.name_tag] = v;
        return evaluate(e.kids[0], inner, O);
      };
      Series acc = Series::zero(Series::kExactOrder);
      if (hi >= lo) {
        if (hi - lo > 100000) throw EvaluationError("sum range too large");
        for (Int v = lo; v <= hi; ++v) acc = acc + body_at(v);
      } else if (hi == lo - 1) {
        // empty by convention
      } else {
        if (lo - hi > 100000) throw EvaluationError("sum range too large");
        for (Int v = hi + 1; v <= lo - 1; ++v) acc = acc - body_at(v);
      }
      return acc;
    }
    case K::EulerInv3: return detail::euler3_inverse(O);
  }
  throw Error("evaluate: bad node");
}

}  // namespace detail

inline Series evaluate(const ExprPtr& e, const Bindings& env, Exp O) {
  try {
    return detail::eval_node(*e, env, O);
  } catch (const EvaluationError&) {
    throw;
  } catch (const Error& err) {
    throw EvaluationError(std::string(err.what()) + "\n  in " + print_expr(e));
  }
}

}  // namespace qseries

#endif  // QSERIES_EXPR_HPP_
