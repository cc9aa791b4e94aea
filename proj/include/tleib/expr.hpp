#pragma once

#include <cctype>
#include <optional>
#include <set>
#include <string>

#include "tleib/ratfunc.hpp"

namespace tleib {

// Recursive-descent parser for coefficient expressions:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-')* atom
//   atom   := INT | IDENT | 'i' | 'sqrt' '(' '-'? INT ')' | '(' expr ')'
// 'i' requires -1 among the field roots; sqrt(k) resolves against the
// squarefree core of k (sqrt(8) = 2*sqrt(2), sqrt(4) = 2).  Identifiers must
// be declared parameters.
class ExprParser {
 public:
  ExprParser(const Field& field, const std::set<std::string>& params)
      : field_(field), params_(params) {}

  RatFunc parse(const std::string& text) const {
    Cursor c{text, 0};
    RatFunc v = parse_expr(c);
    skip_ws(c);
    if (c.pos != c.text.size())
      throw ParseError("trailing input at offset " + std::to_string(c.pos) + " in '" + text + "'");
    return v;
  }

 private:
  struct Cursor {
    const std::string& text;
    std::size_t pos;
  };

  static void skip_ws(Cursor& c) {
    while (c.pos < c.text.size() && std::isspace(static_cast<unsigned char>(c.text[c.pos])))
      ++c.pos;
  }
  static bool eat(Cursor& c, char ch) {
    skip_ws(c);
    if (c.pos < c.text.size() && c.text[c.pos] == ch) {
      ++c.pos;
      return true;
    }
    return false;
  }
  static char peek(Cursor& c) {
    skip_ws(c);
    return c.pos < c.text.size() ? c.text[c.pos] : '\0';
  }

  RatFunc parse_expr(Cursor& c) const {
    RatFunc v = parse_term(c);
    for (;;) {
      if (eat(c, '+'))
        v += parse_term(c);
      else if (eat(c, '-'))
        v -= parse_term(c);
      else
        return v;
    }
  }

  RatFunc parse_term(Cursor& c) const {
    RatFunc v = parse_factor(c);
    for (;;) {
      if (eat(c, '*'))
        v *= parse_factor(c);
      else if (eat(c, '/'))
        v = v / parse_factor(c);
      else
        return v;
    }
  }

  RatFunc parse_factor(Cursor& c) const {
    bool neg = false;
    for (;;) {
      if (eat(c, '-'))
        neg = !neg;
      else if (eat(c, '+'))
        ;
      else
        break;
    }
    RatFunc v = parse_atom(c);
    return neg ? -v : v;
  }

  RatFunc parse_atom(Cursor& c) const {
    skip_ws(c);
    if (c.pos >= c.text.size()) throw ParseError("unexpected end of expression");
    char ch = c.text[c.pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) return RatFunc::constant(field_, Rat(read_int(c)));
    if (ch == '(') {
      ++c.pos;
      RatFunc v = parse_expr(c);
      if (!eat(c, ')')) throw ParseError("missing ')'");
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string id = read_ident(c);
      if (id == "i") return root_value(-1);
      if (id == "sqrt") {
        if (!eat(c, '(')) throw ParseError("sqrt requires '('");
        bool neg = eat(c, '-');
        skip_ws(c);
        if (c.pos >= c.text.size() || !std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
          throw ParseError("sqrt requires an integer literal");
        Int k = read_int(c);
        if (!eat(c, ')')) throw ParseError("missing ')' after sqrt");
        return sqrt_value(neg ? Int(-k) : k);
      }
      if (!params_.count(id)) throw UndeclaredParameter("undeclared parameter '" + id + "'");
      return RatFunc::variable(field_, id);
    }
    throw ParseError(std::string("unexpected character '") + ch + "'");
  }

  static Int read_int(Cursor& c) {
    std::string digits;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
      digits += c.text[c.pos++];
    return Int(digits);
  }

  static std::string read_ident(Cursor& c) {
    std::string id;
    while (c.pos < c.text.size() &&
           (std::isalnum(static_cast<unsigned char>(c.text[c.pos])) || c.text[c.pos] == '_'))
      id += c.text[c.pos++];
    return id;
  }

  RatFunc root_value(long long core) const {
    std::size_t idx = field_.root_index(core);
    if (idx == std::size_t(-1))
      throw UndeclaredRoot("root " + std::to_string(core) + " not adjoined to the field");
    return RatFunc::constant(field_, FieldElement::root(field_, idx));
  }

  RatFunc sqrt_value(const Int& k) const {
    auto [core_i, scale_i] = squarefree_core(k);
    if (core_i == 0) return RatFunc::constant(field_, Rat(0));
    Rat scale(scale_i);
    if (core_i == 1) return RatFunc::constant(field_, scale);
    long long core = core_i.convert_to<long long>();
    if (field_.root_index(core) != std::size_t(-1))
      return RatFunc::constant(field_, scale) * root_value(core);
    if (core < 0 && field_.root_index(-1) != std::size_t(-1) &&
        (core == -1 || field_.root_index(-core) != std::size_t(-1))) {
      RatFunc v = RatFunc::constant(field_, scale) * root_value(-1);
      if (core != -1) v *= root_value(-core);
      return v;
    }
    throw UndeclaredRoot("sqrt(" + k.str() + ") not expressible over the declared roots");
  }

  const Field& field_;
  const std::set<std::string>& params_;
};

inline RatFunc parse_expr(const Field& f, const std::set<std::string>& params,
                          const std::string& text) {
  return ExprParser(f, params).parse(text);
}

}  // namespace tleib
