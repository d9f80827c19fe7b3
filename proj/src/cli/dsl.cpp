#include "smul/dsl.hpp"

#include <cctype>

namespace smul::dsl {

namespace {

struct Token {
  enum class Kind { Int, Ident, Sym, End };
  Kind kind;
  std::string text;
  std::int64_t value = 0;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, s[j] - '0', &v))
          throw ParseError(col, "integer literal too large");
        ++j;
      }
      out.push_back({Token::Kind::Int, s.substr(i, j - i), v, col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), 0, col});
      i = j;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Token::Kind::Sym, "->", 0, col});
      i += 2;
    } else if (std::string_view("()[]<>,/{}+-*^").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Sym, std::string(1, c), 0, col});
      ++i;
    } else {
      throw ParseError(col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::End, "", 0, s.size() + 1});
  return out;
}

bool is_variable(const std::string& ident) {
  if (ident.size() < 2 || ident[0] != 'X') return false;
  for (std::size_t i = 1; i < ident.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(ident[i]))) return false;
  return true;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  RingExpr ring() {
    RingExpr left = term();
    while (peek_ident("x")) {
      next();
      RingExpr right = term();
      RingExpr p;
      p.kind = RingExpr::Kind::Product;
      p.kids = {std::move(left), std::move(right)};
      left = std::move(p);
    }
    return left;
  }

  SetExpr set() {
    SetExpr left = set_atom();
    while (peek_ident("x")) {
      next();
      SetExpr right = set_atom();
      SetExpr p;
      p.kind = SetExpr::Kind::Product;
      p.kids = {std::move(left), std::move(right)};
      left = std::move(p);
    }
    return left;
  }

  ElemList ideal() {
    expect_sym("(", "expected '(' to start an ideal");
    ElemList out;
    if (!peek_sym(")")) {
      out.push_back(elem());
      while (peek_sym(",")) {
        next();
        out.push_back(elem());
      }
    }
    expect_sym(")", "expected ',' or ')' in ideal");
    return out;
  }

  ElemExpr elem() {
    ElemExpr left;
    if (peek_sym("-")) {
      next();
      left.kind = ElemExpr::Kind::Neg;
      left.kids = {product()};
    } else {
      left = product();
    }
    while (peek_sym("+") || peek_sym("-")) {
      const bool plus = next().text == "+";
      ElemExpr e;
      e.kind = plus ? ElemExpr::Kind::Add : ElemExpr::Kind::Sub;
      e.kids = {std::move(left), product()};
      left = std::move(e);
    }
    return left;
  }

  void finish(const char* what) {
    if (cur().kind != Token::Kind::End) throw ParseError(cur().column, std::string("unexpected '") + cur().text + "' after " + what);
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool peek_sym(const char* s) const { return cur().kind == Token::Kind::Sym && cur().text == s; }
  bool peek_ident(const char* s) const { return cur().kind == Token::Kind::Ident && cur().text == s; }
  void expect_sym(const char* s, const char* message) {
    if (!peek_sym(s)) throw ParseError(cur().column, message);
    next();
  }
  std::int64_t expect_int(const char* message) {
    if (cur().kind != Token::Kind::Int) throw ParseError(cur().column, message);
    return next().value;
  }

  RingExpr term() {
    RingExpr left = atom();
    while (peek_sym("/")) {
      next();
      RingExpr q;
      q.kind = RingExpr::Kind::Quotient;
      q.ideal = ideal();
      q.kids = {std::move(left)};
      left = std::move(q);
    }
    return left;
  }

  RingExpr atom() {
    const Token& t = cur();
    RingExpr r;
    if (peek_sym("(")) {
      next();
      r = ring();
      expect_sym(")", "expected ')' to close ring");
      return r;
    }
    if (t.kind != Token::Kind::Ident) throw ParseError(t.column, "expected a ring");
    const std::string name = next().text;
    if (name == "Zn") {
      r.kind = RingExpr::Kind::Zn;
      r.n = expect_int("expected the modulus after 'Zn'");
    } else if (name == "bool") {
      r.kind = RingExpr::Kind::Bool;
      r.n = expect_int("expected the number of atoms after 'bool'");
    } else if (name == "Z") {
      r.kind = RingExpr::Kind::Z;
    } else if (name == "qpoly") {
      r.kind = RingExpr::Kind::QPoly;
      r.n = expect_int("expected the index bound after 'qpoly'");
    } else if (name == "trivext") {
      r.kind = RingExpr::Kind::TrivExt;
      expect_sym("(", "expected '(' after 'trivext'");
      r.kids.push_back(ring());
      expect_sym(",", "expected ',' after the base ring");
      r.kids.push_back(ring());
      if (peek_ident("via")) {
        next();
        r.has_map = true;
        r.map = map();
      }
      expect_sym(")", "expected ')' to close trivext");
    } else if (name == "amalg") {
      r.kind = RingExpr::Kind::Amalg;
      expect_sym("(", "expected '(' after 'amalg'");
      r.kids.push_back(ring());
      expect_sym(",", "expected ',' after the first ring");
      r.kids.push_back(ring());
      expect_sym(",", "expected ',' before the map");
      r.map = map();
      expect_sym(",", "expected ',' before the ideal");
      r.ideal = ideal();
      expect_sym(")", "expected ')' to close amalg");
    } else if (name == "corner") {
      r.kind = RingExpr::Kind::Corner;
      expect_sym("(", "expected '(' after 'corner'");
      r.kids.push_back(ring());
      expect_sym(",", "expected ',' before the idempotent");
      r.element = elem();
      expect_sym(")", "expected ')' to close corner");
    } else {
      throw ParseError(t.column, "unknown ring '" + name + "'");
    }
    return r;
  }

  MapExpr map() {
    expect_sym("{", "expected '{' to start a map");
    MapExpr out;
    if (!peek_sym("}")) {
      while (true) {
        ElemExpr a = elem();
        expect_sym("->", "expected '->' in map");
        ElemExpr b = elem();
        out.emplace_back(std::move(a), std::move(b));
        if (!peek_sym(",")) break;
        next();
      }
    }
    expect_sym("}", "expected ',' or '}' in map");
    return out;
  }

  SetExpr set_atom() {
    SetExpr s;
    if (peek_sym("<")) {
      next();
      s.kind = SetExpr::Kind::Generated;
      if (!peek_sym(">")) {
        s.elems.push_back(elem());
        while (peek_sym(",")) {
          next();
          s.elems.push_back(elem());
        }
      }
      expect_sym(">", "expected ',' or '>' in set");
      return s;
    }
    if (peek_sym("(")) {
      next();
      s = set();
      expect_sym(")", "expected ')' to close set");
      return s;
    }
    if (peek_ident("complement")) {
      next();
      s.kind = SetExpr::Kind::Complement;
      s.elems = ideal();
      return s;
    }
    if (peek_ident("reg")) {
      next();
      s.kind = SetExpr::Kind::Regular;
      return s;
    }
    if (peek_ident("units")) {
      next();
      s.kind = SetExpr::Kind::Units;
      return s;
    }
    throw ParseError(cur().column, "expected a set: '<...>', 'complement (...)', 'reg' or 'units'");
  }

  ElemExpr product() {
    ElemExpr left = power();
    while (peek_sym("*")) {
      next();
      ElemExpr e;
      e.kind = ElemExpr::Kind::Mul;
      e.kids = {std::move(left), power()};
      left = std::move(e);
    }
    return left;
  }

  ElemExpr power() {
    ElemExpr base = primary();
    if (peek_sym("^")) {
      next();
      ElemExpr e;
      e.kind = ElemExpr::Kind::Pow;
      e.value = expect_int("expected an exponent after '^'");
      e.kids = {std::move(base)};
      return e;
    }
    return base;
  }

  ElemExpr primary() {
    const Token& t = cur();
    ElemExpr e;
    if (t.kind == Token::Kind::Int) {
      e.kind = ElemExpr::Kind::Integer;
      e.value = next().value;
      return e;
    }
    if (t.kind == Token::Kind::Ident && is_variable(t.text)) {
      e.kind = ElemExpr::Kind::Variable;
      try {
        e.value = std::stoll(t.text.substr(1));
      } catch (const std::exception&) {
        throw ParseError(t.column, "variable index too large");
      }
      next();
      return e;
    }
    if (peek_sym("(")) {
      next();
      ElemList items{elem()};
      while (peek_sym(",")) {
        next();
        items.push_back(elem());
      }
      expect_sym(")", "expected ',' or ')' in element");
      if (items.size() == 1) return std::move(items.front());
      e.kind = ElemExpr::Kind::Tuple;
      e.kids = std::move(items);
      return e;
    }
    if (peek_sym("[")) {
      next();
      e.kind = ElemExpr::Kind::Coset;
      e.kids = {elem()};
      expect_sym("]", "expected ']' to close coset");
      return e;
    }
    throw ParseError(t.column, "expected an element");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const ElemExpr& e) {
  switch (e.kind) {
    case ElemExpr::Kind::Add:
    case ElemExpr::Kind::Sub:
    case ElemExpr::Kind::Neg: return 1;
    case ElemExpr::Kind::Mul: return 2;
    case ElemExpr::Kind::Pow: return 3;
    default: return 4;
  }
}

/// `leftmost`: the expression starts a sum, where a leading '-' is allowed.
std::string print_elem(const ElemExpr& e, int min_prec, bool leftmost) {
  std::string s;
  switch (e.kind) {
    case ElemExpr::Kind::Integer: s = std::to_string(e.value); break;
    case ElemExpr::Kind::Variable: s = "X" + std::to_string(e.value); break;
    case ElemExpr::Kind::Tuple:
      s = "(";
      for (std::size_t i = 0; i < e.kids.size(); ++i) s += (i ? "," : "") + print_elem(e.kids[i], 0, true);
      return s + ")";
    case ElemExpr::Kind::Coset: return "[" + print_elem(e.kids[0], 0, true) + "]";
    case ElemExpr::Kind::Add: s = print_elem(e.kids[0], 1, leftmost) + " + " + print_elem(e.kids[1], 2, false); break;
    case ElemExpr::Kind::Sub: s = print_elem(e.kids[0], 1, leftmost) + " - " + print_elem(e.kids[1], 2, false); break;
    case ElemExpr::Kind::Neg:
      s = "-" + print_elem(e.kids[0], 2, false);
      if (!leftmost) return "(" + s + ")";
      break;
    case ElemExpr::Kind::Mul: s = print_elem(e.kids[0], 2, false) + "*" + print_elem(e.kids[1], 3, false); break;
    case ElemExpr::Kind::Pow: s = print_elem(e.kids[0], 4, false) + "^" + std::to_string(e.value); break;
  }
  if (precedence(e) < min_prec) return "(" + s + ")";
  return s;
}

std::string print_map(const MapExpr& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i)
    out += (i ? ", " : "") + print(m[i].first) + "->" + print(m[i].second);
  return out + "}";
}

std::string print_set(const SetExpr& s, bool nested) {
  switch (s.kind) {
    case SetExpr::Kind::Generated: {
      std::string out = "<";
      for (std::size_t i = 0; i < s.elems.size(); ++i) out += (i ? ", " : "") + print(s.elems[i]);
      return out + ">";
    }
    case SetExpr::Kind::Complement: return "complement " + print_ideal(s.elems);
    case SetExpr::Kind::Regular: return "reg";
    case SetExpr::Kind::Units: return "units";
    case SetExpr::Kind::Product: {
      std::string out = print_set(s.kids[0], false) + " x " + print_set(s.kids[1], true);
      return nested ? "(" + out + ")" : out;
    }
  }
  return "";
}

}  // namespace

RingExpr parse_ring(const std::string& text) {
  Parser p(text);
  RingExpr r = p.ring();
  p.finish("ring expression");
  return r;
}

SetExpr parse_set(const std::string& text) {
  Parser p(text);
  SetExpr s = p.set();
  p.finish("set expression");
  return s;
}

ElemList parse_ideal(const std::string& text) {
  Parser p(text);
  ElemList gens = p.ideal();
  p.finish("ideal");
  return gens;
}

ElemExpr parse_elem(const std::string& text) {
  Parser p(text);
  ElemExpr e = p.elem();
  p.finish("element");
  return e;
}

std::string print(const ElemExpr& e) { return print_elem(e, 0, true); }

std::string print_ideal(const ElemList& gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + print(gens[i]);
  return out + ")";
}

std::string print(const SetExpr& s) { return print_set(s, false); }

std::string print(const RingExpr& r) {
  switch (r.kind) {
    case RingExpr::Kind::Zn: return "Zn " + std::to_string(r.n);
    case RingExpr::Kind::Bool: return "bool " + std::to_string(r.n);
    case RingExpr::Kind::Z: return "Z";
    case RingExpr::Kind::QPoly: return "qpoly " + std::to_string(r.n);
    case RingExpr::Kind::Product: {
      const auto& right = r.kids[1];
      const std::string rs = right.kind == RingExpr::Kind::Product ? "(" + print(right) + ")" : print(right);
      return print(r.kids[0]) + " x " + rs;
    }
    case RingExpr::Kind::Quotient: {
      const auto& base = r.kids[0];
      const bool wrap = base.kind == RingExpr::Kind::Product || base.kind == RingExpr::Kind::Quotient;
      return (wrap ? "(" + print(base) + ")" : print(base)) + " / " + print_ideal(r.ideal);
    }
    case RingExpr::Kind::TrivExt:
      return "trivext(" + print(r.kids[0]) + ", " + print(r.kids[1]) + (r.has_map ? " via " + print_map(r.map) : "") +
             ")";
    case RingExpr::Kind::Amalg:
      return "amalg(" + print(r.kids[0]) + ", " + print(r.kids[1]) + ", " + print_map(r.map) + ", " +
             print_ideal(r.ideal) + ")";
    case RingExpr::Kind::Corner: return "corner(" + print(r.kids[0]) + ", " + print(r.element) + ")";
  }
  return "";
}

}  // namespace smul::dsl
