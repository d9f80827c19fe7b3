#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// The ring-expression language of the command line:
///
///   ring  := term { "x" term }
///   term  := atom { "/" ideal }
///   atom  := "Zn" INT | "bool" INT | "Z" | "qpoly" INT | "(" ring ")"
///          | "trivext(" ring "," ring [ "via" map ] ")"
///          | "amalg(" ring "," ring "," map "," ideal ")"
///          | "corner(" ring "," elem ")"
///   ideal := "(" [ elem { "," elem } ] ")"
///   map   := "{" [ elem "->" elem { "," elem "->" elem } ] "}"
///   set   := satom { "x" satom }
///   satom := "<" [ elem { "," elem } ] ">" | "complement" ideal | "reg" | "units"
///          | "(" set ")"
///   elem  := arithmetic over INT, "X" INT, tuples "(e, e)" and cosets "[e]"
namespace smul::dsl {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, const std::string& message)
      : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column) {}
  /// 1-based; one past the end for unexpected end of input.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

struct ElemExpr {
  enum class Kind { Integer, Variable, Tuple, Coset, Add, Sub, Mul, Neg, Pow };
  Kind kind = Kind::Integer;
  std::int64_t value = 0;  // integer literal, variable index, or exponent
  std::vector<ElemExpr> kids;

  friend bool operator==(const ElemExpr&, const ElemExpr&) = default;
};

using ElemList = std::vector<ElemExpr>;
using MapExpr = std::vector<std::pair<ElemExpr, ElemExpr>>;

struct RingExpr {
  enum class Kind { Zn, Bool, Z, QPoly, Product, Quotient, TrivExt, Amalg, Corner };
  Kind kind = Kind::Zn;
  std::int64_t n = 0;
  std::vector<RingExpr> kids;
  ElemList ideal;       // Quotient, Amalg
  MapExpr map;          // TrivExt (module action), Amalg
  bool has_map = false; // TrivExt: "via" present
  ElemExpr element;     // Corner

  friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

struct SetExpr {
  enum class Kind { Generated, Complement, Regular, Units, Product };
  Kind kind = Kind::Generated;
  ElemList elems;
  std::vector<SetExpr> kids;

  friend bool operator==(const SetExpr&, const SetExpr&) = default;
};

RingExpr parse_ring(const std::string& text);
SetExpr parse_set(const std::string& text);
ElemList parse_ideal(const std::string& text);
ElemExpr parse_elem(const std::string& text);

std::string print(const RingExpr& r);
std::string print(const SetExpr& s);
std::string print(const ElemExpr& e);
std::string print_ideal(const ElemList& gens);

}  // namespace smul::dsl
