#pragma once

// Parenthesized prefix syntax:
//   f ::= (and f f) | (or f f) | (not f) | (exists1 v f) | (forall1 v f)
//       | (exists2 V f) | (forall2 V f) | (lt v v) | (eq v v)
//       | (letter-l v) | (letter-r v) | (in v V) | true | false

#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "succinct/error.hpp"
#include "succinct/formula.hpp"

namespace succinct {

inline const char* keyword(Kind k) {
  switch (k) {
    case Kind::Lt: return "lt";
    case Kind::Eq: return "eq";
    case Kind::LetterL: return "letter-l";
    case Kind::LetterR: return "letter-r";
    case Kind::In: return "in";
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Not: return "not";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    case Kind::Exists1: return "exists1";
    case Kind::Forall1: return "forall1";
    case Kind::Exists2: return "exists2";
    case Kind::Forall2: return "forall2";
  }
  return "?";
}

inline void print(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case Kind::True:
    case Kind::False: os << keyword(f.kind()); return;
    case Kind::LetterL:
    case Kind::LetterR: os << '(' << keyword(f.kind()) << ' ' << f.arg0().name() << ')'; return;
    case Kind::Lt:
    case Kind::Eq:
    case Kind::In:
      os << '(' << keyword(f.kind()) << ' ' << f.arg0().name() << ' ' << f.arg1().name() << ')';
      return;
    case Kind::Not:
      os << "(not ";
      print(os, f.child());
      os << ')';
      return;
    case Kind::And:
    case Kind::Or:
      os << '(' << keyword(f.kind()) << ' ';
      print(os, f.lhs());
      os << ' ';
      print(os, f.rhs());
      os << ')';
      return;
    default:
      os << '(' << keyword(f.kind()) << ' ' << f.binder().name() << ' ';
      print(os, f.child());
      os << ')';
      return;
  }
}

inline std::string print(const Formula& f) {
  std::ostringstream os;
  print(os, f);
  return os.str();
}

enum class ParseMode { Open, Sentence };

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse_all(ParseMode mode) {
    Formula f = parse_formula();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
    if (mode == ParseMode::Sentence && !f.is_sentence())
      throw UnboundVariableError("unbound variable '" + f.free_variables().front().name() + "'");
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool token_char(char c) const { return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')'; }

  std::string_view word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && token_char(text_[pos_])) ++pos_;
    if (start == pos_) {
      if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
      throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(std::string("expected '") + c + "' but input ended", pos_);
    if (text_[pos_] != c) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Var variable(Sort sort) {
    std::size_t at = (skip_ws(), pos_);
    auto name = word();
    if (!valid_identifier(name)) throw SyntaxError("invalid identifier '" + std::string(name) + "'", at);
    Var v(name);
    if (v.sort() != sort) {
      throw SortError("'" + std::string(name) + "' at position " + std::to_string(at) + " is " +
                      (v.first_order() ? "first-order" : "second-order") + " but a " +
                      (sort == Sort::First ? "first-order" : "second-order") + " variable is required");
    }
    return v;
  }

  Formula parse_formula() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    if (text_[pos_] != '(') {
      std::size_t at = pos_;
      auto w = word();
      if (w == "true") return Formula::top();
      if (w == "false") return Formula::bottom();
      throw SyntaxError("unexpected token '" + std::string(w) + "'", at);
    }
    ++pos_;
    std::size_t at = (skip_ws(), pos_);
    auto head = word();
    Formula out;
    if (head == "and" || head == "or") {
      Formula a = parse_formula();
      Formula b = parse_formula();
      out = head == "and" ? Formula::land(a, b) : Formula::lor(a, b);
    } else if (head == "not") {
      out = Formula::negate(parse_formula());
    } else if (head == "exists1" || head == "forall1") {
      Var x = variable(Sort::First);
      Formula body = parse_formula();
      out = head == "exists1" ? Formula::exists(x, body) : Formula::forall(x, body);
    } else if (head == "exists2" || head == "forall2") {
      Var x = variable(Sort::Second);
      Formula body = parse_formula();
      out = head == "exists2" ? Formula::exists(x, body) : Formula::forall(x, body);
    } else if (head == "lt" || head == "eq") {
      Var x = variable(Sort::First);
      Var y = variable(Sort::First);
      out = head == "lt" ? Formula::lt(x, y) : Formula::eq(x, y);
    } else if (head == "letter-l" || head == "letter-r") {
      Var x = variable(Sort::First);
      out = head == "letter-l" ? Formula::letter_l(x) : Formula::letter_r(x);
    } else if (head == "in") {
      Var x = variable(Sort::First);
      Var set = variable(Sort::Second);
      out = Formula::in(x, set);
    } else {
      throw SyntaxError("unknown operator '" + std::string(head) + "'", at);
    }
    expect(')');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the prefix syntax. In sentence mode any free variable is an error.
inline Formula parse(std::string_view text, ParseMode mode = ParseMode::Open) {
  return detail::FormulaParser(text).parse_all(mode);
}

}  // namespace succinct
