#include "slicekit/rep_expr.hpp"

#include <cctype>
#include <string>

namespace slicekit {

namespace {

class Parser {
 public:
  Parser(const CyclicGroup& group, std::string_view text) : group_(group) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  VirtualRep parse() {
    if (text_.empty()) throw invalid_input("rep expression: empty input");
    VirtualRep total(group_);
    i64 sign = consume_sign().value_or(1);
    total += sign * parse_term();
    while (pos_ < text_.size()) {
      auto next_sign = consume_sign();
      if (!next_sign) {
        fail("expected '+' or '-'");
      }
      total += *next_sign * parse_term();
    }
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw invalid_input("rep expression: " + what + " at position " +
                        std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  bool at_digit() const {
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::optional<i64> consume_sign() {
    if (pos_ >= text_.size()) return std::nullopt;
    if (text_[pos_] == '+') {
      ++pos_;
      return 1;
    }
    if (text_[pos_] == '-') {
      ++pos_;
      return -1;
    }
    return std::nullopt;
  }

  i64 parse_unsigned() {
    if (!at_digit()) fail("expected a number");
    i64 value = 0;
    while (at_digit()) {
      value = value * 10 + (text_[pos_] - '0');
      if (value < 0) fail("number too large");
      ++pos_;
    }
    return value;
  }

  i64 parse_integer() {
    i64 sign = consume_sign().value_or(1);
    return sign * parse_unsigned();
  }

  bool consume_word(std::string_view word) {
    if (text_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  VirtualRep parse_term() {
    if (at_digit()) {
      i64 coeff = parse_unsigned();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        return coeff * parse_atom();
      }
      // A bare integer is that many trivial summands.
      return canonicalize(group_, {RepTerm::trivial(coeff)});
    }
    return parse_atom();
  }

  VirtualRep parse_atom() {
    // "rhobar" before "rho": longest match wins.
    if (consume_word("rhobar")) return reduced_regular(group_);
    if (consume_word("rho")) return regular_rep(group_);
    if (consume_word("trivial")) {
      return canonicalize(group_, {RepTerm::trivial(1)});
    }
    if (consume_word("sign")) return canonicalize(group_, {RepTerm::sign(1)});
    if (consume_word("lambda")) {
      expect('(');
      i64 k = parse_integer();
      expect(')');
      return canonicalize(group_, {RepTerm::lambda(k, 1)});
    }
    if (consume_word("Vj") || consume_word("vj")) {
      expect('(');
      i64 p = parse_integer();
      expect(',');
      i64 k = parse_integer();
      expect(',');
      i64 j = parse_integer();
      expect(')');
      VirtualRep rep = v_j(p, k, j);
      if (rep.group() != group_) {
        throw invalid_input("rep expression: Vj(" + std::to_string(p) + "," +
                            std::to_string(k) + "," + std::to_string(j) +
                            ") lives over C_" +
                            std::to_string(rep.group().order()) +
                            ", not C_" + std::to_string(group_.order()));
      }
      return rep;
    }
    fail("unknown symbol");
  }

  CyclicGroup group_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

VirtualRep parse_rep_expr(const CyclicGroup& group, std::string_view text) {
  return Parser(group, text).parse();
}

}  // namespace slicekit
