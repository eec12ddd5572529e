#include "sigmaper/errors.hpp"
#include "sigmaper/orderings.hpp"

#include <cctype>
#include <sstream>

namespace sigma {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  PeriodSetExpr parse() {
    PeriodSetExpr e;
    if (s_.empty()) fail("empty expression");
    e.terms.push_back(term());
    while (peek() == '+') {
      ++pos_;
      e.terms.push_back(term());
    }
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return e;
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, "expression: " + msg);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "' at position " + std::to_string(pos_));
    ++pos_;
  }
  bool accept(const std::string& word) {
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  // Characters up to the next delimiter.
  std::string token() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::string(",;(){}+*").find(s_[pos_]) == std::string::npos) ++pos_;
    if (start == pos_) fail("missing value at position " + std::to_string(start));
    return s_.substr(start, pos_ - start);
  }
  long integer() { return to_long(parse_q(token()).get_num()); }

  RealValue real() {
    if (accept("irr(")) {
      Q lo = parse_q(token());
      expect(',');
      Q hi = parse_q(token());
      expect(')');
      if (!(lo < hi)) fail("irrational bracket needs lo < hi");
      return RealValue::irr(lo, hi);
    }
    return RealValue::rational(parse_q(token()));
  }

  ShValue sh() {
    if (!accept("sh(")) fail("expected sh(...)");
    ShValue v = ShValue::parse(token());
    expect(')');
    return v;
  }

  ExprTerm tail(long q) {
    expect('(');
    ScaledTailTerm t;
    t.q = q;
    t.t = integer();
    expect(',');
    std::string m = token();
    t.top = (m == "inf" || m == "2^inf") ? BaldwinValue::inf() : BaldwinValue::nat(to_long(parse_q(m).get_num()));
    expect(')');
    return t;
  }

  ExprTerm term() {
    if (accept("L(")) {
      LambdaTerm t;
      t.rho = real();
      expect(';');
      t.tail = sh();
      expect(')');
      return t;
    }
    if (accept("M(")) {
      MTerm t;
      t.c = real();
      expect(',');
      t.d = real();
      expect(')');
      return t;
    }
    if (accept("F{")) {
      FiniteTerm t;
      if (peek() != '}') {
        t.elems.insert(integer());
        while (peek() == ',') {
          ++pos_;
          t.elems.insert(integer());
        }
      }
      expect('}');
      return t;
    }
    if (accept("C(")) {
      CofiniteTerm t{integer()};
      expect(')');
      return t;
    }
    if (accept("T")) return tail(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      long q = integer();
      expect('*');
      if (!accept("T")) fail("expected T after '*'");
      return tail(q);
    }
    fail("unknown term at position " + std::to_string(pos_));
  }
};

}  // namespace

PeriodSetExpr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string PeriodSetExpr::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms) {
    if (!first) os << " + ";
    first = false;
    if (auto* f = std::get_if<FiniteTerm>(&term)) {
      os << "F{";
      bool f1 = true;
      for (long n : f->elems) {
        if (!f1) os << ",";
        os << n;
        f1 = false;
      }
      os << "}";
    } else if (auto* c = std::get_if<CofiniteTerm>(&term)) {
      os << "C(" << c->from << ")";
    } else if (auto* l = std::get_if<LambdaTerm>(&term)) {
      os << "L(" << l->rho.str() << "; sh(" << l->tail.str() << "))";
    } else if (auto* m = std::get_if<MTerm>(&term)) {
      os << "M(" << m->c.str() << "," << m->d.str() << ")";
    } else if (auto* s = std::get_if<ScaledTailTerm>(&term)) {
      if (s->q != 1) os << s->q << "*";
      os << "T(" << s->t << "," << (s->top.t_inf ? std::string("inf") : std::to_string(s->top.n)) << ")";
    }
  }
  return os.str();
}

}  // namespace sigma
