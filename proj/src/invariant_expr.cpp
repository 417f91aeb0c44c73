#include "weyl/invariant_expr.hpp"

#include "weyl/errors.hpp"

#include <algorithm>
#include <cctype>

namespace weyl {

int Monomial::degree() const {
  int d = t_power;
  for (const auto& f : factors) d += f.index;
  return d;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.t_power != b.t_power) return a.t_power < b.t_power;
  return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end());
}

InvariantExpr InvariantExpr::one() {
  InvariantExpr e;
  e.terms_.push_back(Monomial{});
  return e;
}

InvariantExpr InvariantExpr::t(int k) {
  if (k < 0) throw UsageError("negative power of t");
  InvariantExpr e;
  e.terms_.push_back(Monomial{k, {}});
  return e;
}

InvariantExpr InvariantExpr::sw(const RepresentationPtr& rep, int i) {
  if (!rep) throw UsageError("Stiefel-Whitney class of a null representation");
  if (i < 0) throw UsageError("negative Stiefel-Whitney index");
  if (i == 0) return one();
  if (i > rep->dimension()) return zero();
  InvariantExpr e;
  e.terms_.push_back(Monomial{0, {SwSymbol{rep, i}}});
  return e;
}

void InvariantExpr::normalize() {
  for (auto& m : terms_) std::sort(m.factors.begin(), m.factors.end());
  std::sort(terms_.begin(), terms_.end());
  std::vector<Monomial> out;
  for (auto& m : terms_) {
    if (!out.empty() && out.back() == m)
      out.pop_back();  // coefficients live in F2
    else
      out.push_back(std::move(m));
  }
  terms_ = std::move(out);
}

bool InvariantExpr::is_homogeneous() const {
  for (const auto& m : terms_)
    if (m.degree() != terms_.front().degree()) return false;
  return true;
}

int InvariantExpr::degree() const {
  if (terms_.empty()) return 0;
  if (!is_homogeneous()) throw UsageError("expression '" + str() + "' is not homogeneous");
  return terms_.front().degree();
}

std::string InvariantExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : terms_) {
    if (!out.empty()) out += " + ";
    std::vector<std::string> parts;
    if (m.t_power == 1) parts.emplace_back("t");
    if (m.t_power > 1) parts.push_back("t^" + std::to_string(m.t_power));
    for (const auto& f : m.factors) parts.push_back("w" + std::to_string(f.index) + "(" + f.rep->descriptor() + ")");
    if (parts.empty()) parts.emplace_back("1");
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  }
  return out;
}

InvariantExpr operator+(const InvariantExpr& a, const InvariantExpr& b) {
  InvariantExpr e;
  e.terms_ = a.terms_;
  e.terms_.insert(e.terms_.end(), b.terms_.begin(), b.terms_.end());
  e.normalize();
  return e;
}

InvariantExpr operator*(const InvariantExpr& a, const InvariantExpr& b) {
  InvariantExpr e;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      Monomial m{x.t_power + y.t_power, x.factors};
      m.factors.insert(m.factors.end(), y.factors.begin(), y.factors.end());
      e.terms_.push_back(std::move(m));
    }
  e.normalize();
  return e;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RepresentationResolver& resolve) : text_(text), resolve_(resolve) {}

  InvariantExpr parse() {
    InvariantExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse invariant '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  InvariantExpr expr() {
    InvariantExpr e = term();
    while (eat('+')) e = e + term();
    return e;
  }
  InvariantExpr term() {
    InvariantExpr e = power();
    while (eat('*')) e = e * power();
    return e;
  }
  InvariantExpr power() {
    InvariantExpr base = atom();
    if (!eat('^')) return base;
    const int k = integer();
    InvariantExpr out = InvariantExpr::one();
    for (int i = 0; i < k; ++i) out = out * base;
    return out;
  }
  InvariantExpr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      InvariantExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return c == '0' ? InvariantExpr::zero() : InvariantExpr::one();
    }
    if (c == 't' || c == 'T') {
      ++pos_;
      return InvariantExpr::t(1);
    }
    if (c == 'w' || c == 'W') {
      ++pos_;
      const int i = integer();
      if (!eat('(')) fail("expected '(' after w" + std::to_string(i));
      const std::size_t start = pos_;
      int depth = 1;
      while (pos_ < text_.size() && depth > 0) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth != 0) fail("unbalanced parentheses");
      return InvariantExpr::sw(resolve_(text_.substr(start, pos_ - 1 - start)), i);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RepresentationResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

InvariantExpr parse_invariant(std::string_view text, const RepresentationResolver& resolve) {
  return Parser(text, resolve).parse();
}

}  // namespace weyl
