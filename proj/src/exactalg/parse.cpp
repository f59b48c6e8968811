#include "gws/exactalg/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "gws/error.hpp"

namespace gws {

namespace {

// A product kept as separate factors so that dividing by it inverts each
// factor on its own.
using Factors = std::vector<RatFunc>;

class Parser {
 public:
  Parser(const RegistryPtr& reg, std::string_view text) : reg_(reg), s_(text) {}

  RatFunc run() {
    RatFunc out = product(expr());
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc product(const Factors& fs) const {
    RatFunc out(reg_, Rational(1));
    for (const auto& f : fs) out *= f;
    return out;
  }

  Factors expr() {
    std::vector<Factors> terms;
    std::vector<bool> negative;
    bool neg = accept('-');
    if (!neg) accept('+');
    terms.push_back(term());
    negative.push_back(neg);
    while (true) {
      if (accept('+'))
        negative.push_back(false);
      else if (accept('-'))
        negative.push_back(true);
      else
        break;
      terms.push_back(term());
    }
    if (terms.size() == 1) {
      if (negative[0]) terms[0].push_back(RatFunc(reg_, Rational(-1)));
      return terms[0];
    }
    RatFunc sum(reg_);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      RatFunc t = product(terms[k]);
      sum += negative[k] ? -t : t;
    }
    return {sum};
  }

  Factors term() {
    Factors out = power();
    while (true) {
      if (accept('*')) {
        for (auto& f : power()) out.push_back(std::move(f));
      } else if (accept('/')) {
        for (const auto& f : power()) {
          if (f.is_zero()) throw DivisionByZero();
          out.push_back(f.inverse());
        }
      } else {
        break;
      }
    }
    return out;
  }

  Factors power() {
    Factors base = primary();
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    Factors out;
    if (e == 0) return {RatFunc(reg_, Rational(1))};
    for (const auto& f : base) {
      RatFunc g = neg ? f.inverse() : f;
      for (int k = 0; k < e; ++k) out.push_back(g);
    }
    return out;
  }

  Factors primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Factors inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      Factors inner = power();
      inner.push_back(RatFunc(reg_, Rational(-1)));
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {RatFunc(reg_, Rational(Integer(std::string(s_.substr(start, pos_ - start)))))};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (!reg_->find(name)) fail("unknown variable '" + name + "'");
      return {RatFunc::variable(reg_, name)};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RegistryPtr& reg_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const RegistryPtr& reg, std::string_view text) { return Parser(reg, text).run(); }

}  // namespace gws
