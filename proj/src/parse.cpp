#include "nsz/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nsz/ffield.hpp"

namespace nsz {

namespace {

using RPoly = Polynomial<Rational>;

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const std::vector<std::string>& vars, std::size_t line,
                   std::size_t column_offset)
      : s_(text), vars_(vars), line_(line), offset_(column_offset) {}

  RPoly parse() {
    auto p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, offset_ + pos_ + 1, what); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RPoly expr() {
    RPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RPoly term() {
    RPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        skip_ws();
        auto start = pos_;
        auto d = integer();
        if (d == 0) {
          pos_ = start;
          fail("division by zero");
        }
        acc = acc.scaled(Rational(mpz_class(1), d));
      } else {
        return acc;
      }
    }
  }

  RPoly unary() {
    if (accept('-')) return -unary();
    return power_expr();
  }

  RPoly power_expr() {
    RPoly base = atom();
    if (accept('^')) {
      skip_ws();
      auto start = pos_;
      bool negative = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an exponent");
      auto e = integer();
      if (negative || e <= 0) {
        pos_ = start;
        fail("exponent must be a positive integer");
      }
      if (!e.fits_ulong_p()) {
        pos_ = start;
        fail("exponent too large");
      }
      return power(base, e.get_ui());
    }
    return base;
  }

  mpz_class integer() {
    auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  RPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    const std::size_t n = vars_.size();
    if (c == '(') {
      ++pos_;
      auto p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RPoly::constant(n, Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("undeclared variable '" + name + "'");
      }
      return RPoly::variable(n, static_cast<std::size_t>(it - vars_.begin()), Rational(1));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::vector<std::pair<std::string, std::size_t>> words(std::string_view s) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    auto start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(std::string(s.substr(start, i - start)), start + 1);
  }
  return out;
}

bool valid_identifier(const std::string& w) {
  if (w.empty() || !(std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_')) return false;
  return std::all_of(w.begin(), w.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Polynomial<Rational> parse_polynomial(std::string_view text, const std::vector<std::string>& vars, std::size_t line,
                                      std::size_t column_offset) {
  return ExpressionParser(text, vars, line, column_offset).parse();
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile pf;
  bool have_field = false, have_vars = false;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    auto line = strip_comment(raw);
    if (blank(line)) {
      if (end == text.size()) break;
      continue;
    }
    auto w = words(line);
    if (!have_field) {
      if (w[0].first != "field") throw ParseError(lineno, w[0].second, "expected 'field q' or 'field p <prime>'");
      if (w.size() == 2 && w[1].first == "q") {
        pf.field = {FieldSpec::Kind::Rationals, 0};
      } else if (w.size() == 3 && w[1].first == "p") {
        const auto& lit = w[2].first;
        if (lit.empty() || !std::all_of(lit.begin(), lit.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw ParseError(lineno, w[2].second, "characteristic must be a positive integer");
        mpz_class p(lit);
        if (p >= (mpz_class(1) << 31) || !is_prime(p.get_ui()))
          throw ParseError(lineno, w[2].second, "characteristic " + lit + " is not a prime below 2^31");
        pf.field = {FieldSpec::Kind::Prime, static_cast<std::uint32_t>(p.get_ui())};
      } else {
        throw ParseError(lineno, w[0].second, "expected 'field q' or 'field p <prime>'");
      }
      have_field = true;
      continue;
    }
    if (!have_vars) {
      if (w[0].first != "vars") throw ParseError(lineno, w[0].second, "expected 'vars <names>'");
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!valid_identifier(w[i].first)) throw ParseError(lineno, w[i].second, "invalid variable name '" + w[i].first + "'");
        if (std::find(pf.vars.begin(), pf.vars.end(), w[i].first) != pf.vars.end())
          throw ParseError(lineno, w[i].second, "variable '" + w[i].first + "' declared twice");
        if (w[i].first == "field" || w[i].first == "vars" || w[i].first == "query")
          throw ParseError(lineno, w[i].second, "reserved word used as a variable");
        pf.vars.push_back(w[i].first);
      }
      have_vars = true;
      continue;
    }
    if (w[0].first == "query") {
      if (pf.query) throw ParseError(lineno, w[0].second, "second query line");
      auto off = w[0].second - 1 + 5;
      pf.query = parse_polynomial(line.substr(off), pf.vars, lineno, off);
      continue;
    }
    pf.generators.push_back(parse_polynomial(line, pf.vars, lineno, 0));
    if (end == text.size()) break;
  }
  if (!have_field) throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing 'field' header");
  if (!have_vars) throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing 'vars' declaration");
  return pf;
}

FFElement reduce_rational(const Rational& r, const TowerPtr& tower) {
  auto den = tower->from_integer(r.denominator());
  if (is_zero(den)) throw UsageError("denominator " + r.denominator().get_str() + " vanishes in characteristic " +
                                     std::to_string(tower->characteristic()));
  return tower->from_integer(r.numerator()) / den;
}

Polynomial<FFElement> reduce_rational(const Polynomial<Rational>& p, const TowerPtr& tower) {
  return map_coefficients(p, [&](const Rational& r) { return reduce_rational(r, tower); });
}

}  // namespace nsz
