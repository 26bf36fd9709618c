#pragma once

// Text grammar for polynomials and forms.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'z'<i> ['^' <int>] | 'dz'<i> ('^' 'dz'<j>)* | '(' expr ')' ['^' <int>]
//
// A product of factors is a wedge product, so `z0*dz1^dz2` is a 2-form and
// `(z1*z3 - z0*z4)*dz0` a 1-form. A caret after `z<i>` or `)` is an exponent;
// a caret between dz tokens is the wedge. Whitespace is insignificant.
//
// Variable names are z_{base}, ..., z_{base+n-1}; the base is 0 for projective
// charts (z0..z4) and 1 for the local chart (z1..z4).

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "engel/errors.hpp"
#include "engel/exterior.hpp"
#include "engel/ring.hpp"

namespace engel {

struct VarNaming {
  std::size_t base = 0;
};

namespace detail {

class FormParser {
 public:
  FormParser(std::string_view text, std::size_t ambient, VarNaming naming, std::size_t line)
      : text_(text), ambient_(ambient), naming_(naming), line_(line) {}

  DiffForm parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    DiffForm f = expression();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  DiffForm expression() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    DiffForm acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      const char op = peek();
      if (op != '+' && op != '-') break;
      const std::size_t op_pos = pos_;
      ++pos_;
      DiffForm rhs = term();
      if (rhs.degree() != acc.degree()) {
        // Zero 0-forms (e.g. a literal 0) are absorbed by any degree.
        if (rhs.is_zero() && rhs.degree() == 0) continue;
        if (acc.is_zero() && acc.degree() == 0) {
          acc = DiffForm(ambient_, rhs.degree());
        } else {
          fail_at("cannot add forms of degree " + std::to_string(acc.degree()) + " and " +
                      std::to_string(rhs.degree()),
                  op_pos);
        }
      }
      if (op == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  DiffForm term() {
    DiffForm acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc = wedge(acc, factor());
    }
    return acc;
  }

  DiffForm factor() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      DiffForm inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      if (caret_then_digit()) {
        const std::size_t exp_pos = pos_;
        const unsigned e = integer();
        if (inner.degree() != 0) fail_at("only 0-forms can be raised to a power", exp_pos);
        inner = DiffForm::function(pow(inner.coefficient({}), e));
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return DiffForm::function(Polynomial::constant(ambient_, rational()));
    }
    if (c == 'd') {
      IndexTuple idx{differential_index()};
      for (;;) {
        const std::size_t save = pos_;
        skip_space();
        if (peek() != '^') {
          pos_ = save;
          break;
        }
        ++pos_;
        skip_space();
        if (peek() != 'd') fail("expected dz<i> after '^' in a wedge");
        idx.push_back(differential_index());
      }
      DiffForm f(ambient_, idx.size());
      f.add_term(std::move(idx), Polynomial::one(ambient_));
      return f;
    }
    if (c == 'z') {
      const std::size_t v = variable_index();
      unsigned e = 1;
      if (caret_then_digit()) e = integer();
      return DiffForm::function(Polynomial::term(Monomial::variable(ambient_, v, e), 1));
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  // Consumes '^' if (after spaces) an integer follows it.
  bool caret_then_digit() {
    const std::size_t save = pos_;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (std::isdigit(static_cast<unsigned char>(peek()))) return true;
    }
    pos_ = save;
    return false;
  }

  std::size_t differential_index() {
    const std::size_t start = pos_;
    if (text_.substr(pos_, 2) != "dz") fail("expected dz<i>");
    pos_ += 2;
    return checked_index(start);
  }

  std::size_t variable_index() {
    const std::size_t start = pos_;
    ++pos_;  // 'z'
    return checked_index(start);
  }

  std::size_t checked_index(std::size_t token_start) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
    const unsigned raw = integer();
    if (raw < naming_.base || raw - naming_.base >= ambient_)
      fail_at("variable index " + std::to_string(raw) + " outside z" + std::to_string(naming_.base) + "..z" +
                  std::to_string(naming_.base + ambient_ - 1),
              token_start);
    return raw - naming_.base;
  }

  unsigned integer() {
    skip_space();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail_at("integer too large", start);
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  Rational rational() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string lit(text_.substr(start, pos_ - start));
    const std::size_t save = pos_;
    skip_space();
    if (peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t den_start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den_start == pos_) fail("expected a denominator");
      lit += "/" + std::string(text_.substr(den_start, pos_ - den_start));
    } else {
      pos_ = save;
    }
    try {
      return make_rational(lit);
    } catch (const std::invalid_argument& e) {
      fail_at(e.what(), start);
    }
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const { throw parse_error(msg, line_, pos + 1); }

  std::string_view text_;
  std::size_t ambient_;
  VarNaming naming_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline DiffForm parse_form(std::string_view text, std::size_t ambient, VarNaming naming = {}, std::size_t line = 1) {
  return detail::FormParser(text, ambient, naming, line).parse();
}

inline Polynomial parse_polynomial(std::string_view text, std::size_t ambient, VarNaming naming = {},
                                   std::size_t line = 1) {
  DiffForm f = parse_form(text, ambient, naming, line);
  if (f.degree() != 0) throw parse_error("expected a polynomial, got a " + std::to_string(f.degree()) + "-form", line, 1);
  return f.coefficient({});
}

// Monomial as `z0^2*z1`; the empty string for 1.
inline std::string to_string(const Monomial& m, VarNaming naming = {}) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'z' + std::to_string(v + naming.base);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out;
}

// Terms in grevlex order, e.g. `z1*z3 - z0*z4` or `3/2*z0^2 - 1`.
inline std::string to_string(const Polynomial& p, VarNaming naming = {}) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = to_string(m, naming);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + '*' + mono;
    }
  }
  return out;
}

inline std::string to_string(const IndexTuple& idx, VarNaming naming = {}) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += '^';
    out += "dz" + std::to_string(idx[i] + naming.base);
  }
  return out;
}

// Sum over increasing index tuples: `(z1*z3 - z0*z4)*dz0 - z0*z3*dz1 + z0^2*dz4`.
inline std::string to_string(const DiffForm& f, VarNaming naming = {}) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : f.terms()) {
    const std::string basis = to_string(idx, naming);
    if (basis.empty()) {
      // 0-form
      return to_string(c, naming);
    }
    if (c.size() == 1) {
      const auto& [m, coeff] = *c.terms().begin();
      const bool negative = coeff < 0;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      const std::string mag = to_string(Polynomial::term(m, abs(coeff)), naming);
      out += mag == "1" ? basis : mag + '*' + basis;
    } else {
      if (!first) out += " + ";
      out += '(' + to_string(c, naming) + ")*" + basis;
    }
    first = false;
  }
  return out;
}

// One form per non-blank line; `#` starts a comment.
inline std::vector<DiffForm> parse_form_lines(std::string_view text, std::size_t ambient, VarNaming naming = {}) {
  std::vector<DiffForm> forms;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    forms.push_back(parse_form(line, ambient, naming, lineno));
  }
  return forms;
}

}  // namespace engel
