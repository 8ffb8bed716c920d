#include "goodstein/grammar.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "node_ops.hpp"

namespace goodstein {

parse_error::parse_error(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at byte " + std::to_string(position) +
                         ")"),
      position_(position) {}

std::optional<BigNat> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  if (text.size() > 1 && text.front() == '0') return std::nullopt;
  return BigNat(std::string(text));
}

std::string to_decimal(const BigNat& v) { return v.str(); }

namespace {

// ---- rendering ----

void render_node(std::ostringstream& out, const NodePtr& n,
                 const std::string& base_lit);

void render_term(std::ostringstream& out, const Term& t,
                 const std::string& base_lit) {
  if (const Atom* a = std::get_if<Atom>(&t)) {
    out << a->coeff << '*' << base_lit << "^(";
    render_node(out, a->exp, base_lit);
    out << ')';
    return;
  }
  const Run& r = std::get<Run>(t);
  out << r.coeff << '*' << base_lit << "^[";
  render_node(out, r.lo, base_lit);
  out << "..";
  render_node(out, r.hi_excl, base_lit);
  out << ')';
}

void render_node(std::ostringstream& out, const NodePtr& n,
                 const std::string& base_lit) {
  if (n->is_zero()) {
    out << '0';
    return;
  }
  bool first = true;
  for (const Term& t : n->terms()) {
    if (!first) out << " + ";
    first = false;
    render_term(out, t, base_lit);
  }
}

// ---- parsing ----

// Hand-rolled scanner: the grammar is tiny and positions must be exact.
class Parser {
 public:
  Parser(std::string_view text, bool shape) : text_(text), shape_(shape) {}

  // form := "0@" base | term (" + " term)*
  NodePtr parse_top(std::uint64_t& base_out) {
    skip_ws();
    std::uint64_t first = number("coefficient or zero form");
    skip_ws();
    if (first == 0 && peek() == '@') {
      ++pos_;
      base_out = base_literal();
      skip_ws();
      if (pos_ != text_.size()) fail("trailing input after zero form");
      return zero_node();
    }
    std::vector<Term> terms;
    terms.push_back(term_after_coeff(first));
    skip_ws();
    while (peek() == '+') {
      ++pos_;
      terms.push_back(term());
      skip_ws();
    }
    if (pos_ != text_.size()) fail("trailing input after form");
    base_out = base_;  // every term repeated it, so it is fixed by now
    return make_node(std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw parse_error(message, pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (peek() != c) fail(std::string("expected ") + what);
    ++pos_;
  }

  std::uint64_t number(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    std::string_view digits = text_.substr(start, pos_ - start);
    if (digits.size() > 1 && digits.front() == '0') {
      pos_ = start;
      fail("leading zeros are not canonical");
    }
    BigNat v{std::string(digits)};
    if (v > std::numeric_limits<std::uint64_t>::max()) {
      throw validation_error("number out of range: " + std::string(digits));
    }
    return v.convert_to<std::uint64_t>();
  }

  // the base slot of a term: a number for forms, the letter X for shapes
  std::uint64_t base_literal() {
    skip_ws();
    if (shape_) {
      if (peek() != 'X') fail("expected the base symbol X");
      ++pos_;
      return 0;
    }
    std::uint64_t b = number("base literal");
    if (b < 2) throw validation_error("base must be at least 2");
    return b;
  }

  void note_base(std::uint64_t b) {
    if (shape_) return;
    if (!seen_base_) {
      seen_base_ = true;
      base_ = b;
    } else if (base_ != b) {
      throw validation_error("mismatched base literals");
    }
  }

  Term term() {
    std::uint64_t coeff = number("coefficient");
    return term_after_coeff(coeff);
  }

  Term term_after_coeff(std::uint64_t coeff) {
    expect('*', "'*' after the coefficient");
    note_base(base_literal());
    expect('^', "'^' after the base");
    skip_ws();
    if (peek() == '[') {
      ++pos_;
      NodePtr lo = exp_node();
      skip_ws();
      if (pos_ + 1 >= text_.size() || text_[pos_] != '.' ||
          text_[pos_ + 1] != '.') {
        fail("expected '..' between block endpoints");
      }
      pos_ += 2;
      NodePtr hi = exp_node();
      expect(')', "')' closing the block");
      return Run{coeff, std::move(lo), std::move(hi)};
    }
    expect('(', "'(' or '[' after '^'");
    NodePtr e = exp_node();
    expect(')', "')' closing the exponent");
    return Atom{coeff, std::move(e)};
  }

  // expform := "0" | term (" + " term)*
  NodePtr exp_node() {
    std::uint64_t first = number("exponent");
    skip_ws();
    if (first == 0 && peek() != '*') return zero_node();
    std::vector<Term> terms;
    terms.push_back(term_after_coeff(first));
    skip_ws();
    while (peek() == '+') {
      ++pos_;
      terms.push_back(term());
      skip_ws();
    }
    return make_node(std::move(terms));
  }

  std::string_view text_;
  bool shape_;
  std::size_t pos_ = 0;
  bool seen_base_ = false;
  std::uint64_t base_ = 0;
};

}  // namespace

std::string render(const HForm& f) {
  std::ostringstream out;
  std::string base_lit = std::to_string(f.base().value());
  if (f.is_zero()) {
    out << "0@" << base_lit;
  } else {
    render_node(out, f.node(), base_lit);
  }
  return out.str();
}

std::string render(const Shape& s) {
  std::ostringstream out;
  if (s.is_zero()) {
    out << "0@X";
  } else {
    render_node(out, s.node(), "X");
  }
  return out.str();
}

HForm parse_form(std::string_view text) {
  Parser p(text, /*shape=*/false);
  std::uint64_t base = 0;
  NodePtr node = p.parse_top(base);
  HForm f(Base(base), std::move(node));
  validate_canonical(f);
  return f;
}

Shape parse_shape(std::string_view text) {
  Parser p(text, /*shape=*/true);
  std::uint64_t base = 0;
  NodePtr node = p.parse_top(base);
  Shape s(std::move(node));
  detail::validate_node(s.node(), 0, 0, false);
  return s;
}

}  // namespace goodstein
