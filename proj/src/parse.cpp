#include <cctype>

#include "sds/form.hpp"

namespace sds {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

struct RawTerm {
  std::vector<std::pair<std::size_t, unsigned>> factors;  // (1-based index, exponent)
  Rational coefficient;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) fail("empty input");
    terms.push_back(term(/*leading=*/true));
    skip_ws();
    while (!at_end()) {
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      terms.push_back(term(/*leading=*/false));
      skip_ws();
    }
    return terms;
  }

 private:
  RawTerm term(bool leading) {
    RawTerm t;
    t.coefficient = 1;
    skip_ws();
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      if (get() == '-') t.coefficient = -1;
      skip_ws();
    } else if (!leading) {
      fail("expected '+' or '-'");
    }
    if (at_end()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coefficient *= coefficient();
      skip_ws();
      if (at_end() || peek() != '*') return t;  // bare constant
      get();
      skip_ws();
    }
    t.factors.push_back(factor());
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      get();
      skip_ws();
      t.factors.push_back(factor());
    }
    return t;
  }

  Rational coefficient() {
    const std::size_t start = pos_;
    Integer num = integer("coefficient");
    skip_ws();
    if (!at_end() && peek() == '/') {
      get();
      skip_ws();
      Integer den = integer("denominator");
      if (den == 0) throw ParseError("zero denominator", start);
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  std::pair<std::size_t, unsigned> factor() {
    const std::size_t start = pos_;
    if (at_end() || peek() != 'x') fail("expected a variable 'x<index>'");
    get();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("variable index must be numeric");
    }
    Integer index = integer("variable index");
    if (index == 0) throw ParseError("variable index must be >= 1", start);
    if (!index.fits_uint_p()) throw ParseError("variable index too large", start);
    unsigned exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      const std::size_t epos = pos_;
      Integer e = integer("exponent");
      if (!e.fits_uint_p() || e > 1000000) throw ParseError("exponent too large", epos);
      exponent = static_cast<unsigned>(e.get_ui());
    }
    return {static_cast<std::size_t>(index.get_ui()), exponent};
  }

  Integer integer(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(std::string_view text, std::optional<std::size_t> n_hint) {
  const std::vector<RawTerm> raw = Parser(text).parse();
  std::size_t n = n_hint.value_or(1);
  for (const auto& t : raw) {
    for (const auto& [index, e] : t.factors) n = std::max(n, index);
  }
  if (n == 0) n = 1;
  std::vector<std::pair<ExponentVector, Rational>> terms;
  terms.reserve(raw.size());
  for (const auto& t : raw) {
    std::vector<unsigned> entries(n, 0);
    for (const auto& [index, e] : t.factors) entries[index - 1] += e;
    terms.emplace_back(ExponentVector(std::move(entries)), t.coefficient);
  }
  return Form::from_terms(n, terms);
}

}  // namespace sds
