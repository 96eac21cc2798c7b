#pragma once

// Homogeneous polynomials ("forms") with exact rational coefficients.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sds/rational.hpp"

namespace sds {

/// Multidegree of a monomial x1^a1 * ... * xn^an, with cached total degree.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<unsigned> entries);
  ExponentVector(std::initializer_list<unsigned> entries)
      : ExponentVector(std::vector<unsigned>(entries)) {}

  static ExponentVector zeros(std::size_t n) { return ExponentVector(std::vector<unsigned>(n, 0)); }

  std::size_t size() const { return entries_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return entries_[i]; }
  std::span<const unsigned> entries() const { return entries_; }

  ExponentVector operator+(const ExponentVector& other) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<unsigned> entries_;
  unsigned degree_ = 0;
};

/// Graded lexicographic, largest first: higher degree, then larger x1
/// exponent, then larger x2 exponent, ...
struct GrlexDescending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a > b;
  }
};

/// Renders an exponent vector as a monomial, e.g. "x1^3*x2*x3^2"; "1" for the
/// empty product.
std::string render_monomial(const ExponentVector& alpha);

class InhomogeneousError : public std::invalid_argument {
 public:
  InhomogeneousError(ExponentVector first, ExponentVector second);
  const ExponentVector& first() const { return first_; }
  const ExponentVector& second() const { return second_; }

 private:
  ExponentVector first_, second_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A homogeneous polynomial in n variables of degree d. Stored coefficients
/// are never zero; terms iterate in graded lexicographic order.
class Form {
 public:
  using Terms = std::map<ExponentVector, Rational, GrlexDescending>;

  /// The zero form.
  Form(std::size_t variables, unsigned degree);

  /// Combines like terms and drops zero coefficients. Throws DimensionError
  /// on a key of the wrong length and InhomogeneousError on mixed degrees.
  static Form from_terms(std::size_t variables,
                         std::span<const std::pair<ExponentVector, Rational>> terms);
  static Form from_terms(std::size_t variables,
                         std::initializer_list<std::pair<ExponentVector, Rational>> terms);
  /// Takes ownership of an accumulated map; zero entries are removed.
  static Form from_map(std::size_t variables, unsigned degree, Terms terms);

  std::size_t variables() const { return variables_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of X^alpha, zero when absent.
  Rational coefficient(const ExponentVector& alpha) const;
  bool has_term(const ExponentVector& alpha) const { return terms_.contains(alpha); }

  Form operator*(const Rational& scale) const;

  friend bool operator==(const Form& a, const Form& b) {
    return a.variables_ == b.variables_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  /// Total order used for deduplication sets.
  friend bool operator<(const Form& a, const Form& b);

 private:
  Form(std::size_t variables, unsigned degree, Terms terms);

  std::size_t variables_;
  unsigned degree_;
  Terms terms_;
};

/// A point of the closed nonnegative orthant.
class Point {
 public:
  explicit Point(std::vector<Rational> coords);
  static Point ones(std::size_t n) { return Point(std::vector<Rational>(n, Rational(1))); }

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Rational> coords_;
};

std::string render(const Point& p);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the polynomial grammar, e.g. "3/2*x1^2*x3 - x2^3". The variable
/// count is the largest index seen, raised to `n_hint` when that is larger.
Form parse_form(std::string_view text, std::optional<std::size_t> n_hint = std::nullopt);

/// Canonical text form accepted back by parse_form.
std::string render(const Form& f);

/// Exact value at an arbitrary rational point of matching dimension.
Rational evaluate(const Form& f, std::span<const Rational> point);
Rational evaluate(const Form& f, const Point& p);
/// Value of the single monomial X^alpha at `point`.
Rational evaluate_monomial(const ExponentVector& alpha, std::span<const Rational> point);

/// All coefficients nonnegative; the zero form qualifies.
bool is_trivially_positive(const Form& f);
/// f(1,...,1) < 0.
bool is_trivially_negative(const Form& f);
Rational coefficient_sum(const Form& f);

/// Scales by a positive rational so the coefficients become coprime
/// integers. The zero form is returned unchanged.
Form content_normalize(const Form& f);

}  // namespace sds
