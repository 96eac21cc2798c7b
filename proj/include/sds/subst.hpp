#pragma once

// Difference-substitution matrices and linear changes of variables.
//
// K is the upper triangular template whose column j equals q_j on rows 1..j.
// For a permutation sigma, B_sigma = P_sigma * K, where row i of P_sigma
// selects row sigma(i) of K. B_sigma maps the nonnegative orthant onto the
// cone x_{tau(1)} >= ... >= x_{tau(n)} >= 0 with tau = sigma^{-1}, for every
// positive q.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sds/form.hpp"
#include "sds/rational.hpp"

namespace sds {

/// Positive rational vector (q_1, ..., q_n) defining K.
class SubstitutionTemplate {
 public:
  explicit SubstitutionTemplate(std::vector<Rational> q);

  /// q = (1, ..., 1): the classic A_n.
  static SubstitutionTemplate an(std::size_t n);
  /// q = (1, 1/2, ..., 1/n): G_n.
  static SubstitutionTemplate gn(std::size_t n);

  std::size_t size() const { return q_.size(); }
  const Rational& operator[](std::size_t j) const { return q_[j]; }
  std::span<const Rational> values() const { return q_; }

 private:
  std::vector<Rational> q_;
};

/// A permutation of {1..n} in one-line notation: images()[i-1] = sigma(i).
class Permutation {
 public:
  explicit Permutation(std::vector<unsigned> images);
  Permutation(std::initializer_list<unsigned> images)
      : Permutation(std::vector<unsigned>(images)) {}

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  /// sigma(i) for 1-based i.
  unsigned operator()(std::size_t i) const { return images_[i - 1]; }
  std::span<const unsigned> images() const { return images_; }
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<unsigned> images_;
};

/// "1,3,2"
std::string render(const Permutation& sigma);
/// Inverse of render; throws std::invalid_argument.
Permutation parse_permutation(std::string_view text);

/// All n! permutations in lexicographic one-line order.
std::vector<Permutation> all_permutations(std::size_t n);

class FactorialGuardError : public std::invalid_argument {
 public:
  FactorialGuardError(std::size_t n, std::size_t limit);
};

/// Default cap on the variable count for anything enumerating S_n.
inline constexpr std::size_t kDefaultMaxVariables = 8;

void check_factorial_guard(std::size_t n, std::size_t max_variables);

class Matrix {
 public:
  /// n x n zero matrix.
  explicit Matrix(std::size_t n);
  /// Row-major initializer; throws unless square.
  explicit Matrix(std::vector<std::vector<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }

  Matrix operator*(const Matrix& other) const;
  std::vector<Rational> operator*(std::span<const Rational> v) const;

  bool is_upper_triangular() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

/// One row per line, entries separated by spaces.
std::string render(const Matrix& m);

Matrix build_K(const SubstitutionTemplate& t);
Matrix perm_matrix(const Permutation& sigma);
Matrix build_B(const Permutation& sigma, const SubstitutionTemplate& t);
Matrix mat_pow(const Matrix& m, unsigned exponent);

/// Expands f(M X) as a form in the new variables.
Form apply_substitution(const Form& f, const Matrix& m);

/// (sigma, f(B_sigma X)) for every sigma in S_n, lexicographic in sigma.
std::vector<std::pair<Permutation, Form>> sds_set(const Form& f, const SubstitutionTemplate& t,
                                                  std::size_t max_variables = kDefaultMaxVariables);

/// Solves B_sigma y = p; returns y only when every coordinate is >= 0.
std::optional<Point> preimage_nonneg(const Point& p, const Permutation& sigma,
                                     const SubstitutionTemplate& t);

/// The variable ordering covered by B_sigma, i.e. sigma^{-1}.
inline Permutation region_ordering(const Permutation& sigma) { return sigma.inverse(); }

/// The sigma whose B_sigma cone contains p: sigma(i) is the rank of p_i in
/// descending order, ties broken by index.
Permutation rank_permutation(const Point& p);

}  // namespace sds
