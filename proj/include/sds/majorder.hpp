#pragma once

// Majorization order on exponent vectors and monomials, and the necessary
// condition it yields for positive termination of successive difference
// substitution.

#include <set>
#include <vector>

#include "sds/form.hpp"
#include "sds/subst.hpp"

namespace sds {

/// alpha majorizes beta: equal totals and every proper prefix sum of alpha
/// dominates the matching prefix sum of beta.
/// Throws DimensionError on a length or degree mismatch.
bool majorizes(const ExponentVector& alpha, const ExponentVector& beta);

/// X^alpha majorizes X^beta in the variable ordering
/// x_{sigma(1)} >= ... >= x_{sigma(n)}: compares alpha and beta after both
/// are read in sigma order.
bool majorizes_under(const ExponentVector& alpha, const ExponentVector& beta,
                     const Permutation& sigma);

/// (alpha_{sigma(1)}, ..., alpha_{sigma(n)})
ExponentVector reorder(const ExponentVector& alpha, const Permutation& sigma);

/// Exponent vector mu with mu_{sigma(i)} = lambda_i: where the term lambda
/// lands after the substitution B_sigma.
ExponentVector relocate(const ExponentVector& lambda, const Permutation& sigma);

/// A point sorted by sigma on which X^beta > X^alpha. Requires that alpha
/// does not majorize beta under sigma (std::invalid_argument otherwise).
Point separating_point(const ExponentVector& alpha, const ExponentVector& beta,
                       const Permutation& sigma);

/// Exponents with a nonzero coefficient in the expansion of X^alpha under
/// x = M t, computed by literal expansion. M must be upper triangular with
/// strictly positive entries on and above the diagonal.
std::set<ExponentVector> expansion_support(const ExponentVector& alpha, const Matrix& m);

struct Violation {
  ExponentVector term;   ///< a term with negative coefficient
  Permutation ordering;  ///< an ordering in which no positive term majorizes it

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct MajorizationReport {
  bool holds = true;
  std::vector<Violation> violations;  ///< by term (form order), then ordering
  std::size_t checked_orderings = 0;
};

/// Checks that every negative term is majorized by some positive term in
/// every one of the n! variable orderings. When this fails, KSDS cannot
/// terminate positively on f for any template.
MajorizationReport necessary_condition(const Form& f,
                                       std::size_t max_variables = kDefaultMaxVariables);

/// True when no other term of f majorizes lambda in the ordering covered by
/// B_sigma (sigma^{-1}). Under this hypothesis the coefficient read by
/// persistent_coefficient never changes sign along B_sigma K^{m-1}.
bool is_unmajorized_for(const Form& f, const ExponentVector& lambda, const Permutation& sigma);

/// Coefficient of the relocated term relocate(lambda, sigma) in the exact
/// expansion of f(B_sigma K^{m-1} X). Under is_unmajorized_for it equals
/// (prod_i q_{sigma(i)}^{lambda_i})^m * C_lambda; see persistent_closed_form.
/// Throws std::invalid_argument if lambda is not a term of f or m == 0.
Rational persistent_coefficient(const Form& f, const Permutation& sigma,
                                const SubstitutionTemplate& t, unsigned m,
                                const ExponentVector& lambda);

/// (prod_i q_{sigma(i)}^{lambda_i})^m * C_lambda
Rational persistent_closed_form(const Form& f, const Permutation& sigma,
                                const SubstitutionTemplate& t, unsigned m,
                                const ExponentVector& lambda);

}  // namespace sds
