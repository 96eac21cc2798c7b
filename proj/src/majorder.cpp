#include "sds/majorder.hpp"

#include <algorithm>

namespace sds {

namespace {

void require_comparable(const ExponentVector& alpha, const ExponentVector& beta) {
  if (alpha.size() != beta.size()) throw DimensionError("exponent vectors differ in length");
  if (alpha.degree() != beta.degree()) {
    throw DimensionError("majorization needs equal degrees, got " +
                         std::to_string(alpha.degree()) + " and " + std::to_string(beta.degree()));
  }
}

// First k (1-based) with prefix_k(alpha) < prefix_k(beta), or 0 if none.
std::size_t first_failing_prefix(const ExponentVector& alpha, const ExponentVector& beta) {
  long long diff = 0;
  for (std::size_t k = 0; k + 1 < alpha.size(); ++k) {
    diff += static_cast<long long>(alpha[k]) - static_cast<long long>(beta[k]);
    if (diff < 0) return k + 1;
  }
  return 0;
}

}  // namespace

bool majorizes(const ExponentVector& alpha, const ExponentVector& beta) {
  require_comparable(alpha, beta);
  return first_failing_prefix(alpha, beta) == 0;
}

ExponentVector reorder(const ExponentVector& alpha, const Permutation& sigma) {
  if (alpha.size() != sigma.size()) throw DimensionError("permutation size mismatch");
  std::vector<unsigned> out(alpha.size());
  for (std::size_t i = 1; i <= alpha.size(); ++i) out[i - 1] = alpha[sigma(i) - 1];
  return ExponentVector(std::move(out));
}

ExponentVector relocate(const ExponentVector& lambda, const Permutation& sigma) {
  if (lambda.size() != sigma.size()) throw DimensionError("permutation size mismatch");
  std::vector<unsigned> out(lambda.size());
  for (std::size_t i = 1; i <= lambda.size(); ++i) out[sigma(i) - 1] = lambda[i - 1];
  return ExponentVector(std::move(out));
}

bool majorizes_under(const ExponentVector& alpha, const ExponentVector& beta,
                     const Permutation& sigma) {
  require_comparable(alpha, beta);
  return majorizes(reorder(alpha, sigma), reorder(beta, sigma));
}

Point separating_point(const ExponentVector& alpha, const ExponentVector& beta,
                       const Permutation& sigma) {
  require_comparable(alpha, beta);
  const std::size_t k = first_failing_prefix(reorder(alpha, sigma), reorder(beta, sigma));
  if (k == 0) {
    throw std::invalid_argument(render_monomial(alpha) + " majorizes " + render_monomial(beta) +
                                " in ordering " + render(sigma) + "; no separating point");
  }
  // Coordinates ranked 1..k get 2, the rest 1: X^gamma(p) = 2^{prefix_k(gamma)}.
  std::vector<Rational> coords(alpha.size(), Rational(1));
  for (std::size_t i = 1; i <= k; ++i) coords[sigma(i) - 1] = 2;
  return Point(std::move(coords));
}

std::set<ExponentVector> expansion_support(const ExponentVector& alpha, const Matrix& m) {
  if (m.size() != alpha.size()) throw DimensionError("matrix size mismatch");
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const bool ok = j < i ? m(i, j) == 0 : m(i, j) > 0;
      if (!ok) {
        throw std::invalid_argument(
            "expansion_support needs an upper triangular matrix with positive entries on and "
            "above the diagonal");
      }
    }
  }
  const Form monomial = Form::from_terms(alpha.size(), {{alpha, Rational(1)}});
  std::set<ExponentVector> support;
  const Form expanded = apply_substitution(monomial, m);
  for (const auto& [e, c] : expanded.terms()) support.insert(e);
  return support;
}

MajorizationReport necessary_condition(const Form& f, std::size_t max_variables) {
  check_factorial_guard(f.variables(), max_variables);
  const std::vector<Permutation> orderings = all_permutations(f.variables());
  std::vector<const ExponentVector*> positive;
  for (const auto& [alpha, c] : f.terms()) {
    if (c > 0) positive.push_back(&alpha);
  }
  MajorizationReport report;
  report.checked_orderings = orderings.size();
  for (const auto& [lambda, c] : f.terms()) {
    if (c > 0) continue;
    for (const auto& sigma : orderings) {
      const ExponentVector target = reorder(lambda, sigma);
      const bool covered = std::ranges::any_of(positive, [&](const ExponentVector* mu) {
        return majorizes(reorder(*mu, sigma), target);
      });
      if (!covered) report.violations.push_back({lambda, sigma});
    }
  }
  report.holds = report.violations.empty();
  return report;
}

bool is_unmajorized_for(const Form& f, const ExponentVector& lambda, const Permutation& sigma) {
  const Permutation ordering = region_ordering(sigma);
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha != lambda && majorizes_under(alpha, lambda, ordering)) return false;
  }
  return true;
}

Rational persistent_coefficient(const Form& f, const Permutation& sigma,
                                const SubstitutionTemplate& t, unsigned m,
                                const ExponentVector& lambda) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (!f.has_term(lambda)) {
    throw std::invalid_argument(render_monomial(lambda) + " is not a term of the form");
  }
  const Matrix sub = build_B(sigma, t) * mat_pow(build_K(t), m - 1);
  return apply_substitution(f, sub).coefficient(relocate(lambda, sigma));
}

Rational persistent_closed_form(const Form& f, const Permutation& sigma,
                                const SubstitutionTemplate& t, unsigned m,
                                const ExponentVector& lambda) {
  Rational scale(1);
  for (std::size_t i = 1; i <= lambda.size(); ++i) scale *= pow(t[sigma(i) - 1], lambda[i - 1]);
  return pow(scale, m) * f.coefficient(lambda);
}

}  // namespace sds
