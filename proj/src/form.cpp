#include "sds/form.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sds {

ExponentVector::ExponentVector(std::vector<unsigned> entries)
    : entries_(std::move(entries)),
      degree_(std::accumulate(entries_.begin(), entries_.end(), 0U)) {}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (size() != other.size()) throw DimensionError("exponent vectors of different length");
  std::vector<unsigned> sum(entries_);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.entries_[i];
  return ExponentVector(std::move(sum));
}

std::string render_monomial(const ExponentVector& alpha) {
  std::string out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (alpha[i] > 1) out += '^' + std::to_string(alpha[i]);
  }
  return out.empty() ? "1" : out;
}

InhomogeneousError::InhomogeneousError(ExponentVector first, ExponentVector second)
    : std::invalid_argument("inhomogeneous form: term " + render_monomial(first) +
                            " has degree " + std::to_string(first.degree()) + " but term " +
                            render_monomial(second) + " has degree " +
                            std::to_string(second.degree())),
      first_(std::move(first)),
      second_(std::move(second)) {}

Form::Form(std::size_t variables, unsigned degree) : variables_(variables), degree_(degree) {
  if (variables == 0) throw DimensionError("a form needs at least one variable");
}

Form::Form(std::size_t variables, unsigned degree, Terms terms)
    : variables_(variables), degree_(degree), terms_(std::move(terms)) {
  if (variables == 0) throw DimensionError("a form needs at least one variable");
}

Form Form::from_terms(std::size_t variables,
                      std::span<const std::pair<ExponentVector, Rational>> terms) {
  Terms acc;
  const ExponentVector* first = nullptr;
  for (const auto& [alpha, c] : terms) {
    if (alpha.size() != variables) {
      throw DimensionError("exponent vector of length " + std::to_string(alpha.size()) +
                           " in a form of " + std::to_string(variables) + " variables");
    }
    if (first == nullptr) {
      first = &alpha;
    } else if (alpha.degree() != first->degree()) {
      throw InhomogeneousError(*first, alpha);
    }
    acc[alpha] += c;
  }
  return from_map(variables, first ? first->degree() : 0, std::move(acc));
}

Form Form::from_terms(std::size_t variables,
                      std::initializer_list<std::pair<ExponentVector, Rational>> terms) {
  return from_terms(variables, std::span(terms.begin(), terms.size()));
}

Form Form::from_map(std::size_t variables, unsigned degree, Terms terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [alpha, c] : terms) {
    if (alpha.size() != variables) throw DimensionError("exponent vector length mismatch");
    if (alpha.degree() != degree) {
      throw std::invalid_argument("term " + render_monomial(alpha) + " has degree " +
                                  std::to_string(alpha.degree()) + ", expected " +
                                  std::to_string(degree));
    }
  }
  return Form(variables, degree, std::move(terms));
}

Rational Form::coefficient(const ExponentVector& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

Form Form::operator*(const Rational& scale) const {
  if (scale == 0) return Form(variables_, degree_);
  Terms scaled = terms_;
  for (auto& [alpha, c] : scaled) c *= scale;
  return Form(variables_, degree_, std::move(scaled));
}

bool operator<(const Form& a, const Form& b) {
  if (a.variables_ != b.variables_) return a.variables_ < b.variables_;
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return GrlexDescending{}(x.first, y.first);
        return x.second < y.second;
      });
}

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (c < 0) throw std::invalid_argument("point coordinate " + to_string(c) + " is negative");
  }
}

std::string render(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) out += ',';
    out += to_string(p[i]);
  }
  return out;
}

std::string render(const Form& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [alpha, c] : f.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    if (alpha.degree() == 0) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += render_monomial(alpha);
  }
  return out;
}

Rational evaluate_monomial(const ExponentVector& alpha, std::span<const Rational> point) {
  if (alpha.size() != point.size()) throw DimensionError("point dimension mismatch");
  Rational value(1);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0) value *= pow(point[i], alpha[i]);
  }
  return value;
}

Rational evaluate(const Form& f, std::span<const Rational> point) {
  if (point.size() != f.variables()) {
    throw DimensionError("point has " + std::to_string(point.size()) + " coordinates, form has " +
                         std::to_string(f.variables()) + " variables");
  }
  // powers[i][k] = point[i]^k
  std::vector<std::vector<Rational>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].reserve(f.degree() + 1);
    powers[i].emplace_back(1);
    for (unsigned k = 1; k <= f.degree(); ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  Rational sum(0);
  for (const auto& [alpha, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < alpha.size(); ++i) term *= powers[i][alpha[i]];
    sum += term;
  }
  return sum;
}

Rational evaluate(const Form& f, const Point& p) { return evaluate(f, p.coords()); }

bool is_trivially_positive(const Form& f) {
  return std::ranges::all_of(f.terms(), [](const auto& kv) { return kv.second > 0; });
}

Rational coefficient_sum(const Form& f) {
  Rational sum(0);
  for (const auto& [alpha, c] : f.terms()) sum += c;
  return sum;
}

bool is_trivially_negative(const Form& f) { return coefficient_sum(f) < 0; }

Form content_normalize(const Form& f) {
  if (f.is_zero()) return f;
  Integer num_gcd(0), den_lcm(1);
  for (const auto& [alpha, c] : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale == 1) return f;
  return f * scale;
}

}  // namespace sds
