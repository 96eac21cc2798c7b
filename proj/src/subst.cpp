#include "sds/subst.hpp"

#include <algorithm>
#include <numeric>

namespace sds {

SubstitutionTemplate::SubstitutionTemplate(std::vector<Rational> q) : q_(std::move(q)) {
  if (q_.empty()) throw std::invalid_argument("substitution template needs at least one entry");
  for (const auto& v : q_) {
    if (v <= 0) throw std::invalid_argument("template entry " + to_string(v) + " is not positive");
  }
}

SubstitutionTemplate SubstitutionTemplate::an(std::size_t n) {
  return SubstitutionTemplate(std::vector<Rational>(n, Rational(1)));
}

SubstitutionTemplate SubstitutionTemplate::gn(std::size_t n) {
  std::vector<Rational> q;
  q.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) q.emplace_back(1, static_cast<unsigned long>(j));
  return SubstitutionTemplate(std::move(q));
}

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (unsigned v : images_) {
    if (v == 0 || v > images_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(images_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1U);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<unsigned>(i + 1);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

std::string render(const Permutation& sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(sigma.images()[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<unsigned> images;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view piece = text.substr(start, comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (piece.empty() || !std::ranges::all_of(piece, [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
    }
    images.push_back(static_cast<unsigned>(std::stoul(std::string(piece))));
    start = comma + 1;
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1U);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

FactorialGuardError::FactorialGuardError(std::size_t n, std::size_t limit)
    : std::invalid_argument(std::to_string(n) + " variables exceed the limit of " +
                            std::to_string(limit) + " (n! substitutions per node)") {}

void check_factorial_guard(std::size_t n, std::size_t max_variables) {
  if (n > max_variables) throw FactorialGuardError(n, max_variables);
}

Matrix::Matrix(std::size_t n) : n_(n), entries_(n * n) {}

Matrix::Matrix(std::vector<std::vector<Rational>> rows) : n_(rows.size()), entries_() {
  entries_.reserve(n_ * n_);
  for (auto& row : rows) {
    if (row.size() != n_) throw DimensionError("matrix is not square");
    for (auto& v : row) entries_.push_back(std::move(v));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (n_ != other.n_) throw DimensionError("matrix dimension mismatch");
  Matrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

std::vector<Rational> Matrix::operator*(std::span<const Rational> v) const {
  if (v.size() != n_) throw DimensionError("vector dimension mismatch");
  std::vector<Rational> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

bool Matrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((*this)(i, j) != 0) return false;
    }
  }
  return true;
}

std::string render(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != 0) out += ' ';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

Matrix build_K(const SubstitutionTemplate& t) {
  Matrix k(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i; j < t.size(); ++j) k(i, j) = t[j];
  }
  return k;
}

Matrix perm_matrix(const Permutation& sigma) {
  Matrix p(sigma.size());
  for (std::size_t i = 1; i <= sigma.size(); ++i) p(i - 1, sigma(i) - 1) = 1;
  return p;
}

Matrix build_B(const Permutation& sigma, const SubstitutionTemplate& t) {
  if (sigma.size() != t.size()) throw DimensionError("permutation and template sizes differ");
  return perm_matrix(sigma) * build_K(t);
}

Matrix mat_pow(const Matrix& m, unsigned exponent) {
  Matrix result = Matrix::identity(m.size());
  Matrix base = m;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

namespace {

using Terms = Form::Terms;

Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

Form apply_substitution(const Form& f, const Matrix& m) {
  const std::size_t n = f.variables();
  if (m.size() != n) {
    throw DimensionError("substitution matrix is " + std::to_string(m.size()) + "x" +
                         std::to_string(m.size()) + " but the form has " + std::to_string(n) +
                         " variables");
  }
  // Largest exponent of each variable decides how many powers of the
  // corresponding linear form are needed.
  std::vector<unsigned> max_exp(n, 0);
  for (const auto& [alpha, c] : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], alpha[i]);
  }
  // powers[i][k] = (row i of m applied to t)^k
  std::vector<std::vector<Terms>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    Terms linear;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) == 0) continue;
      std::vector<unsigned> e(n, 0);
      e[j] = 1;
      linear.emplace(ExponentVector(std::move(e)), m(i, j));
    }
    powers[i].push_back(Terms{{ExponentVector::zeros(n), Rational(1)}});
    for (unsigned k = 1; k <= max_exp[i]; ++k) powers[i].push_back(multiply(powers[i].back(), linear));
  }

  Terms acc;
  for (const auto& [alpha, c] : f.terms()) {
    Terms product{{ExponentVector::zeros(n), c}};
    for (std::size_t i = 0; i < n && !product.empty(); ++i) {
      if (alpha[i] != 0) product = multiply(product, powers[i][alpha[i]]);
    }
    for (auto& [e, v] : product) acc[e] += v;
  }
  return Form::from_map(n, f.degree(), std::move(acc));
}

std::vector<std::pair<Permutation, Form>> sds_set(const Form& f, const SubstitutionTemplate& t,
                                                  std::size_t max_variables) {
  check_factorial_guard(f.variables(), max_variables);
  if (t.size() != f.variables()) throw DimensionError("template size differs from variable count");
  std::vector<std::pair<Permutation, Form>> out;
  for (auto& sigma : all_permutations(f.variables())) {
    Form image = apply_substitution(f, build_B(sigma, t));
    out.emplace_back(std::move(sigma), std::move(image));
  }
  return out;
}

std::optional<Point> preimage_nonneg(const Point& p, const Permutation& sigma,
                                     const SubstitutionTemplate& t) {
  const std::size_t n = p.size();
  if (sigma.size() != n || t.size() != n) throw DimensionError("dimension mismatch");
  // Row i of B_sigma is row sigma(i) of K, so (K y)_r = p_{sigma^{-1}(r)}.
  const Permutation inv = sigma.inverse();
  std::vector<Rational> rhs(n);
  for (std::size_t r = 1; r <= n; ++r) rhs[r - 1] = p[inv(r) - 1];
  // K y = rhs with K(r, j) = q_j for j >= r: y_n = rhs_n / q_n and
  // y_r = (rhs_r - rhs_{r+1}) / q_r.
  std::vector<Rational> y(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Rational next = r + 1 < n ? rhs[r + 1] : Rational(0);
    y[r] = (rhs[r] - next) / t[r];
    if (y[r] < 0) return std::nullopt;
  }
  return Point(std::move(y));
}

Permutation rank_permutation(const Point& p) {
  std::vector<unsigned> order(p.size());
  std::iota(order.begin(), order.end(), 0U);
  std::ranges::stable_sort(order, [&](unsigned a, unsigned b) { return p[a] > p[b]; });
  std::vector<unsigned> images(p.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) images[order[rank]] = static_cast<unsigned>(rank + 1);
  return Permutation(std::move(images));
}

}  // namespace sds
