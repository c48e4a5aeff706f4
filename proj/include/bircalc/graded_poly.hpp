#pragma once

#include "bircalc/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bircalc {

/// Exponent vector of a monomial; its length is the variable count of the
/// owning polynomial.
using Exponent = std::vector<std::uint32_t>;

/// Exact multivariate polynomial with a positive integer weight per variable.
///
/// Variables are numbered from 0 internally and printed as `x1 .. xn`. The
/// term map never stores a zero coefficient, so the zero polynomial is the
/// empty map. Values are immutable once built through the arithmetic
/// operators, which makes them safe to share between threads.
class GradedPolynomial {
 public:
  using TermMap = std::map<Exponent, Rational>;

  /// Zero polynomial in `weights.size()` variables.
  explicit GradedPolynomial(std::vector<std::int64_t> weights);

  static GradedPolynomial constant(std::vector<std::int64_t> weights, const Rational& c);
  /// The variable with 0-based index `index`.
  static GradedPolynomial variable(std::vector<std::int64_t> weights, std::size_t index);
  static GradedPolynomial monomial(std::vector<std::int64_t> weights, Exponent exponent,
                                   const Rational& c);

  /// Parses sums of terms `c*x1^a*x2^b*...`, e.g. `x1*x2 - x3 + 1/2*x1^5`.
  static GradedPolynomial parse(std::string_view text, std::vector<std::int64_t> weights);

  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::size_t num_variables() const { return weights_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of `exponent`, zero when absent.
  Rational coefficient(const Exponent& exponent) const;

  std::int64_t weighted_degree(const Exponent& exponent) const;
  /// Ordinary total degree of the lowest-degree part (multiplicity at the origin).
  std::int64_t multiplicity() const;
  bool is_homogeneous() const;

  GradedPolynomial derivative(std::size_t index) const;

  GradedPolynomial operator-() const;
  GradedPolynomial& operator+=(const GradedPolynomial& other);
  GradedPolynomial& operator-=(const GradedPolynomial& other);
  GradedPolynomial& operator*=(const Rational& scalar);
  friend GradedPolynomial operator+(GradedPolynomial lhs, const GradedPolynomial& rhs) {
    return lhs += rhs;
  }
  friend GradedPolynomial operator-(GradedPolynomial lhs, const GradedPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend GradedPolynomial operator*(const GradedPolynomial& lhs, const GradedPolynomial& rhs);
  friend GradedPolynomial operator*(GradedPolynomial lhs, const Rational& scalar) {
    return lhs *= scalar;
  }

  friend bool operator==(const GradedPolynomial&, const GradedPolynomial&) = default;

  /// Canonical text: increasing weighted degree, then lexicographically
  /// decreasing exponents (x1 before x2) within a degree.
  std::string to_string() const;

 private:
  void add_term(const Exponent& exponent, const Rational& c);
  void require_compatible(const GradedPolynomial& other) const;

  std::vector<std::int64_t> weights_;
  TermMap terms_;
};

/// Minimum weighted degree over the monomials of `f`; this is v_E(f) for the
/// exceptional divisor of the weighted blowup with the same weights.
/// Throws DomainError for the zero polynomial.
std::int64_t weighted_valuation(const GradedPolynomial& f);

struct HomogeneousPart {
  std::int64_t degree;
  GradedPolynomial part;
};

/// Weighted-homogeneous parts of `f` in strictly increasing degree.
std::vector<HomogeneousPart> homogeneous_decomposition(const GradedPolynomial& f);

struct ChartPullback {
  /// Exponent of u factored out of f(u^w1 x1, ..., u^wn xn).
  std::int64_t u_power;
  /// Strict transform in variables (u, x1, ..., xn); u is variable 0 with weight 1.
  GradedPolynomial strict_transform;
};

/// Substitutes x_i -> u^{w_i} x_i and divides out the largest power of u.
ChartPullback chart_pullback(const GradedPolynomial& f);

/// Parses comma-separated positive integers such as `1,2,3`.
std::vector<std::int64_t> parse_weights(std::string_view text);

}  // namespace bircalc
