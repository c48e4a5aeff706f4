#pragma once

#include "bircalc/graded_poly.hpp"
#include "bircalc/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace bircalc {

/// A (1,a,b)-blowup of a smooth threefold point, a and b coprime.
///
/// Stored canonically with a <= b; the two weights play symmetric roles.
class WeightedBlowup {
 public:
  /// Throws DomainError unless a, b >= 1 and gcd(a, b) = 1.
  WeightedBlowup(std::int64_t a, std::int64_t b);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  /// The full weight vector (1, a, b).
  std::vector<std::int64_t> weights() const { return {1, a_, b_}; }

  friend bool operator==(const WeightedBlowup&, const WeightedBlowup&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
};

/// Coefficient of E in K_X = pi^*K_Y + (a+b)E.
std::int64_t discrepancy(const WeightedBlowup& bl);

/// E . strict transform of the curve {f1 = f2 = 0}, i.e. v_E(f1) v_E(f2) / (ab).
///
/// Both polynomials live in three variables with weights (1,a,b) or (1,b,a).
/// Whether (f1, f2) really cut out a curve near the origin is not checked.
Rational exceptional_intersection(const WeightedBlowup& bl, const GradedPolynomial& f1,
                                  const GradedPolynomial& f2);

/// (-K_W) . Gamma_W = n (2 - (a+b)^2/(ab) v_H) for a curve cut by a member
/// of |-nK_X| and a hyperplane pullback with v_E = v_H through the centre.
Rational anticanonical_defect(const WeightedBlowup& bl, std::int64_t v_h, std::int64_t n);

struct PositivityCertificate {
  /// (a+b)^2/(ab)
  Rational ratio;
  /// ratio - 2, the margin in the inequality ratio > 2.
  Rational gap_over_two;
  /// ratio - 4 = (a-b)^2/(ab), the AM-GM margin; zero only for (1,1).
  Rational gap_over_four;
  bool strictly_greater_than_two;
};

PositivityCertificate strict_positivity_check(const WeightedBlowup& bl);

/// Integer (a, b) with a + b = sum and a - b = difference, if any.
std::optional<std::pair<std::int64_t, std::int64_t>> solve_normal_bundle(std::int64_t sum,
                                                                         std::int64_t difference);

/// Splitting types O(a) + O(b) of the normal bundle of a flopped curve:
/// a + b = -2 with a - b in {0, 1, 2}.
std::set<std::pair<std::int64_t, std::int64_t>> flopped_normal_bundles();

}  // namespace bircalc
