#include "bircalc/weighted_blowup.hpp"

#include "bircalc/error.hpp"

#include <numeric>

namespace bircalc {

WeightedBlowup::WeightedBlowup(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
  if (a < 1 || b < 1) throw DomainError("blowup weights must be positive");
  if (std::gcd(a, b) != 1)
    throw DomainError("blowup weights " + std::to_string(a) + "," + std::to_string(b) +
                      " are not coprime");
  if (a_ > b_) std::swap(a_, b_);
}

std::int64_t discrepancy(const WeightedBlowup& bl) { return bl.a() + bl.b(); }

Rational exceptional_intersection(const WeightedBlowup& bl, const GradedPolynomial& f1,
                                  const GradedPolynomial& f2) {
  const std::vector<std::int64_t> swapped{1, bl.b(), bl.a()};
  for (const auto* f : {&f1, &f2}) {
    if (f->weights() != bl.weights() && f->weights() != swapped)
      throw DomainError("polynomial weights do not match the (1," + std::to_string(bl.a()) + "," +
                        std::to_string(bl.b()) + ") blowup");
  }
  if (f1.weights() != f2.weights()) throw DomainError("polynomials carry different weight vectors");
  return Rational(weighted_valuation(f1) * weighted_valuation(f2), bl.a() * bl.b());
}

Rational anticanonical_defect(const WeightedBlowup& bl, std::int64_t v_h, std::int64_t n) {
  if (v_h < 1) throw DomainError("v_H must be at least 1");
  if (n < 1) throw DomainError("n must be at least 1");
  const Rational ratio(Integer(bl.a() + bl.b()) * (bl.a() + bl.b()), Integer(bl.a()) * bl.b());
  return Rational(n) * (Rational(2) - ratio * v_h);
}

PositivityCertificate strict_positivity_check(const WeightedBlowup& bl) {
  const Rational ratio(Integer(bl.a() + bl.b()) * (bl.a() + bl.b()), Integer(bl.a()) * bl.b());
  return {ratio, ratio - 2, ratio - 4, ratio > 2};
}

std::optional<std::pair<std::int64_t, std::int64_t>> solve_normal_bundle(std::int64_t sum,
                                                                         std::int64_t difference) {
  if ((sum + difference) % 2 != 0) return std::nullopt;
  const auto a = (sum + difference) / 2;
  return std::pair{a, sum - a};
}

std::set<std::pair<std::int64_t, std::int64_t>> flopped_normal_bundles() {
  // deg N = -K_X . gamma + 2g - 2 = -2 for a K-trivial rational curve, and
  // the exceptional surface F_{a-b} has nef -K only for a - b <= 2.
  std::set<std::pair<std::int64_t, std::int64_t>> solutions;
  for (const std::int64_t difference : {0, 1, 2})
    if (const auto s = solve_normal_bundle(-2, difference)) solutions.insert(*s);
  return solutions;
}

}  // namespace bircalc
