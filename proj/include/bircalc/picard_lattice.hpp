#pragma once

#include "bircalc/ambient_space.hpp"
#include "bircalc/curve_catalog.hpp"
#include "bircalc/rational.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace bircalc {

/// A divisor class h * pi^*H + e * E on the blowup X -> Y along a curve.
struct DivisorClass {
  Rational h;
  Rational e;

  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) { return {x.h + y.h, x.e + y.e}; }
  friend DivisorClass operator-(const DivisorClass& x) { return {-x.h, -x.e}; }
  friend DivisorClass operator*(const Rational& s, const DivisorClass& x) { return {s * x.h, s * x.e}; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// 2x2 integer matrix, row-major.
using Matrix2 = std::array<std::array<std::int64_t, 2>, 2>;

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs);

/// Rank-2 Neron-Severi lattice of the blowup of Y along a curve of genus g and
/// degree d, in the basis (pi^*H, E).
///
/// The trilinear form is
///   H^3 = H^3_Y,  H^2 E = 0,  H E^2 = -d,  E^3 = -r d + 2 - 2g,
/// which makes (-K_X)^3 = (-K_Y)^3 + 2 K_Y.C + 2g - 2 an identity.
class BlowupLattice {
 public:
  BlowupLattice(AmbientSpace ambient, GenusDegree curve) : ambient_(ambient), curve_(curve) {}

  const AmbientSpace& ambient() const { return ambient_; }
  GenusDegree curve() const { return curve_; }

  static DivisorClass hyperplane() { return {1, 0}; }
  static DivisorClass exceptional() { return {0, 1}; }
  /// K_X = -rH + E.
  DivisorClass canonical() const;

  Rational intersection_number(const DivisorClass& d1, const DivisorClass& d2,
                               const DivisorClass& d3) const;

 private:
  // Basis monomial H^{3-k} E^k.
  Rational basis_value(int exceptional_count) const;

  AmbientSpace ambient_;
  GenusDegree curve_;
};

/// r^3 H^3 - 2 r d + 2g - 2.
std::int64_t anticanonical_cube(const AmbientSpace& ambient, GenusDegree curve);
inline std::int64_t anticanonical_cube(const BlowupLattice& lattice) {
  return anticanonical_cube(lattice.ambient(), lattice.curve());
}

/// Pullback action of the flop on N^1(X) in the basis (K_X, H): columns are
/// the coordinates of phi^*K_X and phi^*H. Requires (-K_X)^3 = 2.
Matrix2 flop_action(const BlowupLattice& lattice);

/// phi^*H expanded in (pi^*H, E); its H-coefficient is the link degree.
DivisorClass flop_pullback_of_hyperplane(const BlowupLattice& lattice);

/// Degree of chi_C with respect to H: (r^2 H^3 - d) r - 1. Gated on the
/// admissible pairs.
std::int64_t link_degree(const AmbientSpace& ambient, GenusDegree curve);

/// h^0(X, -nK_X) = n(n+1)(2n+1)/12 (-K_X)^3 + 2n + 1. Throws DomainError when
/// the value is not an integer or n < 1.
std::int64_t rr_dimension(std::int64_t anticanonical_cube, std::int64_t n);
inline std::int64_t rr_dimension(const BlowupLattice& lattice, std::int64_t n) {
  return rr_dimension(anticanonical_cube(lattice), n);
}

/// Number of monomials of weighted degree exactly n in variables of the
/// given positive degrees.
std::uint64_t weighted_monomial_count(std::span<const std::int64_t> variable_degrees, std::int64_t n);

struct ProfileRow {
  std::int64_t n;
  std::int64_t rr;
  /// Dimension in degree n of the ring built from earlier generators and relations.
  std::int64_t free;
  std::int64_t new_generators;
  std::int64_t new_relations;
  friend bool operator==(const ProfileRow&, const ProfileRow&) = default;
};

struct RingProfile {
  std::vector<ProfileRow> rows;
  std::vector<std::int64_t> generator_degrees;
  std::vector<std::int64_t> relation_degrees;
};

/// Degree-by-degree comparison of h^0(-nK_X) with a graded ring on the
/// generators found so far. Relations are accounted for as one shifted copy
/// of the free count each, exact for a single relation. Requires
/// (-K_X)^3 = 2 and n_max >= 7.
RingProfile graded_ring_profile(const BlowupLattice& lattice, std::int64_t n_max);

/// Same bookkeeping for an arbitrary even anticanonical degree.
RingProfile graded_ring_profile_for_cube(std::int64_t anticanonical_cube, std::int64_t n_max);

/// True iff the profile through degree 12 is that of a hypersurface of degree 6
/// in P(1,1,1,1,3).
bool sextic_double_solid_certificate(const BlowupLattice& lattice);

}  // namespace bircalc
