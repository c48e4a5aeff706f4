#include "bircalc/picard_lattice.hpp"

#include "bircalc/error.hpp"

#include <algorithm>
#include <bit>

namespace bircalc {

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out[i][j] += lhs[i][k] * rhs[k][j];
  return out;
}

DivisorClass BlowupLattice::canonical() const { return {-ambient_.index(), 1}; }

Rational BlowupLattice::basis_value(int exceptional_count) const {
  const auto r = ambient_.index();
  const auto [g, d] = curve_;
  switch (exceptional_count) {
    case 0: return ambient_.hyperplane_cube();
    case 1: return 0;
    case 2: return -d;
    default: return -r * d + 2 - 2 * g;
  }
}

Rational BlowupLattice::intersection_number(const DivisorClass& d1, const DivisorClass& d2,
                                            const DivisorClass& d3) const {
  Rational total = 0;
  const std::array<const DivisorClass*, 3> args{&d1, &d2, &d3};
  for (int mask = 0; mask < 8; ++mask) {
    Rational term = 1;
    for (int slot = 0; slot < 3; ++slot)
      term *= (mask >> slot & 1) ? args[slot]->e : args[slot]->h;
    if (term != 0) total += term * basis_value(std::popcount(static_cast<unsigned>(mask)));
  }
  return total;
}

std::int64_t anticanonical_cube(const AmbientSpace& ambient, GenusDegree curve) {
  const auto r = ambient.index();
  return r * r * r * ambient.hyperplane_cube() - 2 * r * curve.degree + 2 * curve.genus - 2;
}

namespace {

// a in phi^*H = a K_X - H, from (phi^*K)^2 . phi^*H = K^2 . H.
std::int64_t flop_coefficient(const BlowupLattice& lattice) {
  if (anticanonical_cube(lattice) != 2)
    throw DomainError("not an anticanonical-degree-2 blowup");
  const auto k = lattice.canonical();
  const auto h = BlowupLattice::hyperplane();
  const Rational k2h = lattice.intersection_number(k, k, h);
  const Rational k3 = lattice.intersection_number(k, k, k);
  // a K^3 - K^2 H = K^2 H
  const Rational a = 2 * k2h / k3;
  if (boost::multiprecision::denominator(a) != 1) throw DomainError("non-integral flop action");
  return static_cast<std::int64_t>(boost::multiprecision::numerator(a));
}

}  // namespace

Matrix2 flop_action(const BlowupLattice& lattice) {
  const auto a = flop_coefficient(lattice);
  return {{{1, a}, {0, -1}}};
}

DivisorClass flop_pullback_of_hyperplane(const BlowupLattice& lattice) {
  const auto a = flop_coefficient(lattice);
  return Rational(a) * lattice.canonical() + -BlowupLattice::hyperplane();
}

std::int64_t link_degree(const AmbientSpace& ambient, GenusDegree curve) {
  if (!is_admissible(ambient, curve))
    throw DomainError("(g,d) = (" + std::to_string(curve.genus) + "," + std::to_string(curve.degree) +
                      ") is not admissible for " + ambient.name() + "; admissible pairs: " +
                      admissible_pairs_text(ambient));
  const auto r = ambient.index();
  return (r * r * ambient.hyperplane_cube() - curve.degree) * r - 1;
}

std::int64_t rr_dimension(std::int64_t anticanonical_cube, std::int64_t n) {
  if (n < 1) throw DomainError("n must be at least 1");
  const Integer numerator = Integer(n) * (n + 1) * (2 * n + 1) * anticanonical_cube;
  if (numerator % 12 != 0)
    throw DomainError("h^0(-" + std::to_string(n) + "K) is not integral for (-K)^3 = " +
                      std::to_string(anticanonical_cube));
  return static_cast<std::int64_t>(numerator / 12) + 2 * n + 1;
}

std::uint64_t weighted_monomial_count(std::span<const std::int64_t> variable_degrees, std::int64_t n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (const auto w : variable_degrees) {
    if (w <= 0) throw DomainError("variable degrees must be positive");
    for (std::int64_t k = w; k <= n; ++k) ways[k] += ways[k - w];
  }
  return ways[n];
}

RingProfile graded_ring_profile_for_cube(std::int64_t anticanonical_cube, std::int64_t n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  RingProfile profile;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    auto free = static_cast<std::int64_t>(weighted_monomial_count(profile.generator_degrees, n));
    for (const auto rel : profile.relation_degrees)
      free -= static_cast<std::int64_t>(weighted_monomial_count(profile.generator_degrees, n - rel));
    const auto rr = rr_dimension(anticanonical_cube, n);
    const auto surplus = rr - free;
    const auto gens = std::max<std::int64_t>(surplus, 0);
    const auto rels = std::max<std::int64_t>(-surplus, 0);
    profile.generator_degrees.insert(profile.generator_degrees.end(), gens, n);
    profile.relation_degrees.insert(profile.relation_degrees.end(), rels, n);
    profile.rows.push_back({n, rr, free, gens, rels});
  }
  return profile;
}

RingProfile graded_ring_profile(const BlowupLattice& lattice, std::int64_t n_max) {
  if (anticanonical_cube(lattice) != 2) throw DomainError("not an anticanonical-degree-2 blowup");
  if (n_max < 7) throw DomainError("n_max must be at least 7");
  return graded_ring_profile_for_cube(2, n_max);
}

bool sextic_double_solid_certificate(const BlowupLattice& lattice) {
  const auto cube = anticanonical_cube(lattice);
  if (cube <= 0 || cube % 2 != 0) return false;
  if (rr_dimension(cube, 1) != 4) return false;
  const auto profile = graded_ring_profile_for_cube(cube, 12);
  return profile.generator_degrees == std::vector<std::int64_t>{1, 1, 1, 1, 3} &&
         profile.relation_degrees == std::vector<std::int64_t>{6};
}

}  // namespace bircalc
