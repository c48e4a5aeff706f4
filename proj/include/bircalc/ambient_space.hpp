#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace bircalc {

enum class AmbientKind { ProjectiveThreeSpace, CubicThreefold };

/// The base threefold Y: P^3 or a smooth cubic threefold in P^4.
///
/// Only the two admissible instances can be constructed.
class AmbientSpace {
 public:
  static AmbientSpace projective_space() { return AmbientSpace(AmbientKind::ProjectiveThreeSpace, 4, 1, 15); }
  static AmbientSpace cubic_threefold() { return AmbientSpace(AmbientKind::CubicThreefold, 2, 3, 0); }
  /// Accepts `p3` or `cubic`; throws ParseError otherwise.
  static AmbientSpace parse(std::string_view name);

  AmbientKind kind() const { return kind_; }
  /// Fano index r: -K_Y = rH.
  std::int64_t index() const { return index_; }
  /// H^3
  std::int64_t hyperplane_cube() const { return hyperplane_cube_; }
  std::int64_t aut_dimension() const { return aut_dimension_; }
  /// `p3` or `cubic`.
  std::string name() const;

  friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;

 private:
  AmbientSpace(AmbientKind kind, std::int64_t index, std::int64_t cube, std::int64_t aut)
      : kind_(kind), index_(index), hyperplane_cube_(cube), aut_dimension_(aut) {}

  AmbientKind kind_;
  std::int64_t index_;
  std::int64_t hyperplane_cube_;
  std::int64_t aut_dimension_;
};

}  // namespace bircalc
