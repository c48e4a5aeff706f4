#pragma once

#include "bircalc/ambient_space.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bircalc {

struct GenusDegree {
  std::int64_t genus;
  std::int64_t degree;
  friend bool operator==(const GenusDegree&, const GenusDegree&) = default;
};

/// A curve class C in Y. The label names one projective-equivalence class
/// and is the identity of the curve when used as a free-product index.
struct CurveClass {
  AmbientSpace ambient;
  std::int64_t genus;
  std::int64_t degree;
  std::string label;

  GenusDegree genus_degree() const { return {genus, degree}; }
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// (g, d) pairs whose blowup is a weak Fano with a sextic double solid as
/// anticanonical model.
std::vector<GenusDegree> admissible_pairs(const AmbientSpace& ambient);
bool is_admissible(const AmbientSpace& ambient, GenusDegree gd);
/// Human-readable list, e.g. `(2,8), (6,9), (10,10), (14,11)`.
std::string admissible_pairs_text(const AmbientSpace& ambient);

/// chi(N_{C/Y}) = deg N + 2(1 - g) = r d.
std::int64_t normal_bundle_euler(const AmbientSpace& ambient, GenusDegree gd);
/// 2g - 2 + K_Y . C = 2g - 2 - r d; negative means h^1(O_C(-K_Y . C)) = 0.
std::int64_t serre_dual_degree(const AmbientSpace& ambient, GenusDegree gd);

struct HilbertDimBounds {
  std::int64_t lower;
  std::int64_t upper;
  /// lower > dim Aut(Y)
  bool exceeds_aut;
  friend bool operator==(const HilbertDimBounds&, const HilbertDimBounds&) = default;
};

/// -K_Y.C <= dim S_{g,d} <= -K_Y.C + 1. Throws DomainError for inadmissible pairs.
HilbertDimBounds hilbert_dim_bounds(const AmbientSpace& ambient, GenusDegree gd);

inline std::int64_t normal_bundle_euler(const CurveClass& c) {
  return normal_bundle_euler(c.ambient, c.genus_degree());
}
inline std::int64_t serre_dual_degree(const CurveClass& c) {
  return serre_dual_degree(c.ambient, c.genus_degree());
}
inline HilbertDimBounds hilbert_dim_bounds(const CurveClass& c) {
  return hilbert_dim_bounds(c.ambient, c.genus_degree());
}

struct CatalogEntry {
  CurveClass curve;
  /// Asserted: no non-trivial automorphism of Y fixes the curve.
  bool automorphism_free = false;
  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// A finite, label-unique list of admissible curve classes.
class Catalog {
 public:
  Catalog() = default;

  /// Throws DomainError on a duplicate label, an empty label or an
  /// inadmissible (g, d).
  void add(CatalogEntry entry);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const CatalogEntry* find(const std::string& label) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  std::vector<CatalogEntry> entries_;
};

/// Error while reading a catalog stream; carries the 1-based line number.
class CatalogError : public std::runtime_error {
 public:
  CatalogError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads line records `ambient genus degree label [automorphism_free]`;
/// `#` starts a comment.
Catalog load_catalog(std::istream& in);
void save_catalog(const Catalog& catalog, std::ostream& out);
Catalog load_catalog_file(const std::string& path);

}  // namespace bircalc
