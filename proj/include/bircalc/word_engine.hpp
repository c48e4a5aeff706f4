#pragma once

#include "bircalc/curve_catalog.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace bircalc {

/// Letter of the subgroup G, modelled as a free group on opaque symbols.
struct GElem {
  std::string symbol;
  std::int64_t exponent;
  friend bool operator==(const GElem&, const GElem&) = default;
};

/// The involution chi_{C_j} attached to the catalog label j.
struct Chi {
  std::string label;
  friend bool operator==(const Chi&, const Chi&) = default;
};

using Letter = std::variant<GElem, Chi>;
/// Element of G * (*_J Z/2Z) as a sequence of letters, not necessarily reduced.
using Word = std::vector<Letter>;

/// Parses whitespace-separated `g:<symbol>^<exp>` (exponent defaults to 1)
/// and `chi:<label>` letters; `1` or the empty string is the identity.
Word parse_word(std::string_view text);
std::string to_string(const Letter& letter);
/// Letters separated by single spaces; `1` for the empty word.
std::string to_string(const Word& word);

/// A finite permutation of catalog labels; fixed points are not stored.
class IndexPermutation {
 public:
  IndexPermutation() = default;
  /// Throws DomainError unless `mapping` is a bijection of its key set.
  explicit IndexPermutation(std::map<std::string, std::string> mapping);
  /// Cycle notation such as `(a b)(c d e)`; `()` and the empty string are the identity.
  static IndexPermutation parse(std::string_view text);

  std::string apply(const std::string& label) const;
  IndexPermutation inverse() const;
  bool is_identity() const { return mapping_.empty(); }
  /// Moved labels in sorted order.
  std::vector<std::string> moved() const;
  std::vector<std::vector<std::string>> cycles() const;
  /// lcm of the cycle lengths.
  std::int64_t order() const;
  const std::map<std::string, std::string>& mapping() const { return mapping_; }
  std::string to_string() const;

  friend bool operator==(const IndexPermutation&, const IndexPermutation&) = default;

 private:
  std::map<std::string, std::string> mapping_;
};

struct KernelDecomposition {
  /// psi(kernel) is trivial.
  Word kernel;
  /// section(psi(w)).
  Word section;
};

/// The free product G * (*_J <chi_j>) with G free on arbitrary symbols.
///
/// When constructed with a label set (usually from a Catalog), every Chi
/// letter must carry one of those labels; otherwise any label is accepted.
class FreeProduct {
 public:
  FreeProduct() = default;
  explicit FreeProduct(std::set<std::string> labels) : labels_(std::move(labels)) {}
  explicit FreeProduct(const Catalog& catalog);

  /// Merges adjacent G letters with equal symbols, drops zero exponents and
  /// cancels adjacent equal Chi letters. Throws DomainError on unknown labels.
  Word normalize(const Word& w) const;
  Word multiply(const Word& lhs, const Word& rhs) const;
  Word invert(const Word& w) const;

  /// Kills G and keeps the Chi letters, reduced in *_J Z/2Z.
  Word psi(const Word& w) const;
  /// Inclusion of reduced Chi words; throws DomainError on a G letter.
  Word section(const Word& v) const;
  KernelDecomposition kernel_decompose(const Word& w) const;

  /// phi(rho): chi_j -> chi_{rho(j)}, G fixed. Labels outside rho are fixed.
  Word phi_automorphism(const IndexPermutation& rho, const Word& w) const;

  /// Conjugacy by cyclic reduction; all factors are abelian, so cyclically
  /// reduced words are conjugate iff they are cyclic rotations of each other.
  bool conjugate(const Word& w1, const Word& w2) const;
  /// Cyclically reduced representative of the conjugacy class of `w`.
  Word cyclic_reduction(const Word& w) const;

 private:
  void validate(const Letter& letter) const;

  std::optional<std::set<std::string>> labels_;
};

inline std::int64_t automorphism_order(const IndexPermutation& rho) { return rho.order(); }

struct NonInnerWitness {
  std::string witness;
  std::string image;
  /// Result of the conjugacy test for (chi_witness, chi_image); false when issued.
  bool conjugate;
  /// The two labels carry different (g, d), so no field automorphism can
  /// identify the curves.
  bool field_automorphism_obstruction;
};

struct Refusal {
  std::string reason;
};

using NonInnerResult = std::variant<NonInnerWitness, Refusal>;

/// Certifies that phi(rho) is not inner: for a moved j0, chi_{rho(j0)} is not
/// conjugate to chi_{j0}. Refuses when rho is trivial or moves a label that
/// is missing from the catalog or not flagged automorphism_free.
NonInnerResult non_inner_certificate(const IndexPermutation& rho, const Catalog& catalog);

}  // namespace bircalc
