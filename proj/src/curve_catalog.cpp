#include "bircalc/curve_catalog.hpp"

#include "bircalc/error.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bircalc {

std::vector<GenusDegree> admissible_pairs(const AmbientSpace& ambient) {
  if (ambient.kind() == AmbientKind::ProjectiveThreeSpace) return {{2, 8}, {6, 9}, {10, 10}, {14, 11}};
  return {{0, 5}, {2, 6}};
}

bool is_admissible(const AmbientSpace& ambient, GenusDegree gd) {
  const auto pairs = admissible_pairs(ambient);
  return std::find(pairs.begin(), pairs.end(), gd) != pairs.end();
}

std::string admissible_pairs_text(const AmbientSpace& ambient) {
  std::string out;
  for (const auto& [g, d] : admissible_pairs(ambient)) {
    if (!out.empty()) out += ", ";
    out += "(" + std::to_string(g) + "," + std::to_string(d) + ")";
  }
  return out;
}

std::int64_t normal_bundle_euler(const AmbientSpace& ambient, GenusDegree gd) {
  return ambient.index() * gd.degree;
}

std::int64_t serre_dual_degree(const AmbientSpace& ambient, GenusDegree gd) {
  return 2 * gd.genus - 2 - ambient.index() * gd.degree;
}

HilbertDimBounds hilbert_dim_bounds(const AmbientSpace& ambient, GenusDegree gd) {
  if (!is_admissible(ambient, gd))
    throw DomainError("(g,d) = (" + std::to_string(gd.genus) + "," + std::to_string(gd.degree) +
                      ") is not admissible for " + ambient.name() + "; admissible pairs: " +
                      admissible_pairs_text(ambient));
  const auto rd = normal_bundle_euler(ambient, gd);
  return {rd, rd + 1, rd > ambient.aut_dimension()};
}

void Catalog::add(CatalogEntry entry) {
  const auto& c = entry.curve;
  if (c.label.empty()) throw DomainError("curve label must be non-empty");
  if (find(c.label) != nullptr) throw DomainError("duplicate label '" + c.label + "'");
  if (!is_admissible(c.ambient, c.genus_degree()))
    throw DomainError("(g,d) = (" + std::to_string(c.genus) + "," + std::to_string(c.degree) +
                      ") is not admissible for " + c.ambient.name());
  entries_.push_back(std::move(entry));
}

const CatalogEntry* Catalog::find(const std::string& label) const {
  const auto it = std::find_if(entries_.begin(), entries_.end(),
                               [&](const CatalogEntry& e) { return e.curve.label == label; });
  return it == entries_.end() ? nullptr : &*it;
}

CatalogError::CatalogError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Catalog load_catalog(std::istream& in) {
  Catalog catalog;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() < 4 || tokens.size() > 5)
      throw CatalogError(number, "expected 'ambient genus degree label [automorphism_free]'");

    try {
      const auto ambient = AmbientSpace::parse(tokens[0]);
      std::int64_t genus = 0;
      std::int64_t degree = 0;
      for (auto [text, out] : {std::pair{&tokens[1], &genus}, std::pair{&tokens[2], &degree}}) {
        std::size_t used = 0;
        *out = std::stoll(*text, &used);
        if (used != text->size()) throw ParseError("malformed integer '" + *text + "'");
      }
      bool automorphism_free = false;
      if (tokens.size() == 5) {
        if (tokens[4] != "automorphism_free")
          throw ParseError("unknown flag '" + tokens[4] + "' (expected automorphism_free)");
        automorphism_free = true;
      }
      catalog.add({CurveClass{ambient, genus, degree, tokens[3]}, automorphism_free});
    } catch (const CatalogError&) {
      throw;
    } catch (const std::exception& e) {
      throw CatalogError(number, e.what());
    }
  }
  return catalog;
}

void save_catalog(const Catalog& catalog, std::ostream& out) {
  for (const auto& entry : catalog.entries()) {
    const auto& c = entry.curve;
    out << c.ambient.name() << ' ' << c.genus << ' ' << c.degree << ' ' << c.label;
    if (entry.automorphism_free) out << " automorphism_free";
    out << '\n';
  }
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open catalog file '" + path + "'");
  return load_catalog(in);
}

}  // namespace bircalc
