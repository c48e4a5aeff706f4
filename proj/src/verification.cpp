#include "bircalc/verification.hpp"

#include "bircalc/curve_catalog.hpp"
#include "bircalc/picard_lattice.hpp"
#include "bircalc/weighted_blowup.hpp"
#include "bircalc/word_engine.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace bircalc {

namespace {

template <typename Range>
std::string join(const Range& values) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : " ") << v;
    first = false;
  }
  return out.str();
}

const std::vector<AmbientSpace>& ambients() {
  static const std::vector<AmbientSpace> all{AmbientSpace::projective_space(),
                                             AmbientSpace::cubic_threefold()};
  return all;
}

CheckResult compare(std::string name, const std::string& expected, const std::string& actual) {
  return {std::move(name), expected, actual, expected == actual};
}

CheckResult degree_table() {
  std::vector<std::int64_t> degrees;
  for (const auto& y : ambients())
    for (const auto gd : admissible_pairs(y)) degrees.push_back(link_degree(y, gd));
  return compare("degree table (6 values)", "31 27 23 19 13 11", join(degrees));
}

CheckResult anticanonical_degrees() {
  std::vector<std::int64_t> cubes;
  for (const auto& y : ambients())
    for (const auto gd : admissible_pairs(y)) cubes.push_back(anticanonical_cube(y, gd));
  return compare("(-K_X)^3=2 for the six pairs", "2 2 2 2 2 2", join(cubes));
}

CheckResult trilinear_agreement() {
  std::size_t mismatches = 0;
  std::size_t cases = 0;
  for (const auto& y : ambients()) {
    for (std::int64_t g = 0; g <= 20; ++g) {
      for (std::int64_t d = 1; d <= 15; ++d) {
        const BlowupLattice lattice(y, {g, d});
        const auto minus_k = -lattice.canonical();
        ++cases;
        if (lattice.intersection_number(minus_k, minus_k, minus_k) != anticanonical_cube(lattice)) ++mismatches;
      }
    }
  }
  return compare("(-K_X)^3 formula = trilinear form (" + std::to_string(cases) + " cases)", "0 mismatches",
                 std::to_string(mismatches) + " mismatches");
}

std::vector<CheckResult> riemann_roch() {
  std::vector<CheckResult> out;
  for (const auto& [n, quoted] : std::vector<std::pair<int, int>>{{1, 4}, {2, 10}, {3, 15}, {6, 104}}) {
    std::string name = "h0(-" + (n == 1 ? std::string() : std::to_string(n)) + "K)=" + std::to_string(quoted);
    out.push_back(compare(std::move(name), std::to_string(quoted), std::to_string(rr_dimension(2, n))));
  }
  return out;
}

CheckResult ring_profile() {
  const BlowupLattice lattice(AmbientSpace::projective_space(), {2, 8});
  const auto profile = graded_ring_profile(lattice, 12);
  return compare("anticanonical ring: generators and relations through degree 12",
                 "gens 1 1 1 1 3; rels 6",
                 "gens " + join(profile.generator_degrees) + "; rels " + join(profile.relation_degrees));
}

CheckResult sextic_certificates() {
  std::vector<int> flags;
  for (const auto& y : ambients())
    for (const auto gd : admissible_pairs(y)) flags.push_back(sextic_double_solid_certificate({y, gd}) ? 1 : 0);
  flags.push_back(sextic_double_solid_certificate({AmbientSpace::projective_space(), {0, 1}}) ? 1 : 0);
  return compare("sextic double solid certificate (six pairs true, p3 (0,1) false)", "1 1 1 1 1 1 0",
                 join(flags));
}

CheckResult discrepancies() {
  std::vector<std::int64_t> values;
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}})
    values.push_back(discrepancy(WeightedBlowup(a, b)));
  return compare("discrepancy a+b for (1,1),(1,2),(2,3)", "2 3 5", join(values));
}

CheckResult case_one_defect() {
  std::size_t non_negative = 0;
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = a; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const WeightedBlowup bl(a, b);
      for (std::int64_t v = 1; v <= 3; ++v)
        for (std::int64_t n = 1; n <= 3; ++n)
          if (anticanonical_defect(bl, v, n) >= 0) ++non_negative;
    }
  return compare("(-K_W).Gamma_W < 0 for coprime 1<=a<=b<=12", "0 non-negative",
                 std::to_string(non_negative) + " non-negative");
}

CheckResult normal_bundles() {
  std::vector<std::string> pairs;
  for (const auto& [a, b] : flopped_normal_bundles())
    pairs.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return compare("flopped curve normal bundles", "(-1,-1) (0,-2)", join(pairs));
}

CheckResult serre_degrees() {
  std::vector<std::int64_t> values;
  for (const auto& y : ambients())
    for (const auto gd : admissible_pairs(y)) values.push_back(serre_dual_degree(y, gd));
  return compare("2g-2+K.C for the six pairs", "-30 -26 -22 -18 -12 -10", join(values));
}

CheckResult hilbert_bounds() {
  std::vector<std::string> values;
  for (const auto& y : ambients())
    for (const auto gd : admissible_pairs(y)) {
      const auto b = hilbert_dim_bounds(y, gd);
      values.push_back(std::to_string(b.lower) + ".." + std::to_string(b.upper) + (b.exceeds_aut ? "+" : "-"));
    }
  return compare("Hilbert scheme dimension bounds exceed dim Aut(Y)",
                 "32..33+ 36..37+ 40..41+ 44..45+ 10..11+ 12..13+", join(values));
}

CheckResult non_innerness() {
  Catalog catalog;
  catalog.add({{AmbientSpace::projective_space(), 2, 8, "a"}, true});
  catalog.add({{AmbientSpace::projective_space(), 6, 9, "b"}, true});
  const auto result = non_inner_certificate(IndexPermutation::parse("(a b)"), catalog);
  std::string actual = "refused";
  if (const auto* w = std::get_if<NonInnerWitness>(&result))
    actual = "witness " + w->witness + ", conjugate " + (w->conjugate ? "true" : "false") +
             ", genus obstruction " + (w->field_automorphism_obstruction ? "true" : "false");
  return compare("phi((a b)) not inner, (2,8) vs (6,9)",
                 "witness a, conjugate false, genus obstruction true", actual);
}

CheckResult psi_values() {
  const FreeProduct group;
  const std::string actual = to_string(group.psi(parse_word("g:pgl^5"))) + " | " +
                             to_string(group.psi(parse_word("chi:a"))) + " | " +
                             to_string(group.psi(parse_word("chi:a g:pgl^1 chi:a")));
  return compare("psi kills G and keeps chi letters", "1 | chi:a | 1", actual);
}

}  // namespace

std::vector<CheckResult> run_verification() {
  std::vector<CheckResult> results{degree_table(), anticanonical_degrees(), trilinear_agreement()};
  for (auto& r : riemann_roch()) results.push_back(std::move(r));
  for (auto* check : {&ring_profile, &sextic_certificates, &discrepancies, &case_one_defect, &normal_bundles,
                      &serre_degrees, &hilbert_bounds, &non_innerness, &psi_values})
    results.push_back(check());
  return results;
}

}  // namespace bircalc
