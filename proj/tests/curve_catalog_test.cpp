#include "bircalc/curve_catalog.hpp"
#include "bircalc/error.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace bircalc;

namespace {

const AmbientSpace kP3 = AmbientSpace::projective_space();
const AmbientSpace kCubic = AmbientSpace::cubic_threefold();

// Rank-2 Riemann-Roch on C: chi(N) = deg N + 2(1 - g), deg N = -K_Y.C + 2g - 2.
std::int64_t rank_two_euler(const AmbientSpace& y, GenusDegree gd) {
  const auto deg_n = y.index() * gd.degree + 2 * gd.genus - 2;
  return deg_n + 2 * (1 - gd.genus);
}

}  // namespace

TEST(CurveCatalog, AdmissiblePairs) {
  EXPECT_EQ(admissible_pairs(kP3), (std::vector<GenusDegree>{{2, 8}, {6, 9}, {10, 10}, {14, 11}}));
  EXPECT_EQ(admissible_pairs(kCubic), (std::vector<GenusDegree>{{0, 5}, {2, 6}}));
  EXPECT_FALSE(is_admissible(kP3, {3, 7}));
  EXPECT_FALSE(is_admissible(kCubic, {2, 8}));
}

TEST(CurveCatalog, NormalBundleEuler) {
  EXPECT_EQ(rank_two_euler(kP3, {2, 8}), 32);
  EXPECT_EQ(rank_two_euler(kP3, {14, 11}), 44);
  EXPECT_EQ(rank_two_euler(kCubic, {0, 5}), 10);
  EXPECT_EQ(normal_bundle_euler(kP3, {2, 8}), 32);
  EXPECT_EQ(normal_bundle_euler(kP3, {14, 11}), 44);
  EXPECT_EQ(normal_bundle_euler(CurveClass{kCubic, 0, 5, "c"}), 10);
  for (const auto& y : {kP3, kCubic})
    for (std::int64_t g = 0; g <= 20; ++g)
      for (std::int64_t d = 1; d <= 15; ++d) EXPECT_EQ(normal_bundle_euler(y, {g, d}), rank_two_euler(y, {g, d}));
}

TEST(CurveCatalog, SerreDualDegree) {
  EXPECT_EQ(serre_dual_degree(kP3, {2, 8}), -30);
  EXPECT_EQ(serre_dual_degree(kP3, {14, 11}), -18);
  EXPECT_EQ(serre_dual_degree(kCubic, {2, 6}), -10);
  std::vector<std::int64_t> all;
  for (const auto& y : {kP3, kCubic})
    for (const auto gd : admissible_pairs(y)) {
      all.push_back(serre_dual_degree(y, gd));
      EXPECT_LT(serre_dual_degree(y, gd), 0);
    }
  EXPECT_EQ(all, (std::vector<std::int64_t>{-30, -26, -22, -18, -12, -10}));
  for (const auto& y : {kP3, kCubic})
    for (std::int64_t g = 0; g <= 20; ++g)
      for (std::int64_t d = 1; d <= 15; ++d)
        EXPECT_EQ(serre_dual_degree(y, {g, d}) + normal_bundle_euler(y, {g, d}), 2 * g - 2);
}

TEST(CurveCatalog, HilbertBounds) {
  EXPECT_EQ(hilbert_dim_bounds(kP3, {2, 8}), (HilbertDimBounds{32, 33, true}));
  EXPECT_EQ(hilbert_dim_bounds(kCubic, {0, 5}), (HilbertDimBounds{10, 11, true}));
  EXPECT_EQ(hilbert_dim_bounds(kP3, {14, 11}), (HilbertDimBounds{44, 45, true}));
  for (const auto& y : {kP3, kCubic})
    for (const auto gd : admissible_pairs(y)) {
      const auto b = hilbert_dim_bounds(y, gd);
      EXPECT_EQ(b.lower, normal_bundle_euler(y, gd));
      EXPECT_EQ(b.upper, b.lower + 1);
      EXPECT_TRUE(b.exceeds_aut);
    }
  EXPECT_THROW(hilbert_dim_bounds(kP3, {3, 7}), DomainError);
}

TEST(CatalogIo, EmptyAndComments) {
  std::istringstream empty("");
  EXPECT_TRUE(load_catalog(empty).empty());
  std::istringstream comments("# nothing\n\n   # still nothing\n");
  EXPECT_TRUE(load_catalog(comments).empty());
}

TEST(CatalogIo, SingleRecord) {
  std::istringstream in("p3 2 8 c-alpha automorphism_free\n");
  const auto catalog = load_catalog(in);
  ASSERT_EQ(catalog.size(), 1u);
  const auto* entry = catalog.find("c-alpha");
  ASSERT_NE(entry, nullptr);
  EXPECT_TRUE(entry->automorphism_free);
  EXPECT_EQ(entry->curve, (CurveClass{kP3, 2, 8, "c-alpha"}));
}

TEST(CatalogIo, Errors) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      load_catalog(in);
    } catch (const CatalogError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("p3 2 8 c-alpha automorphism_free\np3 6 9 c-alpha\n"), 2u);
  EXPECT_EQ(line_of("# header\np3 2 8 a\ncubic 2 8 b\n"), 3u);  // inadmissible for the cubic
  EXPECT_EQ(line_of("p3 2 x a\n"), 1u);
  EXPECT_EQ(line_of("p4 2 8 a\n"), 1u);
  EXPECT_EQ(line_of("p3 2 8\n"), 1u);
  EXPECT_EQ(line_of("p3 2 8 a fancy\n"), 1u);

  std::istringstream dup("p3 2 8 c-alpha automorphism_free\np3 6 9 c-alpha\n");
  try {
    load_catalog(dup);
    FAIL();
  } catch (const CatalogError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("duplicate label"), std::string::npos);
  }
}

TEST(CatalogIo, SaveThenLoadIsIdentity) {
  Catalog catalog;
  catalog.add({{kP3, 2, 8, "a"}, true});
  catalog.add({{kP3, 6, 9, "b"}, false});
  catalog.add({{kCubic, 0, 5, "line-five"}, true});
  catalog.add({{kP3, 14, 11, "z9"}, false});
  std::stringstream buffer;
  save_catalog(catalog, buffer);
  EXPECT_EQ(load_catalog(buffer), catalog);
  EXPECT_THROW(catalog.add({{kP3, 2, 8, "a"}, true}), DomainError);
}
