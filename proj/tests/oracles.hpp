#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the library routine it is used to check.

#include "bircalc/graded_poly.hpp"
#include "bircalc/rational.hpp"
#include "bircalc/word_engine.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using bircalc::Rational;
using SparsePoly = std::map<std::vector<int>, Rational>;

inline SparsePoly multiply(const SparsePoly& p, const SparsePoly& q) {
  SparsePoly out;
  for (const auto& [e1, c1] : p)
    for (const auto& [e2, c2] : q) {
      std::vector<int> e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out[e] += c1 * c2;
    }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

inline SparsePoly add(SparsePoly p, const SparsePoly& q, const Rational& scale = 1) {
  for (const auto& [e, c] : q) p[e] += scale * c;
  std::erase_if(p, [](const auto& t) { return t.second == 0; });
  return p;
}

inline SparsePoly monomial(std::size_t n, std::size_t var, int power, const Rational& c = 1) {
  std::vector<int> e(n, 0);
  e[var] = power;
  return {{e, c}};
}

/// Literal substitution x_i -> u^{w_i} x_i, multiplied out factor by factor,
/// in variables (u, x_1, ..., x_n).
inline SparsePoly substitute_chart(const bircalc::GradedPolynomial& f) {
  const auto n = f.num_variables();
  SparsePoly result;
  for (const auto& [e, c] : f.terms()) {
    SparsePoly term{{std::vector<int>(n + 1, 0), c}};
    for (std::size_t i = 0; i < n; ++i) {
      SparsePoly factor = multiply(monomial(n + 1, 0, static_cast<int>(f.weights()[i])), monomial(n + 1, i + 1, 1));
      for (std::uint32_t k = 0; k < e[i]; ++k) term = multiply(term, factor);
    }
    result = add(result, term);
  }
  return result;
}

/// Largest k with var^k dividing p (p nonzero).
inline int divisibility_power(const SparsePoly& p, std::size_t var) {
  int best = std::numeric_limits<int>::max();
  for (const auto& [e, c] : p) best = std::min(best, e[var]);
  return best;
}

inline int chart_valuation(const bircalc::GradedPolynomial& f) {
  return divisibility_power(substitute_chart(f), 0);
}

inline SparsePoly derivative(const SparsePoly& p, std::size_t var) {
  SparsePoly out;
  for (const auto& [e, c] : p) {
    if (e[var] == 0) continue;
    auto lowered = e;
    --lowered[var];
    out[lowered] += c * e[var];
  }
  return out;
}

/// Power of v in det d(x1,x2,x3)/d(v,y1,y2) for the chart
/// (v, y1, y2) -> (v, y1 v^a, y2 v^b) of the (1,a,b)-blowup.
inline int jacobian_v_power(int a, int b) {
  const SparsePoly x1 = monomial(3, 0, 1);
  const SparsePoly x2 = multiply(monomial(3, 1, 1), monomial(3, 0, a));
  const SparsePoly x3 = multiply(monomial(3, 2, 1), monomial(3, 0, b));
  const std::vector<SparsePoly> components{x1, x2, x3};
  SparsePoly m[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = derivative(components[i], j);
  SparsePoly det;
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int p = 0; p < 6; ++p) {
    SparsePoly term = multiply(multiply(m[0][perms[p][0]], m[1][perms[p][1]]), m[2][perms[p][2]]);
    det = add(det, term, p < 3 ? 1 : -1);
  }
  return divisibility_power(det, 0);
}

/// Counts monomials of degree n by explicit recursion over exponents.
inline std::uint64_t enumerate_monomials(const std::vector<std::int64_t>& degrees, std::int64_t n,
                                         std::size_t from = 0) {
  if (from == degrees.size()) return n == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (std::int64_t k = 0; k * degrees[from] <= n; ++k) total += enumerate_monomials(degrees, n - k * degrees[from], from + 1);
  return total;
}

inline bircalc::GradedPolynomial random_polynomial(std::mt19937_64& rng, const std::vector<std::int64_t>& weights,
                                                   int max_terms = 8, int max_exponent = 6) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> exponent(0, max_exponent);
  std::uniform_int_distribution<int> numerator(-9, 9);
  std::uniform_int_distribution<int> denominator(1, 4);
  while (true) {
    bircalc::GradedPolynomial f(weights);
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
      bircalc::Exponent e(weights.size());
      for (auto& k : e) k = static_cast<std::uint32_t>(exponent(rng));
      f += bircalc::GradedPolynomial::monomial(weights, e, Rational(numerator(rng), denominator(rng)));
    }
    if (!f.is_zero()) return f;
  }
}

// ---- words ---------------------------------------------------------------

/// Factor key: G symbols and chi labels live in disjoint namespaces.
inline std::string factor_of(const bircalc::Letter& l) {
  if (const auto* g = std::get_if<bircalc::GElem>(&l)) return "g:" + g->symbol;
  return "chi:" + std::get<bircalc::Chi>(l).label;
}

/// Applies single rewrites at random positions until none applies: drop a
/// zero-exponent G letter, merge two adjacent G letters of one symbol, or
/// cancel two adjacent equal chi letters.
inline bircalc::Word rewrite_to_fixed_point(bircalc::Word w, std::mt19937_64& rng) {
  while (true) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (const auto* g = std::get_if<bircalc::GElem>(&w[i]); g && g->exponent == 0) sites.push_back(2 * i);
      if (i + 1 < w.size() && factor_of(w[i]) == factor_of(w[i + 1])) sites.push_back(2 * i + 1);
    }
    if (sites.empty()) return w;
    const auto site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    const auto i = site / 2;
    if (site % 2 == 0) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    if (auto* g = std::get_if<bircalc::GElem>(&w[i])) {
      g->exponent += std::get<bircalc::GElem>(w[i + 1]).exponent;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    } else {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    }
  }
}

inline bircalc::Word random_word(std::mt19937_64& rng, std::size_t max_length, int g_symbols, int chi_labels) {
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  std::uniform_int_distribution<int> kind(0, 1);
  std::uniform_int_distribution<int> sym(0, g_symbols - 1);
  std::uniform_int_distribution<int> lab(0, chi_labels - 1);
  std::uniform_int_distribution<int> exp(-3, 3);
  bircalc::Word w;
  const auto n = length(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (kind(rng) == 0 && g_symbols > 0)
      w.push_back(bircalc::GElem{std::string(1, static_cast<char>('p' + sym(rng))), exp(rng)});
    else
      w.push_back(bircalc::Chi{std::string(1, static_cast<char>('a' + lab(rng)))});
  }
  return w;
}

inline bircalc::Word random_chi_word(std::mt19937_64& rng, std::size_t max_length, int chi_labels) {
  return random_word(rng, max_length, 0, chi_labels);
}

/// All words of length <= max_length over `alphabet`, by enumeration.
inline void for_each_word(const std::vector<bircalc::Letter>& alphabet, std::size_t max_length,
                          const std::function<bool(const bircalc::Word&)>& visit) {
  bircalc::Word current;
  std::function<bool(std::size_t)> rec = [&](std::size_t depth) {
    if (visit(current)) return true;
    if (depth == max_length) return false;
    for (const auto& l : alphabet) {
      current.push_back(l);
      if (rec(depth + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  rec(0);
}

/// Searches conjugators c of length <= max_length with c w1 c^-1 = w2.
inline bool brute_force_conjugate(const bircalc::FreeProduct& group, const bircalc::Word& w1,
                                  const bircalc::Word& w2, const std::vector<bircalc::Letter>& alphabet,
                                  std::size_t max_length) {
  const auto target = group.normalize(w2);
  bool found = false;
  for_each_word(alphabet, max_length, [&](const bircalc::Word& c) {
    found = group.multiply(group.multiply(c, w1), group.invert(c)) == target;
    return found;
  });
  return found;
}

/// Order of a permutation by repeated application until every label returns.
inline std::int64_t permutation_order(const std::map<std::string, std::string>& mapping) {
  std::map<std::string, std::string> current = mapping;
  for (std::int64_t k = 1;; ++k) {
    if (std::all_of(current.begin(), current.end(), [](const auto& kv) { return kv.first == kv.second; })) return k;
    for (auto& [from, to] : current) {
      const auto it = mapping.find(to);
      to = it == mapping.end() ? to : it->second;
    }
  }
}

}  // namespace oracle
