#include "bircalc/graded_poly.hpp"

#include "bircalc/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace bircalc {

namespace {

void validate_weights(const std::vector<std::int64_t>& weights) {
  for (const auto w : weights)
    if (w <= 0) throw DomainError("variable weights must be positive integers");
}

void require_nonzero(const GradedPolynomial& f) {
  if (f.is_zero()) throw DomainError("valuation of zero undefined");
}

std::uint64_t parse_unsigned(std::string_view text, std::string_view context) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw ParseError("malformed " + std::string(context) + " '" + std::string(text) + "'");
  return value;
}

// Multiplies one factor (`x3^2` or a rational literal) into a term.
void apply_factor(std::string_view factor, Exponent& exponent, Rational& coeff) {
  if (factor.empty()) throw ParseError("empty factor in polynomial literal");
  if (factor.front() != 'x') {
    coeff *= parse_rational(factor);
    return;
  }
  factor.remove_prefix(1);
  std::uint64_t power = 1;
  if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
    power = parse_unsigned(factor.substr(caret + 1), "exponent");
    factor = factor.substr(0, caret);
  }
  const auto index = parse_unsigned(factor, "variable index");
  if (index == 0 || index > exponent.size())
    throw ParseError("variable x" + std::string(factor) + " out of range 1.." +
                     std::to_string(exponent.size()));
  if (power > std::numeric_limits<std::uint32_t>::max()) throw ParseError("exponent too large");
  exponent[index - 1] += static_cast<std::uint32_t>(power);
}

}  // namespace

GradedPolynomial::GradedPolynomial(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  validate_weights(weights_);
}

GradedPolynomial GradedPolynomial::constant(std::vector<std::int64_t> weights, const Rational& c) {
  const auto n = weights.size();
  return monomial(std::move(weights), Exponent(n, 0), c);
}

GradedPolynomial GradedPolynomial::variable(std::vector<std::int64_t> weights, std::size_t index) {
  if (index >= weights.size()) throw DomainError("variable index out of range");
  Exponent e(weights.size(), 0);
  e[index] = 1;
  return monomial(std::move(weights), std::move(e), Rational(1));
}

GradedPolynomial GradedPolynomial::monomial(std::vector<std::int64_t> weights, Exponent exponent,
                                            const Rational& c) {
  GradedPolynomial p(std::move(weights));
  if (exponent.size() != p.num_variables())
    throw DomainError("exponent vector length does not match the number of weights");
  p.add_term(exponent, c);
  return p;
}

GradedPolynomial GradedPolynomial::parse(std::string_view text, std::vector<std::int64_t> weights) {
  GradedPolynomial result(std::move(weights));
  std::string compact;
  for (const char c : text)
    if (std::isspace(static_cast<unsigned char>(c)) == 0) compact.push_back(c);
  if (compact.empty()) throw ParseError("empty polynomial literal");

  std::size_t pos = 0;
  while (pos < compact.size()) {
    Rational sign(1);
    if (compact[pos] == '+' || compact[pos] == '-') {
      if (compact[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in polynomial literal");
    }
    auto end = compact.find_first_of("+-", pos);
    if (end == std::string::npos) end = compact.size();
    const std::string_view body(compact.data() + pos, end - pos);
    if (body.empty()) throw ParseError("missing term after sign in '" + std::string(text) + "'");

    Exponent exponent(result.num_variables(), 0);
    Rational coeff = sign;
    std::size_t start = 0;
    while (true) {
      const auto star = body.find('*', start);
      apply_factor(body.substr(start, star == std::string_view::npos ? star : star - start),
                   exponent, coeff);
      if (star == std::string_view::npos) break;
      start = star + 1;
    }
    result.add_term(exponent, coeff);
    pos = end;
  }
  return result;
}

Rational GradedPolynomial::coefficient(const Exponent& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t GradedPolynomial::weighted_degree(const Exponent& exponent) const {
  std::int64_t degree = 0;
  for (std::size_t i = 0; i < exponent.size(); ++i)
    degree += static_cast<std::int64_t>(exponent[i]) * weights_[i];
  return degree;
}

std::int64_t GradedPolynomial::multiplicity() const {
  require_nonzero(*this);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : terms_) {
    std::int64_t total = 0;
    for (const auto k : e) total += k;
    best = std::min(best, total);
  }
  return best;
}

bool GradedPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = weighted_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& term) { return weighted_degree(term.first) == d; });
}

GradedPolynomial GradedPolynomial::derivative(std::size_t index) const {
  if (index >= num_variables()) throw DomainError("variable index out of range");
  GradedPolynomial result(weights_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent lowered = e;
    --lowered[index];
    result.add_term(lowered, c * e[index]);
  }
  return result;
}

GradedPolynomial GradedPolynomial::operator-() const {
  GradedPolynomial result = *this;
  for (auto& [e, c] : result.terms_) c = -c;
  return result;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

GradedPolynomial operator*(const GradedPolynomial& lhs, const GradedPolynomial& rhs) {
  lhs.require_compatible(rhs);
  GradedPolynomial result(lhs.weights_);
  Exponent e(lhs.num_variables());
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      result.add_term(e, c1 * c2);
    }
  }
  return result;
}

std::string GradedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& term : terms_) ordered.push_back(&term);
  std::sort(ordered.begin(), ordered.end(), [this](const auto* a, const auto* b) {
    const auto da = weighted_degree(a->first);
    const auto db = weighted_degree(b->first);
    if (da != db) return da < db;
    return a->first > b->first;
  });

  std::string out;
  bool first = true;
  for (const auto* term : ordered) {
    const auto& [e, c] = *term;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += "x" + std::to_string(i + 1);
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty())
      out += bircalc::to_string(magnitude);
    else if (magnitude == 1)
      out += monomial;
    else
      out += bircalc::to_string(magnitude) + "*" + monomial;
  }
  return out;
}

void GradedPolynomial::add_term(const Exponent& exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void GradedPolynomial::require_compatible(const GradedPolynomial& other) const {
  if (weights_ != other.weights_) throw DomainError("polynomials carry different weight vectors");
}

std::int64_t weighted_valuation(const GradedPolynomial& f) {
  require_nonzero(f);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : f.terms()) best = std::min(best, f.weighted_degree(e));
  return best;
}

std::vector<HomogeneousPart> homogeneous_decomposition(const GradedPolynomial& f) {
  require_nonzero(f);
  std::map<std::int64_t, GradedPolynomial> parts;
  for (const auto& [e, c] : f.terms()) {
    auto [it, inserted] = parts.try_emplace(f.weighted_degree(e), f.weights());
    it->second += GradedPolynomial::monomial(f.weights(), e, c);
  }
  std::vector<HomogeneousPart> result;
  result.reserve(parts.size());
  for (auto& [degree, part] : parts) result.push_back({degree, std::move(part)});
  return result;
}

ChartPullback chart_pullback(const GradedPolynomial& f) {
  const auto k = weighted_valuation(f);
  std::vector<std::int64_t> weights{1};
  weights.insert(weights.end(), f.weights().begin(), f.weights().end());
  GradedPolynomial strict(weights);
  for (const auto& [e, c] : f.terms()) {
    // x^e pulls back to u^{deg e} x^e; one factor u^k is removed.
    Exponent lifted;
    lifted.reserve(e.size() + 1);
    lifted.push_back(static_cast<std::uint32_t>(f.weighted_degree(e) - k));
    lifted.insert(lifted.end(), e.begin(), e.end());
    strict += GradedPolynomial::monomial(weights, std::move(lifted), c);
  }
  return {k, std::move(strict)};
}

std::vector<std::int64_t> parse_weights(std::string_view text) {
  std::vector<std::int64_t> weights;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    const auto w = parse_unsigned(item, "weight");
    if (w == 0) throw ParseError("weights must be positive");
    if (w > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
      throw ParseError("weight too large");
    weights.push_back(static_cast<std::int64_t>(w));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return weights;
}

}  // namespace bircalc
