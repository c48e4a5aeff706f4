#include "bircalc/word_engine.hpp"

#include "bircalc/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

namespace bircalc {

namespace {

bool same_factor(const Letter& x, const Letter& y) {
  if (x.index() != y.index()) return false;
  if (const auto* gx = std::get_if<GElem>(&x)) return gx->symbol == std::get<GElem>(y).symbol;
  return std::get<Chi>(x).label == std::get<Chi>(y).label;
}

// Product of two letters of the same factor; nullopt when trivial.
std::optional<Letter> merge(const Letter& x, const Letter& y) {
  if (const auto* gx = std::get_if<GElem>(&x)) {
    const auto sum = gx->exponent + std::get<GElem>(y).exponent;
    if (sum == 0) return std::nullopt;
    return GElem{gx->symbol, sum};
  }
  return std::nullopt;
}

Letter inverse_letter(const Letter& x) {
  if (const auto* g = std::get_if<GElem>(&x)) return GElem{g->symbol, -g->exponent};
  return x;
}

bool valid_name(std::string_view name) {
  return !name.empty() && std::none_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isspace(c) != 0 || c == '^' || c == '(' || c == ')';
  });
}

Letter parse_letter(std::string_view token) {
  if (token.starts_with("chi:")) {
    const auto label = token.substr(4);
    if (!valid_name(label)) throw ParseError("malformed letter '" + std::string(token) + "'");
    return Chi{std::string(label)};
  }
  if (token.starts_with("g:")) {
    auto body = token.substr(2);
    std::int64_t exponent = 1;
    if (const auto caret = body.find('^'); caret != std::string_view::npos) {
      const auto text = body.substr(caret + 1);
      const auto* end = text.data() + text.size();
      const auto [ptr, ec] = std::from_chars(text.data(), end, exponent);
      if (text.empty() || ec != std::errc{} || ptr != end)
        throw ParseError("malformed exponent in '" + std::string(token) + "'");
      body = body.substr(0, caret);
    }
    if (!valid_name(body)) throw ParseError("malformed letter '" + std::string(token) + "'");
    return GElem{std::string(body), exponent};
  }
  throw ParseError("letter '" + std::string(token) + "' must start with 'g:' or 'chi:'");
}

}  // namespace

Word parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  Word word;
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.size() == 1 && tokens.front() == "1") return word;
  for (const auto& t : tokens) word.push_back(parse_letter(t));
  return word;
}

std::string to_string(const Letter& letter) {
  if (const auto* g = std::get_if<GElem>(&letter))
    return "g:" + g->symbol + "^" + std::to_string(g->exponent);
  return "chi:" + std::get<Chi>(letter).label;
}

std::string to_string(const Word& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& letter : word) {
    if (!out.empty()) out += ' ';
    out += to_string(letter);
  }
  return out;
}

IndexPermutation::IndexPermutation(std::map<std::string, std::string> mapping) {
  std::set<std::string> images;
  for (const auto& [from, to] : mapping) {
    if (!images.insert(to).second) throw DomainError("permutation is not injective at '" + to + "'");
    if (from != to) mapping_.emplace(from, to);
  }
  for (const auto& to : images)
    if (!mapping.contains(to)) throw DomainError("permutation image '" + to + "' is outside its domain");
}

IndexPermutation IndexPermutation::parse(std::string_view text) {
  std::map<std::string, std::string> mapping;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in permutation '" + std::string(text) + "'");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos)
      throw ParseError("unbalanced parenthesis in permutation '" + std::string(text) + "'");
    std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
    std::vector<std::string> cycle;
    for (std::string label; in >> label;) {
      if (!valid_name(label)) throw ParseError("malformed label '" + label + "'");
      cycle.push_back(label);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (mapping.contains(cycle[i]))
        throw ParseError("label '" + cycle[i] + "' appears twice in permutation");
      mapping.emplace(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    pos = close + 1;
    skip_space();
  }
  return IndexPermutation(std::move(mapping));
}

std::string IndexPermutation::apply(const std::string& label) const {
  const auto it = mapping_.find(label);
  return it == mapping_.end() ? label : it->second;
}

IndexPermutation IndexPermutation::inverse() const {
  std::map<std::string, std::string> inv;
  for (const auto& [from, to] : mapping_) inv.emplace(to, from);
  return IndexPermutation(std::move(inv));
}

std::vector<std::string> IndexPermutation::moved() const {
  std::vector<std::string> out;
  for (const auto& [from, to] : mapping_) out.push_back(from);
  return out;
}

std::vector<std::vector<std::string>> IndexPermutation::cycles() const {
  std::vector<std::vector<std::string>> out;
  std::set<std::string> seen;
  for (const auto& [start, next] : mapping_) {
    if (seen.contains(start)) continue;
    std::vector<std::string> cycle;
    for (auto label = start; seen.insert(label).second; label = apply(label)) cycle.push_back(label);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::int64_t IndexPermutation::order() const {
  std::int64_t order = 1;
  for (const auto& cycle : cycles()) order = std::lcm(order, static_cast<std::int64_t>(cycle.size()));
  return order;
}

std::string IndexPermutation::to_string() const {
  if (is_identity()) return "()";
  std::string out;
  for (const auto& cycle : cycles()) {
    out += "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) out += (i ? " " : "") + cycle[i];
    out += ")";
  }
  return out;
}

FreeProduct::FreeProduct(const Catalog& catalog) : labels_(std::set<std::string>{}) {
  for (const auto& entry : catalog.entries()) labels_->insert(entry.curve.label);
}

void FreeProduct::validate(const Letter& letter) const {
  const auto* chi = std::get_if<Chi>(&letter);
  if (chi == nullptr || !labels_) return;
  if (!labels_->contains(chi->label)) throw DomainError("unknown chi label '" + chi->label + "'");
}

Word FreeProduct::normalize(const Word& w) const {
  Word stack;
  stack.reserve(w.size());
  for (const auto& letter : w) {
    validate(letter);
    if (const auto* g = std::get_if<GElem>(&letter); g != nullptr && g->exponent == 0) continue;
    if (!stack.empty() && same_factor(stack.back(), letter)) {
      auto merged = merge(stack.back(), letter);
      stack.pop_back();
      if (merged) stack.push_back(std::move(*merged));
    } else {
      stack.push_back(letter);
    }
  }
  return stack;
}

Word FreeProduct::multiply(const Word& lhs, const Word& rhs) const {
  Word joined = lhs;
  joined.insert(joined.end(), rhs.begin(), rhs.end());
  return normalize(joined);
}

Word FreeProduct::invert(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
  return normalize(out);
}

Word FreeProduct::psi(const Word& w) const {
  Word chis;
  for (const auto& letter : w) {
    validate(letter);
    if (std::holds_alternative<Chi>(letter)) chis.push_back(letter);
  }
  return normalize(chis);
}

Word FreeProduct::section(const Word& v) const {
  for (const auto& letter : v)
    if (std::holds_alternative<GElem>(letter))
      throw DomainError("section is defined on chi words only; found " + to_string(letter));
  return normalize(v);
}

KernelDecomposition FreeProduct::kernel_decompose(const Word& w) const {
  auto s = section(psi(w));
  auto n = multiply(w, invert(s));
  return {std::move(n), std::move(s)};
}

Word FreeProduct::phi_automorphism(const IndexPermutation& rho, const Word& w) const {
  if (labels_) {
    for (const auto& label : rho.moved())
      if (!labels_->contains(label))
        throw DomainError("permutation moves '" + label + "', which is not a catalog label");
  }
  Word out;
  out.reserve(w.size());
  for (const auto& letter : w) {
    validate(letter);
    if (const auto* chi = std::get_if<Chi>(&letter))
      out.push_back(Chi{rho.apply(chi->label)});
    else
      out.push_back(letter);
  }
  return normalize(out);
}

Word FreeProduct::cyclic_reduction(const Word& w) const {
  const auto reduced = normalize(w);
  std::deque<Letter> d(reduced.begin(), reduced.end());
  // Conjugating by the last letter folds it into the first.
  while (d.size() >= 2 && same_factor(d.front(), d.back())) {
    auto merged = merge(d.back(), d.front());
    d.pop_front();
    d.pop_back();
    if (merged) d.push_front(std::move(*merged));
  }
  return {d.begin(), d.end()};
}

bool FreeProduct::conjugate(const Word& w1, const Word& w2) const {
  const auto c1 = cyclic_reduction(w1);
  const auto c2 = cyclic_reduction(w2);
  if (c1.size() != c2.size()) return false;
  if (c1.empty()) return true;
  const auto n = c1.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = c1[i] == c2[(i + shift) % n];
    if (match) return true;
  }
  return false;
}

NonInnerResult non_inner_certificate(const IndexPermutation& rho, const Catalog& catalog) {
  if (rho.is_identity()) return Refusal{"trivial permutation"};
  const auto moved = rho.moved();
  for (const auto& label : moved) {
    const auto* entry = catalog.find(label);
    if (entry == nullptr) return Refusal{"label '" + label + "' is not in the catalog"};
    if (!entry->automorphism_free)
      return Refusal{"label '" + label + "' is not flagged automorphism_free"};
  }

  auto distinct_curves = [&](const std::string& label) {
    return catalog.find(label)->curve.genus_degree() != catalog.find(rho.apply(label))->curve.genus_degree();
  };
  const auto it = std::find_if(moved.begin(), moved.end(), distinct_curves);
  const auto& witness = it != moved.end() ? *it : moved.front();
  const auto image = rho.apply(witness);

  const FreeProduct group(catalog);
  return NonInnerWitness{witness, image, group.conjugate(Word{Chi{witness}}, Word{Chi{image}}),
                         distinct_curves(witness)};
}

}  // namespace bircalc
