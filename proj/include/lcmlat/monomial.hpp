#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcmlat {

/// Exponent vector of a monomial, one entry per variable.
using Exponent = std::vector<std::uint32_t>;

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

inline Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = std::max(a[j], b[j]);
  return out;
}

inline std::string monomial_to_string(const Exponent& e) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(j + 1);
    if (e[j] > 1) out += '^' + std::to_string(e[j]);
  }
  return out.empty() ? "1" : out;
}

/// A proper monomial ideal given by its minimal generators.
class MonomialIdeal {
 public:
  /// Throws std::invalid_argument unless `generators` is a nonempty minimal
  /// generating set of a proper ideal in `num_vars` variables.
  MonomialIdeal(std::size_t num_vars, std::vector<Exponent> generators)
      : num_vars_(num_vars), generators_(std::move(generators)) {
    if (generators_.empty()) throw std::invalid_argument("ideal needs at least one generator");
    for (const auto& g : generators_) {
      if (g.size() != num_vars_) throw std::invalid_argument("generator has wrong number of variables");
      if (std::all_of(g.begin(), g.end(), [](auto e) { return e == 0; }))
        throw std::invalid_argument("unit generator: the ideal must be proper");
    }
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = 0; j < generators_.size(); ++j)
        if (i != j && divides(generators_[i], generators_[j]))
          throw std::invalid_argument("generating set is not minimal: " + monomial_to_string(generators_[i]) +
                                      " divides " + monomial_to_string(generators_[j]));
  }

  /// Drops duplicates and generators divisible by another one, keeping the
  /// first-seen order of the survivors.
  static MonomialIdeal minimalized(std::size_t num_vars, const std::vector<Exponent>& generators) {
    std::vector<Exponent> kept;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
        if (i == j || !divides(generators[j], generators[i])) continue;
        // Strict divisor, or an equal copy seen earlier.
        redundant = generators[j] != generators[i] || j < i;
      }
      if (!redundant) kept.push_back(generators[i]);
    }
    return MonomialIdeal(num_vars, std::move(kept));
  }

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Exponent>& generators() const { return generators_; }
  std::size_t num_generators() const { return generators_.size(); }

  bool contains(const Exponent& monomial) const {
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](const Exponent& g) { return divides(g, monomial); });
  }

  /// Componentwise lcm of the generators.
  Exponent lcm_of_generators() const {
    Exponent g(num_vars_, 0);
    for (const auto& gen : generators_) g = lcm(g, gen);
    return g;
  }

  bool is_squarefree() const {
    for (const auto& g : generators_)
      for (auto e : g)
        if (e > 1) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& g : generators_) {
      if (!out.empty()) out += ", ";
      out += monomial_to_string(g);
    }
    return out;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t num_vars_;
  std::vector<Exponent> generators_;
};

/// Parses "x1*x3, x2^2 x4, ..." (optionally wrapped in parentheses). `*` is
/// optional between factors. The variable count is the highest index used, or
/// `min_vars` if that is larger.
inline MonomialIdeal parse_ideal(std::string_view text, std::size_t min_vars = 0) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("ideal syntax error at offset " + std::to_string(pos) + ": " + what);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> std::uint64_t {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
      if (v > UINT32_MAX) fail("number too large");
    }
    return v;
  };

  skip_ws();
  bool parenthesized = false;
  if (pos < text.size() && text[pos] == '(') {
    parenthesized = true;
    ++pos;
  }

  // Each monomial as (variable index, exponent) factors; sized once all are read.
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> monomials;
  std::size_t max_var = 0;
  while (true) {
    skip_ws();
    std::vector<std::pair<std::size_t, std::uint32_t>> factors;
    bool unit = false;
    while (true) {
      skip_ws();
      if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
        ++pos;
        const auto var = number();
        if (var == 0) fail("variables are numbered from x1");
        std::uint64_t exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          exp = number();
        }
        factors.emplace_back(static_cast<std::size_t>(var - 1), static_cast<std::uint32_t>(exp));
        max_var = std::max<std::size_t>(max_var, var);
      } else if (pos < text.size() && text[pos] == '1' && factors.empty()) {
        ++pos;
        unit = true;
      } else {
        fail("expected a variable");
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) continue;
      break;
    }
    if (unit && !factors.empty()) fail("malformed monomial");
    monomials.push_back(std::move(factors));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  skip_ws();
  if (parenthesized) {
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
    skip_ws();
  }
  if (pos != text.size()) fail("unexpected trailing input");

  const std::size_t n = std::max(max_var, min_vars);
  std::vector<Exponent> gens;
  for (const auto& factors : monomials) {
    Exponent e(n, 0);
    for (auto [var, exp] : factors) e[var] += exp;
    if (std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; }))
      throw std::invalid_argument("unit generator: the ideal must be proper");
    gens.push_back(std::move(e));
  }
  return MonomialIdeal::minimalized(n, gens);
}

}  // namespace lcmlat
