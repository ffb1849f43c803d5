#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lcmlat/element_set.hpp"
#include "lcmlat/lattice.hpp"

namespace lcmlat {

/// Row schema of the invariant tables. Homological fields are
/// filled by the verifier; they stay empty for standalone lattice queries.
struct InvariantRecord {
  std::size_t id = 0;
  std::size_t cardinality = 0;
  std::optional<int> pdim_quotient;
  std::optional<int> spdim_quotient;
  std::optional<int> pdim_ideal;
  std::optional<int> spdim_ideal;
  int length = 0;
  int breadth = 0;
  int order_dimension = 0;
};

/// Number of edges in a longest chain.
inline int length(const Lattice& l) {
  std::vector<int> height(l.size(), 0);
  for (auto x : l.linear_extension())
    for (auto y : l.lower_covers(x)) height[x] = std::max(height[x], height[y] + 1);
  return height[l.top()];
}

namespace detail {

// Extends `chosen` by elements above index `from`, keeping the set irredundant
// (no element can be dropped without lowering the join). Irredundancy is
// inherited by subsets, so this reaches every irredundant set.
inline void grow_irredundant(const Lattice& l, std::vector<Element>& chosen, std::size_t from, std::size_t& best) {
  best = std::max(best, chosen.size());
  for (std::size_t y = from; y < l.size(); ++y) {
    if (y == l.bottom()) continue;
    chosen.push_back(static_cast<Element>(y));
    ElementSet s;
    for (auto c : chosen) s.set(c);
    const Element whole = l.join_of(s);
    bool irredundant = true;
    for (auto c : chosen) {
      if (l.join_of(s - ElementSet::single(c)) == whole) {
        irredundant = false;
        break;
      }
    }
    if (irredundant) grow_irredundant(l, chosen, y + 1, best);
    chosen.pop_back();
  }
}

}  // namespace detail

/// Smallest p such that every join equals the join of at most p of its
/// joinands. Every subset contains an irredundant subset with the same join,
/// so this is the size of a largest irredundant set: no (p+1)-subset is
/// irredundant exactly when breadth <= p.
inline int breadth(const Lattice& l) {
  std::vector<Element> chosen;
  std::size_t best = 0;
  detail::grow_irredundant(l, chosen, 0, best);
  return static_cast<int>(std::max<std::size_t>(best, 1));
}

/// Incomparable pairs (a, b) with everything strictly below a also below b and
/// everything strictly above b also above a. A family of linear extensions
/// realizes the order iff each such pair has b before a in some member.
inline std::vector<std::pair<Element, Element>> critical_pairs(const Lattice& l) {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (l.comparable(a, b)) continue;
      if (!(l.down_set(a) - ElementSet::single(a)).is_subset_of(l.down_set(b))) continue;
      if (!(l.up_set(b) - ElementSet::single(b)).is_subset_of(l.up_set(a))) continue;
      out.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
    }
  }
  return out;
}

namespace detail {

// Assigns critical pairs to `colors` extensions; each color class, once its
// reversals are added, must stay acyclic. Each class is kept as a transitively
// closed relation (up-sets).
class RealizerSearch {
 public:
  RealizerSearch(const Lattice& l, std::vector<std::pair<Element, Element>> pairs, std::size_t colors)
      : l_(l), pairs_(std::move(pairs)), colors_(colors) {
    std::vector<ElementSet> base(l.size());
    for (std::size_t x = 0; x < l.size(); ++x) base[x] = l.up_set(x);
    classes_.assign(colors, base);
  }

  bool run() { return assign(0, 0); }

 private:
  // Adds b < a to the class; false if that closes a cycle.
  bool reverse(std::vector<ElementSet>& up, Element a, Element b) const {
    if (up[a].test(b)) return false;
    if (up[b].test(a)) return true;
    const ElementSet above_a = up[a];
    for (std::size_t u = 0; u < up.size(); ++u)
      if (up[u].test(b)) up[u] |= above_a;
    return true;
  }

  bool assign(std::size_t i, std::size_t used) {
    if (i == pairs_.size()) return true;
    const auto [a, b] = pairs_[i];
    for (std::size_t c = 0; c < std::min(colors_, used + 1); ++c) {
      auto saved = classes_[c];
      if (reverse(classes_[c], a, b) && assign(i + 1, std::max(used, c + 1))) return true;
      classes_[c] = std::move(saved);
    }
    return false;
  }

  const Lattice& l_;
  std::vector<std::pair<Element, Element>> pairs_;
  std::size_t colors_;
  std::vector<std::vector<ElementSet>> classes_;
};

}  // namespace detail

/// Order dimension: the least number of chains whose product contains the
/// lattice as an induced subposet (equivalently, the least size of a family of
/// linear extensions whose intersection is the order). This is the dim column
/// of the four-atom tables; see sublattice_dimension for the stricter notion.
inline int order_dimension(const Lattice& l) {
  auto pairs = critical_pairs(l);
  if (pairs.empty()) return 1;
  // Pairs that are hard to place go first so conflicts surface early.
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    return l.down_set(x.first).count() + l.up_set(x.second).count() >
           l.down_set(y.first).count() + l.up_set(y.second).count();
  });
  for (std::size_t t = 2;; ++t)
    if (detail::RealizerSearch(l, pairs, t).run()) return static_cast<int>(t);
}

inline bool is_distributive(const Lattice& l) {
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = 0; y < l.size(); ++y)
      for (std::size_t z = 0; z < l.size(); ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

/// Elements p above bottom with p <= x v y only if p <= x or p <= y. Their
/// up-sets are exactly the prime filters.
inline std::vector<Element> join_primes(const Lattice& l) {
  std::vector<Element> out;
  for (std::size_t p = 0; p < l.size(); ++p) {
    if (p == l.bottom()) continue;
    bool prime = true;
    for (std::size_t x = 0; x < l.size() && prime; ++x)
      for (std::size_t y = x; y < l.size() && prime; ++y)
        if (l.leq(p, l.join(x, y)) && !l.leq(p, x) && !l.leq(p, y)) prime = false;
    if (prime) out.push_back(static_cast<Element>(p));
  }
  return out;
}

/// Least m such that the lattice is a sublattice (join and meet preserved) of
/// a product of m chains; empty when no such m exists.
///
/// A lattice map to a chain is a nested family of prime filters, so an
/// embedding into m chains is a separating set of prime filters covered by m
/// nested families. Separation needs every filter up p where p is join-prime,
/// hence m is the width of the join-primes, provided they separate at all.
/// They separate only for distributive lattices.
inline std::optional<int> sublattice_dimension(const Lattice& l) {
  const auto primes = join_primes(l);
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = x + 1; y < l.size(); ++y) {
      bool separated = false;
      for (auto p : primes)
        if (l.leq(p, x) != l.leq(p, y)) separated = true;
      if (!separated) return std::nullopt;
    }
  return static_cast<int>(std::max<std::size_t>(1, minimum_chain_cover(l, primes).size()));
}

inline InvariantRecord lattice_invariants(const Lattice& l, std::size_t id = 0) {
  InvariantRecord r;
  r.id = id;
  r.cardinality = l.size();
  r.length = length(l);
  r.breadth = breadth(l);
  r.order_dimension = order_dimension(l);
  return r;
}

}  // namespace lcmlat
