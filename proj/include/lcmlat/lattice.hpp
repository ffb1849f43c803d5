#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcmlat/element_set.hpp"

namespace lcmlat {

/// A finite lattice on the element indices 0..size()-1.
///
/// The order is stored as up-sets and down-sets; join and meet are dense
/// tables so both are O(1). Instances are immutable once built and can only be
/// obtained through the validating factories, so every Lattice satisfies the
/// lattice axioms.
class Lattice {
 public:
  Lattice() = default;

  /// Builds a lattice from up-sets, `up[x] = {y : x <= y}`. Throws
  /// std::invalid_argument when the relation is not a partial order or some
  /// pair lacks a join or a meet.
  static Lattice from_up_sets(std::vector<ElementSet> up) {
    const std::size_t n = up.size();
    if (n == 0) throw std::invalid_argument("lattice must have at least one element");
    if (n > kMaxElements)
      throw std::invalid_argument("lattice has more than " + std::to_string(kMaxElements) +
                                  " elements");
    const ElementSet all = ElementSet::prefix(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (!up[x].test(x)) throw std::invalid_argument("order relation is not reflexive");
      if (!up[x].is_subset_of(all)) throw std::invalid_argument("order relation out of range");
    }
    for (std::size_t x = 0; x < n; ++x) {
      bool ok = true;
      up[x].for_each([&](std::size_t y) {
        if (y != x && up[y].test(x)) ok = false;
        if (!up[y].is_subset_of(up[x])) ok = false;
      });
      if (!ok) throw std::invalid_argument("order relation is not antisymmetric and transitive");
    }

    Lattice l;
    l.n_ = n;
    l.up_ = std::move(up);
    l.down_.assign(n, ElementSet{});
    for (std::size_t x = 0; x < n; ++x) l.up_[x].for_each([&](std::size_t y) { l.down_[y].set(x); });

    l.join_.assign(n * n, 0);
    l.meet_.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x; y < n; ++y) {
        const auto j = least_of(l.up_[x] & l.up_[y], l.up_);
        const auto m = least_of(l.down_[x] & l.down_[y], l.down_);
        if (j == kMaxElements || m == kMaxElements)
          throw std::invalid_argument("poset is not a lattice: elements " + std::to_string(x) +
                                      " and " + std::to_string(y) + " lack a join or meet");
        l.join_[x * n + y] = l.join_[y * n + x] = static_cast<Element>(j);
        l.meet_[x * n + y] = l.meet_[y * n + x] = static_cast<Element>(m);
      }
    }

    l.bottom_ = l.meet_[0];
    l.top_ = l.join_[0];
    for (std::size_t x = 0; x < n; ++x) {
      l.bottom_ = l.meet_[l.bottom_ * n + x];
      l.top_ = l.join_[l.top_ * n + x];
    }

    l.upper_covers_.assign(n, {});
    l.lower_covers_.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
      l.up_[x].for_each([&](std::size_t y) {
        if (y != x && (l.up_[x] & l.down_[y]).count() == 2) {
          l.upper_covers_[x].push_back(static_cast<Element>(y));
          l.lower_covers_[y].push_back(static_cast<Element>(x));
        }
      });
    }
    l.atoms_ = l.upper_covers_[l.bottom_];
    return l;
  }

  /// Builds a lattice from its cover relation; each pair (x, y) means y covers x.
  /// The pairs must be exactly the cover relation of the generated order.
  static Lattice from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
    if (n == 0 || n > kMaxElements) throw std::invalid_argument("invalid lattice size");
    std::vector<std::vector<std::size_t>> succ(n);
    std::vector<std::size_t> indeg(n, 0);
    for (auto [x, y] : covers) {
      if (x >= n || y >= n || x == y) throw std::invalid_argument("cover pair out of range");
      succ[x].push_back(y);
      ++indeg[y];
    }
    // Kahn order, then accumulate up-sets in reverse.
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
      if (indeg[x] == 0) order.push_back(x);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (auto y : succ[order[i]])
        if (--indeg[y] == 0) order.push_back(y);
    if (order.size() != n) throw std::invalid_argument("cover relation contains a cycle");
    std::vector<ElementSet> up(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      up[*it].set(*it);
      for (auto y : succ[*it]) up[*it] |= up[y];
    }
    Lattice l = from_up_sets(std::move(up));
    auto given = covers;
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    if (given != l.cover_pairs())
      throw std::invalid_argument("cover list is not the cover relation of its transitive closure");
    return l;
  }

  std::size_t size() const { return n_; }
  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  bool less(std::size_t x, std::size_t y) const { return x != y && up_[x].test(y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }
  Element join(std::size_t x, std::size_t y) const { return join_[x * n_ + y]; }
  Element meet(std::size_t x, std::size_t y) const { return meet_[x * n_ + y]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  const std::vector<Element>& atoms() const { return atoms_; }
  const std::vector<Element>& upper_covers(std::size_t x) const { return upper_covers_[x]; }
  const std::vector<Element>& lower_covers(std::size_t x) const { return lower_covers_[x]; }
  const ElementSet& up_set(std::size_t x) const { return up_[x]; }
  const ElementSet& down_set(std::size_t x) const { return down_[x]; }
  bool covers(std::size_t x, std::size_t y) const {
    return std::find(upper_covers_[x].begin(), upper_covers_[x].end(), y) != upper_covers_[x].end();
  }

  /// Sorted list of (x, y) with y covering x.
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < n_; ++x)
      for (auto y : upper_covers_[x]) out.emplace_back(x, y);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Join of an arbitrary subset; the empty join is bottom.
  Element join_of(const ElementSet& s) const {
    Element acc = bottom_;
    s.for_each([&](std::size_t x) { acc = join(acc, x); });
    return acc;
  }

  /// Copy with element x renamed to perm[x]. perm must be a permutation.
  Lattice relabeled(const std::vector<std::size_t>& perm) const {
    if (perm.size() != n_) throw std::invalid_argument("relabeling has wrong size");
    std::vector<bool> seen(n_, false);
    for (auto p : perm) {
      if (p >= n_ || seen[p]) throw std::invalid_argument("relabeling is not a permutation");
      seen[p] = true;
    }
    std::vector<ElementSet> up(n_);
    for (std::size_t x = 0; x < n_; ++x) up_[x].for_each([&](std::size_t y) { up[perm[x]].set(perm[y]); });
    return from_up_sets(std::move(up));
  }

  /// Elements sorted so that x < y in the order implies x precedes y.
  std::vector<Element> linear_extension() const {
    std::vector<Element> ext(n_);
    std::iota(ext.begin(), ext.end(), Element{0});
    std::stable_sort(ext.begin(), ext.end(),
                     [&](Element a, Element b) { return down_[a].count() < down_[b].count(); });
    return ext;
  }

  /// Exhaustive check of the lattice identities and of the order/table agreement.
  bool satisfies_axioms() const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (join(x, x) != x || meet(x, x) != x) return false;
      if (!leq(bottom_, x) || !leq(x, top_)) return false;
      for (std::size_t y = 0; y < n_; ++y) {
        if (join(x, y) != join(y, x) || meet(x, y) != meet(y, x)) return false;
        if (join(x, meet(x, y)) != x || meet(x, join(x, y)) != x) return false;
        if (leq(x, y) != (join(x, y) == y) || leq(x, y) != (meet(x, y) == x)) return false;
        for (std::size_t z = 0; z < n_; ++z) {
          if (join(join(x, y), z) != join(x, join(y, z))) return false;
          if (meet(meet(x, y), z) != meet(x, meet(y, z))) return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.n_ == b.n_ && a.up_ == b.up_; }

 private:
  // Least element of `candidates` with respect to `cones` (up- or down-sets),
  // i.e. the z in candidates whose cone equals candidates.
  static std::size_t least_of(const ElementSet& candidates, const std::vector<ElementSet>& cones) {
    std::size_t found = kMaxElements;
    candidates.for_each([&](std::size_t z) {
      if (found == kMaxElements && cones[z] == candidates) found = z;
    });
    return found;
  }

  std::size_t n_ = 0;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<Element> atoms_;
  std::vector<std::vector<Element>> upper_covers_;
  std::vector<std::vector<Element>> lower_covers_;
};

/// A map between lattices given on element indices.
struct LatticeMorphism {
  Lattice domain;
  Lattice codomain;
  std::vector<Element> map;

  bool is_join_preserving() const {
    for (std::size_t x = 0; x < domain.size(); ++x)
      for (std::size_t y = x + 1; y < domain.size(); ++y)
        if (map[domain.join(x, y)] != codomain.join(map[x], map[y])) return false;
    return true;
  }

  bool is_surjective() const {
    ElementSet image;
    for (auto v : map) image.set(v);
    return image == ElementSet::prefix(codomain.size());
  }
};

/// Lattice of subsets of a k-element set. Element i is the subset with bitmask
/// i, so atom j is element 1 << j.
inline Lattice boolean_lattice(std::size_t k) {
  if (k == 0) throw std::invalid_argument("boolean lattice needs at least one atom");
  if ((std::size_t{1} << k) > kMaxElements) throw std::invalid_argument("boolean lattice too large");
  const std::size_t n = std::size_t{1} << k;
  std::vector<ElementSet> up(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if ((x & y) == x) up[x].set(y);
  return Lattice::from_up_sets(std::move(up));
}

/// The chain 0 < 1 < ... < n-1.
inline Lattice chain_lattice(std::size_t n) {
  std::vector<ElementSet> up(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) up[x].set(y);
  return Lattice::from_up_sets(std::move(up));
}

/// Elements with exactly one upper cover, ascending.
inline std::vector<Element> meet_irreducibles(const Lattice& l) {
  std::vector<Element> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.upper_covers(x).size() == 1) out.push_back(static_cast<Element>(x));
  return out;
}

/// Minimum chain cover of a subset of the elements (Dilworth, via bipartite
/// matching). Each chain is listed bottom to top; the chain count is the width.
inline std::vector<std::vector<Element>> minimum_chain_cover(const Lattice& l, const std::vector<Element>& subset) {
  const std::size_t m = subset.size();
  std::vector<std::size_t> match_right(m, m);  // right vertex -> left vertex
  std::vector<std::size_t> match_left(m, m);
  std::vector<bool> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v = 0; v < m; ++v) {
      if (!l.less(subset[u], subset[v]) || visited[v]) continue;
      visited[v] = true;
      if (match_right[v] == m || augment(match_right[v])) {
        match_right[v] = u;
        match_left[u] = v;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < m; ++u) {
    visited.assign(m, false);
    augment(u);
  }
  std::vector<std::vector<Element>> chains;
  for (std::size_t s = 0; s < m; ++s) {
    if (match_right[s] != m) continue;  // not a chain start
    std::vector<Element> c;
    for (std::size_t u = s; u != m; u = match_left[u]) c.push_back(subset[u]);
    chains.push_back(std::move(c));
  }
  return chains;
}

/// Join of the atoms below x.
inline Element atom_join_below(const Lattice& l, std::size_t x) {
  Element acc = l.bottom();
  for (auto a : l.atoms())
    if (l.leq(a, x)) acc = l.join(acc, a);
  return acc;
}

inline bool is_atomistic(const Lattice& l) {
  for (std::size_t x = 0; x < l.size(); ++x)
    if (x != l.bottom() && atom_join_below(l, x) != x) return false;
  return true;
}

struct Quotient {
  Lattice lattice;
  LatticeMorphism projection;
};

/// The quotient lattice alone, without the projection.
inline Lattice quotient_lattice(const Lattice& l, std::size_t a) {
  if (a >= l.size() || l.upper_covers(a).size() != 1)
    throw std::invalid_argument("quotient requires a meet-irreducible element");
  const std::size_t n = l.size();
  auto shift = [a](std::size_t x) { return x < a ? x : x - 1; };
  std::vector<ElementSet> up(n - 1);
  for (std::size_t x = 0; x < n; ++x) {
    if (x == a) continue;
    l.up_set(x).for_each([&](std::size_t y) {
      if (y != a) up[shift(x)].set(shift(y));
    });
  }
  return Lattice::from_up_sets(std::move(up));
}


/// Identifies the meet-irreducible `a` with its unique upper cover.
///
/// The quotient is the induced subposet on every element but `a`; it is closed
/// under meets, so it is a lattice, and the projection sending `a` to its cover
/// preserves joins. Indices above `a` shift down by one.
inline Quotient quotient(const Lattice& l, std::size_t a) {
  Quotient q;
  q.lattice = quotient_lattice(l, a);
  const std::size_t cover = l.upper_covers(a).front();
  auto shift = [a](std::size_t x) { return x < a ? x : x - 1; };
  q.projection.domain = l;
  q.projection.codomain = q.lattice;
  q.projection.map.resize(l.size());
  for (std::size_t x = 0; x < l.size(); ++x)
    q.projection.map[x] = static_cast<Element>(shift(x == a ? cover : x));
  return q;
}

/// The surjection from the boolean lattice on k atoms onto an atomistic lattice
/// with k atoms: atom i goes to the i-th atom, every subset to the join of the
/// images of its atoms.
inline LatticeMorphism free_map(const Lattice& l) {
  if (!is_atomistic(l)) throw std::invalid_argument("free map requires an atomistic lattice");
  const std::size_t k = l.atoms().size();
  if (k == 0) throw std::invalid_argument("free map requires at least one atom");
  LatticeMorphism f;
  f.domain = boolean_lattice(k);
  f.codomain = l;
  f.map.resize(f.domain.size());
  for (std::size_t s = 0; s < f.domain.size(); ++s) {
    Element acc = l.bottom();
    for (std::size_t i = 0; i < k; ++i)
      if (s & (std::size_t{1} << i)) acc = l.join(acc, l.atoms()[i]);
    f.map[s] = acc;
  }
  return f;
}

}  // namespace lcmlat
