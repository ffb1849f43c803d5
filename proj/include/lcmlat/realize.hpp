#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lcmlat/canonical.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/monomial.hpp"

namespace lcmlat {

/// The lcm-lattice of an ideal with a formal bottom labeled by the zero vector.
struct LcmLattice {
  Lattice lattice;
  std::vector<Exponent> labels;              // per element
  std::vector<Element> generator_elements;   // generator i -> its atom
};

inline LcmLattice lcm_lattice(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  std::map<Exponent, bool> seen;
  std::vector<Exponent> labels(gens.begin(), gens.end());
  for (const auto& g : gens) seen.emplace(g, true);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (const auto& g : gens) {
      auto m = lcm(labels[i], g);
      if (seen.emplace(m, true).second) {
        labels.push_back(std::move(m));
        if (labels.size() + 1 > kMaxElements) throw std::invalid_argument("lcm-lattice exceeds the element limit");
      }
    }
  }
  labels.emplace_back(ideal.num_vars(), 0);
  // Total degree then lex: a linear extension of divisibility with bottom first.
  auto degree = [](const Exponent& e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); };
  std::sort(labels.begin(), labels.end(), [&](const Exponent& a, const Exponent& b) {
    const auto da = degree(a), db = degree(b);
    return da != db ? da < db : a < b;
  });

  const std::size_t n = labels.size();
  std::vector<ElementSet> up(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      if (divides(labels[x], labels[y])) up[x].set(y);

  LcmLattice out;
  out.lattice = Lattice::from_up_sets(std::move(up));
  for (const auto& g : gens) {
    const auto it = std::find(labels.begin(), labels.end(), g);
    out.generator_elements.push_back(static_cast<Element>(it - labels.begin()));
  }
  out.labels = std::move(labels);
  return out;
}

namespace detail {

inline MonomialIdeal checked_realization(const Lattice& l, std::vector<Exponent> gens, std::size_t num_vars) {
  MonomialIdeal ideal(num_vars, std::move(gens));
  if (canonical_form(lcm_lattice(ideal).lattice) != canonical_form(l))
    throw std::logic_error("realization does not reproduce the lattice");
  return ideal;
}

inline void require_realizable(const Lattice& l) {
  if (!is_atomistic(l)) throw std::invalid_argument("only atomistic lattices are lcm-lattices");
  if (l.atoms().empty()) throw std::invalid_argument("lattice has no atoms");
}

}  // namespace detail

/// Squarefree ideal with one variable per meet-irreducible m; the generator of
/// atom a is the product of the x_m with a not below m. The result is checked
/// by recomputing its lcm-lattice.
inline MonomialIdeal realize(const Lattice& l) {
  detail::require_realizable(l);
  const auto irreducibles = meet_irreducibles(l);
  std::vector<Exponent> gens;
  for (auto a : l.atoms()) {
    Exponent e(irreducibles.size(), 0);
    for (std::size_t v = 0; v < irreducibles.size(); ++v)
      if (!l.leq(a, irreducibles[v])) e[v] = 1;
    gens.push_back(std::move(e));
  }
  return detail::checked_realization(l, std::move(gens), irreducibles.size());
}

/// Minimum chain cover of the meet-irreducibles.
inline std::vector<std::vector<Element>> meet_irreducible_chains(const Lattice& l) {
  return minimum_chain_cover(l, meet_irreducibles(l));
}

/// Realization with one variable per chain of a minimum chain cover of the
/// meet-irreducibles. The exponent of atom a in the variable of chain
/// m_1 < ... < m_r is #{i : a not below m_i}. The variable count is the width
/// of the meet-irreducible poset, which keeps Stanley depth boxes small.
inline MonomialIdeal realize_compact(const Lattice& l) {
  detail::require_realizable(l);
  const auto chains = meet_irreducible_chains(l);
  std::vector<Exponent> gens;
  for (auto a : l.atoms()) {
    Exponent e(chains.size(), 0);
    for (std::size_t v = 0; v < chains.size(); ++v)
      for (auto mi : chains[v])
        if (!l.leq(a, mi)) ++e[v];
    gens.push_back(std::move(e));
  }
  return detail::checked_realization(l, std::move(gens), chains.size());
}

}  // namespace lcmlat
