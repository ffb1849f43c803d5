#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lcmlat/homology.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/monomial.hpp"
#include "lcmlat/realize.hpp"

namespace lcmlat {

/// Multigraded Betti numbers of S/I, indexed by homological degree and the
/// lcm-lattice element carrying the multidegree. Only nonzero entries are kept.
struct BettiTable {
  std::map<std::pair<int, Element>, std::size_t> entries;

  std::size_t at(int i, Element m) const {
    auto it = entries.find({i, m});
    return it == entries.end() ? 0 : it->second;
  }

  /// Total Betti numbers β_0, β_1, ..., β_pdim.
  std::vector<std::size_t> totals() const {
    std::vector<std::size_t> out(static_cast<std::size_t>(projective_dimension() + 1), 0);
    for (const auto& [key, v] : entries) out[static_cast<std::size_t>(key.first)] += v;
    return out;
  }

  int projective_dimension() const {
    int p = 0;
    for (const auto& [key, v] : entries)
      if (v != 0) p = std::max(p, key.first);
    return p;
  }
};

/// β_{0,0̂} = 1 and β_{i,m} = rank H̃_{i-2}(Δ(0̂, m)) for m above bottom, which
/// depends only on the lattice.
inline BettiTable betti_table(const Lattice& l) {
  if (!is_atomistic(l)) throw std::invalid_argument("Betti numbers need an atomistic lattice");
  BettiTable t;
  t.entries[{0, l.bottom()}] = 1;
  for (std::size_t m = 0; m < l.size(); ++m) {
    if (m == l.bottom()) continue;
    const auto ranks = reduced_homology_ranks(order_complex(l, l.bottom(), m));
    for (std::size_t idx = 0; idx < ranks.size(); ++idx)
      if (ranks[idx] != 0) t.entries[{static_cast<int>(idx) + 1, static_cast<Element>(m)}] = ranks[idx];
  }
  return t;
}

inline BettiTable betti_table(const LcmLattice& l) { return betti_table(l.lattice); }

inline int pdim_quotient(const Lattice& l) { return betti_table(l).projective_dimension(); }
inline int pdim_ideal(const Lattice& l) { return pdim_quotient(l) - 1; }

/// Auslander-Buchsbaum: depth S/I = n - pdim S/I.
inline int depth_quotient(const MonomialIdeal& ideal) {
  return static_cast<int>(ideal.num_vars()) - pdim_quotient(lcm_lattice(ideal).lattice);
}

}  // namespace lcmlat
