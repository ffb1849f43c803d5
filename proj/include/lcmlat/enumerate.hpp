#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lcmlat/canonical.hpp"
#include "lcmlat/lattice.hpp"

namespace lcmlat {

struct DagNode {
  std::size_t id = 0;
  Lattice representative;  // empty when streamed out
  std::size_t cardinality = 0;
  CanonicalForm canonical;
};

/// Isomorphism classes of atomistic lattices on k atoms with quotient edges.
///
/// Node ids follow (cardinality descending, canonical key ascending), so a
/// parent always has a smaller id than its children.
struct EnumerationDag {
  std::size_t k = 0;
  std::vector<DagNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (parent, child), sorted

  std::vector<std::vector<std::size_t>> parents() const {
    std::vector<std::vector<std::size_t>> out(nodes.size());
    for (auto [p, c] : edges) out[c].push_back(p);
    return out;
  }
  std::vector<std::vector<std::size_t>> children() const {
    std::vector<std::vector<std::size_t>> out(nodes.size());
    for (auto [p, c] : edges) out[p].push_back(c);
    return out;
  }
  /// Node count per cardinality.
  std::map<std::size_t, std::size_t> level_sizes() const {
    std::map<std::size_t, std::size_t> out;
    for (const auto& n : nodes) ++out[n.cardinality];
    return out;
  }
  std::size_t find(const CanonicalForm& form) const {
    for (const auto& n : nodes)
      if (n.canonical == form) return n.id;
    return nodes.size();
  }
};

/// Meet-irreducibles a that the enumeration may collapse: neither bottom nor an atom.
inline std::vector<Element> admissible_quotient_elements(const Lattice& l) {
  std::vector<Element> out;
  for (auto a : meet_irreducibles(l)) {
    if (a == l.bottom()) continue;
    if (std::find(l.atoms().begin(), l.atoms().end(), a) != l.atoms().end()) continue;
    out.push_back(a);
  }
  return out;
}

struct EnumerateOptions {
  std::size_t jobs = 1;
  /// Drop representatives of a level once the next level has been built and the
  /// level callback has run.
  bool stream = false;
  /// Called once per completed level with the new node ids and the edges from
  /// the previous level into it.
  std::function<void(const EnumerationDag&, std::size_t first_id, std::size_t end_id)> on_level;
};

/// Generates every isomorphism class of atomistic lattices with exactly k atoms
/// by repeated meet-irreducible quotients starting from the boolean lattice.
inline EnumerationDag generate_all(std::size_t k, const EnumerateOptions& options = {}) {
  if (k == 0) throw std::invalid_argument("enumeration needs at least one atom");
  EnumerationDag dag;
  dag.k = k;

  {
    auto root = canonicalize(boolean_lattice(k));
    dag.nodes.push_back({0, std::move(root.lattice), std::size_t{1} << k, std::move(root.form)});
  }
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  if (options.on_level) options.on_level(dag, level_begin, level_end);

  struct Candidate {
    std::size_t parent;
    CanonicalLattice child;
  };

  while (level_begin < level_end) {
    const std::size_t count = level_end - level_begin;
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, count));
    std::vector<std::vector<Candidate>> emitted(jobs);
    auto worker = [&](std::size_t w) {
      for (std::size_t i = level_begin + w; i < level_end; i += jobs) {
        const Lattice& l = dag.nodes[i].representative;
        for (auto a : admissible_quotient_elements(l)) {
          auto q = canonicalize(quotient_lattice(l, a));
          if (q.lattice.atoms().size() != k) throw std::logic_error("quotient changed the atom count");
          emitted[w].push_back({i, std::move(q)});
        }
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
      for (auto& t : threads) t.join();
    }

    // Barrier: dedup by canonical form. The stored representative is the
    // canonically relabeled lattice, so it does not depend on emission order.
    std::map<std::string, Lattice> level;
    std::vector<std::pair<std::size_t, std::string>> raw_edges;
    for (auto& bucket : emitted) {
      for (auto& c : bucket) {
        raw_edges.emplace_back(c.parent, c.child.form.key);
        level.try_emplace(c.child.form.key, std::move(c.child.lattice));
      }
    }
    std::map<std::string, std::size_t> ids;
    const std::size_t next_begin = dag.nodes.size();
    for (auto& [key, lattice] : level) {
      const std::size_t id = dag.nodes.size();
      ids.emplace(key, id);
      const std::size_t card = lattice.size();
      dag.nodes.push_back({id, std::move(lattice), card, CanonicalForm{key}});
    }
    std::vector<std::pair<std::size_t, std::size_t>> new_edges;
    for (auto& [p, key] : raw_edges) new_edges.emplace_back(p, ids.at(key));
    std::sort(new_edges.begin(), new_edges.end());
    new_edges.erase(std::unique(new_edges.begin(), new_edges.end()), new_edges.end());
    dag.edges.insert(dag.edges.end(), new_edges.begin(), new_edges.end());

    const std::size_t next_end = dag.nodes.size();
    if (options.stream)
      for (std::size_t i = level_begin; i < level_end; ++i) dag.nodes[i].representative = Lattice{};
    level_begin = next_begin;
    level_end = next_end;
    if (level_begin < level_end && options.on_level) options.on_level(dag, level_begin, level_end);
  }
  if (options.stream)
    for (std::size_t i = level_begin; i < level_end; ++i) dag.nodes[i].representative = Lattice{};
  return dag;
}

namespace detail {

// reach[v] = nodes reachable from v along `adjacency` (v excluded), as word bitsets.
inline std::vector<std::vector<std::uint64_t>> reachability(const std::vector<std::vector<std::size_t>>& adjacency,
                                                            bool forward_ids_increase) {
  const std::size_t n = adjacency.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(n, std::vector<std::uint64_t>(words, 0));
  auto process = [&](std::size_t v) {
    for (auto u : adjacency[v]) {
      reach[v][u / 64] |= std::uint64_t{1} << (u % 64);
      for (std::size_t w = 0; w < words; ++w) reach[v][w] |= reach[u][w];
    }
  };
  // Targets must be finished before their sources.
  if (forward_ids_increase) {
    for (std::size_t v = n; v-- > 0;) process(v);
  } else {
    for (std::size_t v = 0; v < n; ++v) process(v);
  }
  return reach;
}

inline std::map<int, std::vector<std::size_t>> extremal_by_value(const EnumerationDag& dag,
                                                                 const std::function<int(std::size_t)>& value,
                                                                 bool maximal) {
  const auto adjacency = maximal ? dag.parents() : dag.children();
  const auto reach = reachability(adjacency, /*forward_ids_increase=*/!maximal);
  std::vector<int> values(dag.nodes.size());
  for (std::size_t v = 0; v < values.size(); ++v) values[v] = value(v);
  std::map<int, std::vector<std::size_t>> out;
  for (std::size_t v = 0; v < values.size(); ++v) {
    bool extremal = true;
    for (std::size_t u = 0; u < values.size() && extremal; ++u)
      if (values[u] == values[v] && ((reach[v][u / 64] >> (u % 64)) & 1U)) extremal = false;
    if (extremal) out[values[v]].push_back(v);
  }
  return out;
}

}  // namespace detail

/// For each attained value, the nodes with that value that have no ancestor
/// (transitively) with the same value.
inline std::map<int, std::vector<std::size_t>> maximal_nodes_by_value(const EnumerationDag& dag,
                                                                      const std::function<int(std::size_t)>& value) {
  return detail::extremal_by_value(dag, value, true);
}

/// Dual of maximal_nodes_by_value: no descendant with the same value.
inline std::map<int, std::vector<std::size_t>> minimal_nodes_by_value(const EnumerationDag& dag,
                                                                      const std::function<int(std::size_t)>& value) {
  return detail::extremal_by_value(dag, value, false);
}

}  // namespace lcmlat
