#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lcmlat/betti.hpp"
#include "lcmlat/enumerate.hpp"
#include "lcmlat/invariants.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/monomial.hpp"
#include "lcmlat/realize.hpp"
#include "lcmlat/sdepth.hpp"

namespace lcmlat {

using Json = nlohmann::ordered_json;

/// Lattice file record: {size, atoms, covers: [[x, y], ...]} with y covering x.
inline Json lattice_to_json(const Lattice& l) {
  Json covers = Json::array();
  for (auto [x, y] : l.cover_pairs()) covers.push_back({x, y});
  return Json{{"size", l.size()}, {"atoms", l.atoms()}, {"covers", covers}};
}

inline Lattice lattice_from_json(const Json& j) {
  const auto size = j.at("size").get<std::size_t>();
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw std::invalid_argument("cover entries must be pairs");
    covers.emplace_back(c[0].get<std::size_t>(), c[1].get<std::size_t>());
  }
  Lattice l = Lattice::from_covers(size, covers);
  if (j.contains("atoms")) {
    auto atoms = j.at("atoms").get<std::vector<std::size_t>>();
    std::vector<std::size_t> have(l.atoms().begin(), l.atoms().end());
    std::sort(atoms.begin(), atoms.end());
    std::sort(have.begin(), have.end());
    if (atoms != have) throw std::invalid_argument("atoms field disagrees with the cover relation");
  }
  return l;
}

/// Ideal record: {num_vars, generators: [[e1, ..., en], ...]}.
inline Json ideal_to_json(const MonomialIdeal& ideal) {
  return Json{{"num_vars", ideal.num_vars()}, {"generators", ideal.generators()}};
}

inline MonomialIdeal ideal_from_json(const Json& j) {
  return MonomialIdeal::minimalized(j.at("num_vars").get<std::size_t>(),
                                    j.at("generators").get<std::vector<Exponent>>());
}

inline Json betti_to_json(const BettiTable& t, const std::vector<Exponent>* labels = nullptr) {
  const int pdim = t.projective_dimension();
  Json betti = Json::array();
  for (const auto& [key, value] : t.entries) {
    Json e{{"i", key.first}, {"element", key.second}, {"value", value}};
    if (labels) e["multidegree"] = (*labels)[key.second];
    betti.push_back(std::move(e));
  }
  return Json{{"pdim_quotient", pdim}, {"pdim_ideal", pdim - 1}, {"betti", betti}};
}

inline Json partition_to_json(const IntervalPartition& p) {
  Json out = Json::array();
  for (const auto& iv : p.intervals) out.push_back({iv.lower, iv.upper});
  return out;
}

inline Json sdepth_to_json(const SdepthResult& r, bool certificate) {
  Json j{{"sdepth", r.sdepth}, {"spdim", r.spdim}};
  if (certificate) j["certificate"] = partition_to_json(r.certificate);
  return j;
}

inline Json invariant_record_to_json(const InvariantRecord& r) {
  Json j{{"id", r.id}, {"cardinality", r.cardinality}};
  auto put = [&](const char* name, const std::optional<int>& v) {
    if (v) j[name] = *v;
  };
  put("pdim_quotient", r.pdim_quotient);
  put("spdim_quotient", r.spdim_quotient);
  put("pdim_ideal", r.pdim_ideal);
  put("spdim_ideal", r.spdim_ideal);
  j["length"] = r.length;
  j["breadth"] = r.breadth;
  j["order_dimension"] = r.order_dimension;
  return j;
}

inline InvariantRecord invariant_record_from_json(const Json& j) {
  InvariantRecord r;
  r.id = j.at("id").get<std::size_t>();
  r.cardinality = j.at("cardinality").get<std::size_t>();
  auto get = [&](const char* name, std::optional<int>& v) {
    if (j.contains(name)) v = j.at(name).get<int>();
  };
  get("pdim_quotient", r.pdim_quotient);
  get("spdim_quotient", r.spdim_quotient);
  get("pdim_ideal", r.pdim_ideal);
  get("spdim_ideal", r.spdim_ideal);
  r.length = j.at("length").get<int>();
  r.breadth = j.at("breadth").get<int>();
  r.order_dimension = j.at("order_dimension").get<int>();
  return r;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes through a temporary sibling and renames, so readers never see a
/// partial file.
inline void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline Json read_json(const std::filesystem::path& path) { return Json::parse(read_text(path)); }

inline void write_json(const std::filesystem::path& path, const Json& j) { write_text_atomic(path, j.dump(2) + "\n"); }

inline Lattice read_lattice_file(const std::filesystem::path& path) { return lattice_from_json(read_json(path)); }

inline std::string node_file_name(std::size_t id) {
  std::string digits = std::to_string(id);
  return "lattice_" + std::string(digits.size() < 5 ? 5 - digits.size() : 0, '0') + digits + ".json";
}

inline Json dag_to_json(const EnumerationDag& dag) {
  Json nodes = Json::array();
  for (const auto& n : dag.nodes)
    nodes.push_back({{"id", n.id}, {"file", node_file_name(n.id)}, {"cardinality", n.cardinality},
                     {"canonical_hex", n.canonical.hex()}});
  Json edges = Json::array();
  for (auto [p, c] : dag.edges) edges.push_back({p, c});
  return Json{{"k", dag.k}, {"nodes", nodes}, {"edges", edges}};
}

/// Writes dag.json and one lattice file per node that still has its
/// representative in memory.
inline void write_dag(const std::filesystem::path& dir, const EnumerationDag& dag) {
  for (const auto& n : dag.nodes)
    if (n.representative.size() != 0) write_json(dir / node_file_name(n.id), lattice_to_json(n.representative));
  write_json(dir / "dag.json", dag_to_json(dag));
}

/// Loads dag.json and the lattice files it names; canonical keys are
/// recomputed and must match the recorded ones.
inline EnumerationDag read_dag(const std::filesystem::path& dir) {
  const Json j = read_json(dir / "dag.json");
  EnumerationDag dag;
  dag.k = j.at("k").get<std::size_t>();
  for (const auto& n : j.at("nodes")) {
    DagNode node;
    node.id = n.at("id").get<std::size_t>();
    if (node.id != dag.nodes.size()) throw std::invalid_argument("dag.json node ids must be 0..n-1 in order");
    node.representative = read_lattice_file(dir / n.at("file").get<std::string>());
    node.cardinality = node.representative.size();
    node.canonical = canonical_form(node.representative);
    if (node.canonical.hex() != n.at("canonical_hex").get<std::string>())
      throw std::invalid_argument("lattice file does not match its canonical key: " + n.at("file").get<std::string>());
    dag.nodes.push_back(std::move(node));
  }
  for (const auto& e : j.at("edges")) dag.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  return dag;
}

}  // namespace lcmlat
