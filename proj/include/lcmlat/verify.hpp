#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lcmlat/betti.hpp"
#include "lcmlat/enumerate.hpp"
#include "lcmlat/invariants.hpp"
#include "lcmlat/io.hpp"
#include "lcmlat/realize.hpp"
#include "lcmlat/sdepth.hpp"

namespace lcmlat {

enum class CheckStatus { Pass, Fail, Unknown };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    default:
      return "UNKNOWN";
  }
}

/// The five per-node checks, in report order. spdim_1/pdim_1 refer to I and
/// spdim_2/pdim_2 to S/I.
inline constexpr std::array<const char*, 5> kCheckNames{
    "spdim_ideal <= pdim_ideal",
    "spdim_quotient <= pdim_quotient",
    "spdim_ideal <= spdim_quotient - 1",
    "spdim_quotient >= pdim_quotient",
    "sdepth_ideal > sdepth_quotient",
};

/// Closed range of values an invariant is known to lie in.
struct Bounds {
  std::optional<int> lo;
  std::optional<int> hi;

  std::optional<int> value() const {
    if (lo && hi && *lo == *hi) return lo;
    return std::nullopt;
  }
  void raise_lo(int v) { lo = lo ? std::max(*lo, v) : v; }
  void lower_hi(int v) { hi = hi ? std::min(*hi, v) : v; }
};

struct NodeVerification {
  InvariantRecord record;
  std::string canonical_hex;
  std::string ideal;  // realization whose Stanley depths were measured
  std::size_t num_vars = 0;
  Bounds spdim_quotient;
  Bounds spdim_ideal;
  std::array<CheckStatus, 5> status{CheckStatus::Unknown, CheckStatus::Unknown, CheckStatus::Unknown,
                                    CheckStatus::Unknown, CheckStatus::Unknown};
  std::string error;

  bool passed() const {
    return std::all_of(status.begin(), status.end(), [](CheckStatus s) { return s == CheckStatus::Pass; });
  }
};

struct VerificationReport {
  std::size_t k = 0;
  std::vector<NodeVerification> nodes;
  std::map<int, std::vector<std::size_t>> maximal_by_pdim;
  std::map<int, std::vector<std::size_t>> minimal_by_pdim;
  /// Nodes whose Stanley depths were computed directly, per mode.
  std::vector<std::size_t> searched_quotient;
  std::vector<std::size_t> searched_ideal;
  std::vector<std::pair<std::string, double>> timings;

  bool all_pass() const {
    return std::all_of(nodes.begin(), nodes.end(), [](const NodeVerification& n) { return n.passed(); });
  }
  std::size_t count(std::size_t check, CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [&](const NodeVerification& n) { return n.status[check] == s; }));
  }
};

struct VerifyOptions {
  /// Compute both Stanley depths at every node instead of at extremal nodes.
  bool exhaustive = false;
  /// After pruning, compute directly wherever the propagated bounds leave a
  /// value open, so every record is complete.
  bool fill = true;
  std::size_t jobs = 1;
  /// Manifest store; completed per-node work found here is reused.
  std::optional<std::filesystem::path> resume_dir;
  /// Reports, records and FAIL witnesses.
  std::optional<std::filesystem::path> out_dir;
  SdepthOptions sdepth;
  std::function<void(const std::string&)> log;
};

namespace detail {

template <typename F>
void parallel_for(std::size_t count, std::size_t jobs, F&& f) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < jobs; ++w)
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    });
  for (auto& t : threads) t.join();
}

}  // namespace detail

/// Per-phase key-value store of completed node results, keyed by canonical
/// form. Each phase is an append-only JSON-lines file; one line is one commit,
/// and a torn trailing line from an interrupted run is ignored on load.
class ManifestStore {
 public:
  explicit ManifestStore(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
    if (dir_) std::filesystem::create_directories(*dir_);
  }

  std::optional<Json> lookup(const std::string& phase, const std::string& key) {
    std::lock_guard lock(mutex_);
    auto& table = load(phase);
    auto it = table.find(key);
    if (it == table.end()) return std::nullopt;
    return it->second;
  }

  void commit(const std::string& phase, const std::string& key, const Json& value) {
    std::lock_guard lock(mutex_);
    load(phase)[key] = value;
    if (!dir_) return;
    std::ofstream out(path(phase), std::ios::app | std::ios::binary);
    out << Json{{"key", key}, {"value", value}}.dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("manifest write failed: " + path(phase).string());
  }

 private:
  std::filesystem::path path(const std::string& phase) const { return *dir_ / ("manifest_" + phase + ".jsonl"); }

  std::map<std::string, Json>& load(const std::string& phase) {
    auto [it, inserted] = tables_.try_emplace(phase);
    if (inserted && dir_ && std::filesystem::exists(path(phase))) {
      std::ifstream in(path(phase), std::ios::binary);
      std::string line;
      while (std::getline(in, line)) {
        if (in.eof()) break;  // no trailing newline: torn write
        Json entry = Json::parse(line, nullptr, false);
        if (entry.is_discarded()) continue;
        it->second[entry.at("key").get<std::string>()] = entry.at("value");
      }
    }
    return it->second;
  }

  std::optional<std::filesystem::path> dir_;
  std::map<std::string, std::map<std::string, Json>> tables_;
  std::mutex mutex_;
};

/// Enumerated dag from `dir/dag` if a previous run left one, otherwise a fresh
/// enumeration (saved there when a directory is given).
inline EnumerationDag load_or_enumerate(std::size_t k, const std::optional<std::filesystem::path>& dir,
                                        std::size_t jobs) {
  if (dir && std::filesystem::exists(*dir / "dag" / "dag.json")) {
    auto dag = read_dag(*dir / "dag");
    if (dag.k == k) return dag;
  }
  EnumerateOptions eo;
  eo.jobs = jobs;
  auto dag = generate_all(k, eo);
  if (dir) write_dag(*dir / "dag", dag);
  return dag;
}

namespace detail {

inline void derive_statuses(NodeVerification& n) {
  const int pdim2 = *n.record.pdim_quotient;
  const int pdim1 = *n.record.pdim_ideal;
  const Bounds& q = n.spdim_quotient;
  const Bounds& i = n.spdim_ideal;
  auto decide = [](bool pass, bool fail) {
    if (pass) return CheckStatus::Pass;
    if (fail) return CheckStatus::Fail;
    return CheckStatus::Unknown;
  };
  n.status[0] = decide(i.hi && *i.hi <= pdim1, i.lo && *i.lo > pdim1);
  n.status[1] = decide(q.hi && *q.hi <= pdim2, q.lo && *q.lo > pdim2);
  n.status[2] = decide(i.hi && q.lo && *i.hi <= *q.lo - 1, i.lo && q.hi && *i.lo > *q.hi - 1);
  n.status[3] = decide(q.lo && *q.lo >= pdim2, q.hi && *q.hi < pdim2);
  // sdepth = n - spdim for both modules of the same realization.
  const int vars = static_cast<int>(n.num_vars);
  n.status[4] = decide(i.hi && q.lo && vars - *i.hi > vars - *q.lo, i.lo && q.hi && vars - *i.lo <= vars - *q.hi);
}

inline std::string format_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s;
  return out.str();
}

}  // namespace detail

/// Writes everything needed to recheck node `id` by hand: its lattice, the
/// realized ideal, the Betti table, and both Stanley decompositions found.
inline void write_witness(const std::filesystem::path& dir, const Lattice& l, const MonomialIdeal& ideal,
                          const SdepthOptions& options) {
  write_json(dir / "lattice.json", lattice_to_json(l));
  write_json(dir / "ideal.json", ideal_to_json(ideal));
  const auto lcm = lcm_lattice(ideal);
  write_json(dir / "betti.json", betti_to_json(betti_table(lcm), &lcm.labels));
  for (auto mode : {PosetMode::Quotient, PosetMode::Ideal}) {
    try {
      write_json(dir / (std::string("sdepth_") + to_string(mode) + ".json"),
                 sdepth_to_json(sdepth(ideal, mode, options), true));
    } catch (const ResourceError& e) {
      write_json(dir / (std::string("sdepth_") + to_string(mode) + ".json"), Json{{"error", e.what()}});
    }
  }
}

inline Json report_to_json(const VerificationReport& r) {
  Json nodes = Json::array();
  for (const auto& n : r.nodes) {
    Json j = invariant_record_to_json(n.record);
    j["canonical_hex"] = n.canonical_hex;
    j["ideal"] = n.ideal;
    j["num_vars"] = n.num_vars;
    auto bounds = [](const Bounds& b) {
      Json out = Json::object();
      if (b.lo) out["lo"] = *b.lo;
      if (b.hi) out["hi"] = *b.hi;
      return out;
    };
    j["spdim_quotient_bounds"] = bounds(n.spdim_quotient);
    j["spdim_ideal_bounds"] = bounds(n.spdim_ideal);
    Json checks = Json::array();
    for (std::size_t c = 0; c < kCheckNames.size(); ++c) checks.push_back({{"check", kCheckNames[c]}, {"status", to_string(n.status[c])}});
    j["checks"] = checks;
    if (!n.error.empty()) j["error"] = n.error;
    nodes.push_back(std::move(j));
  }
  auto groups = [](const std::map<int, std::vector<std::size_t>>& m) {
    Json out = Json::array();
    for (const auto& [v, ids] : m) out.push_back({{"pdim_quotient", v}, {"nodes", ids}});
    return out;
  };
  Json timings = Json::object();
  for (const auto& [phase, secs] : r.timings) timings[phase] = secs;
  return Json{{"k", r.k},
              {"all_pass", r.all_pass()},
              {"maximal_by_pdim", groups(r.maximal_by_pdim)},
              {"minimal_by_pdim", groups(r.minimal_by_pdim)},
              {"searched_quotient", r.searched_quotient},
              {"searched_ideal", r.searched_ideal},
              {"timings", timings},
              {"nodes", nodes}};
}

/// Table rows in node order: (|L| descending, canonical key).
inline std::vector<std::pair<InvariantRecord, std::string>> table_rows_from_json(const Json& records) {
  std::vector<std::pair<InvariantRecord, std::string>> rows;
  for (const auto& n : records.at("nodes"))
    rows.emplace_back(invariant_record_from_json(n), n.value("ideal", std::string{}));
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first.id < b.first.id; });
  return rows;
}

inline std::string table_csv(const std::vector<std::pair<InvariantRecord, std::string>>& rows) {
  std::ostringstream out;
  out << "No.,|L|,pdim S/I,spdim S/I,pdim I,spdim I,Length,dim,Breadth\n";
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string{}; };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i].first;
    out << i + 1 << ',' << r.cardinality << ',' << cell(r.pdim_quotient) << ',' << cell(r.spdim_quotient) << ','
        << cell(r.pdim_ideal) << ',' << cell(r.spdim_ideal) << ',' << r.length << ',' << r.order_dimension << ','
        << r.breadth << '\n';
  }
  return out.str();
}

inline std::string ideals_csv(const std::vector<std::pair<InvariantRecord, std::string>>& rows) {
  std::ostringstream out;
  out << "No.,Ideal\n";
  for (std::size_t i = 0; i < rows.size(); ++i) out << i + 1 << ",\"(" << rows[i].second << ")\"\n";
  return out.str();
}

inline Json table_json(const std::vector<std::pair<InvariantRecord, std::string>>& rows) {
  Json out = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Json j{{"No.", i + 1}};
    const auto& r = rows[i].first;
    j["|L|"] = r.cardinality;
    auto put = [&](const char* name, const std::optional<int>& v) { j[name] = v ? Json(*v) : Json(nullptr); };
    put("pdim S/I", r.pdim_quotient);
    put("spdim S/I", r.spdim_quotient);
    put("pdim I", r.pdim_ideal);
    put("spdim I", r.spdim_ideal);
    j["Length"] = r.length;
    j["dim"] = r.order_dimension;
    j["Breadth"] = r.breadth;
    j["Ideal"] = rows[i].second;
    out.push_back(std::move(j));
  }
  return out;
}

/// Writes the invariant tables for the records in `dir/records.json`:
/// report.csv with ideals.csv for "csv", report.json for "json".
inline std::vector<std::filesystem::path> write_report(const std::filesystem::path& dir, const std::string& format) {
  const auto rows = table_rows_from_json(read_json(dir / "records.json"));
  if (format == "csv") {
    write_text_atomic(dir / "report.csv", table_csv(rows));
    write_text_atomic(dir / "ideals.csv", ideals_csv(rows));
    return {dir / "report.csv", dir / "ideals.csv"};
  }
  if (format == "json") {
    write_json(dir / "report.json", table_json(rows));
    return {dir / "report.json"};
  }
  throw std::invalid_argument("report format must be csv or json");
}

/// Enumerates the atomistic lattices on k atoms and checks the Stanley
/// inequalities on a realization of each. Expensive Stanley depths are
/// computed at dag-extremal nodes per pdim value and carried to the other nodes
/// as bounds, since all four invariants weakly decrease along quotient edges.
inline VerificationReport verify(std::size_t k, const VerifyOptions& options = {}) {
  using Clock = std::chrono::steady_clock;
  auto log = [&](const std::string& s) {
    if (options.log) options.log(s);
  };
  VerificationReport report;
  report.k = k;
  ManifestStore store(options.resume_dir);
  auto phase_start = Clock::now();
  auto end_phase = [&](const std::string& name) {
    const double secs = std::chrono::duration<double>(Clock::now() - phase_start).count();
    report.timings.emplace_back(name, secs);
    log(name + ": " + detail::format_seconds(secs) + " s");
    phase_start = Clock::now();
  };

  const EnumerationDag dag = load_or_enumerate(k, options.resume_dir, options.jobs);
  const std::size_t count = dag.nodes.size();
  report.nodes.resize(count);
  std::vector<std::optional<MonomialIdeal>> ideals(count);
  end_phase("enumerate");

  detail::parallel_for(count, options.jobs, [&](std::size_t v) {
    auto& n = report.nodes[v];
    const Lattice& l = dag.nodes[v].representative;
    n.canonical_hex = dag.nodes[v].canonical.hex();
    n.record.id = v;
    n.record.cardinality = l.size();
    int pdim;
    if (auto hit = store.lookup("betti", n.canonical_hex)) {
      pdim = hit->at("pdim_quotient").get<int>();
      ideals[v] = ideal_from_json(hit->at("ideal"));
    } else {
      pdim = pdim_quotient(l);
      ideals[v] = realize_compact(l);
      store.commit("betti", n.canonical_hex, Json{{"pdim_quotient", pdim}, {"ideal", ideal_to_json(*ideals[v])}});
    }
    n.record.pdim_quotient = pdim;
    n.record.pdim_ideal = pdim - 1;
    n.ideal = ideals[v]->to_string();
    n.num_vars = ideals[v]->num_vars();
  });
  end_phase("betti");

  detail::parallel_for(count, options.jobs, [&](std::size_t v) {
    auto& n = report.nodes[v];
    if (auto hit = store.lookup("invariants", n.canonical_hex)) {
      n.record.length = hit->at("length").get<int>();
      n.record.breadth = hit->at("breadth").get<int>();
      n.record.order_dimension = hit->at("order_dimension").get<int>();
      return;
    }
    const Lattice& l = dag.nodes[v].representative;
    n.record.length = length(l);
    n.record.breadth = breadth(l);
    n.record.order_dimension = order_dimension(l);
    store.commit("invariants", n.canonical_hex,
                 Json{{"length", n.record.length}, {"breadth", n.record.breadth},
                      {"order_dimension", n.record.order_dimension}});
  });
  end_phase("invariants");

  auto pdim_of = [&](std::size_t v) { return *report.nodes[v].record.pdim_quotient; };
  report.maximal_by_pdim = maximal_nodes_by_value(dag, pdim_of);
  report.minimal_by_pdim = minimal_nodes_by_value(dag, pdim_of);

  // Direct Stanley depth values; a missing entry is not computed (or failed).
  std::vector<std::optional<int>> direct_q(count), direct_i(count);
  std::mutex error_mutex;
  auto compute = [&](const std::vector<std::size_t>& nodes, PosetMode mode) {
    auto& direct = mode == PosetMode::Quotient ? direct_q : direct_i;
    detail::parallel_for(nodes.size(), options.jobs, [&](std::size_t t) {
      const std::size_t v = nodes[t];
      if (direct[v]) return;
      auto& n = report.nodes[v];
      const std::string phase = std::string("sdepth_") + to_string(mode);
      if (auto hit = store.lookup(phase, n.canonical_hex)) {
        direct[v] = hit->at("spdim").get<int>();
        return;
      }
      SdepthOptions so = options.sdepth;
      if (!so.hint) so.hint = static_cast<int>(n.num_vars) - pdim_of(v) + (mode == PosetMode::Ideal ? 1 : 0);
      try {
        const auto r = sdepth(*ideals[v], mode, so);
        direct[v] = r.spdim;
        store.commit(phase, n.canonical_hex, Json{{"spdim", r.spdim}, {"sdepth", r.sdepth}});
      } catch (const ResourceError& e) {
        std::lock_guard lock(error_mutex);
        if (!n.error.empty()) n.error += "; ";
        n.error += std::string(to_string(mode)) + ": " + e.what();
      }
    });
  };

  std::vector<std::size_t> selection;
  if (options.exhaustive) {
    for (std::size_t v = 0; v < count; ++v) selection.push_back(v);
    report.searched_quotient = report.searched_ideal = selection;
  } else {
    std::vector<std::size_t> maximal, minimal;
    for (const auto& [value, ids] : report.maximal_by_pdim) maximal.insert(maximal.end(), ids.begin(), ids.end());
    for (const auto& [value, ids] : report.minimal_by_pdim) minimal.insert(minimal.end(), ids.begin(), ids.end());
    std::sort(maximal.begin(), maximal.end());
    std::sort(minimal.begin(), minimal.end());
    std::set_union(maximal.begin(), maximal.end(), minimal.begin(), minimal.end(), std::back_inserter(selection));
    report.searched_quotient = selection;
    // spdim_ideal only needs upper bounds: maximal nodes suffice.
    report.searched_ideal = maximal;
  }
  compute(report.searched_quotient, PosetMode::Quotient);
  compute(report.searched_ideal, PosetMode::Ideal);

  const auto descendants = detail::reachability(dag.children(), /*forward_ids_increase=*/true);
  auto below = [&](std::size_t u, std::size_t v) { return u == v || ((descendants[u][v / 64] >> (v % 64)) & 1U); };
  auto propagate = [&] {
    for (auto& n : report.nodes) n.spdim_quotient = n.spdim_ideal = Bounds{};
    for (std::size_t u = 0; u < count; ++u) {
      for (std::size_t v = 0; v < count; ++v) {
        // Values weakly decrease from u down to v.
        if (!below(u, v)) continue;
        if (direct_q[u]) report.nodes[v].spdim_quotient.lower_hi(*direct_q[u]);
        if (direct_i[u]) report.nodes[v].spdim_ideal.lower_hi(*direct_i[u]);
        if (direct_q[v]) report.nodes[u].spdim_quotient.raise_lo(*direct_q[v]);
        if (direct_i[v]) report.nodes[u].spdim_ideal.raise_lo(*direct_i[v]);
      }
    }
  };
  propagate();
  end_phase("sdepth");

  if (options.fill && !options.exhaustive) {
    std::vector<std::size_t> open_q, open_i;
    for (std::size_t v = 0; v < count; ++v) {
      if (!report.nodes[v].spdim_quotient.value()) open_q.push_back(v);
      if (!report.nodes[v].spdim_ideal.value()) open_i.push_back(v);
    }
    log("fill: " + std::to_string(open_q.size()) + " quotient and " + std::to_string(open_i.size()) +
        " ideal values left open by propagation");
    compute(open_q, PosetMode::Quotient);
    compute(open_i, PosetMode::Ideal);
    propagate();
    end_phase("fill");
  }

  for (auto& n : report.nodes) {
    n.record.spdim_quotient = n.spdim_quotient.value();
    n.record.spdim_ideal = n.spdim_ideal.value();
    detail::derive_statuses(n);
  }
  end_phase("verify");

  if (options.out_dir) {
    for (std::size_t v = 0; v < count; ++v) {
      const auto& n = report.nodes[v];
      if (std::find(n.status.begin(), n.status.end(), CheckStatus::Fail) == n.status.end()) continue;
      write_witness(*options.out_dir / "witnesses" / ("node_" + std::to_string(v)), dag.nodes[v].representative,
                    *ideals[v], options.sdepth);
    }
    write_dag(*options.out_dir / "dag", dag);
    write_json(*options.out_dir / "records.json", report_to_json(report));
    write_report(*options.out_dir, "csv");
    write_report(*options.out_dir, "json");
    end_phase("report");
  }
  return report;
}

/// All invariants of one ideal and the comparisons depth S/I = sdepth S/I and
/// sdepth I > sdepth S/I. Both are asserted only up to five generators.
struct IdealVerification {
  std::size_t num_vars = 0;
  std::size_t num_generators = 0;
  int pdim_quotient = 0;
  int pdim_ideal = 0;
  int depth_quotient = 0;
  int sdepth_quotient = 0;
  int sdepth_ideal = 0;
  int spdim_quotient = 0;
  int spdim_ideal = 0;
  bool equality_holds = false;
  bool strict_holds = false;
  bool asserted = false;

  bool passed() const { return !asserted || (equality_holds && strict_holds); }
};

inline IdealVerification verify_ideal(const MonomialIdeal& ideal, const SdepthOptions& options = {}) {
  IdealVerification r;
  r.num_vars = ideal.num_vars();
  r.num_generators = ideal.num_generators();
  r.pdim_quotient = pdim_quotient(lcm_lattice(ideal).lattice);
  r.pdim_ideal = r.pdim_quotient - 1;
  r.depth_quotient = static_cast<int>(r.num_vars) - r.pdim_quotient;
  SdepthOptions so = options;
  so.hint = r.depth_quotient;
  r.sdepth_quotient = sdepth(ideal, PosetMode::Quotient, so).sdepth;
  so.hint = r.sdepth_quotient + 1;
  r.sdepth_ideal = sdepth(ideal, PosetMode::Ideal, so).sdepth;
  r.spdim_quotient = static_cast<int>(r.num_vars) - r.sdepth_quotient;
  r.spdim_ideal = static_cast<int>(r.num_vars) - r.sdepth_ideal;
  r.equality_holds = r.depth_quotient == r.sdepth_quotient;
  r.strict_holds = r.sdepth_quotient < r.sdepth_ideal;
  r.asserted = r.num_generators <= 5;
  return r;
}

inline Json ideal_verification_to_json(const IdealVerification& r) {
  auto status = [&](bool holds) { return r.asserted ? (holds ? "PASS" : "FAIL") : (holds ? "HOLDS" : "BROKEN"); };
  return Json{{"num_vars", r.num_vars},
              {"num_generators", r.num_generators},
              {"depth", r.depth_quotient},
              {"sdepth_quotient", r.sdepth_quotient},
              {"sdepth_ideal", r.sdepth_ideal},
              {"pdim", {{"quotient", r.pdim_quotient}, {"ideal", r.pdim_ideal}}},
              {"spdims", {{"quotient", r.spdim_quotient}, {"ideal", r.spdim_ideal}}},
              {"statuses",
               {{"depth_quotient == sdepth_quotient", status(r.equality_holds)},
                {"sdepth_quotient < sdepth_ideal", status(r.strict_holds)}}},
              {"asserted", r.asserted}};
}

}  // namespace lcmlat
