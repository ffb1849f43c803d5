// Command-line front end: enumeration, single-object queries, and the
// verification pipeline with its reports.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lcmlat/lcmlat.hpp"

namespace fs = std::filesystem;
using namespace lcmlat;

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitError = 2;

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_enumerate(std::size_t k, const fs::path& out, std::size_t jobs, bool stream) {
  EnumerateOptions opts;
  opts.jobs = jobs;
  opts.stream = stream;
  if (stream) {
    opts.on_level = [&](const EnumerationDag& dag, std::size_t first, std::size_t end) {
      for (std::size_t i = first; i < end; ++i)
        write_json(out / node_file_name(i), lattice_to_json(dag.nodes[i].representative));
      std::cerr << "level |L|=" << dag.nodes[first].cardinality << ": " << end - first << " lattices\n";
    };
  }
  const auto dag = generate_all(k, opts);
  if (stream) {
    write_json(out / "dag.json", dag_to_json(dag));
  } else {
    write_dag(out, dag);
  }
  Json levels = Json::object();
  for (const auto& [card, n] : dag.level_sizes()) levels[std::to_string(card)] = n;
  print(Json{{"k", k}, {"nodes", dag.nodes.size()}, {"edges", dag.edges.size()}, {"levels", levels}});
  return 0;
}

int run_betti(const std::string& lattice_file, const std::string& ideal_text) {
  if (!lattice_file.empty()) {
    print(betti_to_json(betti_table(read_lattice_file(lattice_file))));
  } else {
    const auto lcm = lcm_lattice(parse_ideal(ideal_text));
    print(betti_to_json(betti_table(lcm), &lcm.labels));
  }
  return 0;
}

int run_sdepth(const std::string& ideal_text, bool quotient, bool certificate) {
  const auto ideal = parse_ideal(ideal_text);
  print(sdepth_to_json(sdepth(ideal, quotient ? PosetMode::Quotient : PosetMode::Ideal), certificate));
  return 0;
}

int run_invariants(const std::string& lattice_file) {
  auto j = invariant_record_to_json(lattice_invariants(read_lattice_file(lattice_file)));
  j.erase("id");
  print(j);
  return 0;
}

int run_verify(std::size_t k, const VerifyOptions& opts) {
  const auto report = verify(k, opts);
  Json checks = Json::array();
  for (std::size_t c = 0; c < kCheckNames.size(); ++c)
    checks.push_back({{"check", kCheckNames[c]},
                      {"pass", report.count(c, CheckStatus::Pass)},
                      {"fail", report.count(c, CheckStatus::Fail)},
                      {"unknown", report.count(c, CheckStatus::Unknown)}});
  Json maximal = Json::object();
  std::size_t maximal_total = 0;
  for (const auto& [v, ids] : report.maximal_by_pdim) {
    maximal[std::to_string(v)] = ids.size();
    maximal_total += ids.size();
  }
  Json timings = Json::object();
  for (const auto& [phase, secs] : report.timings) timings[phase] = secs;
  print(Json{{"k", k},
             {"nodes", report.nodes.size()},
             {"all_pass", report.all_pass()},
             {"checks", checks},
             {"maximal_nodes_by_pdim", maximal},
             {"maximal_nodes_total", maximal_total},
             {"searched_quotient", report.searched_quotient.size()},
             {"searched_ideal", report.searched_ideal.size()},
             {"timings", timings}});
  return report.all_pass() ? 0 : kExitChecksFailed;
}

int run_verify_ideal(const std::string& ideal_text) {
  const auto r = verify_ideal(parse_ideal(ideal_text));
  print(ideal_verification_to_json(r));
  return r.passed() ? 0 : kExitChecksFailed;
}

int run_report(const fs::path& in, const std::string& format) {
  for (const auto& p : write_report(in, format)) std::cout << p.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atomistic lattices, lcm-lattices of monomial ideals, and Stanley depth"};
  app.require_subcommand(1);

  std::size_t atoms = 0, jobs = 1;
  std::string out_dir, lattice_file, ideal_text, resume_dir, in_dir, format = "csv";
  bool stream = false, quotient = false, certificate = false, exhaustive = false, no_fill = false;

  auto* en = app.add_subcommand("enumerate", "All atomistic lattices on K atoms, with the quotient dag");
  en->add_option("--atoms", atoms, "Number of atoms")->required()->check(CLI::Range(1, 16));
  en->add_option("--out", out_dir, "Output directory")->required();
  en->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  en->add_flag("--stream", stream, "Write each level as soon as it is complete and drop it from memory");

  auto* be = app.add_subcommand("betti", "Multigraded Betti numbers of S/I");
  auto* be_lattice = be->add_option("--lattice", lattice_file, "Lattice file");
  auto* be_ideal = be->add_option("--ideal", ideal_text, "Monomial ideal, e.g. \"x1*x2, x3^2\"");
  be_lattice->excludes(be_ideal);
  be->require_option(1);

  auto* sd = app.add_subcommand("sdepth", "Stanley depth of I (or S/I)");
  sd->add_option("--ideal", ideal_text, "Monomial ideal")->required();
  sd->add_flag("--quotient", quotient, "Use S/I instead of I");
  sd->add_flag("--certificate", certificate, "Include the interval partition");

  auto* inv = app.add_subcommand("invariants", "Length, breadth and order dimension of a lattice");
  inv->add_option("--lattice", lattice_file, "Lattice file")->required();

  auto* ve = app.add_subcommand("verify", "Check the Stanley inequalities on every lattice with K atoms");
  ve->add_option("--atoms", atoms, "Number of atoms")->required()->check(CLI::Range(2, 5));
  ve->add_flag("--exhaustive", exhaustive, "Compute Stanley depths at every node");
  ve->add_flag("--no-fill", no_fill, "Leave values open where propagated bounds do not pin them");
  ve->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  ve->add_option("--resume", resume_dir, "Manifest directory; completed work found there is reused");
  ve->add_option("--out", out_dir, "Directory for records, reports and witnesses");

  auto* vi = app.add_subcommand("verify-ideal", "Depth and Stanley depth comparisons for one ideal");
  vi->add_option("--ideal", ideal_text, "Monomial ideal")->required();

  auto* re = app.add_subcommand("report", "Tables from a verify output directory");
  re->add_option("--in", in_dir, "Directory containing records.json")->required();
  re->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*en) return run_enumerate(atoms, out_dir, jobs, stream);
    if (*be) return run_betti(lattice_file, ideal_text);
    if (*sd) return run_sdepth(ideal_text, quotient, certificate);
    if (*inv) return run_invariants(lattice_file);
    if (*ve) {
      VerifyOptions opts;
      opts.exhaustive = exhaustive;
      opts.fill = !no_fill;
      opts.jobs = jobs;
      if (!resume_dir.empty()) opts.resume_dir = resume_dir;
      if (!out_dir.empty()) opts.out_dir = out_dir;
      opts.log = [](const std::string& s) { std::cerr << s << '\n'; };
      return run_verify(atoms, opts);
    }
    if (*vi) return run_verify_ideal(ideal_text);
    if (*re) return run_report(in_dir, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
