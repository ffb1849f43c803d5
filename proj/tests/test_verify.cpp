#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "four_atom_table.hpp"
#include "lcmlat/io.hpp"
#include "lcmlat/verify.hpp"

using namespace lcmlat;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("lcmlat_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Io, LatticeRoundTrip) {
  const auto l = lcm_lattice(parse_ideal("x2*x4, x2*x3, x1*x4, x1*x3")).lattice;
  const auto j = lattice_to_json(l);
  EXPECT_EQ(j.at("size").get<std::size_t>(), 10u);
  EXPECT_EQ(lattice_from_json(j), l);
  auto bad = j;
  bad["atoms"] = Json::array({0});
  EXPECT_THROW(lattice_from_json(bad), std::invalid_argument);
}

TEST(Io, IdealRoundTrip) {
  const auto i = parse_ideal("x3^2*x4, x1*x2*x3, x2^2, x1*x4");
  EXPECT_EQ(ideal_from_json(ideal_to_json(i)), i);
  EXPECT_EQ(ideal_to_json(i).at("num_vars").get<std::size_t>(), 4u);
}

TEST(Io, DagRoundTrip) {
  const auto dir = fresh_dir("dag");
  const auto dag = generate_all(4);
  write_dag(dir, dag);
  const auto again = read_dag(dir);
  ASSERT_EQ(again.nodes.size(), 50u);
  for (std::size_t i = 0; i < 50; ++i) {
    EXPECT_EQ(again.nodes[i].canonical, dag.nodes[i].canonical);
    EXPECT_EQ(again.nodes[i].representative, dag.nodes[i].representative);
  }
  EXPECT_EQ(again.edges, dag.edges);
  const auto j = read_json(dir / "dag.json");
  EXPECT_EQ(j.at("nodes")[0].at("file").get<std::string>(), node_file_name(0));
  EXPECT_EQ(j.at("nodes")[0].at("cardinality").get<std::size_t>(), 16u);
  fs::remove_all(dir);
}

TEST(Manifest, PersistsAndIgnoresTornLines) {
  const auto dir = fresh_dir("manifest");
  {
    ManifestStore store(dir);
    store.commit("sdepth", "aa", Json{{"spdim", 2}});
    store.commit("sdepth", "bb", Json{{"spdim", 3}});
  }
  {
    std::ofstream out(dir / "manifest_sdepth.jsonl", std::ios::app);
    out << R"({"key":"cc","value":{"spd)";
  }
  ManifestStore again(dir);
  EXPECT_EQ(again.lookup("sdepth", "aa")->at("spdim").get<int>(), 2);
  EXPECT_EQ(again.lookup("sdepth", "bb")->at("spdim").get<int>(), 3);
  EXPECT_FALSE(again.lookup("sdepth", "cc").has_value());
  EXPECT_FALSE(again.lookup("betti", "aa").has_value());
  fs::remove_all(dir);
}

TEST(Verify, TwoAtoms) {
  const auto r = verify(2);
  ASSERT_EQ(r.nodes.size(), 1u);
  const auto& n = r.nodes[0].record;
  EXPECT_EQ(n.spdim_quotient, 2);
  EXPECT_EQ(n.pdim_quotient, 2);
  EXPECT_EQ(n.spdim_ideal, 1);
  EXPECT_EQ(n.pdim_ideal, 1);
  EXPECT_TRUE(r.all_pass());
}

TEST(Verify, ThreeAndFourAtomsPass) {
  for (std::size_t k : {3, 4}) {
    const auto r = verify(k);
    EXPECT_TRUE(r.all_pass()) << "k=" << k;
    for (std::size_t c = 0; c < kCheckNames.size(); ++c) EXPECT_EQ(r.count(c, CheckStatus::Pass), r.nodes.size());
  }
}

TEST(Verify, PrunedMatchesExhaustive) {
  for (std::size_t k : {3, 4}) {
    VerifyOptions exhaustive;
    exhaustive.exhaustive = true;
    const auto a = verify(k, exhaustive);
    const auto b = verify(k);
    ASSERT_EQ(a.nodes.size(), b.nodes.size());
    for (std::size_t v = 0; v < a.nodes.size(); ++v) {
      EXPECT_EQ(a.nodes[v].record.spdim_quotient, b.nodes[v].record.spdim_quotient);
      EXPECT_EQ(a.nodes[v].record.spdim_ideal, b.nodes[v].record.spdim_ideal);
      ASSERT_TRUE(a.nodes[v].record.spdim_ideal.has_value());
    }
    EXPECT_LT(b.searched_quotient.size(), a.searched_quotient.size());
  }
}

TEST(Verify, PropagationAloneDecidesEveryCheck) {
  VerifyOptions opts;
  opts.fill = false;
  const auto r = verify(4, opts);
  EXPECT_TRUE(r.all_pass());
  for (const auto& n : r.nodes) EXPECT_EQ(n.record.spdim_quotient, n.record.pdim_quotient);
}

TEST(Verify, MonotoneAlongEveryFourAtomEdge) {
  VerifyOptions exhaustive;
  exhaustive.exhaustive = true;
  const auto r = verify(4, exhaustive);
  const auto dag = generate_all(4);
  for (auto [p, c] : dag.edges) {
    const auto& a = r.nodes[p].record;
    const auto& b = r.nodes[c].record;
    EXPECT_GE(*a.pdim_quotient, *b.pdim_quotient);
    EXPECT_GE(*a.pdim_ideal, *b.pdim_ideal);
    EXPECT_GE(*a.spdim_quotient, *b.spdim_quotient);
    EXPECT_GE(*a.spdim_ideal, *b.spdim_ideal);
  }
}

TEST(Verify, KnownRelationsHoldOnFourAtomRecords) {
  const auto r = verify(4);
  for (const auto& n : r.nodes) {
    const auto& x = n.record;
    EXPECT_EQ(*x.pdim_quotient, *x.pdim_ideal + 1);
    EXPECT_LE(2, *x.pdim_quotient);
    EXPECT_LE(*x.pdim_quotient, std::min(x.length, x.order_dimension));
    EXPECT_LE(*x.spdim_quotient, std::min(x.length, x.order_dimension));
    EXPECT_LE(std::max(x.length, x.order_dimension), 4);
    EXPECT_LE(1, *x.spdim_ideal);
    EXPECT_LE(*x.spdim_ideal, std::min({x.length - 1, x.order_dimension - 1, 2}));
  }
}

TEST(Verify, ResumeReusesManifests) {
  const auto dir = fresh_dir("resume");
  VerifyOptions opts;
  opts.resume_dir = dir;
  const auto first = verify(3, opts);
  EXPECT_TRUE(fs::exists(dir / "dag" / "dag.json"));
  EXPECT_TRUE(fs::exists(dir / "manifest_betti.jsonl"));
  EXPECT_TRUE(fs::exists(dir / "manifest_sdepth_quotient.jsonl"));
  const auto lines_before = read_text(dir / "manifest_sdepth_quotient.jsonl");
  const auto second = verify(3, opts);
  EXPECT_EQ(read_text(dir / "manifest_sdepth_quotient.jsonl"), lines_before);
  ASSERT_EQ(first.nodes.size(), second.nodes.size());
  for (std::size_t v = 0; v < first.nodes.size(); ++v) {
    EXPECT_EQ(first.nodes[v].record.spdim_quotient, second.nodes[v].record.spdim_quotient);
    EXPECT_EQ(first.nodes[v].record.spdim_ideal, second.nodes[v].record.spdim_ideal);
  }
  fs::remove_all(dir);
}

TEST(Report, FilesAreDeterministic) {
  const auto a = fresh_dir("report_a");
  const auto b = fresh_dir("report_b");
  VerifyOptions opts;
  opts.out_dir = a;
  verify(3, opts);
  opts.out_dir = b;
  opts.jobs = 2;
  verify(3, opts);
  for (const char* f : {"report.csv", "ideals.csv", "report.json"}) EXPECT_EQ(read_text(a / f), read_text(b / f)) << f;
  const auto csv = read_text(a / "report.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "No.,|L|,pdim S/I,spdim S/I,pdim I,spdim I,Length,dim,Breadth");
  EXPECT_TRUE(!fs::exists(a / "witnesses") || fs::is_empty(a / "witnesses"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Report, EmptyRecordsGiveHeaderOnly) {
  EXPECT_EQ(table_csv({}), "No.,|L|,pdim S/I,spdim S/I,pdim I,spdim I,Length,dim,Breadth\n");
  EXPECT_EQ(ideals_csv({}), "No.,Ideal\n");
}

TEST(Report, RejectsUnknownFormat) {
  const auto dir = fresh_dir("format");
  write_json(dir / "records.json", Json{{"nodes", Json::array()}});
  EXPECT_THROW(write_report(dir, "xml"), std::invalid_argument);
  fs::remove_all(dir);
}

TEST(Witness, ContainsEverythingToRecheck) {
  const auto dir = fresh_dir("witness");
  const auto l = lcm_lattice(parse_ideal("x2*x4, x2*x3, x1*x4, x1*x3")).lattice;
  write_witness(dir, l, realize(l), {});
  for (const char* f : {"lattice.json", "ideal.json", "betti.json", "sdepth_quotient.json", "sdepth_ideal.json"})
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  const auto cert = read_json(dir / "sdepth_quotient.json");
  EXPECT_TRUE(cert.contains("certificate"));
  EXPECT_EQ(read_lattice_file(dir / "lattice.json"), l);
  fs::remove_all(dir);
}

TEST(VerifyIdeal, SixGeneratorsBreakTheEquality) {
  const auto r = verify_ideal(parse_ideal("x1*x3, x2*x3, x1*x4, x2*x4, x1*x5, x2*x5"));
  EXPECT_EQ(r.depth_quotient, 1);
  EXPECT_EQ(r.sdepth_quotient, 2);
  EXPECT_FALSE(r.equality_holds);
  EXPECT_FALSE(r.asserted);
  EXPECT_TRUE(r.passed());
  const auto j = ideal_verification_to_json(r);
  EXPECT_EQ(j.at("statuses").at("depth_quotient == sdepth_quotient").get<std::string>(), "BROKEN");
}

TEST(VerifyIdeal, Variables) {
  const auto r = verify_ideal(parse_ideal("x1, x2, x3, x4"));
  EXPECT_EQ(r.depth_quotient, 0);
  EXPECT_EQ(r.sdepth_quotient, 0);
  EXPECT_EQ(r.sdepth_ideal, 2);
  EXPECT_TRUE(r.asserted);
  EXPECT_TRUE(r.passed());
}

TEST(VerifyIdeal, Principal) {
  const auto r = verify_ideal(parse_ideal("x1", 3));
  EXPECT_EQ(r.depth_quotient, 2);
  EXPECT_EQ(r.sdepth_quotient, 2);
  EXPECT_EQ(r.sdepth_ideal, 3);
  EXPECT_TRUE(r.passed());
}

TEST(VerifyIdeal, EveryTabulatedIdeal) {
  for (const auto& row : kFourAtomTable) {
    const auto r = verify_ideal(parse_ideal(row.ideal));
    EXPECT_TRUE(r.asserted);
    EXPECT_TRUE(r.equality_holds) << row.no;
    EXPECT_TRUE(r.strict_holds) << row.no;
    EXPECT_EQ(r.spdim_quotient, row.spdim_quotient) << row.no;
    EXPECT_EQ(r.spdim_ideal, row.spdim_ideal) << row.no;
  }
}
