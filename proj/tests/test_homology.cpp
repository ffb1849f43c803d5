#include <gtest/gtest.h>

#include "four_atom_table.hpp"
#include "lcmlat/betti.hpp"
#include "lcmlat/enumerate.hpp"
#include "oracles.hpp"

using namespace lcmlat;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Betti table keyed by multidegree instead of lattice element.
std::map<std::pair<int, Exponent>, std::size_t> by_multidegree(const LcmLattice& l) {
  std::map<std::pair<int, Exponent>, std::size_t> out;
  for (const auto& [key, v] : betti_table(l).entries) out[{key.first, l.labels[key.second]}] = v;
  return out;
}

}  // namespace

TEST(OrderComplex, Examples) {
  const auto b2 = boolean_lattice(2);
  const auto c2 = order_complex(b2, b2.bottom(), b2.top());
  EXPECT_EQ(c2.vertices.size(), 2u);
  EXPECT_EQ(c2.dimension(), 0);
  EXPECT_EQ(reduced_homology_ranks(c2), (std::vector<std::size_t>{0, 1}));

  const auto b3 = boolean_lattice(3);
  const auto hex = order_complex(b3, b3.bottom(), b3.top());
  EXPECT_EQ(hex.face_count(0), 6u);
  EXPECT_EQ(hex.face_count(1), 6u);
  EXPECT_EQ(hex.dimension(), 1);
  EXPECT_EQ(reduced_homology_ranks(hex), (std::vector<std::size_t>{0, 0, 1}));

  const auto empty = order_complex(b3, b3.bottom(), 1);
  EXPECT_TRUE(empty.vertices.empty());
  EXPECT_EQ(reduced_homology_ranks(empty), (std::vector<std::size_t>{1}));

  EXPECT_THROW(order_complex(b3, 1, 2), std::invalid_argument);
  EXPECT_THROW(order_complex(b3, 1, 1), std::invalid_argument);
}

TEST(RationalRank, SmallMatrices) {
  using Row = detail::SparseRow<std::int64_t>;
  EXPECT_EQ(rational_rank({}), 0u);
  EXPECT_EQ(rational_rank({Row{{0, 2}, {1, 4}}, Row{{0, 1}, {1, 2}}}), 1u);
  EXPECT_EQ(rational_rank({Row{{0, 2}, {1, 3}}, Row{{0, 4}, {1, 5}}, Row{{2, 7}}}), 3u);
}

TEST(RationalRank, EntriesWithProductsBeyondSixtyFourBits) {
  using Row = detail::SparseRow<std::int64_t>;
  const std::int64_t big = std::int64_t{1} << 40;
  // Entries whose cross products overflow 64 bits; rank 2.
  std::vector<Row> rows{Row{{0, big + 1}, {1, big}}, Row{{0, big}, {1, big - 1}}, Row{{0, 3 * big + 2}, {1, 3 * big - 1}}};
  EXPECT_EQ(rational_rank(rows), 2u);
}

TEST(Betti, BooleanTotalsAreBinomials) {
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto totals = betti_table(boolean_lattice(k)).totals();
    ASSERT_EQ(totals.size(), k + 1);
    for (std::size_t i = 0; i <= k; ++i) EXPECT_EQ(totals[i], binomial(k, i));
  }
}

TEST(Betti, AgreesWithTaylorOracleOnEveryRealization) {
  for (std::size_t k = 2; k <= 4; ++k)
    for (const auto& n : generate_all(k).nodes) {
      const auto ideal = realize_compact(n.representative);
      EXPECT_EQ(by_multidegree(lcm_lattice(ideal)), oracle::taylor_betti(ideal)) << ideal.to_string();
    }
  for (const auto& row : kFourAtomTable) {
    const auto ideal = parse_ideal(row.ideal);
    EXPECT_EQ(by_multidegree(lcm_lattice(ideal)), oracle::taylor_betti(ideal)) << row.no;
  }
}

TEST(Betti, FirstTotalIsTheGeneratorCount) {
  for (const auto& n : generate_all(5).nodes) EXPECT_EQ(betti_table(n.representative).totals().at(1), 5u);
}

TEST(Betti, AlternatingSumIsMobius) {
  for (std::size_t k : {3, 4}) {
    for (const auto& n : generate_all(k).nodes) {
      const auto& l = n.representative;
      const auto table = betti_table(l);
      const auto mu = oracle::mobius_from_bottom(l);
      for (std::size_t m = 0; m < l.size(); ++m) {
        if (m == l.bottom()) continue;
        long sum = 0;
        for (int i = 0; i <= static_cast<int>(k); ++i)
          sum += (i % 2 == 0 ? 1 : -1) * static_cast<long>(table.at(i, static_cast<Element>(m)));
        EXPECT_EQ(sum, mu[m]);
      }
    }
  }
}

TEST(Betti, RealizationIndependent) {
  const auto dag = generate_all(4);
  for (const auto& row : kFourAtomTable) {
    const auto table_lattice = lcm_lattice(parse_ideal(row.ideal)).lattice;
    const auto id = dag.find(canonical_form(table_lattice));
    ASSERT_LT(id, dag.nodes.size());
    EXPECT_EQ(betti_table(table_lattice).totals(), betti_table(dag.nodes[id].representative).totals());
    EXPECT_EQ(pdim_quotient(table_lattice), row.pdim_quotient) << row.no;
  }
}

TEST(Pdim, Examples) {
  EXPECT_EQ(pdim_quotient(boolean_lattice(4)), 4);
  EXPECT_EQ(pdim_ideal(boolean_lattice(4)), 3);
  EXPECT_EQ(pdim_quotient(lcm_lattice(parse_ideal("x2*x3*x4, x1*x3*x4, x1*x2*x4, x1*x2*x3")).lattice), 2);
  EXPECT_EQ(pdim_quotient(lcm_lattice(parse_ideal("x2*x4, x2*x3, x1*x4, x1*x3")).lattice), 3);
  EXPECT_EQ(pdim_quotient(lcm_lattice(parse_ideal("x2^2*x3, x1*x3^2, x1^2*x2, x1*x2*x3")).lattice), 2);
  EXPECT_EQ(pdim_ideal(lcm_lattice(parse_ideal("x2^2*x3, x1*x3^2, x1^2*x2, x1*x2*x3")).lattice), 1);
  EXPECT_EQ(pdim_quotient(lcm_lattice(parse_ideal("x2*x3, x1^2, x1*x3, x1*x2")).lattice), 3);
  EXPECT_THROW(betti_table(chain_lattice(3)), std::invalid_argument);
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth_quotient(parse_ideal("x1*x3, x2*x3, x1*x4, x2*x4, x1*x5, x2*x5")), 1);
  EXPECT_EQ(depth_quotient(parse_ideal("x1, x2, x3, x4")), 0);
  EXPECT_EQ(depth_quotient(parse_ideal("x1", 3)), 2);
}

TEST(Pdim, MonotoneAlongEdges) {
  for (std::size_t k : {4, 5}) {
    const auto dag = generate_all(k);
    std::vector<int> pd;
    for (const auto& n : dag.nodes) pd.push_back(pdim_quotient(n.representative));
    for (auto [p, c] : dag.edges) EXPECT_GE(pd[p], pd[c]);
  }
}
