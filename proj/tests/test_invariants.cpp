#include <gtest/gtest.h>

#include <iostream>
#include <numeric>
#include <random>

#include "four_atom_table.hpp"
#include "lcmlat/enumerate.hpp"
#include "lcmlat/invariants.hpp"
#include "lcmlat/realize.hpp"
#include "oracles.hpp"

using namespace lcmlat;

namespace {

Lattice table_lattice(int no) { return lcm_lattice(parse_ideal(kFourAtomTable[static_cast<std::size_t>(no - 1)].ideal)).lattice; }

std::vector<Lattice> all_lattices(std::size_t max_k) {
  std::vector<Lattice> out;
  for (std::size_t k = 1; k <= max_k; ++k)
    for (const auto& n : generate_all(k).nodes) out.push_back(n.representative);
  return out;
}

}  // namespace

TEST(Length, Examples) {
  EXPECT_EQ(length(boolean_lattice(4)), 4);
  EXPECT_EQ(length(table_lattice(50)), 2);
  EXPECT_EQ(length(table_lattice(16)), 3);
  EXPECT_EQ(length(chain_lattice(1)), 0);
  EXPECT_EQ(length(chain_lattice(6)), 5);
}

TEST(Breadth, Examples) {
  EXPECT_EQ(breadth(boolean_lattice(4)), 4);
  EXPECT_EQ(breadth(table_lattice(19)), 2);
  EXPECT_EQ(breadth(table_lattice(34)), 2);
  EXPECT_EQ(order_dimension(table_lattice(34)), 3);
  EXPECT_EQ(breadth(chain_lattice(4)), 1);
  EXPECT_EQ(breadth(chain_lattice(1)), 1);
}

TEST(Breadth, MatchesDefinitionUpToTwelveElements) {
  std::size_t checked = 0;
  for (const auto& l : all_lattices(5)) {
    if (l.size() > 12) continue;
    EXPECT_EQ(breadth(l), oracle::breadth_by_definition(l));
    EXPECT_LE(breadth(l), static_cast<int>(l.atoms().size()));
    ++checked;
  }
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(breadth(chain_lattice(n)), oracle::breadth_by_definition(chain_lattice(n)));
  EXPECT_GT(checked, 30u);
}

TEST(OrderDimension, Examples) {
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(order_dimension(boolean_lattice(k)), static_cast<int>(k));
  EXPECT_EQ(order_dimension(table_lattice(19)), 2);
  EXPECT_EQ(order_dimension(table_lattice(50)), 2);
  EXPECT_EQ(order_dimension(chain_lattice(1)), 1);
  EXPECT_EQ(order_dimension(chain_lattice(5)), 1);
}

TEST(OrderDimension, MatchesLinearExtensionSearchUpToEightElements) {
  std::size_t checked = 0;
  for (const auto& l : all_lattices(4)) {
    if (l.size() > 8) continue;
    EXPECT_EQ(order_dimension(l), oracle::poset_dimension_by_extensions(l));
    ++checked;
  }
  EXPECT_GE(checked, 10u);
}

TEST(OrderDimension, AtLeastBreadth) {
  for (const auto& l : all_lattices(5)) EXPECT_GE(order_dimension(l), breadth(l));
}

TEST(SublatticeDimension, Examples) {
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(sublattice_dimension(boolean_lattice(k)), static_cast<int>(k));
  EXPECT_EQ(sublattice_dimension(chain_lattice(1)), 1);
  EXPECT_EQ(sublattice_dimension(chain_lattice(4)), 1);
  EXPECT_FALSE(sublattice_dimension(table_lattice(50)).has_value());
  EXPECT_FALSE(sublattice_dimension(table_lattice(34)).has_value());
}

TEST(SublatticeDimension, MatchesEmbeddingSearchOnSmallLattices) {
  std::vector<Lattice> small{chain_lattice(2), chain_lattice(3), boolean_lattice(2), boolean_lattice(3),
                             table_lattice(50), table_lattice(49)};
  for (const auto& n : generate_all(3).nodes) small.push_back(n.representative);
  for (const auto& l : small) {
    const auto dim = sublattice_dimension(l);
    const int side = length(l) + 1;
    for (int m = 1; m <= 3; ++m) {
      const bool expected = dim.has_value() && *dim <= m;
      EXPECT_EQ(oracle::embeds_in_chain_product(l, m, side), expected) << "size " << l.size() << " m " << m;
    }
  }
}

TEST(SublatticeDimension, RecordsWhereItDiffersFromOrderDimension) {
  // Distributive atomistic lattices are boolean, so only B_k has a sublattice
  // embedding into a product of chains; the tabulated dim column follows the
  // order dimension.
  for (std::size_t k = 2; k <= 5; ++k) {
    std::size_t differ = 0, total = 0;
    for (const auto& n : generate_all(k).nodes) {
      const auto& l = n.representative;
      const auto s = sublattice_dimension(l);
      EXPECT_EQ(s.has_value(), is_distributive(l));
      if (!s || *s != order_dimension(l)) ++differ;
      ++total;
    }
    std::cout << "k=" << k << ": sublattice dimension differs from order dimension on " << differ << " of " << total
              << " lattices\n";
    EXPECT_EQ(differ, total - 1);
  }
}

TEST(Invariants, RelabelingInvariant) {
  std::mt19937 rng(5);
  for (const auto& l : all_lattices(4)) {
    std::vector<std::size_t> perm(l.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto r = l.relabeled(perm);
    EXPECT_EQ(length(r), length(l));
    EXPECT_EQ(breadth(r), breadth(l));
    EXPECT_EQ(order_dimension(r), order_dimension(l));
  }
}

TEST(Invariants, MatchTheFourAtomTable) {
  for (const auto& row : kFourAtomTable) {
    const auto rec = lattice_invariants(table_lattice(row.no), static_cast<std::size_t>(row.no));
    EXPECT_EQ(rec.cardinality, static_cast<std::size_t>(row.cardinality)) << row.no;
    EXPECT_EQ(rec.length, row.length) << row.no;
    EXPECT_EQ(rec.breadth, row.breadth) << row.no;
    EXPECT_EQ(rec.order_dimension, row.dim) << row.no;
    EXPECT_FALSE(rec.pdim_quotient.has_value());
  }
}
