#include "hyperdual/css.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyperdual/errors.hpp"
#include "test_support.hpp"

namespace hyperdual {
namespace {

Hypergraph bell() { return Hypergraph(2, {{0, 1}}); }

// Dual of the 4-cycle: qubits are the cycle bonds, edges join neighbouring bonds.
Hypergraph c4_dual() { return dual(Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})); }

TEST(CssFromHypergraph, examples) {
  auto single = css_from_hypergraph(Hypergraph(1, {{0}}));
  EXPECT_EQ(single.x_rank(), 1u);
  EXPECT_TRUE(single.z_generators().empty());

  auto b = css_from_hypergraph(bell());
  ASSERT_EQ(b.x_generators().size(), 1u);
  EXPECT_EQ(b.x_generators()[0].str(), "11");
  ASSERT_EQ(b.z_generators().size(), 1u);
  EXPECT_EQ(b.z_generators()[0].str(), "11");
  EXPECT_TRUE(b.satisfies_invariants());

  auto ex = css_from_hypergraph(Hypergraph(4, {{0}, {1, 2}, {0, 1, 3}}));
  EXPECT_EQ(ex.x_rank(), 3u);
  ASSERT_EQ(ex.z_generators().size(), 1u);
  EXPECT_EQ(ex.z_generators()[0].str(), "0111");

  auto redundant = css_from_hypergraph(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(redundant.x_rank(), 2u);
  EXPECT_EQ(redundant.x_generators()[0].str(), "110");
  EXPECT_EQ(redundant.x_generators()[1].str(), "011");
}

TEST(CssFromHypergraph, explicit_selection) {
  const Hypergraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  const std::vector<std::size_t> pick{1, 2};
  auto c = css_from_hypergraph(tri, pick);
  EXPECT_TRUE(c.satisfies_invariants());
  EXPECT_EQ(x_weight_distribution(c), x_weight_distribution(css_from_hypergraph(tri)));

  const std::vector<std::size_t> too_few{0};
  EXPECT_THROW((void)css_from_hypergraph(tri, too_few), ValidationError);
  const Hypergraph twice(2, {{0, 1}, {0, 1}});
  const std::vector<std::size_t> dependent{0, 1};
  EXPECT_THROW((void)css_from_hypergraph(twice, dependent), ValidationError);
  const std::vector<std::size_t> out_of_range{5};
  EXPECT_THROW((void)css_from_hypergraph(Hypergraph(1, {{0}}), out_of_range), ValidationError);
}

TEST(CssState, shape_checks_and_invariants) {
  EXPECT_THROW(CssState(bell(), {BitVector::from_string("111")}, {}), ValidationError);
  CssState corrupted(bell(), {BitVector::from_string("11")}, {BitVector::from_string("10")});
  EXPECT_FALSE(corrupted.satisfies_invariants());
}

TEST(WeightDistribution, examples) {
  EXPECT_EQ(x_weight_distribution(css_from_hypergraph(Hypergraph(1, {{0}}))).counts(),
            (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(x_weight_distribution(css_from_hypergraph(c4_dual())).counts(),
            (std::vector<std::uint64_t>{1, 0, 6, 0, 1}));
  EXPECT_EQ(z_weight_distribution(css_from_hypergraph(bell())).counts(),
            (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(x_weight_distribution(css_from_hypergraph(Hypergraph(2, {{0}, {1}}))).counts(),
            (std::vector<std::uint64_t>{1, 2, 1}));
  WeightDistribution d({1, 0, 1});
  EXPECT_EQ(d.total(), 2u);
  EXPECT_EQ(d.num_qubits(), 2u);
  EXPECT_EQ(d.count(3), 0u);
  EXPECT_THROW(WeightDistribution({}), ValidationError);
}

TEST(WeightDistribution, capacity) {
  std::vector<BitVector> gens;
  for (std::uint32_t i = 0; i < 27; ++i) gens.push_back(BitVector::from_support(27, std::vector<std::uint32_t>{i}));
  EXPECT_THROW((void)span_weight_distribution(gens, 27), CapacityError);
}

TEST(Statevector, examples) {
  const double h = 1.0 / std::sqrt(2.0);
  auto b = statevector(css_from_hypergraph(bell()));
  ASSERT_EQ(b.size(), 4u);
  EXPECT_NEAR(b[0], h, 1e-15);
  EXPECT_EQ(b[1], 0.0);
  EXPECT_EQ(b[2], 0.0);
  EXPECT_NEAR(b[3], h, 1e-15);

  auto plus = statevector(css_from_hypergraph(Hypergraph(1, {{0}})));
  EXPECT_NEAR(plus[0], h, 1e-15);
  EXPECT_NEAR(plus[1], h, 1e-15);

  EXPECT_TRUE(verify_stabilized(css_from_hypergraph(bell())));
  CssState corrupted(bell(), {BitVector::from_string("11")}, {BitVector::from_string("10")});
  EXPECT_FALSE(verify_stabilized(corrupted));
}

TEST(Statevector, capacity) {
  EXPECT_THROW((void)statevector(css_from_hypergraph(Hypergraph(21, {{0}}))), CapacityError);
}

TEST(CssProperties, random_states) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = testing::random_hypergraph(rng, 10, 10, true);
    const auto c = css_from_hypergraph(h);
    const std::size_t n = c.num_qubits();
    EXPECT_TRUE(c.satisfies_invariants());
    EXPECT_EQ(c.x_rank() + c.z_generators().size(), n);

    for (const auto& x : c.x_generators()) {
      for (const auto& z : c.z_generators()) EXPECT_FALSE(dot(x, z));
    }

    // Weight distribution against a direct enumeration of the group.
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e) {
      const auto v = BitVector::from_word(n, e);
      if (testing::in_span_enumerated(v, c.x_generators())) ++counts[v.weight()];
    }
    EXPECT_EQ(x_weight_distribution(c).counts(), counts);
    EXPECT_EQ(x_weight_distribution(c).total(), std::uint64_t{1} << c.x_rank());

    const auto psi = statevector(c);
    const auto psi_z = statevector_from_z_generators(c);
    double norm = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      EXPECT_NEAR(psi[i], psi_z[i], 1e-12);
      norm += psi[i] * psi[i];
    }
    EXPECT_NEAR(norm, 1.0, 1e-12);
    EXPECT_TRUE(verify_stabilized(c));
  }
}

TEST(CssProperties, distribution_independent_of_edge_selection) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = testing::random_hypergraph(rng, 8, 10, true);
    // Greedy selection in reverse edge order.
    std::vector<std::size_t> pick;
    std::vector<BitVector> chosen;
    const auto m = edge_matrix(h);
    for (std::size_t i = h.num_edges(); i-- > 0;) {
      if (!in_span(m.row(i), chosen)) {
        pick.push_back(i);
        chosen.push_back(m.row(i));
      }
    }
    const auto a = css_from_hypergraph(h);
    const auto b = css_from_hypergraph(h, pick);
    EXPECT_EQ(x_weight_distribution(a), x_weight_distribution(b));
    EXPECT_EQ(statevector(a), statevector(b));
  }
}

}  // namespace
}  // namespace hyperdual
