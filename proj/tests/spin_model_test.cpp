#include "hyperdual/spin_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyperdual/errors.hpp"
#include "test_support.hpp"

namespace hyperdual {
namespace {

SpinModel field(double j, double beta) { return SpinModel(Hypergraph(1, {{0}}), {j}, beta); }

SpinModel triangle(double j, double beta) {
  return SpinModel(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}), {j, j, j}, beta);
}

SpinModel double_bond(double j, double beta) {
  return SpinModel(Hypergraph(2, {{0, 1}, {0, 1}}), {j, j}, beta);
}

TEST(SpinModel, validation) {
  EXPECT_THROW(SpinModel(Hypergraph(1, {{0}}), {}, 1.0), ValidationError);
  EXPECT_THROW(field(1.0, -0.5), ValidationError);
  EXPECT_THROW(field(NAN, 1.0), ValidationError);
  EXPECT_THROW(SpinConfig({1, 0}), ValidationError);
}

TEST(Energy, examples) {
  EXPECT_DOUBLE_EQ(energy(field(1.0, 1.0), SpinConfig({1})), 1.0);

  SpinModel fig2(Hypergraph(4, {{0, 1}, {1, 2}, {3}, {0, 2, 3}}), {1, 1, 1, 1}, 1.0);
  EXPECT_DOUBLE_EQ(energy(fig2, SpinConfig({1, 1, 1, 1})), 4.0);

  EXPECT_DOUBLE_EQ(energy(triangle(1.0, 1.0), SpinConfig({1, -1, 1})), -1.0);
  EXPECT_THROW((void)energy(triangle(1.0, 1.0), SpinConfig({1, 1})), ValidationError);
}

TEST(PartitionFunction, examples) {
  EXPECT_NEAR(partition_function(field(1.0, 1.0)), std::exp(1.0) + std::exp(-1.0), 1e-14);
  EXPECT_NEAR(partition_function(field(1.0, 1.0)), 3.0861612696304874, 1e-14);

  const double tri = 2.0 * std::exp(-3.0) + 6.0 * std::exp(1.0);
  EXPECT_NEAR(partition_function(triangle(1.0, 1.0)), tri, 1e-12);
  EXPECT_NEAR(tri, 16.409265107490, 1e-11);

  SpinModel fig2(Hypergraph(4, {{0, 1}, {1, 2}, {3}, {0, 2, 3}}), {0.3, -1.2, 2.0, 0.7}, 0.0);
  EXPECT_DOUBLE_EQ(partition_function(fig2), 16.0);
}

TEST(PartitionFunction, capacity) {
  SpinModel big(Hypergraph(25, {{0}}), {1.0}, 1.0);
  EXPECT_THROW((void)partition_function(big), CapacityError);
  std::vector<Hypergraph::Edge> edges(21, Hypergraph::Edge{0});
  SpinModel many(Hypergraph(1, edges), std::vector<double>(21, 1.0), 1.0);
  EXPECT_THROW((void)partition_function_edge_vars(many), CapacityError);
}

TEST(PartitionFunctionEdgeVars, examples) {
  for (double beta : {0.0, 0.4, 1.0}) {
    EXPECT_NEAR(partition_function_edge_vars(field(1.0, beta)),
                std::exp(-beta) + std::exp(beta), 1e-13);
  }
  EXPECT_NEAR(partition_function_edge_vars(double_bond(1.0, 1.0)),
              2.0 * std::exp(-2.0) + 2.0 * std::exp(2.0), 1e-12);
  EXPECT_NEAR(partition_function(double_bond(1.0, 1.0)),
              2.0 * std::exp(-2.0) + 2.0 * std::exp(2.0), 1e-12);

  SpinModel fig2(Hypergraph(4, {{0, 1}, {1, 2}, {3}, {0, 2, 3}}), {1, 1, 1, 1}, 0.0);
  EXPECT_DOUBLE_EQ(partition_function_edge_vars(fig2), 16.0);
}

TEST(PartitionFunction, large_exponents_stay_finite_in_log_domain) {
  // beta * sum|J| = 2000 overflows exp() directly.
  SpinModel hot(Hypergraph(2, {{0, 1}, {0, 1}}), {-500.0, -500.0}, 2.0);
  EXPECT_NEAR(log_partition_function(hot), 2000.0 + std::log(2.0), 1e-9);
}

TEST(PartitionFunctionProperties, routes_agree_with_naive_sum) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coupling(-2, 2);
  std::uniform_real_distribution<double> beta(0.0, 1.2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = testing::random_hypergraph(rng, 10, 10, true);
    std::vector<double> js;
    for (std::size_t m = 0; m < h.num_edges(); ++m) js.push_back(coupling(rng));
    const SpinModel model(h, js, beta(rng));

    const double brute = partition_function(model);
    EXPECT_GT(brute, 0.0);
    EXPECT_LE(testing::relative_difference(brute, partition_function_edge_vars(model)), 1e-12);
    EXPECT_LE(testing::relative_difference(brute, testing::partition_function_naive(model)), 1e-12);
    EXPECT_DOUBLE_EQ(partition_function(model.with_beta(0.0)),
                     std::ldexp(1.0, static_cast<int>(h.num_vertices())));
  }
}

TEST(PartitionFunction, deterministic_across_calls) {
  // 2^20 configurations spans many parallel chunks.
  std::mt19937_64 rng(3);
  std::vector<Hypergraph::Edge> edges;
  for (std::uint32_t v = 0; v < 20; ++v) edges.push_back({v, (v + 1) % 20});
  SpinModel ring(Hypergraph(20, edges), std::vector<double>(20, -1.0), 0.44);
  const double first = partition_function(ring);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(partition_function(ring), first);
  // Ring: Z = (2 cosh bJ)^n + (2 sinh bJ)^n
  const double expected = std::pow(2 * std::cosh(0.44), 20) + std::pow(2 * std::sinh(0.44), 20);
  EXPECT_LE(testing::relative_difference(first, expected), 1e-13);
}

}  // namespace
}  // namespace hyperdual
