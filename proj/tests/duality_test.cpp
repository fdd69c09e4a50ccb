#include "hyperdual/duality.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyperdual/errors.hpp"
#include "test_support.hpp"

namespace hyperdual {
namespace {

const double kSqrt2 = std::sqrt(2.0);

SpinModel field(double j, double beta) { return SpinModel(Hypergraph(1, {{0}}), {j}, beta); }

SpinModel triangle(double j, double beta) {
  return SpinModel(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}), {j, j, j}, beta);
}

SpinModel double_bond(double j, double beta) {
  return SpinModel(Hypergraph(2, {{0, 1}, {0, 1}}), {j, j}, beta);
}

SpinModel ring(std::size_t n, double j) {
  std::vector<Hypergraph::Edge> edges;
  for (std::uint32_t v = 0; v < n; ++v) {
    edges.push_back({v, static_cast<std::uint32_t>((v + 1) % n)});
  }
  return SpinModel(Hypergraph(n, edges), std::vector<double>(n, j), 1.0);
}

SpinModel random_model(std::mt19937_64& rng, std::size_t max_k, std::size_t max_n, bool uniform) {
  static const double kCouplings[] = {-2.0, -1.0, 1.0, 2.0};
  static const double kBetas[] = {0.3, 0.7, 1.1};
  std::uniform_int_distribution<int> pick_j(0, 3);
  std::uniform_int_distribution<int> pick_b(0, 2);
  const auto h = testing::random_hypergraph(rng, max_k, max_n);
  std::vector<double> js(h.num_edges());
  if (uniform) {
    std::uniform_real_distribution<double> j(0.2, 2.0);
    std::fill(js.begin(), js.end(), j(rng));
  } else {
    for (auto& j : js) j = kCouplings[pick_j(rng)];
  }
  return SpinModel(h, js, kBetas[pick_b(rng)]);
}

TEST(Overlap, examples) {
  EXPECT_NEAR(overlap_group_sum(field(1.0, 1.0)), std::cosh(1.0), 1e-14);

  const auto tri = triangle(1.0, 1.0);
  EXPECT_NEAR(overlap_group_sum(tri), std::pow(2.0, -2.5) * (std::exp(-3.0) + 3.0 * std::exp(1.0)),
              1e-14);

  // beta = 0: 2^{(M-N)/2}
  EXPECT_NEAR(overlap_group_sum(triangle(1.0, 0.0)), std::pow(2.0, -0.5), 1e-15);
  EXPECT_NEAR(overlap_group_sum(double_bond(1.0, 0.0)), std::pow(2.0, -0.5), 1e-15);

  EXPECT_THROW((void)overlap_group_sum(SpinModel(Hypergraph(2, {{0}}), {1.0}, 1.0)),
               IsolatedVertexError);
}

TEST(VerifyDuality, examples) {
  auto r = verify_duality(triangle(1.0, 1.0));
  EXPECT_EQ(r.k, 3u);
  EXPECT_EQ(r.n, 3u);
  EXPECT_EQ(r.m, 2u);
  EXPECT_NEAR(r.z_bruteforce, 2.0 * std::exp(-3.0) + 6.0 * std::exp(1.0), 1e-12);
  EXPECT_NEAR(r.constant, 2.0 * std::pow(2.0, 2.5), 1e-12);
  EXPECT_NEAR(r.constant_without_multiplicity, std::pow(2.0, 2.5), 1e-12);
  EXPECT_TRUE(r.passed());

  auto f = verify_duality(field(1.0, 1.0));
  EXPECT_NEAR(f.constant, 2.0, 1e-15);
  EXPECT_TRUE(f.passed());

  auto d = verify_duality(double_bond(-1.5, 0.8));
  EXPECT_EQ(d.m, 1u);
  EXPECT_TRUE(d.passed());
}

TEST(DualityProperties, overlap_matches_dense_statevector) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto model = random_model(rng, 8, 10, false);
    const auto psi = statevector(css_from_hypergraph(dual(model.graph())));
    const double dense = testing::dense_overlap(model, psi);
    EXPECT_LE(testing::relative_difference(overlap_group_sum(model), dense), 1e-10);
  }
}

TEST(DualityProperties, random_models_satisfy_identity) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const auto model = random_model(rng, 10, 10, false);
    const auto r = verify_duality(model);
    EXPECT_LE(r.relative_error, 1e-9) << "trial " << trial;
    EXPECT_LE(testing::relative_difference(r.z_bruteforce, testing::partition_function_naive(model)),
              1e-12);
  }
}

TEST(Stability, direct_examples) {
  const auto c4 = css_from_hypergraph(dual(ring(4, 1.0).graph()));
  EXPECT_NEAR(stability_bitflip_direct(c4, 0.25), 0.53125, 1e-15);
  EXPECT_NEAR(stability_bitflip_direct(c4, 0.5), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(stability_bitflip_direct(c4, 0.0), 1.0);

  const auto point = css_from_hypergraph(Hypergraph(1, {{0}}));
  EXPECT_DOUBLE_EQ(stability_bitflip_direct(point, 0.3), 1.0);
  EXPECT_NEAR(stability_phaseflip_direct(point, 0.3), 0.7, 1e-15);

  EXPECT_THROW((void)stability_bitflip_direct(c4, -0.1), DomainError);
  EXPECT_THROW((void)stability_bitflip_direct(c4, 1.1), DomainError);

  EXPECT_NEAR(stability_from_distribution(WeightDistribution({1, 0, 1}), 0.2), 0.68, 1e-15);
}

TEST(Stability, via_z_examples) {
  for (double p : {0.1, 0.25, 0.4}) {
    EXPECT_NEAR(stability_bitflip_via_z(field(1.0, 1.0), p), 1.0, 1e-13);
    EXPECT_NEAR(stability_phaseflip_via_z(field(1.0, 1.0), p), 1.0 - p, 1e-13);
    const double pair = p * p + (1 - p) * (1 - p);
    EXPECT_NEAR(stability_bitflip_via_z(double_bond(1.0, 1.0), p), pair, 1e-13);
    EXPECT_NEAR(stability_phaseflip_via_z(double_bond(1.0, 1.0), p), pair, 1e-13);
    for (std::size_t n = 3; n <= 8; ++n) {
      EXPECT_NEAR(stability_bitflip_via_z(ring(n, 1.0), p), testing::cycle_stability_closed_form(n, p),
                  1e-12);
    }
  }
}

TEST(Stability, via_z_preconditions) {
  EXPECT_THROW((void)stability_bitflip_via_z(field(1.0, 1.0), 0.0), DomainError);
  EXPECT_THROW((void)stability_bitflip_via_z(field(1.0, 1.0), 0.5), DomainError);
  EXPECT_THROW((void)stability_phaseflip_via_z(field(1.0, 1.0), 0.6), DomainError);
  const SpinModel mixed(Hypergraph(2, {{0, 1}, {0}}), {1.0, 2.0}, 1.0);
  EXPECT_THROW((void)stability_bitflip_via_z(mixed, 0.2), NonUniformCouplingError);
  EXPECT_THROW((void)stability_phaseflip_via_z(field(-1.0, 1.0), 0.2), NonUniformCouplingError);
}

TEST(StabilityProperties, via_z_matches_enumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto model = random_model(rng, 8, 8, true);
    const auto c = css_from_hypergraph(dual(model.graph()));
    for (double p : {0.1, 0.25, 0.4}) {
      const double w = stability_bitflip_direct(c, p);
      const double v = stability_phaseflip_direct(c, p);
      EXPECT_LE(testing::relative_difference(w, stability_bitflip_via_z(model, p)), 1e-10);
      EXPECT_LE(testing::relative_difference(v, stability_phaseflip_via_z(model, p)), 1e-10);
      const std::size_t n = c.num_qubits();
      EXPECT_LE(testing::relative_difference(w, testing::stability_enumerated(c.x_generators(), n, p)),
                1e-12);
      EXPECT_LE(testing::relative_difference(v, testing::stability_enumerated(c.z_generators(), n, p)),
                1e-12);
    }
  }
}

TEST(NoiseMaps, examples) {
  EXPECT_DOUBLE_EQ(p_from_beta_bitflip(0.0, 1.0), 0.5);
  EXPECT_NEAR(p_from_beta_bitflip(1.0, 1.0), 1.0 / (1.0 + std::exp(2.0)), 1e-16);
  EXPECT_DOUBLE_EQ(p_from_beta_phaseflip(0.0, 1.0), 0.0);
  EXPECT_NEAR(p_from_beta_phaseflip(40.0, 1.0), 0.5, 1e-16);
  EXPECT_NEAR(beta_from_p_bitflip(0.25, 1.0), 0.5 * std::log(3.0), 1e-15);
  EXPECT_DOUBLE_EQ(beta_from_p_bitflip(0.5, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(beta_from_p_phaseflip(0.0, 1.0), 0.0);
  EXPECT_NEAR(beta_from_p_phaseflip(0.25, 2.0), 0.25 * std::log(2.0), 1e-15);

  EXPECT_THROW((void)p_from_beta_bitflip(-1.0, 1.0), DomainError);
  EXPECT_THROW((void)p_from_beta_bitflip(1.0, 0.0), DomainError);
  EXPECT_THROW((void)beta_from_p_bitflip(0.0, 1.0), DomainError);
  EXPECT_THROW((void)beta_from_p_bitflip(0.6, 1.0), DomainError);
  EXPECT_THROW((void)beta_from_p_phaseflip(0.5, 1.0), DomainError);
}

TEST(NoiseMaps, round_trips) {
  for (double bj : {0.01, 0.1, 0.5, 1.0, 2.5}) {
    for (double j : {0.5, 1.0, 3.0}) {
      const double beta = bj / j;
      EXPECT_NEAR(beta_from_p_bitflip(p_from_beta_bitflip(beta, j), j), beta, 1e-14 * std::max(1.0, beta));
      EXPECT_NEAR(beta_from_p_phaseflip(p_from_beta_phaseflip(beta, j), j), beta,
                  1e-14 * std::max(1.0, beta));
    }
  }
  for (double p : {0.01, 0.1, 0.25, 0.4, 0.49}) {
    EXPECT_NEAR(p_from_beta_bitflip(beta_from_p_bitflip(p, 1.0), 1.0), p, 1e-14);
    EXPECT_NEAR(p_from_beta_phaseflip(beta_from_p_phaseflip(p, 1.0), 1.0), p, 1e-14);
  }
}

TEST(NoiseMaps, critical_point) {
  const double beta_c = 0.5 * std::log(1.0 + kSqrt2);
  const double p_c = 1.0 - kSqrt2 / 2.0;
  EXPECT_NEAR(p_from_beta_bitflip(beta_c, 1.0), p_c, 1e-15);
  EXPECT_NEAR(p_from_beta_phaseflip(beta_c, 1.0), p_c, 1e-15);
  EXPECT_NEAR(critical_pf_from_pb(p_c), p_c, 1e-15);
  EXPECT_NEAR(critical_pf_from_pb(1.0 / 3.0), 0.25, 1e-15);
  EXPECT_DOUBLE_EQ(critical_pf_from_pb(0.0), 0.5);
  EXPECT_DOUBLE_EQ(critical_pf_from_pb(0.5), 0.0);
  EXPECT_THROW((void)critical_pf_from_pb(0.7), DomainError);
}

TEST(NoiseKind, names) {
  EXPECT_EQ(to_string(NoiseKind::bit_flip), "bitflip");
  EXPECT_EQ(to_string(NoiseKind::phase_flip), "phaseflip");
  EXPECT_EQ(parse_noise_kind("phaseflip"), NoiseKind::phase_flip);
  EXPECT_FALSE(parse_noise_kind("depolarizing").has_value());
}

TEST(Sweep, linear_grid) {
  EXPECT_TRUE(linear_grid(0.1, 0.4, 0).empty());
  EXPECT_EQ(linear_grid(0.1, 0.4, 1), (std::vector<double>{0.1}));
  const auto g = linear_grid(0.0, 0.5, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g[0], 0.0);
  EXPECT_DOUBLE_EQ(g[2], 0.25);
  EXPECT_DOUBLE_EQ(g[4], 0.5);
}

TEST(Sweep, examples) {
  const auto model = ring(4, 1.0);
  const std::vector<double> grid{0.25};
  const auto curve = sweep_stability(model, grid, NoiseKind::bit_flip, "c4");
  EXPECT_EQ(curve.model_id, "c4");
  EXPECT_EQ(curve.n_qubits, 4u);
  EXPECT_EQ(curve.m_rank, 3u);
  ASSERT_EQ(curve.rows.size(), 1u);
  EXPECT_DOUBLE_EQ(curve.rows[0].p, 0.25);
  EXPECT_NEAR(curve.rows[0].value, 0.53125, 1e-15);

  const auto empty = sweep_stability(model, std::vector<double>{}, NoiseKind::phase_flip);
  EXPECT_TRUE(empty.rows.empty());
  EXPECT_EQ(empty.n_qubits, 4u);

  const auto phase = sweep_stability(model, linear_grid(0.0, 0.5, 11), NoiseKind::phase_flip);
  const auto c = css_from_hypergraph(dual(model.graph()));
  for (const auto& row : phase.rows) {
    EXPECT_DOUBLE_EQ(row.value, stability_phaseflip_direct(c, row.p));
  }

  EXPECT_THROW((void)sweep_stability(model, std::vector<double>{0.6}, NoiseKind::bit_flip),
               DomainError);
  EXPECT_THROW((void)sweep_stability(field(-1.0, 1.0), grid, NoiseKind::bit_flip),
               NonUniformCouplingError);
}

}  // namespace
}  // namespace hyperdual
