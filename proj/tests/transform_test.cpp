#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rps/dst.hpp"
#include "rps/error.hpp"
#include "rps/transform.hpp"
#include "test_support.hpp"

namespace rps {
namespace {

using testing::numbered_frame;

const Frame kDna{"D", "N", "A"};
constexpr std::size_t D = 0, N = 1, A = 2;

MassFunction dna_bpa() {
  return MassFunction::from_labels(
      kDna, {{{"D"}, 0.1}, {{"N"}, 0.2}, {{"A"}, 0.2}, {{"N", "A"}, 0.2}, {{"D", "N", "A"}, 0.3}});
}

TEST(InternalOrderRanking, SlotListing) {
  const InternalOrderRanking dn{D, N, std::nullopt};
  EXPECT_EQ(internal_order_ranking(PermutationEvent{D, N}, kDna), dn);
  const InternalOrderRanking and_{A, N, D};
  EXPECT_EQ(internal_order_ranking(PermutationEvent{A, N, D}, kDna), and_);
  const InternalOrderRanking n{N, std::nullopt, std::nullopt};
  EXPECT_EQ(internal_order_ranking(PermutationEvent{N}, kDna), n);
}

TEST(Dispersion, Range) {
  EXPECT_EQ(Dispersion{}.lambda(), 0.67);
  EXPECT_NO_THROW(Dispersion(0.0));
  EXPECT_THROW(Dispersion(1.0), InvalidArgument);
  EXPECT_THROW(Dispersion(-0.1), InvalidArgument);
  EXPECT_THROW(Dispersion(std::nan("")), InvalidArgument);
  EXPECT_NEAR(Dispersion{}.rate(), 0.67 / 0.33, 1e-15);
}

TEST(OrderedSupport, WorkedExample) {
  const ProbabilityDistribution betp(kDna, {0.2, 0.3, 0.5});
  EXPECT_NEAR(ordered_support(PermutationEvent{N, D}, betp), 0.6, 1e-12);
  EXPECT_NEAR(ordered_support(PermutationEvent{A, D, N}, betp), 0.2, 1e-12);
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(ordered_support(PermutationEvent{x}, betp), 1.0);
}

TEST(OrderedSupport, ZeroWeightSuffixIsUniform) {
  const ProbabilityDistribution betp(kDna, {1.0, 0.0, 0.0});
  EXPECT_NEAR(ordered_support(PermutationEvent{D, N, A}, betp), 0.5, 1e-15);
  EXPECT_NEAR(ordered_support(PermutationEvent{N, A}, betp), 0.5, 1e-15);
  EXPECT_EQ(ordered_support(PermutationEvent{N, D, A}, betp), 0.0);
}

TEST(OrderedSupport, PerSetIdentityAndPlackettLuce) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t n = 1; n <= 5; ++n) {
    const Frame f = numbered_frame(n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> w(n);
      double total = 0.0;
      for (auto& x : w) total += (x = u(rng) + 0.01);
      for (auto& x : w) x /= total;
      const ProbabilityDistribution betp(f, w);
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        double sum = 0.0;
        for (const auto& perm : permutations_of(FocalSet(bits))) {
          const double s = ordered_support(perm, betp);
          sum += s;
          EXPECT_NEAR(s, testing::oracle_sord(testing::Seq(perm.begin(), perm.end()), w), 1e-12);
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
      }
    }
  }
}

TEST(RpsTransform, DnaWorkedExample) {
  const auto mu = rps_transform(dna_bpa());
  const std::vector<std::pair<PermutationEvent, double>> expected{
      {PermutationEvent{D}, 0.1},          {PermutationEvent{N}, 0.2},
      {PermutationEvent{A}, 0.2},          {PermutationEvent{N, A}, 0.1},
      {PermutationEvent{A, N}, 0.1},       {PermutationEvent{D, N, A}, 0.03},
      {PermutationEvent{D, A, N}, 0.03},   {PermutationEvent{N, D, A}, 0.04},
      {PermutationEvent{N, A, D}, 0.08},   {PermutationEvent{A, D, N}, 0.04},
      {PermutationEvent{A, N, D}, 0.08}};
  ASSERT_EQ(mu.size(), expected.size());
  for (const auto& [event, mass] : expected) {
    EXPECT_NEAR(mu.mass(event), mass, 1e-12) << to_string(event, kDna);
  }
}

TEST(RpsTransform, CertainAndVacuous) {
  const auto certain = rps_transform(MassFunction::from_labels(kDna, {{{"N"}, 1.0}}));
  EXPECT_EQ(certain.size(), 1U);
  EXPECT_EQ(certain.mass(PermutationEvent{N}), 1.0);
  const auto vac = rps_transform(MassFunction::vacuous(kDna));
  EXPECT_EQ(vac.size(), 6U);
  for (const auto& [event, mass] : vac.entries()) EXPECT_NEAR(mass, 1.0 / 6.0, 1e-15);
}

TEST(RpsTransform, PreservesFocalMass) {
  std::mt19937_64 rng(12);
  for (std::size_t n = 2; n <= 4; ++n) {
    const Frame f = numbered_frame(n);
    for (int trial = 0; trial < 200; ++trial) {
      const auto m = testing::random_mass(rng, f);
      const auto mu = rps_transform(m);
      double total = 0.0;
      for (const auto& e : mu.entries()) total += e.second;
      EXPECT_NEAR(total, 1.0, 1e-9);
      const auto erased = mu.order_erased();
      for (const auto& [set, mass] : m.entries()) EXPECT_NEAR(erased.mass(set), mass, 1e-9);
    }
  }
}

TEST(Rpt, ReducesToPignisticAtZero) {
  const auto rpt = ranked_probability_transform(rps_transform(dna_bpa()), Dispersion(0.0));
  EXPECT_NEAR(rpt.at("D"), 0.2, 1e-12);
  EXPECT_NEAR(rpt.at("N"), 0.4, 1e-12);
  EXPECT_NEAR(rpt.at("A"), 0.4, 1e-12);

  std::mt19937_64 rng(77);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Frame f = numbered_frame(n);
    for (int trial = 0; trial < 200; ++trial) {
      const auto m = testing::random_mass(rng, f);
      const auto r = ranked_probability_transform(rps_transform(m), Dispersion(0.0));
      const auto p = pignistic(m);
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(r[i], p[i], 1e-12);
    }
  }
}

TEST(Rpt, Examples) {
  const Frame f = numbered_frame(3);
  for (double lambda : {0.0, 0.3, 0.67, 0.95}) {
    EXPECT_EQ(ranked_probability_transform(RandomPermutationSet::from_labels(f, {{{"x1"}, 1.0}}),
                                           Dispersion(lambda))[0],
              1.0);
  }
  const auto mu = RandomPermutationSet::from_labels(f, {{{"x1"}, 0.8}, {{"x1", "x2"}, 0.2}});
  const auto r = ranked_probability_transform(mu);
  EXPECT_NEAR(r[0], 0.9768, 1e-4);
  EXPECT_NEAR(r[1], 0.0232, 1e-4);
  // Scalar arithmetic check.
  const double rate = 0.67 / 0.33;
  const double w1 = std::exp(-rate), w2 = std::exp(-2 * rate);
  EXPECT_NEAR(r[0], 0.8 + 0.2 * w1 / (w1 + w2), 1e-12);
}

TEST(Rpt, RankOriginInvariance) {
  std::mt19937_64 rng(6);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto mu = testing::random_rps(rng, numbered_frame(n));
      const auto r = ranked_probability_transform(mu);
      for (double origin : {0.0, 1.0, 2.0}) {
        const auto want = testing::oracle_rpt(testing::plain(mu), n, 0.67, origin);
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(r[i], want[i], 1e-12);
      }
    }
  }
}

TEST(Rpt, MonotoneInDispersion) {
  const Frame f = numbered_frame(2);
  const auto mu = RandomPermutationSet::from_labels(f, {{{"x1", "x2"}, 1.0}});
  double previous = 0.0;
  for (int step = 0; step <= 9; ++step) {
    const double a = ranked_probability_transform(mu, Dispersion(step / 10.0))[0];
    EXPECT_GE(a, previous);
    previous = a;
  }
  EXPECT_NEAR(ranked_probability_transform(mu, Dispersion(0.0))[0], 0.5, 1e-15);
}

TEST(RptDistance, BasicProperties) {
  std::mt19937_64 rng(13);
  const Frame f = numbered_frame(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_rps(rng, f);
    const auto b = testing::random_rps(rng, f);
    const auto c = testing::random_rps(rng, f);
    EXPECT_EQ(rpt_distance(a, a), 0.0);
    const double ab = rpt_distance(a, b);
    EXPECT_NEAR(ab, rpt_distance(b, a), 1e-15);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_LE(ab, rpt_distance(a, c) + rpt_distance(c, b) + 1e-12);
  }
  EXPECT_THROW(rpt_distance(RandomPermutationSet::from_labels(numbered_frame(2), {{{"x1"}, 1.0}}),
                            RandomPermutationSet::from_labels(f, {{{"x1"}, 1.0}})),
               InvalidArgument);
}

RandomPermutationSet mixed_rps(std::vector<std::string> a) {
  std::vector<std::pair<std::vector<std::string>, double>> entries{{{"x1"}, 0.4}, {{"x1", "x2"}, 0.2}};
  bool merged = false;
  for (auto& e : entries) {
    if (e.first == a) {
      e.second += 0.4;
      merged = true;
    }
  }
  if (!merged) entries.emplace_back(std::move(a), 0.4);
  return RandomPermutationSet::from_labels(numbered_frame(3), entries);
}

TEST(RptDistance, SingletonReferenceEqualitiesAndGroupOrder) {
  const auto star = RandomPermutationSet::from_labels(numbered_frame(3), {{{"x1"}, 1.0}});
  auto d = [&](std::vector<std::string> a) { return rpt_distance(mixed_rps(std::move(a)), star); };
  EXPECT_NEAR(d({"x1", "x2", "x3"}), d({"x1", "x3", "x2"}), 1e-12);
  EXPECT_NEAR(d({"x2", "x1", "x3"}), d({"x3", "x1", "x2"}), 1e-12);
  EXPECT_NEAR(d({"x2", "x3", "x1"}), d({"x3", "x2", "x1"}), 1e-12);
  EXPECT_NEAR(d({"x2", "x3"}), d({"x3", "x2"}), 1e-12);
  EXPECT_LT(d({"x1", "x2", "x3"}), d({"x2", "x1", "x3"}));
  EXPECT_LT(d({"x2", "x1", "x3"}), d({"x2", "x3", "x1"}));
  EXPECT_LT(d({"x2", "x3", "x1"}), d({"x2", "x3"}));
}

}  // namespace
}  // namespace rps
