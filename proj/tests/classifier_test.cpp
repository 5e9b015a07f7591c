#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include "rps/classifier.hpp"
#include "rps/dst.hpp"
#include "rps/error.hpp"
#include "test_support.hpp"

namespace rps {
namespace {

using testing::numbered_frame;

const Frame kTwo{"a", "b"};

FeatureMatrix column(std::initializer_list<double> values) {
  FeatureMatrix m;
  for (double v : values) m.append_row(std::vector<double>{v});
  return m;
}

TEST(GaussianTrain, MeanAndSampleSigma) {
  const auto x = column({1, 2, 3, 10, 10, 10});
  const std::vector<std::size_t> y{0, 0, 0, 1, 1, 1};
  const auto model = gaussian_train(x, y, kTwo);
  EXPECT_DOUBLE_EQ(model.mean(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(model.sigma(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(model.mean(0, 1), 10.0);
  // Constant class values: floored at 1e-6 of the feature range (9).
  EXPECT_DOUBLE_EQ(model.sigma(0, 1), 9e-6);
  EXPECT_EQ(model.count(0, 0), 3U);
}

TEST(GaussianTrain, ConstantFeatureFloor) {
  const auto x = column({5, 5, 5, 5});
  const std::vector<std::size_t> y{0, 0, 1, 1};
  const auto model = gaussian_train(x, y, kTwo);
  EXPECT_DOUBLE_EQ(model.mean(0, 0), 5.0);
  EXPECT_DOUBLE_EQ(model.sigma(0, 0), 1e-6);
  const auto mem = membership(model, 5.0, 0);
  EXPECT_NEAR(mem[0], 0.5, 1e-15);
}

TEST(GaussianTrain, Errors) {
  const auto x = column({1, 2});
  EXPECT_THROW(gaussian_train(x, std::vector<std::size_t>{0}, kTwo), InvalidArgument);
  EXPECT_THROW(gaussian_train(x, std::vector<std::size_t>{0, 2}, kTwo), InvalidArgument);
  EXPECT_THROW(gaussian_train(FeatureMatrix{}, std::vector<std::size_t>{}, kTwo), InvalidArgument);
}

TEST(Membership, DensityRatio) {
  const auto x = column({-1, 0, 1, 0, 1, 2});
  const std::vector<std::size_t> y{0, 0, 0, 1, 1, 1};
  const auto model = gaussian_train(x, y, kTwo);
  const double sigma = model.sigma(0, 0);
  const auto mem = membership(model, 0.0, 0);
  const double ratio = std::exp(-0.5 / (sigma * sigma));
  EXPECT_NEAR(mem[0], 1.0 / (1.0 + ratio), 1e-12);
  EXPECT_GT(mem[0], mem[1]);
  // Equidistant value.
  EXPECT_NEAR(membership(model, 0.5, 0)[0], 0.5, 1e-12);
  EXPECT_THROW(membership(model, std::nan(""), 0), InvalidArgument);
  EXPECT_THROW(membership(model, 0.0, 1), InvalidArgument);
}

TEST(Membership, IdenticalClassesAreUniform) {
  const auto x = column({1, 2, 3, 1, 2, 3});
  const std::vector<std::size_t> y{0, 0, 0, 1, 1, 1};
  const auto mem = membership(gaussian_train(x, y, kTwo), 7.5, 0);
  EXPECT_NEAR(mem[0], 0.5, 1e-15);
}

TEST(Membership, UnderflowFallsBackToUniform) {
  const auto x = column({0, 0.001, 1000, 1000.001});
  const std::vector<std::size_t> y{0, 0, 1, 1};
  const auto mem = membership(gaussian_train(x, y, kTwo), 500.0, 0);
  EXPECT_EQ(mem[0], 0.5);
  EXPECT_EQ(mem[1], 0.5);
}

TEST(GenerateBpa, Examples) {
  const Frame f = numbered_frame(3);
  const auto m = generate_bpa(ProbabilityDistribution(f, {0.5, 0.3, 0.2}));
  EXPECT_NEAR(m.mass(FocalSet{0}), 0.5, 1e-15);
  EXPECT_NEAR(m.mass(FocalSet{0, 1}), 0.3, 1e-15);
  EXPECT_NEAR(m.mass(FocalSet{0, 1, 2}), 0.2, 1e-15);

  const auto certain = generate_bpa(ProbabilityDistribution(kTwo, {1.0, 0.0}));
  EXPECT_EQ(certain.focal_count(), 1U);
  EXPECT_EQ(certain.mass(FocalSet{0}), 1.0);

  const auto tie = generate_bpa(ProbabilityDistribution(kTwo, {0.5, 0.5}));
  EXPECT_EQ(tie.mass(FocalSet{0}), 0.5);
  EXPECT_EQ(tie.mass(FocalSet{0, 1}), 0.5);

  const auto reversed = generate_bpa(ProbabilityDistribution(f, {0.2, 0.3, 0.5}));
  EXPECT_NEAR(reversed.mass(FocalSet{2}), 0.5, 1e-15);
  EXPECT_NEAR(reversed.mass(FocalSet{1, 2}), 0.3, 1e-15);
}

TEST(GenerateBpa, NestedFocals) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> p(n);
      double total = 0.0;
      for (auto& x : p) total += (x = u(rng));
      for (auto& x : p) x /= total;
      const auto m = generate_bpa(ProbabilityDistribution(numbered_frame(n), p));
      double sum = 0.0;
      std::vector<FocalSet> sets;
      for (const auto& [s, v] : m.entries()) {
        sets.push_back(s);
        sum += v;
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
      // Canonical order sorts by size, so each set must contain the previous.
      for (std::size_t i = 1; i < sets.size(); ++i) EXPECT_TRUE(sets[i - 1].is_subset_of(sets[i]));
    }
  }
}

/// Two well separated classes on two features.
struct TwoFeatureFixture {
  FeatureMatrix x;
  std::vector<std::size_t> y;
  TwoFeatureFixture() {
    for (int i = 0; i < 10; ++i) {
      x.append_row(std::vector<double>{0.0 + 0.01 * i, 0.0 + 0.01 * i});
      y.push_back(0);
      x.append_row(std::vector<double>{5.0 + 0.01 * i, 5.0 + 0.01 * i});
      y.push_back(1);
    }
  }
};

TEST(Predict, SingleFeatureIdentity) {
  const auto x = column({0, 0.1, 0.2, 5, 5.1, 5.2});
  const std::vector<std::size_t> y{0, 0, 0, 1, 1, 1};
  const auto clf = train_rps_classifier(x, y, kTwo);
  EXPECT_EQ(clf.reliability.reliability, (std::vector<double>{1}));
  const auto rec = predict(clf, std::vector<double>{5.1});
  ASSERT_TRUE(rec.predicted);
  EXPECT_EQ(*rec.predicted, 1U);
  EXPECT_TRUE(rec.failure.empty());
}

TEST(Predict, AgreeingFeatures) {
  const TwoFeatureFixture data;
  const auto model = gaussian_train(data.x, data.y, kTwo);
  for (const auto& order : {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{1, 0}}) {
    const ReliabilityReport rel{{0, 0}, {1, 1}, order};
    const auto rec = predict(model, rel, std::vector<double>{5.05, 5.05});
    ASSERT_TRUE(rec.predicted);
    EXPECT_EQ(*rec.predicted, 1U);
  }
}

TEST(Predict, UnreliableSourceIsFlattened) {
  const TwoFeatureFixture data;
  const auto model = gaussian_train(data.x, data.y, kTwo);
  const ReliabilityReport rel{{1, 0}, {1, 0}, {0, 1}};
  const auto rec = predict(model, rel, std::vector<double>{0.05, 5.05});
  ASSERT_TRUE(rec.predicted);
  EXPECT_EQ(*rec.predicted, 0U);
  // Reliability 0 turns the second source into the uniform RPS over (a,b)
  // and (b,a); left intersection keeps the first source's singleton.
  EXPECT_NEAR(rec.rpt->values()[0], 1.0, 1e-9);
}

TEST(Predict, TotalConflictMarksFailure) {
  const TwoFeatureFixture data;
  const auto model = gaussian_train(data.x, data.y, kTwo);
  const ReliabilityReport rel{{0, 0}, {1, 1}, {0, 1}};
  const auto rec = predict(model, rel, std::vector<double>{0.05, 5.05});
  EXPECT_FALSE(rec.predicted);
  EXPECT_FALSE(rec.failure.empty());
  EXPECT_FALSE(rec.correct());
}

TEST(Predict, MissingFeatureIsSkipped) {
  const TwoFeatureFixture data;
  const auto model = gaussian_train(data.x, data.y, kTwo);
  const ReliabilityReport rel{{0, 0}, {1, 1}, {0, 1}};
  const auto rec = predict(model, rel, std::vector<double>{kMissing, 5.05});
  ASSERT_TRUE(rec.predicted);
  EXPECT_EQ(*rec.predicted, 1U);
  EXPECT_FALSE(rec.bpas[0]);
  const auto none = predict(model, rel, std::vector<double>{kMissing, kMissing});
  EXPECT_FALSE(none.predicted);
}

TEST(Predict, ShapeErrors) {
  const TwoFeatureFixture data;
  const auto model = gaussian_train(data.x, data.y, kTwo);
  const ReliabilityReport rel{{0}, {1}, {0}};
  EXPECT_THROW(predict(model, rel, std::vector<double>{0, 0}), InvalidArgument);
  const ReliabilityReport ok{{0, 0}, {1, 1}, {0, 1}};
  EXPECT_THROW(predict(model, ok, std::vector<double>{0}), InvalidArgument);
}

TEST(Predict, SingletonSourcesMatchDempster) {
  // With every reliability 1 and singleton-only BPAs, the RPS pipeline and
  // Dempster + pignistic decide identically.
  std::mt19937_64 rng(44);
  for (std::size_t n = 2; n <= 3; ++n) {
    const Frame f = numbered_frame(n);
    for (int trial = 0; trial < 300; ++trial) {
      const auto m1 = testing::random_singleton_mass(rng, f);
      const auto m2 = testing::random_singleton_mass(rng, f);
      if (dempster_conflict(m1, m2) > 1.0 - 1e-9) continue;
      const auto ds = pignistic(dempster_combine(m1, m2));
      const auto fused = left_orthogonal_sum(discount_rps(rps_transform(m1), 1.0),
                                             discount_rps(rps_transform(m2), 1.0));
      const auto rpt = ranked_probability_transform(fused);
      EXPECT_EQ(rpt.argmax(), ds.argmax());
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(rpt[i], ds[i], 1e-12);
    }
  }
}

Dataset separable_dataset() {
  std::string csv = "f1,f2,label\n";
  for (int i = 0; i < 30; ++i) {
    csv += std::to_string(0.1 * i) + "," + std::to_string(10 + 0.1 * i) + ",low\n";
    csv += std::to_string(100 + 0.1 * i) + "," + std::to_string(50 + 0.1 * i) + ",high\n";
  }
  return parse_dataset(csv, "separable");
}

TEST(CrossValidate, SeparableIsPerfect) {
  const auto report = cross_validate(separable_dataset());
  EXPECT_EQ(report.mean, 1.0);
  EXPECT_EQ(report.std, 0.0);
  EXPECT_EQ(report.per_fold_accuracy.size(), 5U);
  EXPECT_EQ(report.per_source_reliability.size(), 5U);
  EXPECT_EQ(report.dataset, "separable");
  CrossValidationOptions dempster;
  dempster.method = Method::kDempster;
  EXPECT_EQ(cross_validate(separable_dataset(), dempster).mean, 1.0);
}

TEST(CrossValidate, DeterministicAndSeedSensitive) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::string csv = "a,b,c,label\n";
  for (int i = 0; i < 90; ++i) {
    const int cls = i % 3;
    csv += std::to_string(cls + noise(rng)) + "," + std::to_string(-cls + noise(rng)) + "," +
           std::to_string(noise(rng)) + ",c" + std::to_string(cls) + "\n";
  }
  const auto ds = parse_dataset(csv, "noisy");
  CrossValidationOptions opts;
  opts.seed = 7;
  const auto a = cross_validate(ds, opts);
  const auto b = cross_validate(ds, opts);
  EXPECT_EQ(a, b);
  EXPECT_GT(a.mean, 0.4);
  EXPECT_LE(a.mean, 1.0);
  double mean = 0.0;
  for (double v : a.per_fold_accuracy) mean += v;
  EXPECT_NEAR(a.mean, mean / 5.0, 1e-15);
  for (const auto& fold : a.per_source_reliability) {
    ASSERT_EQ(fold.size(), 3U);
    EXPECT_EQ(*std::max_element(fold.begin(), fold.end()), 1.0);
  }
}

TEST(CrossValidate, Errors) {
  const auto single = parse_dataset("x,label\n1,a\n2,a\n3,a\n4,a\n5,a\n", "one");
  EXPECT_THROW(cross_validate(single), InvalidArgument);
  const auto small = parse_dataset("x,label\n1,a\n2,a\n3,b\n4,b\n5,b\n", "small");
  EXPECT_THROW(cross_validate(small), InvalidArgument);
}

TEST(CrossValidate, IrisWhenBundled) {
  const std::filesystem::path path = std::filesystem::path(RPS_DATASET_DIR) / "iris.csv";
  if (!std::filesystem::exists(path)) GTEST_SKIP() << "iris.csv not bundled";
  const auto ds = load_dataset(path);
  EXPECT_EQ(ds.samples(), 150U);
  EXPECT_EQ(ds.feature_count(), 4U);
  EXPECT_EQ(ds.classes.size(), 3U);
  EXPECT_GE(cross_validate(ds).mean, 0.92);
}

}  // namespace
}  // namespace rps
