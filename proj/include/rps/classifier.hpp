#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rps/dataset.hpp"
#include "rps/mass_function.hpp"
#include "rps/reliability.hpp"
#include "rps/rps.hpp"
#include "rps/transform.hpp"

namespace rps {

/// Per (feature, class) Gaussian parameters estimated from training data.
class GaussianClassModel {
 public:
  GaussianClassModel(Frame classes, std::size_t features);

  const Frame& classes() const noexcept { return classes_; }
  std::size_t feature_count() const noexcept { return features_; }
  std::size_t class_count() const noexcept { return classes_.size(); }

  double mean(std::size_t feature, std::size_t cls) const { return means_[at(feature, cls)]; }
  /// Standard deviation after the degenerate-variance floor.
  double sigma(std::size_t feature, std::size_t cls) const { return sigmas_[at(feature, cls)]; }
  /// Number of non-missing training values behind the estimate.
  std::size_t count(std::size_t feature, std::size_t cls) const { return counts_[at(feature, cls)]; }

 private:
  friend GaussianClassModel gaussian_train(const FeatureMatrix&, std::span<const std::size_t>,
                                           const Frame&);
  std::size_t at(std::size_t feature, std::size_t cls) const { return feature * class_count() + cls; }

  Frame classes_;
  std::size_t features_;
  std::vector<double> means_;
  std::vector<double> sigmas_;
  std::vector<std::size_t> counts_;
};

/// Class-conditional mean and (N-1)-denominator standard deviation of every
/// feature. Missing values are ignored. sigma is floored at 1e-6 times the
/// feature's global range (1e-6 when the range is zero); a class with fewer
/// than two values gets the floor.
GaussianClassModel gaussian_train(const FeatureMatrix& features, std::span<const std::size_t> labels,
                                  const Frame& classes);

/// Normalized class memberships of one feature value.
using MembershipVector = ProbabilityDistribution;

/// Gaussian density of `value` under every class of `feature`, normalized
/// across classes. Classes without training values have density zero. When
/// every density is below 1e-300 the memberships are uniform.
MembershipVector membership(const GaussianClassModel& model, double value, std::size_t feature);

/// Nested BPA from memberships: the class at position p of the ranking
/// (descending membership, ascending index on ties) receives
/// m({first p+1 classes}) = its membership.
MassFunction generate_bpa(const MembershipVector& memberships);

/// Per-feature BPAs of one sample; features with a missing value yield none.
std::vector<std::optional<MassFunction>> sample_bpas(const GaussianClassModel& model,
                                                     std::span<const double> sample);

struct PredictionRecord {
  std::size_t sample_id = 0;
  std::vector<std::optional<MassFunction>> bpas;
  std::optional<RandomPermutationSet> fused;
  std::optional<ProbabilityDistribution> rpt;
  std::optional<std::size_t> predicted;  ///< empty when fusion failed
  std::optional<std::size_t> truth;
  std::string failure;

  bool correct() const noexcept { return predicted && truth && *predicted == *truth; }
};

/// Trained model plus the per-feature reliabilities learned on the same data.
struct RpsClassifier {
  GaussianClassModel model;
  ReliabilityReport reliability;
  Dispersion dispersion;
};

/// Fits the Gaussian model and estimates feature reliabilities on the
/// training data.
RpsClassifier train_rps_classifier(const FeatureMatrix& features, std::span<const std::size_t> labels,
                                   const Frame& classes, Dispersion dispersion = {});

/// Test-phase pipeline: BPA per feature, RPS transformation, discounting
/// with the feature's reliability, left orthogonal sums in fusion order,
/// ranked probability transformation, argmax (lowest index on ties). A
/// total conflict leaves the prediction empty.
PredictionRecord predict(const GaussianClassModel& model, const ReliabilityReport& reliability,
                         std::span<const double> sample, Dispersion dispersion = {});
PredictionRecord predict(const RpsClassifier& classifier, std::span<const double> sample);

/// Baseline: undiscounted per-feature BPAs combined with Dempster's rule in
/// feature index order, pignistic argmax.
PredictionRecord predict_dempster(const GaussianClassModel& model, std::span<const double> sample);

enum class Method { kRps, kDempster };

struct CrossValidationOptions {
  std::size_t folds = 5;
  std::uint64_t seed = 42;
  Dispersion dispersion{};
  Method method = Method::kRps;
};

struct AccuracyReport {
  std::string dataset;
  std::size_t folds = 0;
  std::uint64_t seed = 0;
  double lambda = Dispersion::kDefault;
  std::vector<double> per_fold_accuracy;
  double mean = 0.0;
  double std = 0.0;  ///< population standard deviation of the fold accuracies
  std::vector<std::vector<double>> per_source_reliability;

  friend bool operator==(const AccuracyReport&, const AccuracyReport&) = default;
};

/// Stratified k-fold cross-validation of the whole pipeline.
AccuracyReport cross_validate(const Dataset& dataset, const CrossValidationOptions& options = {});

}  // namespace rps
