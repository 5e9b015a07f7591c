#include "rps/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "rps/dst.hpp"
#include "rps/error.hpp"

namespace rps {

namespace {

constexpr double kSigmaFloorScale = 1e-6;
constexpr double kDensityUnderflow = 1e-300;

}  // namespace

GaussianClassModel::GaussianClassModel(Frame classes, std::size_t features)
    : classes_(std::move(classes)),
      features_(features),
      means_(features * classes_.size(), std::numeric_limits<double>::quiet_NaN()),
      sigmas_(features * classes_.size(), 0.0),
      counts_(features * classes_.size(), 0) {}

GaussianClassModel gaussian_train(const FeatureMatrix& features, std::span<const std::size_t> labels,
                                  const Frame& classes) {
  if (features.rows() != labels.size()) {
    throw InvalidArgument("gaussian_train: " + std::to_string(features.rows()) + " rows but " +
                          std::to_string(labels.size()) + " labels");
  }
  if (features.rows() == 0) throw InvalidArgument("gaussian_train: no training samples");
  const std::size_t n_classes = classes.size();
  for (auto label : labels) {
    if (label >= n_classes) throw InvalidArgument("gaussian_train: label index outside frame");
  }

  GaussianClassModel model(classes, features.cols());
  for (std::size_t f = 0; f < features.cols(); ++f) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    std::vector<double> sum(n_classes, 0.0);
    std::vector<std::size_t> count(n_classes, 0);
    for (std::size_t i = 0; i < features.rows(); ++i) {
      const double v = features(i, f);
      if (is_missing(v)) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum[labels[i]] += v;
      ++count[labels[i]];
    }
    const double range = hi > lo ? hi - lo : 1.0;
    const double floor = kSigmaFloorScale * range;

    std::vector<double> sq(n_classes, 0.0);
    for (std::size_t c = 0; c < n_classes; ++c) {
      if (count[c] > 0) model.means_[model.at(f, c)] = sum[c] / static_cast<double>(count[c]);
    }
    for (std::size_t i = 0; i < features.rows(); ++i) {
      const double v = features(i, f);
      if (is_missing(v)) continue;
      const double d = v - model.means_[model.at(f, labels[i])];
      sq[labels[i]] += d * d;
    }
    for (std::size_t c = 0; c < n_classes; ++c) {
      const double sd =
          count[c] >= 2 ? std::sqrt(sq[c] / static_cast<double>(count[c] - 1)) : 0.0;
      model.sigmas_[model.at(f, c)] = std::max(sd, floor);
      model.counts_[model.at(f, c)] = count[c];
    }
  }
  return model;
}

MembershipVector membership(const GaussianClassModel& model, double value, std::size_t feature) {
  if (feature >= model.feature_count()) throw InvalidArgument("membership: feature index out of range");
  if (!std::isfinite(value)) throw InvalidArgument("membership: feature value must be finite");
  const std::size_t n = model.class_count();
  std::vector<double> density(n, 0.0);
  bool informative = false;
  for (std::size_t c = 0; c < n; ++c) {
    if (model.count(feature, c) == 0) continue;
    const double sigma = model.sigma(feature, c);
    const double z = (value - model.mean(feature, c)) / sigma;
    density[c] = std::exp(-0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * sigma);
    if (density[c] >= kDensityUnderflow) informative = true;
  }
  if (!informative) {
    std::fill(density.begin(), density.end(), 1.0 / static_cast<double>(n));
    return MembershipVector(model.classes(), std::move(density));
  }
  const double total = std::accumulate(density.begin(), density.end(), 0.0);
  for (double& d : density) d /= total;
  return MembershipVector(model.classes(), std::move(density));
}

MassFunction generate_bpa(const MembershipVector& memberships) {
  const std::size_t n = memberships.size();
  std::vector<std::size_t> ranking(n);
  std::iota(ranking.begin(), ranking.end(), std::size_t{0});
  std::stable_sort(ranking.begin(), ranking.end(), [&](std::size_t a, std::size_t b) {
    return memberships[a] > memberships[b];
  });
  std::vector<MassFunction::Entry> entries;
  entries.reserve(n);
  FocalSet nested;
  for (std::size_t cls : ranking) {
    nested = nested | FocalSet::singleton(cls);
    entries.emplace_back(nested, memberships[cls]);
  }
  return MassFunction::normalized(memberships.frame(), std::move(entries));
}

std::vector<std::optional<MassFunction>> sample_bpas(const GaussianClassModel& model,
                                                     std::span<const double> sample) {
  if (sample.size() != model.feature_count()) {
    throw InvalidArgument("sample has " + std::to_string(sample.size()) + " features, model expects " +
                          std::to_string(model.feature_count()));
  }
  std::vector<std::optional<MassFunction>> out(sample.size());
  for (std::size_t f = 0; f < sample.size(); ++f) {
    if (!is_missing(sample[f])) out[f] = generate_bpa(membership(model, sample[f], f));
  }
  return out;
}

RpsClassifier train_rps_classifier(const FeatureMatrix& features, std::span<const std::size_t> labels,
                                   const Frame& classes, Dispersion dispersion) {
  if (classes.size() < 2) throw InvalidArgument("classification needs at least two classes");
  GaussianClassModel model = gaussian_train(features, labels, classes);
  std::vector<SourceEvidence> sources(features.cols(), SourceEvidence(features.rows()));
  for (std::size_t j = 0; j < features.rows(); ++j) {
    auto bpas = sample_bpas(model, features.row(j));
    for (std::size_t k = 0; k < bpas.size(); ++k) sources[k][j] = std::move(bpas[k]);
  }
  ReliabilityReport reliability = compute_reliabilities(sources, labels, dispersion);
  return RpsClassifier{std::move(model), std::move(reliability), dispersion};
}

PredictionRecord predict(const GaussianClassModel& model, const ReliabilityReport& reliability,
                         std::span<const double> sample, Dispersion dispersion) {
  if (reliability.reliability.size() != model.feature_count() ||
      reliability.fusion_order.size() != model.feature_count()) {
    throw InvalidArgument("predict: reliability report does not cover every feature");
  }
  PredictionRecord record;
  record.bpas = sample_bpas(model, sample);

  std::optional<RandomPermutationSet> fused;
  try {
    for (std::size_t k : reliability.fusion_order) {
      if (!record.bpas[k]) continue;
      auto source = discount_rps(rps_transform(*record.bpas[k]), reliability.reliability[k]);
      fused = fused ? left_orthogonal_sum(*fused, source) : std::move(source);
    }
  } catch (const ConflictError& e) {
    record.failure = e.what();
    return record;
  }
  if (!fused) {
    record.failure = "no feature of the sample is usable";
    return record;
  }
  record.rpt = ranked_probability_transform(*fused, dispersion);
  record.predicted = record.rpt->argmax();
  record.fused = std::move(fused);
  return record;
}

PredictionRecord predict(const RpsClassifier& classifier, std::span<const double> sample) {
  return predict(classifier.model, classifier.reliability, sample, classifier.dispersion);
}

PredictionRecord predict_dempster(const GaussianClassModel& model, std::span<const double> sample) {
  PredictionRecord record;
  record.bpas = sample_bpas(model, sample);
  std::optional<MassFunction> fused;
  try {
    for (const auto& bpa : record.bpas) {
      if (!bpa) continue;
      fused = fused ? dempster_combine(*fused, *bpa) : *bpa;
    }
  } catch (const ConflictError& e) {
    record.failure = e.what();
    return record;
  }
  if (!fused) {
    record.failure = "no feature of the sample is usable";
    return record;
  }
  record.rpt = pignistic(*fused);
  record.predicted = record.rpt->argmax();
  return record;
}

AccuracyReport cross_validate(const Dataset& dataset, const CrossValidationOptions& options) {
  if (dataset.classes.size() < 2) throw InvalidArgument("cross_validate: dataset has a single class");
  const FoldAssignment folds = kfold_split(dataset, options.folds, options.seed);

  AccuracyReport report;
  report.dataset = dataset.name;
  report.folds = options.folds;
  report.seed = options.seed;
  report.lambda = options.dispersion.lambda();

  for (std::size_t fold = 0; fold < options.folds; ++fold) {
    const auto train = folds.train_indices(fold);
    const auto test = folds.test_indices(fold);
    const FeatureMatrix train_x = dataset.features.select_rows(train);
    std::vector<std::size_t> train_y;
    train_y.reserve(train.size());
    for (auto i : train) train_y.push_back(dataset.labels[i]);

    std::size_t correct = 0;
    if (options.method == Method::kRps) {
      const RpsClassifier clf =
          train_rps_classifier(train_x, train_y, dataset.classes, options.dispersion);
      for (auto i : test) {
        const auto rec = predict(clf, dataset.features.row(i));
        if (rec.predicted && *rec.predicted == dataset.labels[i]) ++correct;
      }
      report.per_source_reliability.push_back(clf.reliability.reliability);
    } else {
      const GaussianClassModel model = gaussian_train(train_x, train_y, dataset.classes);
      for (auto i : test) {
        const auto rec = predict_dempster(model, dataset.features.row(i));
        if (rec.predicted && *rec.predicted == dataset.labels[i]) ++correct;
      }
    }
    report.per_fold_accuracy.push_back(static_cast<double>(correct) /
                                       static_cast<double>(test.size()));
  }

  const double k = static_cast<double>(report.per_fold_accuracy.size());
  report.mean = std::accumulate(report.per_fold_accuracy.begin(), report.per_fold_accuracy.end(), 0.0) / k;
  double var = 0.0;
  for (double a : report.per_fold_accuracy) var += (a - report.mean) * (a - report.mean);
  report.std = std::sqrt(var / k);
  return report;
}

}  // namespace rps
