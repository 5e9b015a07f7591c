#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rps/frame.hpp"

namespace rps {

/// Dense row-major matrix of feature values. Missing cells hold NaN.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * cols_, cols_);
  }

  void append_row(std::span<const double> values);
  /// Copy of the listed rows, in the listed order.
  FeatureMatrix select_rows(std::span<const std::size_t> rows) const;

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline bool is_missing(double v) noexcept { return v != v; }
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

/// Labelled numeric dataset. Class indices refer to `classes`, whose labels
/// are sorted lexicographically.
struct Dataset {
  std::string name;
  std::vector<std::string> feature_names;
  FeatureMatrix features;
  std::vector<std::size_t> labels;
  Frame classes{"?"};
  std::string provenance;

  std::size_t samples() const noexcept { return features.rows(); }
  std::size_t feature_count() const noexcept { return features.cols(); }
  /// Number of samples per class index.
  std::vector<std::size_t> class_counts() const;
};

/// Selects the label column of a CSV file.
struct LabelColumn {
  std::optional<std::string> name;   ///< by header name
  std::optional<std::size_t> index;  ///< by zero-based position
  // Neither set: the last column.
};

/// Reads a CSV file with a header row. Empty cells and "?" are missing
/// values. Throws ParseError naming the row and column of ragged rows or
/// non-numeric feature cells, and for an empty file.
Dataset load_dataset(const std::filesystem::path& path, const LabelColumn& label = {});
Dataset parse_dataset(std::string_view csv_text, std::string name, const LabelColumn& label = {});

/// Writes features (17 significant digits) and the label as the last
/// column; load_dataset reads it back bit-exactly.
std::string format_dataset_csv(const Dataset& dataset);

/// 64-bit Mersenne Twister (std::mt19937_64, fully specified by the
/// standard) with an unbiased bounded draw, so shuffles reproduce across
/// platforms and standard libraries.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform integer in [0, bound) by rejection sampling.
  std::uint64_t below(std::uint64_t bound);
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Fold index in [0, k) for every sample.
struct FoldAssignment {
  std::size_t folds = 0;
  std::vector<std::size_t> fold_of;

  std::vector<std::size_t> test_indices(std::size_t fold) const;
  std::vector<std::size_t> train_indices(std::size_t fold) const;
};

/// Stratified k-fold assignment. Each class is shuffled independently and
/// dealt round-robin, continuing where the previous class stopped, so every
/// fold holds floor or ceil of each class's share. Throws InvalidArgument
/// when k < 2 or a class has fewer than k samples.
FoldAssignment kfold_split(std::span<const std::size_t> labels, std::size_t classes,
                           std::size_t k, std::uint64_t seed);
FoldAssignment kfold_split(const Dataset& dataset, std::size_t k, std::uint64_t seed);

}  // namespace rps
