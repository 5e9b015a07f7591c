#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rps/frame.hpp"

namespace rps {

/// Masses at or below this are dropped after every operation.
inline constexpr double kPruneThreshold = 1e-12;
/// Total mass within this distance of one is accepted as is.
inline constexpr double kSumTolerance = 1e-9;
/// Total mass within this distance of one is silently renormalized; beyond
/// it construction fails.
inline constexpr double kRenormalizeTolerance = 1e-6;

/// Probability distribution over the labels of a frame.
class ProbabilityDistribution {
 public:
  /// Validates non-negativity and normalization (renormalizing within
  /// kRenormalizeTolerance).
  ProbabilityDistribution(Frame frame, std::vector<double> probs);

  const Frame& frame() const noexcept { return frame_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t index) const { return probs_.at(index); }
  double at(std::string_view label) const { return probs_[frame_.index_of(label)]; }
  std::span<const double> values() const noexcept { return probs_; }

  /// Index of the largest probability; the lowest index wins ties.
  std::size_t argmax() const noexcept;

 private:
  Frame frame_;
  std::vector<double> probs_;
};

/// Basic probability assignment over the non-empty subsets of a frame.
///
/// Entries are kept sorted in canonical FocalSet order. Zero and
/// sub-threshold masses are never stored.
class MassFunction {
 public:
  using Entry = std::pair<FocalSet, double>;

  /// Validating constructor for external input. Rejects empty focal sets,
  /// members outside the frame, duplicate focal sets, masses outside
  /// [0,1], and totals further than kRenormalizeTolerance from one.
  MassFunction(Frame frame, std::vector<Entry> entries);

  /// Convenience form keyed by label names.
  static MassFunction from_labels(
      Frame frame, const std::vector<std::pair<std::vector<std::string>, double>>& entries);

  /// m(frame) = 1.
  static MassFunction vacuous(Frame frame);

  /// Builds the result of an operation: accumulates duplicates, prunes
  /// masses at or below kPruneThreshold and rescales to unit total.
  /// Throws InvariantError when nothing survives.
  static MassFunction normalized(Frame frame, std::vector<Entry> raw);

  const Frame& frame() const noexcept { return frame_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t focal_count() const noexcept { return entries_.size(); }

  /// Mass of `set`, zero when not focal.
  double mass(FocalSet set) const noexcept;

  friend bool operator==(const MassFunction&, const MassFunction&) = default;

 private:
  struct Trusted {};
  MassFunction(Trusted, Frame frame, std::vector<Entry> entries)
      : frame_(std::move(frame)), entries_(std::move(entries)) {}

  Frame frame_;
  std::vector<Entry> entries_;
};

}  // namespace rps
