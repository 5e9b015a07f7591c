#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rps/mass_function.hpp"
#include "rps/permutation.hpp"

namespace rps {

/// Combination fails when 1 - K falls below this.
inline constexpr double kConflictEpsilon = 1e-12;

/// Random permutation set: a permutation mass function over the
/// permutation event space of a frame.
///
/// Entries are sorted in canonical event order; the empty event and
/// sub-threshold masses are never stored.
class RandomPermutationSet {
 public:
  using Entry = std::pair<PermutationEvent, double>;

  /// Validating constructor for external input; same rules as
  /// MassFunction (no empty or duplicate events, labels inside the frame,
  /// masses in [0,1], unit total).
  RandomPermutationSet(Frame frame, std::vector<Entry> entries);

  static RandomPermutationSet from_labels(
      Frame frame, const std::vector<std::pair<std::vector<std::string>, double>>& entries);

  /// Accumulates duplicates, prunes, and rescales to unit total.
  static RandomPermutationSet normalized(Frame frame, std::vector<Entry> raw);

  const Frame& frame() const noexcept { return frame_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Permutation mass of `event`, zero when absent.
  double mass(const PermutationEvent& event) const noexcept;

  /// Erases the internal order: the mass function m(S) = sum of mu over the
  /// orderings of S.
  MassFunction order_erased() const;

  friend bool operator==(const RandomPermutationSet&, const RandomPermutationSet&) = default;

 private:
  struct Trusted {};
  RandomPermutationSet(Trusted, Frame frame, std::vector<Entry> entries)
      : frame_(std::move(frame)), entries_(std::move(entries)) {}

  Frame frame_;
  std::vector<Entry> entries_;
};

/// Left orthogonal sum: conjunctive combination through left intersection,
/// so the first operand's order survives. Throws ConflictError when the
/// left conflict is total.
RandomPermutationSet left_orthogonal_sum(const RandomPermutationSet& mu1,
                                         const RandomPermutationSet& mu2);

/// Right orthogonal sum: as above through right intersection, so the
/// second operand's order survives.
RandomPermutationSet right_orthogonal_sum(const RandomPermutationSet& mu1,
                                          const RandomPermutationSet& mu2);

/// Mass sent to the empty event by the left (resp. right) intersection.
double left_conflict(const RandomPermutationSet& mu1, const RandomPermutationSet& mu2);
double right_conflict(const RandomPermutationSet& mu1, const RandomPermutationSet& mu2);

/// Ordered probability transformation: the mass of a multi-element event is
/// split evenly over all of its elements except the last one.
ProbabilityDistribution opt(const RandomPermutationSet& mu);

/// RPS discounting with reliability `alpha` in [0,1]. Singleton events are
/// scaled by alpha; the removed mass 1 - alpha is spread evenly over every
/// multi-element event of the permutation event space, including those
/// outside the support. Requires 2 <= |frame| <= kMaxEventLength.
RandomPermutationSet discount_rps(const RandomPermutationSet& mu, double alpha);

}  // namespace rps
