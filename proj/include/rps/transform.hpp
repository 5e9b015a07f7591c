#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rps/mass_function.hpp"
#include "rps/rps.hpp"

namespace rps {

/// Slot list beta_1..beta_n of a permutation event over an n-label frame:
/// the event's labels in order, then empty slots.
using InternalOrderRanking = std::vector<std::optional<std::size_t>>;

InternalOrderRanking internal_order_ranking(const PermutationEvent& event, const Frame& frame);

/// Dispersion factor lambda of the ranked probability transformation,
/// restricted to [0, 1).
class Dispersion {
 public:
  static constexpr double kDefault = 0.67;

  constexpr Dispersion() = default;
  /// Throws InvalidArgument unless 0 <= lambda < 1.
  explicit Dispersion(double lambda);

  constexpr double lambda() const noexcept { return lambda_; }
  /// lambda / (1 - lambda): decay rate of the rank weights.
  constexpr double rate() const noexcept { return lambda_ / (1.0 - lambda_); }

 private:
  double lambda_ = kDefault;
};

/// exp(-rate * rank). Only ratios of weights matter.
double rank_weight(double rank, Dispersion dispersion);

/// Ordered support degree: the probability of drawing the event's labels
/// in order by sequential sampling without replacement, with weights taken
/// from `betp`. Once the remaining weight is zero the remaining slots are
/// filled uniformly, so the supports of all orderings of a set still sum to
/// one.
double ordered_support(const PermutationEvent& event, const ProbabilityDistribution& betp);

/// Splits every focal set's mass over its orderings in proportion to their
/// ordered support under the pignistic probabilities of `m`.
RandomPermutationSet rps_transform(const MassFunction& m);

/// Ranked probability transformation. Each event's mass is shared among
/// its elements with weights exp(-lambda/(1-lambda) * rank), rank being the
/// 1-based position. lambda = 0 gives the pignistic transformation of the
/// order-erased mass function.
ProbabilityDistribution ranked_probability_transform(const RandomPermutationSet& mu,
                                                     Dispersion dispersion = {});

/// Total-variation distance (half the L1 norm) between the ranked
/// probability transforms of two RPSs; lies in [0, 1].
double rpt_distance(const RandomPermutationSet& mu1, const RandomPermutationSet& mu2,
                    Dispersion dispersion = {});

}  // namespace rps
