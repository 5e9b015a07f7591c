#include "rps/transform.hpp"

#include <array>
#include <cmath>

#include "rps/dst.hpp"
#include "rps/error.hpp"

namespace rps {

InternalOrderRanking internal_order_ranking(const PermutationEvent& event, const Frame& frame) {
  if (event.size() > frame.size() || !event.elements().is_subset_of(FocalSet::full(frame.size()))) {
    throw InvalidArgument("permutation event is not defined on the frame");
  }
  InternalOrderRanking slots(frame.size());
  for (std::size_t i = 0; i < event.size(); ++i) slots[i] = event[i];
  return slots;
}

Dispersion::Dispersion(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw InvalidArgument("dispersion lambda " + std::to_string(lambda) + " outside [0, 1)");
  }
}

double rank_weight(double rank, Dispersion dispersion) {
  return std::exp(-dispersion.rate() * rank);
}

double ordered_support(const PermutationEvent& event, const ProbabilityDistribution& betp) {
  const std::size_t len = event.size();
  std::array<double, kMaxEventLength + 1> suffix{};
  for (std::size_t i = len; i-- > 0;) suffix[i] = suffix[i + 1] + betp[event[i]];

  double support = 1.0;
  for (std::size_t i = 0; i < len; ++i) {
    if (!(suffix[i] > 0.0)) {
      // No weight left: the remaining slots are filled uniformly.
      for (std::size_t rest = len - i; rest > 1; --rest) support /= static_cast<double>(rest);
      break;
    }
    support *= betp[event[i]] / suffix[i];
  }
  return support;
}

RandomPermutationSet rps_transform(const MassFunction& m) {
  const ProbabilityDistribution betp = pignistic(m);
  std::vector<RandomPermutationSet::Entry> out;
  for (const auto& [set, mass] : m.entries()) {
    for (const auto& event : permutations_of(set)) {
      out.emplace_back(event, mass * ordered_support(event, betp));
    }
  }
  return RandomPermutationSet::normalized(m.frame(), std::move(out));
}

ProbabilityDistribution ranked_probability_transform(const RandomPermutationSet& mu,
                                                     Dispersion dispersion) {
  // Weights relative to rank 1: exp(-rate * (r - 1)). The common factor
  // cancels and rank 1 never underflows.
  std::array<double, kMaxEventLength> weights{};
  for (std::size_t r = 0; r < kMaxEventLength; ++r) {
    weights[r] = rank_weight(static_cast<double>(r), dispersion);
  }
  std::vector<double> probs(mu.frame().size(), 0.0);
  for (const auto& [event, mass] : mu.entries()) {
    double total = 0.0;
    for (std::size_t r = 0; r < event.size(); ++r) total += weights[r];
    for (std::size_t r = 0; r < event.size(); ++r) probs[event[r]] += mass * weights[r] / total;
  }
  double sum = 0.0;
  for (double p : probs) sum += p;
  for (double& p : probs) p /= sum;
  return ProbabilityDistribution(mu.frame(), std::move(probs));
}

double rpt_distance(const RandomPermutationSet& mu1, const RandomPermutationSet& mu2,
                    Dispersion dispersion) {
  require_same_frame(mu1.frame(), mu2.frame(), "rpt_distance");
  const auto p = ranked_probability_transform(mu1, dispersion);
  const auto q = ranked_probability_transform(mu2, dispersion);
  double l1 = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) l1 += std::abs(p[i] - q[i]);
  return 0.5 * l1;
}

}  // namespace rps
