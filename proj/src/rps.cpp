#include "rps/rps.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "rps/error.hpp"

namespace rps {

RandomPermutationSet::RandomPermutationSet(Frame frame, std::vector<Entry> entries)
    : frame_(std::move(frame)) {
  const FocalSet universe = FocalSet::full(frame_.size());
  for (const auto& [event, mass] : entries) {
    if (event.empty()) throw InvariantError("the empty permutation event cannot carry mass");
    if (!event.elements().is_subset_of(universe)) {
      throw InvariantError("permutation event has labels outside the frame");
    }
    if (!std::isfinite(mass) || mass < 0.0 || mass > 1.0 + kRenormalizeTolerance) {
      throw InvariantError("permutation mass " + std::to_string(mass) + " is outside [0, 1]");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].first == entries[i - 1].first) throw InvariantError("duplicate permutation event");
  }
  std::erase_if(entries, [](const Entry& e) { return e.second <= kPruneThreshold; });
  if (entries.empty()) throw InvariantError("random permutation set has no permutation event");

  double total = 0.0;
  for (const auto& e : entries) total += e.second;
  if (std::abs(total - 1.0) > kRenormalizeTolerance) {
    throw InvariantError("permutation masses sum to " + std::to_string(total) + ", expected 1");
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    for (auto& e : entries) e.second /= total;
  }
  entries_ = std::move(entries);
}

RandomPermutationSet RandomPermutationSet::from_labels(
    Frame frame, const std::vector<std::pair<std::vector<std::string>, double>>& entries) {
  std::vector<Entry> converted;
  converted.reserve(entries.size());
  for (const auto& [labels, mass] : entries) {
    std::vector<std::size_t> sequence;
    sequence.reserve(labels.size());
    for (const auto& label : labels) sequence.push_back(frame.index_of(label));
    converted.emplace_back(PermutationEvent(std::span<const std::size_t>(sequence)), mass);
  }
  return RandomPermutationSet(std::move(frame), std::move(converted));
}

RandomPermutationSet RandomPermutationSet::normalized(Frame frame, std::vector<Entry> raw) {
  std::map<PermutationEvent, double> merged;
  for (const auto& [event, mass] : raw) {
    if (!event.empty()) merged[event] += mass;
  }
  std::vector<Entry> entries;
  entries.reserve(merged.size());
  double total = 0.0;
  for (const auto& [event, mass] : merged) {
    if (mass > kPruneThreshold) {
      entries.emplace_back(event, mass);
      total += mass;
    }
  }
  if (entries.empty() || !(total > 0.0)) throw InvariantError("no permutation mass left after normalization");
  for (auto& e : entries) e.second /= total;
  return RandomPermutationSet(Trusted{}, std::move(frame), std::move(entries));
}

double RandomPermutationSet::mass(const PermutationEvent& event) const noexcept {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), event,
                                   [](const Entry& e, const PermutationEvent& x) { return e.first < x; });
  return it != entries_.end() && it->first == event ? it->second : 0.0;
}

MassFunction RandomPermutationSet::order_erased() const {
  std::vector<MassFunction::Entry> out;
  out.reserve(entries_.size());
  for (const auto& [event, mass] : entries_) out.emplace_back(event.elements(), mass);
  return MassFunction::normalized(frame_, std::move(out));
}

namespace {

template <typename Intersect>
RandomPermutationSet orthogonal_sum(const RandomPermutationSet& mu1, const RandomPermutationSet& mu2,
                                    Intersect intersect, const char* name) {
  require_same_frame(mu1.frame(), mu2.frame(), name);
  std::map<PermutationEvent, double> joint;
  double conflict = 0.0;
  for (const auto& [b, mb] : mu1.entries()) {
    for (const auto& [c, mc] : mu2.entries()) {
      const PermutationEvent a = intersect(b, c);
      if (a.empty()) {
        conflict += mb * mc;
      } else {
        joint[a] += mb * mc;
      }
    }
  }
  if (1.0 - conflict < kConflictEpsilon) {
    throw ConflictError(std::string(name) + ": total conflict (K = " + std::to_string(conflict) + ")",
                        conflict);
  }
  std::vector<RandomPermutationSet::Entry> out(joint.begin(), joint.end());
  return RandomPermutationSet::normalized(mu1.frame(), std::move(out));
}

template <typename Intersect>
double conflict_of(const RandomPermutationSet& mu1, const RandomPermutationSet& mu2,
                   Intersect intersect) {
  require_same_frame(mu1.frame(), mu2.frame(), "conflict");
  double conflict = 0.0;
  for (const auto& [b, mb] : mu1.entries()) {
    for (const auto& [c, mc] : mu2.entries()) {
      if (intersect(b, c).empty()) conflict += mb * mc;
    }
  }
  return conflict;
}

}  // namespace

RandomPermutationSet left_orthogonal_sum(const RandomPermutationSet& mu1,
                                         const RandomPermutationSet& mu2) {
  return orthogonal_sum(mu1, mu2, left_intersect, "left_orthogonal_sum");
}

RandomPermutationSet right_orthogonal_sum(const RandomPermutationSet& mu1,
                                          const RandomPermutationSet& mu2) {
  return orthogonal_sum(mu1, mu2, right_intersect, "right_orthogonal_sum");
}

double left_conflict(const RandomPermutationSet& mu1, const RandomPermutationSet& mu2) {
  return conflict_of(mu1, mu2, left_intersect);
}

double right_conflict(const RandomPermutationSet& mu1, const RandomPermutationSet& mu2) {
  return conflict_of(mu1, mu2, right_intersect);
}

ProbabilityDistribution opt(const RandomPermutationSet& mu) {
  std::vector<double> probs(mu.frame().size(), 0.0);
  for (const auto& [event, mass] : mu.entries()) {
    if (event.size() == 1) {
      probs[event.front()] += mass;
      continue;
    }
    // The last-ranked element gets nothing.
    const double share = mass / static_cast<double>(event.size() - 1);
    for (std::size_t i = 0; i + 1 < event.size(); ++i) probs[event[i]] += share;
  }
  return ProbabilityDistribution(mu.frame(), std::move(probs));
}

RandomPermutationSet discount_rps(const RandomPermutationSet& mu, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("discount_rps: reliability " + std::to_string(alpha) + " outside [0, 1]");
  }
  const std::size_t n = mu.frame().size();
  if (n < 2) throw InvalidArgument("discount_rps needs a frame of at least two labels");
  if (alpha == 1.0) return mu;

  const auto& pes = enumerate_pes(n);
  const double share =
      (1.0 - alpha) / static_cast<double>(permutation_space_size(n) - n - 1);
  std::vector<RandomPermutationSet::Entry> out;
  out.reserve(pes.size());
  for (const auto& event : pes) {
    double mass = mu.mass(event) * alpha;
    if (event.size() > 1) mass += share;
    out.emplace_back(event, mass);
  }
  return RandomPermutationSet::normalized(mu.frame(), std::move(out));
}

}  // namespace rps
