#include "rps/mass_function.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "rps/error.hpp"

namespace rps {

namespace {

void check_mass_value(double mass) {
  if (!std::isfinite(mass) || mass < 0.0 || mass > 1.0 + kRenormalizeTolerance) {
    throw InvariantError("mass " + std::to_string(mass) + " is outside [0, 1]");
  }
}

// Shared by external-input constructors: a total within kSumTolerance is kept
// bit-for-bit, within kRenormalizeTolerance it is rescaled, otherwise rejected.
template <typename Entry>
void settle_total(std::vector<Entry>& entries) {
  double total = 0.0;
  for (const auto& e : entries) total += e.second;
  if (std::abs(total - 1.0) > kRenormalizeTolerance) {
    throw InvariantError("masses sum to " + std::to_string(total) + ", expected 1");
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    for (auto& e : entries) e.second /= total;
  }
}

}  // namespace

ProbabilityDistribution::ProbabilityDistribution(Frame frame, std::vector<double> probs)
    : frame_(std::move(frame)), probs_(std::move(probs)) {
  if (probs_.size() != frame_.size()) {
    throw InvalidArgument("probability vector has " + std::to_string(probs_.size()) +
                          " entries for a frame of " + std::to_string(frame_.size()));
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) throw InvariantError("probabilities must be finite and >= 0");
    total += p;
  }
  if (std::abs(total - 1.0) > kRenormalizeTolerance) {
    throw InvariantError("probabilities sum to " + std::to_string(total) + ", expected 1");
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    for (double& p : probs_) p /= total;
  }
}

std::size_t ProbabilityDistribution::argmax() const noexcept {
  return static_cast<std::size_t>(std::max_element(probs_.begin(), probs_.end()) - probs_.begin());
}

MassFunction::MassFunction(Frame frame, std::vector<Entry> entries) : frame_(std::move(frame)) {
  const FocalSet universe = FocalSet::full(frame_.size());
  for (const auto& [set, mass] : entries) {
    if (set.empty()) throw InvariantError("the empty set cannot carry mass");
    if (!set.is_subset_of(universe)) throw InvariantError("focal set has labels outside the frame");
    check_mass_value(mass);
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].first == entries[i - 1].first) throw InvariantError("duplicate focal set");
  }
  std::erase_if(entries, [](const Entry& e) { return e.second <= kPruneThreshold; });
  if (entries.empty()) throw InvariantError("mass function has no focal set");
  settle_total(entries);
  entries_ = std::move(entries);
}

MassFunction MassFunction::from_labels(
    Frame frame, const std::vector<std::pair<std::vector<std::string>, double>>& entries) {
  std::vector<Entry> converted;
  converted.reserve(entries.size());
  for (const auto& [labels, mass] : entries) {
    FocalSet set;
    for (const auto& label : labels) {
      const FocalSet one = FocalSet::singleton(frame.index_of(label));
      if (!(set & one).empty()) throw ParseError("label '" + label + "' repeated in focal set");
      set = set | one;
    }
    converted.emplace_back(set, mass);
  }
  return MassFunction(std::move(frame), std::move(converted));
}

MassFunction MassFunction::vacuous(Frame frame) {
  const FocalSet all = FocalSet::full(frame.size());
  return MassFunction(Trusted{}, std::move(frame), {{all, 1.0}});
}

MassFunction MassFunction::normalized(Frame frame, std::vector<Entry> raw) {
  std::map<FocalSet, double> merged;
  for (const auto& [set, mass] : raw) {
    if (!set.empty()) merged[set] += mass;
  }
  std::vector<Entry> entries;
  entries.reserve(merged.size());
  double total = 0.0;
  for (const auto& [set, mass] : merged) {
    if (mass > kPruneThreshold) {
      entries.emplace_back(set, mass);
      total += mass;
    }
  }
  if (entries.empty() || !(total > 0.0)) throw InvariantError("no mass left after normalization");
  for (auto& e : entries) e.second /= total;
  return MassFunction(Trusted{}, std::move(frame), std::move(entries));
}

double MassFunction::mass(FocalSet set) const noexcept {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), set,
                                   [](const Entry& e, FocalSet s) { return e.first < s; });
  return it != entries_.end() && it->first == set ? it->second : 0.0;
}

}  // namespace rps
