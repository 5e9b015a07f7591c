#include "rps/dst.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "rps/error.hpp"
#include "rps/rps.hpp"

namespace rps {

ProbabilityDistribution pignistic(const MassFunction& m) {
  std::vector<double> betp(m.frame().size(), 0.0);
  for (const auto& [set, mass] : m.entries()) {
    const double share = mass / static_cast<double>(set.size());
    for (std::size_t x : set.members()) betp[x] += share;
  }
  return ProbabilityDistribution(m.frame(), std::move(betp));
}

MassFunction discount_bpa(const MassFunction& m, double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw InvalidArgument("discount_bpa: reliability " + std::to_string(beta) + " outside [0, 1]");
  }
  if (beta == 1.0) return m;
  const FocalSet universe = FocalSet::full(m.frame().size());
  std::vector<MassFunction::Entry> out;
  out.reserve(m.focal_count() + 1);
  for (const auto& [set, mass] : m.entries()) out.emplace_back(set, mass * beta);
  out.emplace_back(universe, 1.0 - beta);
  return MassFunction::normalized(m.frame(), std::move(out));
}

double dempster_conflict(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame(), "dempster_conflict");
  double conflict = 0.0;
  for (const auto& [b, mb] : m1.entries()) {
    for (const auto& [c, mc] : m2.entries()) {
      if ((b & c).empty()) conflict += mb * mc;
    }
  }
  return conflict;
}

MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame(), "dempster_combine");
  std::map<FocalSet, double> joint;
  double conflict = 0.0;
  for (const auto& [b, mb] : m1.entries()) {
    for (const auto& [c, mc] : m2.entries()) {
      const FocalSet a = b & c;
      if (a.empty()) {
        conflict += mb * mc;
      } else {
        joint[a] += mb * mc;
      }
    }
  }
  if (1.0 - conflict < kConflictEpsilon) {
    throw ConflictError("dempster_combine: total conflict (K = " + std::to_string(conflict) + ")",
                        conflict);
  }
  std::vector<MassFunction::Entry> out(joint.begin(), joint.end());
  return MassFunction::normalized(m1.frame(), std::move(out));
}

double jousselme_distance(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame(), "jousselme_distance");
  // Difference vector over the union of both supports.
  std::map<FocalSet, double> diff;
  for (const auto& [set, mass] : m1.entries()) diff[set] += mass;
  for (const auto& [set, mass] : m2.entries()) diff[set] -= mass;

  double quad = 0.0;
  for (const auto& [a, da] : diff) {
    for (const auto& [b, db] : diff) {
      const double jaccard =
          static_cast<double>((a & b).size()) / static_cast<double>((a | b).size());
      quad += da * jaccard * db;
    }
  }
  return std::sqrt(std::max(0.0, 0.5 * quad));
}

}  // namespace rps
