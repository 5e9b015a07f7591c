#include "rps/reliability.hpp"

#include <algorithm>
#include <numeric>

#include "rps/error.hpp"

namespace rps {

double decision_contribution(const ProbabilityDistribution& rpt, std::size_t true_label) {
  const std::size_t n = rpt.size();
  if (true_label >= n) {
    throw InvalidArgument("decision_contribution: label index " + std::to_string(true_label) +
                          " outside frame of size " + std::to_string(n));
  }
  if (n < 2) throw InvalidArgument("decision_contribution needs at least two labels");
  double others = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != true_label) others += rpt[i];
  }
  return rpt[true_label] - others / static_cast<double>(n - 1);
}

std::vector<double> aggregate_dc(std::span<const DecisionContribution> contributions,
                                 std::size_t sources) {
  std::vector<double> totals(sources, 0.0);
  for (const auto& c : contributions) {
    if (c.source_index >= sources) {
      throw InvalidArgument("decision contribution refers to source " +
                            std::to_string(c.source_index) + " of " + std::to_string(sources));
    }
    totals[c.source_index] += c.value;
  }
  return totals;
}

std::vector<double> source_reliability(std::span<const double> dc_totals) {
  if (dc_totals.empty()) throw InvalidArgument("source_reliability needs at least one source");
  const auto [lo, hi] = std::minmax_element(dc_totals.begin(), dc_totals.end());
  const double min = *lo;
  const double range = *hi - min;
  std::vector<double> out(dc_totals.size(), 1.0);
  if (range > 0.0) {
    for (std::size_t k = 0; k < dc_totals.size(); ++k) out[k] = (dc_totals[k] - min) / range;
  }
  return out;
}

std::vector<std::size_t> fusion_order(std::span<const double> reliabilities) {
  std::vector<std::size_t> order(reliabilities.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return reliabilities[a] > reliabilities[b];
  });
  return order;
}

ReliabilityReport compute_reliabilities(std::span<const SourceEvidence> sources,
                                        std::span<const std::size_t> truths,
                                        Dispersion dispersion) {
  if (sources.empty()) throw InvalidArgument("compute_reliabilities: no sources");
  if (truths.empty()) throw InvalidArgument("compute_reliabilities: empty training set");
  for (const auto& source : sources) {
    if (source.size() != truths.size()) {
      throw InvalidArgument("compute_reliabilities: source has " + std::to_string(source.size()) +
                            " samples, expected " + std::to_string(truths.size()));
    }
  }

  // Contributions are accumulated source by source in sample order, so the
  // totals do not depend on how the cells are scheduled.
  std::vector<DecisionContribution> contributions;
  contributions.reserve(sources.size() * truths.size());
  for (std::size_t k = 0; k < sources.size(); ++k) {
    for (std::size_t j = 0; j < truths.size(); ++j) {
      const auto& bpa = sources[k][j];
      if (!bpa) continue;
      const auto rpt = ranked_probability_transform(rps_transform(*bpa), dispersion);
      contributions.push_back({k, j, decision_contribution(rpt, truths[j])});
    }
  }

  ReliabilityReport report;
  report.dc = aggregate_dc(contributions, sources.size());
  report.reliability = source_reliability(report.dc);
  report.fusion_order = fusion_order(report.reliability);
  return report;
}

}  // namespace rps
