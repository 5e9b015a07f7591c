#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rps/mass_function.hpp"
#include "rps/transform.hpp"

namespace rps {

struct DecisionContribution {
  std::size_t source_index = 0;
  std::size_t sample_index = 0;
  double value = 0.0;
};

/// Outcome-driven reliability of a set of sources.
struct ReliabilityReport {
  std::vector<double> dc;                ///< summed decision contribution per source
  std::vector<double> reliability;       ///< min-max normalized, in [0,1]
  std::vector<std::size_t> fusion_order; ///< sources by descending reliability

  friend bool operator==(const ReliabilityReport&, const ReliabilityReport&) = default;
};

/// Rpt(truth) minus the mean Rpt of the other labels. Throws
/// InvalidArgument for an unknown label or a single-label frame.
double decision_contribution(const ProbabilityDistribution& rpt, std::size_t true_label);

/// Per-source sums of decision contributions. Sources without any
/// contribution total zero.
std::vector<double> aggregate_dc(std::span<const DecisionContribution> contributions,
                                 std::size_t sources);

/// R_k = (DC_k - min) / (max - min). When every DC is equal all sources get
/// reliability 1, which makes discounting a no-op.
std::vector<double> source_reliability(std::span<const double> dc_totals);

/// Source indices sorted by descending reliability, ascending index on ties.
std::vector<std::size_t> fusion_order(std::span<const double> reliabilities);

/// BPAs of one source for every training sample. An empty optional marks a
/// sample whose BPA could not be generated; it contributes zero.
using SourceEvidence = std::vector<std::optional<MassFunction>>;

/// Full training pass: every BPA is transformed to an RPS, mapped through
/// the ranked probability transformation and scored against the truth.
/// `truths` holds label indices into the BPAs' frame. Throws
/// InvalidArgument for an empty training set or ragged input.
ReliabilityReport compute_reliabilities(std::span<const SourceEvidence> sources,
                                        std::span<const std::size_t> truths,
                                        Dispersion dispersion = {});

}  // namespace rps
