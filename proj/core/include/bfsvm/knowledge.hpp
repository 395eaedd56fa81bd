#pragma once

#include <optional>
#include <span>
#include <string>

#include "bfsvm/sample.hpp"

namespace bfsvm {

enum class RuleDirection : std::uint8_t { AtOrBelow, AtOrAbove };

std::string to_string(RuleDirection direction);

/// Expert rule defining the elevated-cost region: "previous silicon already
/// at or below z_inf" (low persistence) or "at or above z_sup" (high).
struct KnowledgeRule {
  double threshold = 0.5;
  RuleDirection direction = RuleDirection::AtOrBelow;
  std::string description;

  KnowledgeRule(double thr, RuleDirection dir, std::string desc = {});

  static KnowledgeRule low_silicon(const SiliconBands& bands);
  static KnowledgeRule high_silicon(const SiliconBands& bands);
};

/// Region membership test. Boundary values fire the rule (inclusive).
bool in_region(double previous_silicon, const KnowledgeRule& rule);

/// Assigns RegionTags in place from each sample's label and previous silicon:
/// negatives are R3, positives split R1/R2 on the rule.
void tag_regions(std::span<Sample> samples, const KnowledgeRule& rule);

/// Persistence statistics of a silicon series: the fraction of low-silicon
/// records whose successor stays low, and the analogue for high. A ratio is
/// absent when the series never visits that band before its last record.
struct ReliabilityRatios {
  std::optional<double> low_persistence;
  std::optional<double> high_persistence;
};

ReliabilityRatios reliability_ratios(std::span<const double> silicon_series,
                                     const SiliconBands& bands);

}  // namespace bfsvm
