#include "bfsvm/knowledge.hpp"

namespace bfsvm {

std::string to_string(RegionTag tag) {
  switch (tag) {
    case RegionTag::R1: return "R1";
    case RegionTag::R2: return "R2";
    case RegionTag::R3: return "R3";
  }
  return "?";
}

std::string to_string(BandLabel band) {
  switch (band) {
    case BandLabel::Low: return "low";
    case BandLabel::Proper: return "proper";
    case BandLabel::High: return "high";
  }
  return "?";
}

std::string to_string(RuleDirection direction) {
  return direction == RuleDirection::AtOrBelow ? "at_or_below" : "at_or_above";
}

KnowledgeRule::KnowledgeRule(double thr, RuleDirection dir, std::string desc)
    : threshold(thr), direction(dir), description(std::move(desc)) {
  if (!(thr > 0.0 && thr < 1.0)) {
    throw ValidationError("rule threshold must lie in (0, 1)");
  }
}

KnowledgeRule KnowledgeRule::low_silicon(const SiliconBands& bands) {
  return KnowledgeRule(bands.z_inf, RuleDirection::AtOrBelow,
                       "previous silicon at or below z_inf");
}

KnowledgeRule KnowledgeRule::high_silicon(const SiliconBands& bands) {
  return KnowledgeRule(bands.z_sup, RuleDirection::AtOrAbove,
                       "previous silicon at or above z_sup");
}

bool in_region(double previous_silicon, const KnowledgeRule& rule) {
  return rule.direction == RuleDirection::AtOrBelow ? previous_silicon <= rule.threshold
                                                    : previous_silicon >= rule.threshold;
}

void tag_regions(std::span<Sample> samples, const KnowledgeRule& rule) {
  for (Sample& s : samples) {
    if (s.label < 0) {
      s.region = RegionTag::R3;
    } else {
      s.region = in_region(s.previous_silicon, rule) ? RegionTag::R1 : RegionTag::R2;
    }
  }
}

ReliabilityRatios reliability_ratios(std::span<const double> silicon_series,
                                     const SiliconBands& bands) {
  if (silicon_series.size() < 2) {
    throw StructuralError("reliability_ratios: series needs at least 2 records");
  }
  // Band membership here is strict (< z_inf, > z_sup), matching the band
  // labeling; the rule region membership is inclusive and deliberately not
  // reused.
  std::size_t low_prev = 0, low_both = 0, high_prev = 0, high_both = 0;
  for (std::size_t t = 1; t < silicon_series.size(); ++t) {
    const double prev = silicon_series[t - 1];
    const double cur = silicon_series[t];
    if (prev < bands.z_inf) {
      ++low_prev;
      if (cur < bands.z_inf) ++low_both;
    }
    if (prev > bands.z_sup) {
      ++high_prev;
      if (cur > bands.z_sup) ++high_both;
    }
  }
  ReliabilityRatios ratios;
  if (low_prev > 0) {
    ratios.low_persistence = static_cast<double>(low_both) / static_cast<double>(low_prev);
  }
  if (high_prev > 0) {
    ratios.high_persistence = static_cast<double>(high_both) / static_cast<double>(high_prev);
  }
  return ratios;
}

}  // namespace bfsvm
