#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bfsvm/errors.hpp"

namespace bfsvm {

// Sample partition driving the per-region costs:
//   R1 — positives inside the rule region (highest cost, bound c- * c_hat)
//   R2 — remaining positives (bound c-)
//   R3 — all negatives (bound c+)
enum class RegionTag : std::uint8_t { R1, R2, R3 };

enum class BandLabel : std::uint8_t { Low, Proper, High };

std::string to_string(RegionTag tag);
std::string to_string(BandLabel band);

/// Silicon band edges on the normalized [0,1] scale: [0, z_inf) is low,
/// [z_inf, z_sup] proper, (z_sup, 1] high.
struct SiliconBands {
  double z_inf = 0.0;
  double z_sup = 0.0;

  SiliconBands(double inf, double sup) : z_inf(inf), z_sup(sup) {
    if (!(0.0 < inf && inf < sup && sup < 1.0)) {
      throw ValidationError("bands must satisfy 0 < z_inf < z_sup < 1");
    }
  }
};

/// One training/testing instance after lagged-feature assembly.
struct Sample {
  std::vector<double> features;
  int label = 0;                      // +1 / -1 once a binary task is formed
  RegionTag region = RegionTag::R3;   // meaningful once tagged against a rule
  std::int64_t time_index = 0;
  double current_silicon = 0.0;
  double previous_silicon = 0.0;      // the lag-1 silicon the rules test
};

}  // namespace bfsvm
