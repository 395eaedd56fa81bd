#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bfsvm/errors.hpp"

namespace bfsvm {

/// Canonical process variables, in file order. Units: blast temperature degC,
/// blast volume m^3/min, feed speed mm/h, gas permeability m^3/(min*kPa),
/// pulverized coal injection ton, sulfur wt%, silicon wt% (normalized scale).
inline constexpr std::array<std::string_view, 7> kProcessColumns = {
    "blast_temp", "blast_vol", "feed_speed", "gas_perm", "coal_inj", "sulfur", "silicon"};

/// Column-major table of equally spaced, time-ordered records.
struct ProcessTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  // data[c][t]

  std::size_t rows() const { return data.empty() ? 0 : data.front().size(); }

  bool has_column(std::string_view name) const;
  const std::vector<double>& column(std::string_view name) const;  // throws MissingColumnError

  void add_column(std::string name, std::vector<double> values);
};

}  // namespace bfsvm
