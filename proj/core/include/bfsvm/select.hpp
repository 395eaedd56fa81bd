#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bfsvm/metrics.hpp"
#include "bfsvm/model.hpp"
#include "bfsvm/pipeline.hpp"

namespace bfsvm {

enum class SelectionMetric : std::uint8_t { EnsembleAccuracy, PlainAccuracy };

struct CvConfig {
  int folds = 5;
  std::uint64_t seed = 0;
  SelectionMetric metric = SelectionMetric::EnsembleAccuracy;
};

using FoldSplit = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

/// Label-stratified folds: shuffles each class by seed and deals round-robin,
/// so per-fold positive counts differ by at most one. Requires folds >= 2 and
/// folds <= minority-class count.
std::vector<FoldSplit> stratified_kfold(std::span<const Sample> samples, const CvConfig& config);

/// One hyperparameter combination.
struct GridPoint {
  KernelParams kernel;
  PenaltyScheme scheme = PenaltyScheme::uniform();
};

struct GridSpec {
  std::vector<GridPoint> points;  // declaration order preserved for tie-breaking

  /// gamma x c_hat grid at fixed (c-, c+): the knowledge model's search space.
  static GridSpec knowledge(std::span<const double> gammas, std::span<const double> c_hats,
                            double c_minus, double c_plus);
  /// gamma x c- grid at c_hat = 1: the cost-sensitive baseline's search space.
  static GridSpec baseline(std::span<const double> gammas, std::span<const double> c_minus_values,
                           double c_plus);

  static std::vector<double> paper_gammas();  // {2^-4, 2^-2, 1, 2^2, 2^4}
  static std::vector<double> one_to_five();   // {1, 2, 3, 4, 5}
};

struct GridSearchResult {
  GridPoint best;
  std::size_t best_index = 0;
  std::vector<double> scores;        // mean CV metric per grid point, NaN if skipped
  std::size_t degenerate_points = 0;
};

/// Index of the winning score: highest mean, ties broken by smaller c_hat,
/// then smaller gamma, then declaration order.
std::size_t select_best(std::span<const double> scores, std::span<const GridPoint> points);

/// Exhaustive CV search over the grid on the training task only.
GridSearchResult grid_search(const BinaryTask& task, const GridSpec& grid, const CvConfig& config,
                             const TrainOptions& train_options = {});

}  // namespace bfsvm
