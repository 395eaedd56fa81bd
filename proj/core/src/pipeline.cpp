#include "bfsvm/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace bfsvm {

bool ProcessTable::has_column(std::string_view name) const {
  for (const auto& c : columns) {
    if (c == name) return true;
  }
  return false;
}

const std::vector<double>& ProcessTable::column(std::string_view name) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == name) return data[c];
  }
  throw MissingColumnError(std::string(name));
}

void ProcessTable::add_column(std::string name, std::vector<double> values) {
  if (!data.empty() && values.size() != rows()) {
    throw StructuralError("table: column length mismatch for " + name);
  }
  columns.push_back(std::move(name));
  data.push_back(std::move(values));
}

BandLabel band_label(double z, const SiliconBands& bands) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw ValidationError("silicon value outside [0,1]: " + std::to_string(z));
  }
  if (z < bands.z_inf) return BandLabel::Low;
  if (z > bands.z_sup) return BandLabel::High;
  return BandLabel::Proper;
}

int LagSpec::max_delay() const {
  int m = 0;
  for (const auto& e : entries) {
    for (int d : e.delays) m = std::max(m, d);
  }
  return m;
}

std::size_t LagSpec::feature_dim() const {
  std::size_t dim = 0;
  for (const auto& e : entries) dim += e.delays.size();
  return dim;
}

void LagSpec::validate() const {
  if (entries.empty()) throw ConfigError("lag spec: no entries");
  bool silicon_lag1 = false;
  for (const auto& e : entries) {
    if (e.delays.empty()) throw ConfigError("lag spec: empty delay list for " + e.column);
    for (int d : e.delays) {
      if (d < 0) throw ConfigError("lag spec: negative delay for " + e.column);
    }
    if (e.column == "silicon") {
      silicon_lag1 = std::find(e.delays.begin(), e.delays.end(), 1) != e.delays.end();
      if (std::find(e.delays.begin(), e.delays.end(), 0) != e.delays.end()) {
        throw ConfigError("lag spec: silicon at delay 0 is the target, not a feature");
      }
    }
  }
  if (!silicon_lag1) {
    throw ConfigError("lag spec: silicon delay 1 is required for region tagging");
  }
}

namespace {

LagSpec furnace_spec(int max_lag) {
  LagSpec spec;
  std::vector<int> process_lags;
  for (int d = 0; d <= max_lag; ++d) process_lags.push_back(d);
  for (const char* column : {"blast_temp", "blast_vol", "feed_speed", "gas_perm", "coal_inj"}) {
    spec.entries.push_back({column, process_lags});
  }
  spec.entries.push_back({"sulfur", {1}});
  spec.entries.push_back({"silicon", {1}});
  return spec;
}

}  // namespace

LagSpec LagSpec::furnace_a() { return furnace_spec(5); }
LagSpec LagSpec::furnace_b() { return furnace_spec(4); }

std::vector<Sample> build_lagged_features(const ProcessTable& table, const LagSpec& spec) {
  spec.validate();
  const std::size_t rows = table.rows();
  const int max_delay = spec.max_delay();

  std::vector<const std::vector<double>*> source;
  source.reserve(spec.entries.size());
  for (const auto& e : spec.entries) source.push_back(&table.column(e.column));
  const std::vector<double>& silicon = table.column("silicon");

  if (rows <= static_cast<std::size_t>(max_delay)) {
    throw StructuralError("lagged features: table shorter than the maximum delay");
  }

  std::vector<Sample> samples;
  samples.reserve(rows - static_cast<std::size_t>(max_delay));
  for (std::size_t t = static_cast<std::size_t>(max_delay); t < rows; ++t) {
    Sample s;
    s.features.reserve(spec.feature_dim());
    for (std::size_t e = 0; e < spec.entries.size(); ++e) {
      for (int d : spec.entries[e].delays) {
        const double v = (*source[e])[t - static_cast<std::size_t>(d)];
        if (!std::isfinite(v)) {
          throw ValidationError("non-finite value in column " + spec.entries[e].column +
                                " at row " + std::to_string(t - static_cast<std::size_t>(d)));
        }
        s.features.push_back(v);
      }
    }
    s.time_index = static_cast<std::int64_t>(t);
    s.current_silicon = silicon[t];
    s.previous_silicon = silicon[t - 1];
    samples.push_back(std::move(s));
  }
  return samples;
}

Normalizer Normalizer::fit(std::span<const Sample> training) {
  if (training.empty()) throw StructuralError("normalizer: empty training set");
  const std::size_t dim = training.front().features.size();
  std::vector<std::pair<double, double>> ranges(
      dim, {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()});
  for (const Sample& s : training) {
    if (s.features.size() != dim) throw StructuralError("normalizer: ragged features");
    for (std::size_t k = 0; k < dim; ++k) {
      ranges[k].first = std::min(ranges[k].first, s.features[k]);
      ranges[k].second = std::max(ranges[k].second, s.features[k]);
    }
  }
  Normalizer norm;
  norm.ranges_ = std::move(ranges);
  return norm;
}

Normalizer Normalizer::from_ranges(std::vector<std::pair<double, double>> ranges) {
  Normalizer norm;
  norm.ranges_ = std::move(ranges);
  return norm;
}

std::vector<double> Normalizer::transform(std::span<const double> features) const {
  if (features.size() != ranges_.size()) {
    throw StructuralError("normalizer: feature dimension mismatch");
  }
  std::vector<double> out(features.size());
  for (std::size_t k = 0; k < features.size(); ++k) {
    const auto [lo, hi] = ranges_[k];
    double v;
    if (hi <= lo) {
      v = 0.5;  // constant training feature
    } else {
      v = (features[k] - lo) / (hi - lo);
      v = std::clamp(v, -0.05, 1.05);
      v = std::clamp(v, 0.0, 1.0);
    }
    out[k] = v;
  }
  return out;
}

void Normalizer::apply(std::span<Sample> samples) const {
  for (Sample& s : samples) s.features = transform(s.features);
}

bool BinaryTask::degenerate() const {
  bool pos = false, neg = false;
  for (const Sample& s : samples) {
    (s.label > 0 ? pos : neg) = true;
    if (pos && neg) return false;
  }
  return true;
}

std::pair<BinaryTask, BinaryTask> make_binary_tasks(std::span<const Sample> samples,
                                                    const SiliconBands& bands,
                                                    HighTaskMode mode) {
  BinaryTask low_task{"low", {}, KnowledgeRule::low_silicon(bands)};
  BinaryTask high_task{"high", {}, KnowledgeRule::high_silicon(bands)};

  for (const Sample& s : samples) {
    const BandLabel band = band_label(s.current_silicon, bands);
    Sample low_copy = s;
    low_copy.label = band == BandLabel::Low ? +1 : -1;
    low_task.samples.push_back(std::move(low_copy));

    if (band != BandLabel::Low || mode == HighTaskMode::OneVsRest) {
      Sample high_copy = s;
      high_copy.label = band == BandLabel::High ? +1 : -1;
      high_task.samples.push_back(std::move(high_copy));
    }
  }
  tag_regions(low_task.samples, low_task.rule);
  tag_regions(high_task.samples, high_task.rule);
  return {std::move(low_task), std::move(high_task)};
}

BandLabel band_from_votes(int low_vote, int high_vote) {
  if (low_vote > 0) return BandLabel::Low;
  if (high_vote > 0) return BandLabel::High;
  return BandLabel::Proper;
}

BandLabel cascade_predict(const TrainedModel& model_low, const TrainedModel& model_high,
                          std::span<const double> x) {
  const int low_vote = predict(model_low, x);
  // The high model only runs when the low model abstains.
  return low_vote > 0 ? BandLabel::Low : band_from_votes(low_vote, predict(model_high, x));
}

}  // namespace bfsvm
