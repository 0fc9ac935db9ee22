#ifndef ORDO_LEARN_MODEL_BUNDLE_HPP
#define ORDO_LEARN_MODEL_BUNDLE_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ordo/bench.hpp"
#include "ordo/features.hpp"
#include "ordo/learn/pipeline.hpp"
#include "ordo/order_config.hpp"
#include "ordo/tables.hpp"

namespace ordo::learn {

inline constexpr int kBundleVersion = 1;

struct ConfigModel {
  Pipeline pipeline;
  PipelineParams params;
  double cv_accuracy = 0;
  double holdout_f1 = 0;
  std::size_t train_rows = 0;
  std::size_t test_rows = 0;
};

struct ModelBundle {
  std::uint64_t seed = 0;
  std::array<ConfigModel, kOrderSetCount> configs{};
  /// priority[i] is the rank of config i + 1; 1 is tried first.
  std::array<int, kOrderSetCount> priority{};

  std::string to_json() const;
  static ModelBundle from_json(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static ModelBundle load(const std::filesystem::path& path);
};

/// Rank by descending accuracy; equal accuracies keep config order.
std::array<int, kOrderSetCount> priorities_from_accuracy(const std::array<double, kOrderSetCount>& accuracy);

struct Selection {
  std::size_t config = 1;  // 1..7
  std::array<Label, kOrderSetCount> predicted{};
};

/// One Good: take it. Several: the Good one with the best priority. None:
/// the config whose classifier has the lowest CV accuracy.
std::size_t choose_config(const std::array<Label, kOrderSetCount>& predicted,
                          const std::array<int, kOrderSetCount>& priority,
                          const std::array<double, kOrderSetCount>& accuracy);

Selection select_order_config(const FeatureVector& fv, const ModelBundle& bundle);

struct TrainOptions {
  std::vector<PipelineParams> grid = default_grid();
  std::size_t folds = kDefaultFolds;
  double holdout = kDefaultHoldout;
  std::uint64_t seed = 0;
  std::function<void(std::size_t config, const GridResult&)> on_config;
  std::function<void(const std::string&)> on_warning;
};

/// Joins features and labels on ontology_id, then per config: holdout split,
/// grid search on the training part, final fit on the training part, F1 on
/// the held-out part. Throws std::invalid_argument if no ids match.
ModelBundle train_bundle(const FeatureTable& features, const LabelTable& labels, const TrainOptions& options);

}  // namespace ordo::learn

#endif  // ORDO_LEARN_MODEL_BUNDLE_HPP
