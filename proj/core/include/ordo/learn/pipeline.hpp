#ifndef ORDO_LEARN_PIPELINE_HPP
#define ORDO_LEARN_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordo/learn/preprocess.hpp"
#include "ordo/learn/svm.hpp"

namespace ordo::learn {

inline constexpr std::size_t kDefaultMiK = 40;
inline constexpr std::size_t kDefaultFolds = 10;
inline constexpr double kDefaultHoldout = 0.25;

struct PipelineParams {
  SvmParams svm;
  std::size_t mi_k = kDefaultMiK;
  std::size_t pca_k = 10;
  int bins = kDefaultBins;

  std::string describe() const;
  bool operator==(const PipelineParams&) const = default;
};

/// standardize -> MI column mask -> PCA -> SVM. A single-class training set
/// yields a constant predictor.
struct Pipeline {
  StandardizerParams standardizer;
  std::vector<std::size_t> mask;
  PcaModel pca;
  SvmModel svm;
  std::optional<int> constant;

  int predict(const Vector& x) const;
  double decision(const Vector& x) const;
};

/// mi_k and pca_k are clamped to what the data can support.
Pipeline fit_pipeline(const Matrix& X, const Labels& y, const PipelineParams& params);

struct Fold {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Each class is shuffled and dealt round-robin across the folds.
std::vector<Fold> stratified_folds(const Labels& y, std::size_t folds, std::uint64_t seed);

struct CvResult {
  double accuracy = 0;  // mean over the folds that ran
  std::size_t folds_run = 0;
  std::vector<std::string> warnings;
};

/// Throws std::invalid_argument if rows < folds or a class is absent.
/// Every preprocessing step is fit on the training split only.
CvResult cross_validate(const Matrix& X, const Labels& y, const PipelineParams& params,
                        std::size_t folds = kDefaultFolds, std::uint64_t seed = 0);

/// linear x C x pca_k, then rbf x C x gamma x pca_k.
std::vector<PipelineParams> default_grid();

struct GridPoint {
  PipelineParams params;
  CvResult cv;
};

struct GridResult {
  PipelineParams best;
  double best_accuracy = 0;
  std::vector<GridPoint> points;
};

/// Ties go to the earlier grid point. Throws on an empty grid.
GridResult grid_search(const Matrix& X, const Labels& y, const std::vector<PipelineParams>& grid,
                       std::size_t folds = kDefaultFolds, std::uint64_t seed = 0);

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Stratified holdout; each class sends round(fraction * count) rows to test.
Split holdout_split(const Labels& y, double test_fraction, std::uint64_t seed);

Matrix take_rows(const Matrix& X, const std::vector<std::size_t>& rows);
Labels take_rows(const Labels& y, const std::vector<std::size_t>& rows);

/// F1 of the positive class; 0 when there are no true positives.
double f1_score(const Labels& truth, const Labels& predicted);

}  // namespace ordo::learn

#endif  // ORDO_LEARN_PIPELINE_HPP
