#include "ordo/learn/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ordo::learn {

std::string PipelineParams::describe() const {
  std::ostringstream s;
  s << to_string(svm.kernel) << " C=" << svm.C;
  if (svm.kernel == KernelKind::Rbf) s << " gamma=" << svm.gamma;
  s << " mi_k=" << mi_k << " pca_k=" << pca_k;
  return s.str();
}

double Pipeline::decision(const Vector& x) const {
  if (constant) return *constant == 1 ? 1.0 : -1.0;
  const Vector z = apply_standardizer(standardizer, x);
  return svm.decision(transform_pca(pca, select_columns(z, mask)));
}

int Pipeline::predict(const Vector& x) const { return decision(x) > 0 ? 1 : 0; }

Pipeline fit_pipeline(const Matrix& X, const Labels& y, const PipelineParams& params) {
  Pipeline p;
  const bool has_pos = std::find(y.begin(), y.end(), 1) != y.end();
  const bool has_neg = std::find(y.begin(), y.end(), 0) != y.end();
  if (!has_pos || !has_neg) {
    p.constant = has_pos ? 1 : 0;
    return p;
  }
  p.standardizer = fit_standardizer(X);
  const Matrix Z = apply_standardizer(p.standardizer, X);
  const auto cols = static_cast<std::size_t>(X.cols());
  p.mask = select_top_k(mutual_information_scores(Z, y, params.bins), std::min(params.mi_k, cols));
  const Matrix S = select_columns(Z, p.mask);
  const std::size_t k = std::clamp<std::size_t>(params.pca_k, 1, std::min(static_cast<std::size_t>(X.rows()) - 1, p.mask.size()));
  p.pca = fit_pca(S, k);
  p.svm = train_svm(transform_pca(p.pca, S), y, params.svm);
  return p;
}

std::vector<Fold> stratified_folds(const Labels& y, std::size_t folds, std::uint64_t seed) {
  if (folds < 2 || folds > y.size()) throw std::invalid_argument("folds must be in [2, rows]");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> assignment(y.size());
  std::size_t deal = 0;
  for (int cls : {0, 1}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == cls) members.push_back(i);
    }
    std::shuffle(members.begin(), members.end(), rng);
    for (auto i : members) assignment[i] = deal++ % folds;
  }
  std::vector<Fold> out(folds);
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t f = 0; f < folds; ++f) (assignment[i] == f ? out[f].test : out[f].train).push_back(i);
  }
  return out;
}

Matrix take_rows(const Matrix& X, const std::vector<std::size_t>& rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), X.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) out.row(static_cast<Eigen::Index>(r)) = X.row(static_cast<Eigen::Index>(rows[r]));
  return out;
}

Labels take_rows(const Labels& y, const std::vector<std::size_t>& rows) {
  Labels out;
  out.reserve(rows.size());
  for (auto r : rows) out.push_back(y[r]);
  return out;
}

CvResult cross_validate(const Matrix& X, const Labels& y, const PipelineParams& params, std::size_t folds,
                        std::uint64_t seed) {
  if (y.size() < folds) throw std::invalid_argument("cross_validate: fewer rows than folds");
  if (std::find(y.begin(), y.end(), 1) == y.end() || std::find(y.begin(), y.end(), 0) == y.end()) {
    throw std::invalid_argument("cross_validate: both classes are required");
  }
  CvResult res;
  double sum = 0;
  const auto split = stratified_folds(y, folds, seed);
  for (std::size_t f = 0; f < split.size(); ++f) {
    const Labels ytr = take_rows(y, split[f].train);
    if (std::find(ytr.begin(), ytr.end(), 1) == ytr.end() || std::find(ytr.begin(), ytr.end(), 0) == ytr.end()) {
      res.warnings.push_back("fold " + std::to_string(f + 1) + " skipped: training split has one class");
      continue;
    }
    const Pipeline p = fit_pipeline(take_rows(X, split[f].train), ytr, params);
    std::size_t correct = 0;
    for (auto i : split[f].test) correct += p.predict(X.row(static_cast<Eigen::Index>(i)).transpose()) == y[i] ? 1 : 0;
    sum += static_cast<double>(correct) / static_cast<double>(split[f].test.size());
    ++res.folds_run;
  }
  res.accuracy = res.folds_run > 0 ? sum / static_cast<double>(res.folds_run) : 0.0;
  return res;
}

std::vector<PipelineParams> default_grid() {
  const double cs[] = {0.1, 1, 10};
  const double gammas[] = {0.01, 0.1, 1};
  const std::size_t ks[] = {5, 10, 20, 30};
  std::vector<PipelineParams> grid;
  for (double c : cs) {
    for (auto k : ks) {
      PipelineParams p;
      p.svm.kernel = KernelKind::Linear;
      p.svm.C = c;
      p.pca_k = k;
      grid.push_back(p);
    }
  }
  for (double c : cs) {
    for (double g : gammas) {
      for (auto k : ks) {
        PipelineParams p;
        p.svm.kernel = KernelKind::Rbf;
        p.svm.C = c;
        p.svm.gamma = g;
        p.pca_k = k;
        grid.push_back(p);
      }
    }
  }
  return grid;
}

GridResult grid_search(const Matrix& X, const Labels& y, const std::vector<PipelineParams>& grid, std::size_t folds,
                       std::uint64_t seed) {
  if (grid.empty()) throw std::invalid_argument("grid_search: empty grid");
  GridResult res;
  res.best_accuracy = -1;
  for (const auto& p : grid) {
    auto cv = cross_validate(X, y, p, folds, seed);
    if (cv.accuracy > res.best_accuracy) {
      res.best_accuracy = cv.accuracy;
      res.best = p;
    }
    res.points.push_back(GridPoint{p, std::move(cv)});
  }
  return res;
}

Split holdout_split(const Labels& y, double test_fraction, std::uint64_t seed) {
  if (test_fraction < 0 || test_fraction >= 1) throw std::invalid_argument("holdout fraction must be in [0, 1)");
  std::mt19937_64 rng(seed);
  Split s;
  for (int cls : {0, 1}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == cls) members.push_back(i);
    }
    std::shuffle(members.begin(), members.end(), rng);
    const auto n_test = static_cast<std::size_t>(std::lround(test_fraction * static_cast<double>(members.size())));
    for (std::size_t i = 0; i < members.size(); ++i) (i < n_test ? s.test : s.train).push_back(members[i]);
  }
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.test.begin(), s.test.end());
  return s;
}

double f1_score(const Labels& truth, const Labels& predicted) {
  if (truth.size() != predicted.size()) throw std::invalid_argument("f1_score: length mismatch");
  double tp = 0;
  double fp = 0;
  double fn = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (predicted[i] == 1 && truth[i] == 1) tp += 1;
    if (predicted[i] == 1 && truth[i] == 0) fp += 1;
    if (predicted[i] == 0 && truth[i] == 1) fn += 1;
  }
  return tp > 0 ? 2 * tp / (2 * tp + fp + fn) : 0.0;
}

}  // namespace ordo::learn
