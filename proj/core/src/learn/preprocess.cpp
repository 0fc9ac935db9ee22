#include "ordo/learn/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ordo::learn {

StandardizerParams fit_standardizer(const Matrix& X) {
  if (X.rows() < 2) throw std::invalid_argument("standardizer needs at least two rows");
  StandardizerParams p;
  p.mean = X.colwise().mean().transpose();
  const Matrix centered = X.rowwise() - p.mean.transpose();
  p.std = (centered.array().square().colwise().sum() / static_cast<double>(X.rows())).sqrt().transpose();
  for (Eigen::Index j = 0; j < p.std.size(); ++j) {
    if (p.std[j] == 0.0) p.std[j] = 1.0;
  }
  return p;
}

Vector apply_standardizer(const StandardizerParams& p, const Vector& x) {
  return (x - p.mean).cwiseQuotient(p.std);
}

Matrix apply_standardizer(const StandardizerParams& p, const Matrix& X) {
  return (X.rowwise() - p.mean.transpose()).array().rowwise() / p.std.transpose().array();
}

std::vector<int> equal_frequency_bins(std::span<const double> column, int bins) {
  if (bins < 1) throw std::invalid_argument("bins must be positive");
  const std::size_t n = column.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return column[a] < column[b]; });
  std::vector<int> out(n);
  std::size_t first = 0;  // rank of the first copy of the current value
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && column[order[r]] != column[order[r - 1]]) first = r;
    out[order[r]] = static_cast<int>(first * static_cast<std::size_t>(bins) / n);
  }
  return out;
}

double mutual_information(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) throw std::invalid_argument("mutual_information: length mismatch");
  if (x.empty()) return 0.0;
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> px;
  std::map<int, double> py;
  for (std::size_t i = 0; i < x.size(); ++i) {
    joint[{x[i], y[i]}] += 1;
    px[x[i]] += 1;
    py[y[i]] += 1;
  }
  const double n = static_cast<double>(x.size());
  double mi = 0;
  for (const auto& [xy, c] : joint) mi += c * std::log2(c * n / (px[xy.first] * py[xy.second]));
  // rounding can leave a tiny negative value for independent data
  return std::max(0.0, mi / n);
}

Vector mutual_information_scores(const Matrix& X, const Labels& y, int bins) {
  if (static_cast<std::size_t>(X.rows()) != y.size()) throw std::invalid_argument("label count mismatch");
  Vector scores(X.cols());
  std::vector<double> col(static_cast<std::size_t>(X.rows()));
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    for (Eigen::Index i = 0; i < X.rows(); ++i) col[static_cast<std::size_t>(i)] = X(i, j);
    const auto binned = equal_frequency_bins(col, bins);
    scores[j] = mutual_information(binned, y);
  }
  return scores;
}

std::vector<std::size_t> select_top_k(const Vector& scores, std::size_t k) {
  const auto n = static_cast<std::size_t>(scores.size());
  if (k > n) throw std::invalid_argument("select_top_k: k exceeds the number of scores");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) {
    return scores[static_cast<Eigen::Index>(a)] > scores[static_cast<Eigen::Index>(b)];
  });
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

Matrix select_columns(const Matrix& X, std::span<const std::size_t> columns) {
  Matrix out(X.rows(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = X.col(static_cast<Eigen::Index>(columns[j]));
  return out;
}

Vector select_columns(const Vector& x, std::span<const std::size_t> columns) {
  Vector out(static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) out[static_cast<Eigen::Index>(j)] = x[static_cast<Eigen::Index>(columns[j])];
  return out;
}

PcaModel fit_pca(const Matrix& X, std::size_t k) {
  const auto rows = static_cast<std::size_t>(X.rows());
  const auto cols = static_cast<std::size_t>(X.cols());
  if (rows < 2 || k < 1 || k > std::min(rows - 1, cols)) throw std::invalid_argument("fit_pca: k out of range");
  PcaModel m;
  m.mean = X.colwise().mean().transpose();
  const Matrix centered = X.rowwise() - m.mean.transpose();
  const Matrix cov = centered.transpose() * centered / static_cast<double>(rows - 1);
  m.total_variance = cov.trace();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(cov);
  if (eig.info() != Eigen::Success) throw std::runtime_error("fit_pca: eigen decomposition failed");
  // eigenvalues come out ascending
  const auto d = static_cast<Eigen::Index>(cols);
  const auto kk = static_cast<Eigen::Index>(k);
  m.components.resize(kk, d);
  m.explained_variance.resize(kk);
  for (Eigen::Index c = 0; c < kk; ++c) {
    Vector v = eig.eigenvectors().col(d - 1 - c);
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    if (v[pivot] < 0) v = -v;
    m.components.row(c) = v.transpose();
    m.explained_variance[c] = std::max(0.0, eig.eigenvalues()[d - 1 - c]);
  }
  return m;
}

Vector transform_pca(const PcaModel& m, const Vector& x) { return m.components * (x - m.mean); }

Matrix transform_pca(const PcaModel& m, const Matrix& X) {
  return (X.rowwise() - m.mean.transpose()) * m.components.transpose();
}

Matrix reconstruct_pca(const PcaModel& m, const Matrix& scores) {
  return (scores * m.components).rowwise() + m.mean.transpose();
}

}  // namespace ordo::learn
