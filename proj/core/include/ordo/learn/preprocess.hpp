#ifndef ORDO_LEARN_PREPROCESS_HPP
#define ORDO_LEARN_PREPROCESS_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

namespace ordo::learn {

using Matrix = Eigen::MatrixXd;  // one row per sample
using Vector = Eigen::VectorXd;
/// Binary targets: 1 is the positive (Good) class, 0 the negative one.
using Labels = std::vector<int>;

struct StandardizerParams {
  Vector mean;
  Vector std;  // population std, 1 where a column is constant
};

/// Throws std::invalid_argument on fewer than two rows.
StandardizerParams fit_standardizer(const Matrix& X);
Vector apply_standardizer(const StandardizerParams& p, const Vector& x);
Matrix apply_standardizer(const StandardizerParams& p, const Matrix& X);

inline constexpr int kDefaultBins = 5;

/// Equal-frequency bin per value. Equal values always share a bin, so a
/// column with few distinct values may use fewer than `bins` bins.
std::vector<int> equal_frequency_bins(std::span<const double> column, int bins = kDefaultBins);

/// Mutual information of two discrete sequences, in bits.
double mutual_information(std::span<const int> x, std::span<const int> y);

/// Per-column MI against y after equal-frequency discretization.
Vector mutual_information_scores(const Matrix& X, const Labels& y, int bins = kDefaultBins);

/// Indices of the k highest scores in ascending index order; ties go to the
/// lower index. Throws std::invalid_argument if k exceeds the score count.
std::vector<std::size_t> select_top_k(const Vector& scores, std::size_t k);

Matrix select_columns(const Matrix& X, std::span<const std::size_t> columns);
Vector select_columns(const Vector& x, std::span<const std::size_t> columns);

struct PcaModel {
  Matrix components;          // k x d, orthonormal rows
  Vector explained_variance;  // descending, sample covariance eigenvalues
  Vector mean;
  double total_variance = 0;  // trace of the covariance
};

/// Throws std::invalid_argument unless 1 <= k <= min(rows - 1, cols).
PcaModel fit_pca(const Matrix& X, std::size_t k);
Vector transform_pca(const PcaModel& m, const Vector& x);
Matrix transform_pca(const PcaModel& m, const Matrix& X);
Matrix reconstruct_pca(const PcaModel& m, const Matrix& scores);

}  // namespace ordo::learn

#endif  // ORDO_LEARN_PREPROCESS_HPP
