#ifndef ORDO_LEARN_SVM_HPP
#define ORDO_LEARN_SVM_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "ordo/learn/preprocess.hpp"

namespace ordo::learn {

enum class KernelKind : std::uint8_t { Linear, Rbf };
std::string_view to_string(KernelKind k);
KernelKind parse_kernel(std::string_view s);

inline constexpr double kSvmTolerance = 1e-3;
inline constexpr std::size_t kSvmIterationCap = 100000;

struct SvmParams {
  KernelKind kernel = KernelKind::Linear;
  double C = 1.0;
  double gamma = 0.1;  // rbf only
  double tolerance = kSvmTolerance;
  std::size_t max_iterations = kSvmIterationCap;

  double kernel_value(const Vector& a, const Vector& b) const;
  bool operator==(const SvmParams&) const = default;
};

struct SvmModel {
  SvmParams params;
  std::size_t dimension = 0;
  Vector weights;           // linear only
  Matrix support_vectors;   // rbf only, one per row
  Vector dual_coef;         // alpha_i * y_i, parallel to support_vectors
  double bias = 0;
  std::size_t iterations = 0;
  bool converged = false;

  double decision(const Vector& x) const;
  /// 1 when the decision value is positive.
  int predict(const Vector& x) const;
};

struct SvmTraining {
  SvmModel model;
  Vector alpha;      // one per training row
  double gap = 0;    // max violating pair at exit
};

/// SMO with second-order working-set selection. Throws
/// std::invalid_argument on a single-class target or C <= 0.
SvmTraining train_svm_detailed(const Matrix& X, const Labels& y, const SvmParams& params);
SvmModel train_svm(const Matrix& X, const Labels& y, const SvmParams& params);

/// Largest per-sample violation of the soft-margin KKT conditions for the
/// fitted alpha and bias.
double kkt_residual(const Matrix& X, const Labels& y, const SvmTraining& t);

}  // namespace ordo::learn

#endif  // ORDO_LEARN_SVM_HPP
