#include "ordo/learn/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ordo::learn {

namespace {

constexpr double kTau = 1e-12;

}  // namespace

std::string_view to_string(KernelKind k) { return k == KernelKind::Rbf ? "rbf" : "linear"; }

KernelKind parse_kernel(std::string_view s) {
  if (s == "linear") return KernelKind::Linear;
  if (s == "rbf") return KernelKind::Rbf;
  throw std::invalid_argument("unknown kernel '" + std::string(s) + "'");
}

double SvmParams::kernel_value(const Vector& a, const Vector& b) const {
  if (kernel == KernelKind::Linear) return a.dot(b);
  return std::exp(-gamma * (a - b).squaredNorm());
}

double SvmModel::decision(const Vector& x) const {
  if (static_cast<std::size_t>(x.size()) != dimension) throw std::invalid_argument("svm: dimension mismatch");
  if (params.kernel == KernelKind::Linear) return weights.dot(x) + bias;
  double f = bias;
  for (Eigen::Index i = 0; i < support_vectors.rows(); ++i) {
    f += dual_coef[i] * params.kernel_value(support_vectors.row(i).transpose(), x);
  }
  return f;
}

int SvmModel::predict(const Vector& x) const { return decision(x) > 0 ? 1 : 0; }

SvmTraining train_svm_detailed(const Matrix& X, const Labels& labels, const SvmParams& params) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  if (X.rows() != n) throw std::invalid_argument("svm: label count mismatch");
  if (params.C <= 0) throw std::invalid_argument("svm: C must be positive");
  if (params.kernel == KernelKind::Rbf && params.gamma <= 0) throw std::invalid_argument("svm: gamma must be positive");
  Vector y(n);
  bool pos = false;
  bool neg = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    y[i] = labels[static_cast<std::size_t>(i)] == 1 ? 1.0 : -1.0;
    (y[i] > 0 ? pos : neg) = true;
  }
  if (!pos || !neg) throw std::invalid_argument("svm: both classes are required");

  Matrix K(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      K(i, j) = K(j, i) = params.kernel_value(X.row(i).transpose(), X.row(j).transpose());
    }
  }
  const double C = params.C;
  Vector alpha = Vector::Zero(n);
  Vector G = Vector::Constant(n, -1.0);  // gradient of 1/2 a'Qa - e'a
  auto upper = [&](Eigen::Index t) { return alpha[t] >= C; };
  auto lower = [&](Eigen::Index t) { return alpha[t] <= 0; };
  auto Q = [&](Eigen::Index i, Eigen::Index j) { return y[i] * y[j] * K(i, j); };

  SvmTraining out;
  std::size_t iter = 0;
  double gap = 0;
  bool converged = false;
  while (iter < params.max_iterations) {
    double gmax = -std::numeric_limits<double>::infinity();
    Eigen::Index i = -1;
    for (Eigen::Index t = 0; t < n; ++t) {
      if (y[t] > 0 ? !upper(t) : !lower(t)) {
        const double v = -y[t] * G[t];
        if (v >= gmax) {
          gmax = v;
          i = t;
        }
      }
    }
    double gmax2 = -std::numeric_limits<double>::infinity();
    Eigen::Index j = -1;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index t = 0; t < n && i >= 0; ++t) {
      if (y[t] > 0 ? lower(t) : upper(t)) continue;
      const double v = y[t] * G[t];
      gmax2 = std::max(gmax2, v);
      const double grad_diff = gmax + v;
      if (grad_diff > 0) {
        double quad = K(i, i) + K(t, t) - 2.0 * K(i, t);
        if (quad <= 0) quad = kTau;
        const double obj = -(grad_diff * grad_diff) / quad;
        if (obj <= best) {
          best = obj;
          j = t;
        }
      }
    }
    gap = gmax + gmax2;
    if (i < 0 || j < 0 || gap < params.tolerance) {
      converged = true;
      break;
    }
    ++iter;

    const double old_i = alpha[i];
    const double old_j = alpha[j];
    if (y[i] != y[j]) {
      double quad = K(i, i) + K(j, j) + 2.0 * Q(i, j);
      if (quad <= 0) quad = kTau;
      const double delta = (-G[i] - G[j]) / quad;
      const double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0) {
        if (alpha[j] < 0) {
          alpha[j] = 0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = -diff;
      }
      if (diff > 0) {
        if (alpha[i] > C) {
          alpha[i] = C;
          alpha[j] = C - diff;
        }
      } else if (alpha[j] > C) {
        alpha[j] = C;
        alpha[i] = C + diff;
      }
    } else {
      double quad = K(i, i) + K(j, j) - 2.0 * Q(i, j);
      if (quad <= 0) quad = kTau;
      const double delta = (G[i] - G[j]) / quad;
      const double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > C) {
        if (alpha[i] > C) {
          alpha[i] = C;
          alpha[j] = sum - C;
        }
      } else if (alpha[j] < 0) {
        alpha[j] = 0;
        alpha[i] = sum;
      }
      if (sum > C) {
        if (alpha[j] > C) {
          alpha[j] = C;
          alpha[i] = sum - C;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = sum;
      }
    }
    const double di = alpha[i] - old_i;
    const double dj = alpha[j] - old_j;
    for (Eigen::Index t = 0; t < n; ++t) G[t] += Q(t, i) * di + Q(t, j) * dj;
  }

  // bias from free vectors, else the midpoint of the feasible interval
  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();
  double sum_free = 0;
  int free = 0;
  for (Eigen::Index t = 0; t < n; ++t) {
    const double yg = y[t] * G[t];
    if (upper(t)) {
      if (y[t] < 0) ub = std::min(ub, yg); else lb = std::max(lb, yg);
    } else if (lower(t)) {
      if (y[t] > 0) ub = std::min(ub, yg); else lb = std::max(lb, yg);
    } else {
      ++free;
      sum_free += yg;
    }
  }
  const double rho = free > 0 ? sum_free / free : (ub + lb) / 2;

  SvmModel& m = out.model;
  m.params = params;
  m.dimension = static_cast<std::size_t>(X.cols());
  m.bias = -rho;
  m.iterations = iter;
  m.converged = converged;
  if (params.kernel == KernelKind::Linear) {
    m.weights = X.transpose() * alpha.cwiseProduct(y);
  } else {
    std::vector<Eigen::Index> sv;
    for (Eigen::Index t = 0; t < n; ++t) {
      if (alpha[t] > 0) sv.push_back(t);
    }
    m.support_vectors.resize(static_cast<Eigen::Index>(sv.size()), X.cols());
    m.dual_coef.resize(static_cast<Eigen::Index>(sv.size()));
    for (std::size_t s = 0; s < sv.size(); ++s) {
      m.support_vectors.row(static_cast<Eigen::Index>(s)) = X.row(sv[s]);
      m.dual_coef[static_cast<Eigen::Index>(s)] = alpha[sv[s]] * y[sv[s]];
    }
  }
  out.alpha = alpha;
  out.gap = gap;
  return out;
}

SvmModel train_svm(const Matrix& X, const Labels& y, const SvmParams& params) {
  return train_svm_detailed(X, y, params).model;
}

double kkt_residual(const Matrix& X, const Labels& labels, const SvmTraining& t) {
  const double C = t.model.params.C;
  double worst = 0;
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    const double yi = labels[static_cast<std::size_t>(i)] == 1 ? 1.0 : -1.0;
    const double margin = yi * t.model.decision(X.row(i).transpose()) - 1.0;
    double v = 0;
    if (t.alpha[i] <= 0) {
      v = std::max(0.0, -margin);
    } else if (t.alpha[i] >= C) {
      v = std::max(0.0, margin);
    } else {
      v = std::abs(margin);
    }
    worst = std::max(worst, v);
  }
  return worst;
}

}  // namespace ordo::learn
