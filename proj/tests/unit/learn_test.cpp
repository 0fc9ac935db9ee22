#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "ordo/learn/model_bundle.hpp"
#include "ordo/learn/pipeline.hpp"
#include "ordo/learn/preprocess.hpp"
#include "ordo/learn/svm.hpp"
#include "ordo/synthetic.hpp"

using namespace ordo;
using namespace ordo::learn;

namespace {

// H(X) + H(Y) - H(X,Y), computed from scratch.
double entropy_mi(const std::vector<int>& x, const std::vector<int>& y) {
  const double n = static_cast<double>(x.size());
  std::map<int, double> px, py;
  std::map<std::pair<int, int>, double> pxy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    px[x[i]] += 1;
    py[y[i]] += 1;
    pxy[{x[i], y[i]}] += 1;
  }
  auto h = [n](const auto& m) {
    double s = 0;
    for (const auto& [k, c] : m) s -= c / n * std::log2(c / n);
    return s;
  };
  return h(px) + h(py) - h(pxy);
}

Matrix xor_points() {
  Matrix X(4, 2);
  X << 0, 0, 1, 1, 0, 1, 1, 0;
  return X;
}

double accuracy(const SvmModel& m, const Matrix& X, const Labels& y) {
  int hits = 0;
  for (Eigen::Index i = 0; i < X.rows(); ++i) hits += m.predict(X.row(i).transpose()) == y[i];
  return static_cast<double>(hits) / static_cast<double>(X.rows());
}

}  // namespace

TEST(Standardizer, CentersAndScales) {
  Matrix X(2, 1);
  X << 1, 3;
  const auto p = fit_standardizer(X);
  const Matrix Z = apply_standardizer(p, X);
  EXPECT_DOUBLE_EQ(Z(0, 0), -1.0);
  EXPECT_DOUBLE_EQ(Z(1, 0), 1.0);
}

TEST(Standardizer, ConstantColumnMapsToZero) {
  Matrix X(3, 2);
  X << 5, 1, 5, 2, 5, 3;
  const auto p = fit_standardizer(X);
  EXPECT_DOUBLE_EQ(p.std(0), 1.0);
  const Matrix Z = apply_standardizer(p, X);
  for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(Z(i, 0), 0.0);
}

TEST(Standardizer, NeedsTwoRows) { EXPECT_THROW(fit_standardizer(Matrix::Zero(1, 3)), std::invalid_argument); }

TEST(Bins, EqualFrequencyAndTies) {
  const std::vector<double> col{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const auto b = equal_frequency_bins(col, 5);
  EXPECT_EQ(b, (std::vector<int>{0, 0, 1, 1, 2, 2, 3, 3, 4, 4}));
  const std::vector<double> ties{7, 7, 7, 7};
  EXPECT_EQ(equal_frequency_bins(ties, 5), (std::vector<int>{0, 0, 0, 0}));
}

TEST(MutualInformation, IdenticalBalancedIsOneBit) {
  const std::vector<int> x{0, 1, 0, 1, 1, 0};
  EXPECT_NEAR(mutual_information(x, x), 1.0, 1e-12);
  const std::vector<int> c{0, 0, 0, 0, 0, 0};
  EXPECT_NEAR(mutual_information(c, x), 0.0, 1e-12);
}

TEST(MutualInformation, MatchesEntropyIdentity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 49;
    const int kx = 1 + static_cast<int>(rng() % 5);
    std::vector<int> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<int>(rng() % kx);
      y[i] = static_cast<int>(rng() % 2);
    }
    const double mi = mutual_information(x, y);
    EXPECT_GE(mi, 0.0);
    EXPECT_NEAR(mi, std::max(0.0, entropy_mi(x, y)), 1e-12);
  }
}

TEST(MutualInformation, SelectTopK) {
  Vector s(5);
  s << 0.1, 0.5, 0.5, 0.0, 0.3;
  EXPECT_EQ(select_top_k(s, 2), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(select_top_k(s, 3), (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_THROW(select_top_k(s, 6), std::invalid_argument);
}

TEST(Pca, RecoversDominantAxis) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> big(0, 10), small(0, 0.1);
  Matrix X(200, 3);
  for (int i = 0; i < 200; ++i) {
    const double t = big(rng);
    X.row(i) << t, t, small(rng);
  }
  const auto m = fit_pca(X, 2);
  EXPECT_NEAR(std::abs(m.components(0, 0)), 1 / std::sqrt(2.0), 1e-3);
  EXPECT_NEAR(std::abs(m.components(0, 1)), 1 / std::sqrt(2.0), 1e-3);
  const Matrix G = m.components * m.components.transpose();
  EXPECT_LT((G - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_GE(m.explained_variance(0), m.explained_variance(1));
}

TEST(Pca, ReconstructionErrorShrinksWithK) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0, 1);
  Matrix X(40, 6);
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 6; ++j) X(i, j) = g(rng) * (j + 1);
  double prev = INFINITY;
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto m = fit_pca(X, k);
    const double err = (reconstruct_pca(m, transform_pca(m, X)) - X).squaredNorm();
    EXPECT_LE(err, prev + 1e-9);
    prev = err;
  }
  EXPECT_LT(prev, 1e-12 * X.squaredNorm());
  EXPECT_THROW(fit_pca(X, 0), std::invalid_argument);
  EXPECT_THROW(fit_pca(X, 7), std::invalid_argument);
}

TEST(Svm, SeparatesTwoPoints) {
  Matrix X(2, 1);
  X << -1, 1;
  const Labels y{0, 1};
  const auto t = train_svm_detailed(X, y, SvmParams{});
  EXPECT_NEAR(t.model.decision(Vector::Constant(1, 1.0)), 1.0, 1e-3);
  EXPECT_NEAR(t.model.decision(Vector::Constant(1, -1.0)), -1.0, 1e-3);
  EXPECT_NEAR(t.model.weights(0), 1.0, 1e-3);
  EXPECT_NEAR(t.model.bias, 0.0, 1e-3);
}

TEST(Svm, XorNeedsKernel) {
  const Matrix X = xor_points();
  const Labels y{0, 0, 1, 1};
  EXPECT_LE(accuracy(train_svm(X, y, SvmParams{}), X, y), 0.75);
  SvmParams rbf;
  rbf.kernel = KernelKind::Rbf;
  rbf.C = 10;
  rbf.gamma = 1;
  EXPECT_DOUBLE_EQ(accuracy(train_svm(X, y, rbf), X, y), 1.0);
}

TEST(Svm, ConflictingDuplicateStaysBounded) {
  Matrix X(3, 1);
  X << 0, 0, 2;
  const Labels y{0, 1, 1};
  const auto t = train_svm_detailed(X, y, SvmParams{});
  EXPECT_TRUE(t.model.converged);
  EXPECT_LE(t.alpha.maxCoeff(), 1.0 + 1e-12);
}

TEST(Svm, RejectsBadInput) {
  Matrix X(2, 1);
  X << 0, 1;
  EXPECT_THROW(train_svm(X, Labels{1, 1}, SvmParams{}), std::invalid_argument);
  SvmParams p;
  p.C = 0;
  EXPECT_THROW(train_svm(X, Labels{0, 1}, p), std::invalid_argument);
}

TEST(Svm, KktHoldsOnRandomData) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0, 1);
  for (auto kernel : {KernelKind::Linear, KernelKind::Rbf}) {
    Matrix X(60, 4);
    Labels y(60);
    for (int i = 0; i < 60; ++i) {
      for (int j = 0; j < 4; ++j) X(i, j) = g(rng);
      y[i] = X(i, 0) + 0.5 * g(rng) > 0;
    }
    SvmParams p;
    p.kernel = kernel;
    const auto t = train_svm_detailed(X, y, p);
    EXPECT_TRUE(t.model.converged);
    EXPECT_LE(kkt_residual(X, y, t), 1e-3);
  }
}

TEST(Folds, StratifiedAndDisjoint) {
  Labels y(30, 0);
  for (int i = 0; i < 10; ++i) y[i] = 1;
  const auto folds = stratified_folds(y, 5, 1);
  ASSERT_EQ(folds.size(), 5u);
  std::vector<int> seen(30, 0);
  for (const auto& f : folds) {
    EXPECT_EQ(f.test.size(), 6u);
    EXPECT_EQ(f.train.size() + f.test.size(), 30u);
    int pos = 0;
    for (auto i : f.test) {
      ++seen[i];
      pos += y[i];
    }
    EXPECT_EQ(pos, 2);
  }
  for (int s : seen) EXPECT_EQ(s, 1);
  EXPECT_EQ(stratified_folds(y, 5, 1)[0].test, folds[0].test);
}

TEST(CrossValidate, PlantedSignalIsLearned) {
  const auto data = synthetic::planted_dataset(200, 1);
  PipelineParams p;
  p.pca_k = 10;
  const auto cv = cross_validate(data.X, data.y, p, 10, 0);
  EXPECT_EQ(cv.folds_run, 10u);
  EXPECT_GE(cv.accuracy, 0.9);
}

TEST(GridSearch, SeparablePlantedDataFavoursLinear) {
  const auto data = synthetic::planted_dataset(200, 1, 0.0);
  const auto r = grid_search(data.X, data.y, default_grid(), 10, 0);
  EXPECT_GE(r.best_accuracy, 0.99);
  EXPECT_EQ(r.best.svm.kernel, KernelKind::Linear);
  double top = 0;
  for (const auto& p : r.points) top = std::max(top, p.cv.accuracy);
  EXPECT_DOUBLE_EQ(top, r.best_accuracy);
}

TEST(CrossValidate, RandomLabelsNearChance) {
  auto data = synthetic::planted_dataset(200, 2);
  std::mt19937_64 rng(9);
  for (auto& v : data.y) v = static_cast<int>(rng() % 2);
  const auto cv = cross_validate(data.X, data.y, PipelineParams{}, 10, 0);
  EXPECT_NEAR(cv.accuracy, 0.5, 0.15);
}

TEST(CrossValidate, LeaveOneOut) {
  const auto data = synthetic::planted_dataset(30, 4, 0.0);
  const auto cv = cross_validate(data.X, data.y, PipelineParams{}, 30, 0);
  EXPECT_EQ(cv.folds_run + cv.warnings.size(), 30u);
  EXPECT_GT(cv.accuracy, 0.5);
  EXPECT_THROW(cross_validate(data.X, data.y, PipelineParams{}, 31, 0), std::invalid_argument);
}

TEST(CrossValidate, MiRanksInformativeColumns) {
  const auto data = synthetic::planted_dataset(200, 1);
  const auto scores = mutual_information_scores(apply_standardizer(fit_standardizer(data.X), data.X), data.y);
  const auto top = select_top_k(scores, 40);
  for (auto i : data.informative) EXPECT_NE(std::find(top.begin(), top.end(), i), top.end()) << i;
}

TEST(GridSearch, SinglePointAndTies) {
  const auto data = synthetic::planted_dataset(60, 3);
  const std::vector<PipelineParams> one{PipelineParams{}};
  const auto r = grid_search(data.X, data.y, one, 5, 0);
  EXPECT_EQ(r.best, one[0]);
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_DOUBLE_EQ(r.best_accuracy, r.points[0].cv.accuracy);
  const auto twice = grid_search(data.X, data.y, {one[0], one[0]}, 5, 0);
  EXPECT_DOUBLE_EQ(twice.points[0].cv.accuracy, twice.points[1].cv.accuracy);
  EXPECT_THROW(grid_search(data.X, data.y, {}, 5, 0), std::invalid_argument);
  EXPECT_EQ(default_grid().size(), 48u);
}

TEST(Holdout, StratifiedRounding) {
  Labels y(20, 0);
  for (int i = 0; i < 8; ++i) y[i] = 1;
  const auto s = holdout_split(y, 0.25, 0);
  int pos = 0;
  for (auto i : s.test) pos += y[i];
  EXPECT_EQ(pos, 2);
  EXPECT_EQ(s.test.size(), 5u);
  EXPECT_EQ(s.train.size(), 15u);
}

TEST(F1, Basics) {
  EXPECT_DOUBLE_EQ(f1_score({1, 1, 0, 0}, {1, 0, 1, 0}), 0.5);
  EXPECT_DOUBLE_EQ(f1_score({1, 1}, {1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(f1_score({0, 0}, {0, 0}), 0.0);
}

TEST(Selection, PriorityAndFallback) {
  const std::array<double, kOrderSetCount> acc{77, 85, 80, 82, 76, 71, 83};
  const auto pri = priorities_from_accuracy(acc);
  EXPECT_EQ(pri, (std::array<int, kOrderSetCount>{5, 1, 4, 3, 6, 7, 2}));
  using L = Label;
  auto labels = [](std::initializer_list<std::size_t> good) {
    std::array<Label, kOrderSetCount> a{};
    a.fill(L::Bad);
    for (auto g : good) a[g - 1] = L::Good;
    return a;
  };
  EXPECT_EQ(choose_config(labels({4, 5, 6}), pri, acc), 4u);
  EXPECT_EQ(choose_config(labels({1, 2, 3, 5, 6, 7}), pri, acc), 2u);
  EXPECT_EQ(choose_config(labels({3, 7}), pri, acc), 7u);
  EXPECT_EQ(choose_config(labels({}), pri, acc), 6u);
  EXPECT_EQ(choose_config(labels({1}), pri, acc), 1u);
}

TEST(Bundle, TrainAndRoundTrip) {
  const auto data = synthetic::planted_dataset(80, 6);
  FeatureTable features;
  LabelTable labels;
  for (Eigen::Index i = 0; i < data.X.rows(); ++i) {
    FeatureRow row;
    row.ontology_id = "o" + std::to_string(i);
    for (std::size_t j = 0; j < kFeatureCount; ++j) row.values[j] = data.X(i, static_cast<Eigen::Index>(j));
    features.push_back(row);
    LabelRow lr;
    lr.ontology_id = row.ontology_id;
    for (std::size_t c = 0; c < kOrderSetCount; ++c) {
      const bool good = c == 2 ? true : (c % 2 == 0 ? data.y[i] == 1 : data.y[i] == 0);
      lr.labels[c] = good ? Label::Good : Label::Bad;
    }
    labels.push_back(lr);
  }
  TrainOptions opt;
  opt.grid = {PipelineParams{}};
  opt.folds = 5;
  opt.seed = 42;
  const auto bundle = train_bundle(features, labels, opt);
  EXPECT_TRUE(bundle.configs[2].pipeline.constant.has_value());
  EXPECT_GT(bundle.configs[0].cv_accuracy, 0.8);

  const auto back = ModelBundle::from_json(bundle.to_json());
  EXPECT_EQ(back.priority, bundle.priority);
  EXPECT_EQ(back.seed, 42u);
  for (const auto& row : features) {
    const auto a = select_order_config(row.values, bundle);
    const auto b = select_order_config(row.values, back);
    EXPECT_EQ(a.config, b.config);
    EXPECT_EQ(a.predicted, b.predicted);
  }
  EXPECT_EQ(back.to_json(), bundle.to_json());

  LabelTable stranger{LabelRow{"nobody", {}}};
  EXPECT_THROW(train_bundle(features, stranger, opt), std::invalid_argument);
}
