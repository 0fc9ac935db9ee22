#include "ordo/learn/model_bundle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ordo::learn {

namespace {

using nlohmann::json;

json vec_json(const Vector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Vector vec_from(const json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

json mat_json(const Matrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  }
  j["data"] = data;
  return j;
}

Matrix mat_from(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto data = j.at("data").get<std::vector<double>>();
  if (static_cast<Eigen::Index>(data.size()) != rows * cols) throw std::runtime_error("model bundle: matrix size mismatch");
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[static_cast<std::size_t>(r * cols + c)];
  }
  return m;
}

json params_json(const PipelineParams& p) {
  return json{{"kernel", to_string(p.svm.kernel)}, {"C", p.svm.C},       {"gamma", p.svm.gamma},
              {"tolerance", p.svm.tolerance},      {"mi_k", p.mi_k},     {"pca_k", p.pca_k},
              {"bins", p.bins},                    {"max_iterations", p.svm.max_iterations}};
}

PipelineParams params_from(const json& j) {
  PipelineParams p;
  p.svm.kernel = parse_kernel(j.at("kernel").get<std::string>());
  p.svm.C = j.at("C").get<double>();
  p.svm.gamma = j.at("gamma").get<double>();
  p.svm.tolerance = j.at("tolerance").get<double>();
  p.svm.max_iterations = j.at("max_iterations").get<std::size_t>();
  p.mi_k = j.at("mi_k").get<std::size_t>();
  p.pca_k = j.at("pca_k").get<std::size_t>();
  p.bins = j.at("bins").get<int>();
  return p;
}

json pipeline_json(const Pipeline& p) {
  json j;
  if (p.constant) {
    j["constant"] = *p.constant == 1 ? "Good" : "Bad";
    return j;
  }
  j["standardizer"] = {{"mean", vec_json(p.standardizer.mean)}, {"std", vec_json(p.standardizer.std)}};
  j["mi_mask"] = p.mask;
  j["pca"] = {{"components", mat_json(p.pca.components)},
              {"explained_variance", vec_json(p.pca.explained_variance)},
              {"mean", vec_json(p.pca.mean)},
              {"total_variance", p.pca.total_variance}};
  json svm = {{"dimension", p.svm.dimension},
              {"bias", p.svm.bias},
              {"iterations", p.svm.iterations},
              {"converged", p.svm.converged},
              {"params", params_json(PipelineParams{p.svm.params})}};
  if (p.svm.params.kernel == KernelKind::Linear) {
    svm["weights"] = vec_json(p.svm.weights);
  } else {
    svm["support_vectors"] = mat_json(p.svm.support_vectors);
    svm["dual_coef"] = vec_json(p.svm.dual_coef);
  }
  j["svm"] = svm;
  return j;
}

Pipeline pipeline_from(const json& j) {
  Pipeline p;
  if (j.contains("constant")) {
    p.constant = j.at("constant").get<std::string>() == "Good" ? 1 : 0;
    return p;
  }
  p.standardizer.mean = vec_from(j.at("standardizer").at("mean"));
  p.standardizer.std = vec_from(j.at("standardizer").at("std"));
  p.mask = j.at("mi_mask").get<std::vector<std::size_t>>();
  const auto& pca = j.at("pca");
  p.pca.components = mat_from(pca.at("components"));
  p.pca.explained_variance = vec_from(pca.at("explained_variance"));
  p.pca.mean = vec_from(pca.at("mean"));
  p.pca.total_variance = pca.at("total_variance").get<double>();
  const auto& svm = j.at("svm");
  p.svm.params = params_from(svm.at("params")).svm;
  p.svm.dimension = svm.at("dimension").get<std::size_t>();
  p.svm.bias = svm.at("bias").get<double>();
  p.svm.iterations = svm.at("iterations").get<std::size_t>();
  p.svm.converged = svm.at("converged").get<bool>();
  if (p.svm.params.kernel == KernelKind::Linear) {
    p.svm.weights = vec_from(svm.at("weights"));
  } else {
    p.svm.support_vectors = mat_from(svm.at("support_vectors"));
    p.svm.dual_coef = vec_from(svm.at("dual_coef"));
  }
  const auto d = static_cast<Eigen::Index>(kFeatureCount);
  if (p.standardizer.mean.size() != d || p.standardizer.std.size() != d) {
    throw std::runtime_error("model bundle: standardizer does not match the feature schema");
  }
  for (auto m : p.mask) {
    if (m >= kFeatureCount) throw std::runtime_error("model bundle: mask index out of range");
  }
  if (p.pca.components.cols() != static_cast<Eigen::Index>(p.mask.size()) ||
      p.svm.dimension != static_cast<std::size_t>(p.pca.components.rows())) {
    throw std::runtime_error("model bundle: inconsistent stage dimensions");
  }
  return p;
}

}  // namespace

std::string ModelBundle::to_json() const {
  json j;
  j["format"] = "ordo-model-bundle";
  j["version"] = kBundleVersion;
  j["seed"] = seed;
  j["feature_names"] = std::vector<std::string>(feature_names().begin(), feature_names().end());
  j["priority"] = priority;
  json cfgs = json::array();
  for (std::size_t i = 0; i < kOrderSetCount; ++i) {
    const auto& c = configs[i];
    cfgs.push_back({{"config", i + 1},
                    {"order", standard_order_sets()[i].source()},
                    {"cv_accuracy", c.cv_accuracy},
                    {"holdout_f1", c.holdout_f1},
                    {"train_rows", c.train_rows},
                    {"test_rows", c.test_rows},
                    {"params", params_json(c.params)},
                    {"model", pipeline_json(c.pipeline)}});
  }
  j["configs"] = cfgs;
  return j.dump(1);
}

ModelBundle ModelBundle::from_json(std::string_view text) {
  const json j = json::parse(text);
  if (j.at("version").get<int>() != kBundleVersion) throw std::runtime_error("model bundle: unsupported version");
  ModelBundle b;
  b.seed = j.at("seed").get<std::uint64_t>();
  b.priority = j.at("priority").get<std::array<int, kOrderSetCount>>();
  const auto& cfgs = j.at("configs");
  if (cfgs.size() != kOrderSetCount) throw std::runtime_error("model bundle: expected 7 configs");
  for (const auto& c : cfgs) {
    const auto i = c.at("config").get<std::size_t>() - 1;
    if (i >= kOrderSetCount) throw std::runtime_error("model bundle: config out of range");
    auto& m = b.configs[i];
    m.cv_accuracy = c.at("cv_accuracy").get<double>();
    m.holdout_f1 = c.at("holdout_f1").get<double>();
    m.train_rows = c.at("train_rows").get<std::size_t>();
    m.test_rows = c.at("test_rows").get<std::size_t>();
    m.params = params_from(c.at("params"));
    m.pipeline = pipeline_from(c.at("model"));
  }
  return b;
}

void ModelBundle::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json() << '\n';
}

ModelBundle ModelBundle::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream s;
  s << in.rdbuf();
  return from_json(s.str());
}

std::array<int, kOrderSetCount> priorities_from_accuracy(const std::array<double, kOrderSetCount>& accuracy) {
  std::array<std::size_t, kOrderSetCount> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return accuracy[a] > accuracy[b]; });
  std::array<int, kOrderSetCount> rank{};
  for (std::size_t r = 0; r < kOrderSetCount; ++r) rank[order[r]] = static_cast<int>(r + 1);
  return rank;
}

std::size_t choose_config(const std::array<Label, kOrderSetCount>& predicted,
                          const std::array<int, kOrderSetCount>& priority,
                          const std::array<double, kOrderSetCount>& accuracy) {
  std::size_t best = kOrderSetCount;
  for (std::size_t i = 0; i < kOrderSetCount; ++i) {
    if (predicted[i] == Label::Good && (best == kOrderSetCount || priority[i] < priority[best])) best = i;
  }
  if (best == kOrderSetCount) {
    best = 0;
    for (std::size_t i = 1; i < kOrderSetCount; ++i) {
      if (accuracy[i] < accuracy[best]) best = i;
    }
  }
  return best + 1;
}

Selection select_order_config(const FeatureVector& fv, const ModelBundle& bundle) {
  Selection s;
  const Vector x = Eigen::Map<const Vector>(fv.data(), static_cast<Eigen::Index>(fv.size()));
  std::array<double, kOrderSetCount> accuracy{};
  for (std::size_t i = 0; i < kOrderSetCount; ++i) {
    s.predicted[i] = bundle.configs[i].pipeline.predict(x) == 1 ? Label::Good : Label::Bad;
    accuracy[i] = bundle.configs[i].cv_accuracy;
  }
  s.config = choose_config(s.predicted, bundle.priority, accuracy);
  return s;
}

ModelBundle train_bundle(const FeatureTable& features, const LabelTable& labels, const TrainOptions& options) {
  std::map<std::string, const LabelRow*> by_id;
  for (const auto& row : labels) by_id[row.ontology_id] = &row;
  std::vector<const FeatureRow*> feats;
  std::vector<const LabelRow*> labs;
  for (const auto& row : features) {
    auto it = by_id.find(row.ontology_id);
    if (it == by_id.end()) {
      if (options.on_warning) options.on_warning("no labels for " + row.ontology_id);
      continue;
    }
    feats.push_back(&row);
    labs.push_back(it->second);
  }
  if (feats.empty()) throw std::invalid_argument("train: no ontology has both features and labels");

  Matrix X(static_cast<Eigen::Index>(feats.size()), static_cast<Eigen::Index>(kFeatureCount));
  for (std::size_t r = 0; r < feats.size(); ++r) {
    for (std::size_t c = 0; c < kFeatureCount; ++c) X(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = feats[r]->values[c];
  }

  ModelBundle bundle;
  bundle.seed = options.seed;
  std::array<double, kOrderSetCount> accuracy{};
  for (std::size_t cfg = 0; cfg < kOrderSetCount; ++cfg) {
    Labels y;
    for (const auto* l : labs) y.push_back(l->labels[cfg] == Label::Good ? 1 : 0);
    const Split split = holdout_split(y, options.holdout, options.seed + cfg);
    const Matrix Xtr = take_rows(X, split.train);
    const Labels ytr = take_rows(y, split.train);
    ConfigModel& m = bundle.configs[cfg];
    m.train_rows = split.train.size();
    m.test_rows = split.test.size();

    const auto positives = static_cast<std::size_t>(std::count(ytr.begin(), ytr.end(), 1));
    const auto folds = std::min(options.folds, ytr.size());
    if (positives == 0 || positives == ytr.size() || folds < 2) {
      if (options.on_warning) {
        options.on_warning("config " + std::to_string(cfg + 1) + ": training labels have one class, using a constant model");
      }
      m.params = options.grid.empty() ? PipelineParams{} : options.grid.front();
      m.pipeline = fit_pipeline(Xtr, ytr, m.params);
      if (!m.pipeline.constant) m.pipeline.constant = positives * 2 >= ytr.size() ? 1 : 0;
      m.cv_accuracy = static_cast<double>(std::max(positives, ytr.size() - positives)) / static_cast<double>(ytr.size());
    } else {
      const GridResult g = grid_search(Xtr, ytr, options.grid, folds, options.seed + cfg);
      for (const auto& pt : g.points) {
        for (const auto& w : pt.cv.warnings) {
          if (options.on_warning) options.on_warning("config " + std::to_string(cfg + 1) + ": " + w);
        }
      }
      if (options.on_config) options.on_config(cfg + 1, g);
      m.params = g.best;
      m.cv_accuracy = g.best_accuracy;
      m.pipeline = fit_pipeline(Xtr, ytr, m.params);
    }
    if (!split.test.empty()) {
      Labels pred;
      for (auto i : split.test) pred.push_back(m.pipeline.predict(X.row(static_cast<Eigen::Index>(i)).transpose()));
      m.holdout_f1 = f1_score(take_rows(y, split.test), pred);
    }
    accuracy[cfg] = m.cv_accuracy;
  }
  bundle.priority = priorities_from_accuracy(accuracy);
  return bundle;
}

}  // namespace ordo::learn
