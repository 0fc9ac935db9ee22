// ordo: command-line front end for parsing, reasoning, benchmarking and
// order-set learning.
//
// Exit codes: 0 ok, 1 usage error, 2 data error, 3 timeout-dominated run.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "ordo/bench.hpp"
#include "ordo/features.hpp"
#include "ordo/learn/model_bundle.hpp"
#include "ordo/ofs.hpp"
#include "ordo/reasoner.hpp"
#include "ordo/synthetic.hpp"
#include "ordo/tables.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace ordo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitTimeout = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OrderConfig resolve_config(const std::string& text) {
  if (text.size() == 1 && text[0] >= '1' && text[0] <= '7') return order_set(text[0] - '0');
  try {
    return OrderConfig::parse(text);
  } catch (const InvalidConfig& e) {
    throw UsageError(std::string("--config: ") + e.what());
  }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TODO_TABLEAU_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("TODO_TABLEAU_SEED is not an unsigned integer");
    }
  }
  return 0;
}

// set while a file is being parsed so errors can name it
std::string g_current_file;

SourceDocument load(const fs::path& path) {
  g_current_file = path.string();
  auto doc = load_document(path);
  g_current_file.clear();
  return doc;
}

/// Files as given; directories contribute their *.ofs files, sorted.
std::vector<CorpusEntry> load_corpus(const std::vector<std::string>& paths) {
  std::vector<fs::path> files;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::directory_iterator(p)) {
        if (e.is_regular_file() && e.path().extension() == ".ofs") found.push_back(e.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.emplace_back(p);
    }
  }
  std::vector<CorpusEntry> corpus;
  for (const auto& f : files) {
    corpus.push_back(CorpusEntry{f.stem().string(), load(f)});
  }
  return corpus;
}

std::ostream& output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

std::string ms(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << v;
  return os.str();
}

std::string runtime_cell(const Runtime& r) { return r ? ms(*r) : "TO"; }

json stats_json(const ExpansionStats& s) {
  json rules;
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    rules[std::string(rule_name(static_cast<Rule>(i)))] = s.rule_applications[i];
  }
  return {{"rule_applications", rules}, {"nodes_created", s.nodes_created}, {"merges", s.merges},
          {"backtracks", s.backtracks}, {"branch_points", s.branch_points}, {"wall_ms", s.wall_ms}};
}

void print_stats(std::ostream& out, const ExpansionStats& s) {
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    out << "rule_" << rule_name(static_cast<Rule>(i)) << ' ' << s.rule_applications[i] << '\n';
  }
  out << "nodes_created " << s.nodes_created << "\nmerges " << s.merges << "\nbacktracks " << s.backtracks
      << "\nbranch_points " << s.branch_points << "\nwall_ms " << ms(s.wall_ms) << '\n';
}

// ---- subcommands ----

struct Common {
  std::string format = "text";
  std::string config = std::string(jfact_default_order().source());
  long timeout_ms = kDefaultTimeout.count();
  std::optional<std::uint64_t> seed;
};

int cmd_parse(const std::string& file, bool canonical, const std::string& format) {
  const auto doc = load(file);
  if (canonical) {
    std::cout << serialize_document(doc);
    return kExitOk;
  }
  const auto kb = doc.knowledge_base();
  if (format == "json") {
    std::cout << json{{"axioms", doc.axioms.size()},       {"logical_axioms", kb.logical_axiom_count()},
                      {"tbox", kb.tbox.size()},            {"rbox", kb.rbox.size()},
                      {"abox", kb.abox.size()},            {"classes", kb.classes.size()},
                      {"roles", kb.roles.size()},          {"individuals", kb.individuals.size()}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "axioms " << doc.axioms.size() << "\nlogical_axioms " << kb.logical_axiom_count() << "\ntbox "
              << kb.tbox.size() << "\nrbox " << kb.rbox.size() << "\nabox " << kb.abox.size() << "\nclasses "
              << kb.classes.size() << "\nroles " << kb.roles.size() << "\nindividuals " << kb.individuals.size()
              << '\n';
  }
  return kExitOk;
}

int cmd_check(const std::string& file, const std::string& concept_text, const Common& c) {
  const auto kb = load(file).knowledge_base();
  const Concept concept_expr = parse_concept(concept_text);
  const OrderConfig cfg = resolve_config(c.config);
  const auto r = check_satisfiability(kb, concept_expr, cfg, std::chrono::milliseconds(c.timeout_ms));
  if (c.format == "json") {
    std::cout << json{{"verdict", to_string(r.verdict)}, {"config", cfg.source()}, {"stats", stats_json(r.stats)}}
                     .dump(2)
              << '\n';
  } else if (c.format == "csv") {
    std::cout << "verdict,config," << ExpansionStats::csv_header() << '\n'
              << to_string(r.verdict) << ',' << cfg.source() << ',' << r.stats.csv_row() << '\n';
  } else {
    std::cout << to_string(r.verdict) << "\nconfig " << cfg.source() << '\n';
    print_stats(std::cout, r.stats);
  }
  return r.verdict == Verdict::Timeout ? kExitTimeout : kExitOk;
}

int cmd_classify(const std::string& file, const Common& c) {
  const auto kb = load(file).knowledge_base();
  const OrderConfig cfg = resolve_config(c.config);
  const auto r = classify_hierarchy(kb, cfg, std::chrono::milliseconds(c.timeout_ms));
  if (r.status == Verdict::Timeout) {
    std::cerr << "classification timed out after " << r.checks << " checks\n";
    return kExitTimeout;
  }
  if (c.format == "json") {
    std::cout << json{{"config", cfg.source()},
                      {"checks", r.checks},
                      {"wall_ms", r.wall_ms},
                      {"hierarchy", r.hierarchy.export_lines()},
                      {"stats", stats_json(r.stats)}}
                     .dump(2)
              << '\n';
  } else {
    for (const auto& line : r.hierarchy.export_lines()) std::cout << line << '\n';
    std::cerr << r.checks << " checks, " << ms(r.wall_ms) << " ms, config " << cfg.source() << '\n';
  }
  return kExitOk;
}

int cmd_features(const std::vector<std::string>& paths, const std::string& out_path, const std::string& format) {
  FeatureTable table;
  for (const auto& e : load_corpus(paths)) table.push_back(FeatureRow{e.ontology_id, extract_features(e.document)});
  std::ofstream file;
  std::ostream& out = output(out_path, file);
  if (format == "json") {
    json rows = json::array();
    for (const auto& row : table) {
      json f;
      for (std::size_t i = 0; i < kFeatureCount; ++i) f[std::string(feature_names()[i])] = row.values[i];
      rows.push_back({{"ontology_id", row.ontology_id}, {"features", f}});
    }
    out << rows.dump(2) << '\n';
  } else {
    write_feature_table(out, table);
  }
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& paths, const std::string& out_path, long timeout_ms, int repeats,
              unsigned jobs) {
  const auto corpus = load_corpus(paths);
  BenchmarkOptions opt;
  opt.repeats = repeats;
  opt.timeout = std::chrono::milliseconds(timeout_ms);
  const auto records = benchmark_corpus(corpus, standard_order_sets(), opt, jobs, [](const RuntimeRecord& r) {
    std::cerr << r.ontology_id;
    for (const auto& v : r.runtimes) std::cerr << ' ' << runtime_cell(v);
    std::cerr << '\n';
  });
  std::ofstream file;
  write_benchmark_table(output(out_path, file), records);
  std::size_t cells = 0;
  std::size_t timeouts = 0;
  for (const auto& r : records) {
    for (const auto& v : r.runtimes) {
      ++cells;
      timeouts += !v;
    }
  }
  return cells > 0 && 2 * timeouts > cells ? kExitTimeout : kExitOk;
}

int cmd_filter(const std::string& in, double delta, const std::string& out_path, const std::string& excluded_path) {
  const auto records = read_benchmark_table(fs::path(in));
  const auto res = filter_corpus(records, delta);
  for (std::size_t i = 0; i < res.excluded.size(); ++i) {
    std::cerr << "excluded " << res.excluded[i].ontology_id << ": " << res.reasons[i] << '\n';
  }
  std::ofstream file;
  write_benchmark_table(output(out_path, file), res.kept);
  if (!excluded_path.empty()) write_benchmark_table(fs::path(excluded_path), res.excluded);
  std::cerr << res.kept.size() << " kept, " << res.excluded.size() << " excluded\n";
  return kExitOk;
}

int cmd_threshold(const std::string& in, const std::string& out_path, const std::string& format) {
  const auto report = compute_threshold(read_benchmark_table(fs::path(in)));
  std::ofstream file;
  std::ostream& out = output(out_path, file);
  if (format == "csv") {
    out << "config,order,mean,std,mean_plus_std,samples\n";
    for (std::size_t i = 0; i < kOrderSetCount; ++i) {
      const auto& m = report.configs[i];
      out << i + 1 << ',' << standard_order_sets()[i].source() << ',';
      if (m) {
        out << format_number(m->mean) << ',' << format_number(m->std) << ',' << format_number(m->threshold()) << ','
            << m->samples << '\n';
      } else {
        out << ",,,0\n";
      }
    }
    out << "tau_ms," << report.tau_ms << ",,,,\n"
        << "tau_exact," << format_number(report.tau_exact) << ",,,,\n";
  } else {
    out << report.to_json() << '\n';
  }
  if (!out_path.empty()) std::cerr << "tau " << format_number(report.tau_exact) << " ms\n";
  return kExitOk;
}

int cmd_label(const std::string& in, const std::string& threshold_path, std::optional<double> tau,
              const std::string& out_path) {
  if (!tau) {
    if (threshold_path.empty()) throw UsageError("label needs --threshold or --tau");
    std::ifstream t(threshold_path);
    if (!t) throw std::runtime_error("cannot read " + threshold_path);
    std::stringstream buf;
    buf << t.rdbuf();
    tau = ThresholdReport::from_json(buf.str()).tau_exact;
  }
  const auto labels = assign_labels(read_benchmark_table(fs::path(in)), *tau);
  std::ofstream file;
  write_label_table(output(out_path, file), labels);
  return kExitOk;
}

std::vector<learn::PipelineParams> quick_grid() {
  learn::PipelineParams lin;
  lin.pca_k = 5;
  learn::PipelineParams rbf = lin;
  rbf.svm.kernel = learn::KernelKind::Rbf;
  return {lin, rbf};
}

int cmd_train(const std::string& features, const std::string& labels, const std::string& out_path,
              std::size_t folds, double holdout, bool quick, std::uint64_t seed) {
  learn::TrainOptions opt;
  opt.folds = folds;
  opt.holdout = holdout;
  opt.seed = seed;
  if (quick) opt.grid = quick_grid();
  opt.on_config = [](std::size_t cfg, const learn::GridResult& g) {
    std::cerr << "config " << cfg << ": " << g.best.describe() << " cv " << ms(g.best_accuracy) << '\n';
  };
  opt.on_warning = [](const std::string& w) { std::cerr << "warning: " << w << '\n'; };
  const auto bundle =
      learn::train_bundle(read_feature_table(fs::path(features)), read_label_table(fs::path(labels)), opt);
  if (out_path.empty() || out_path == "-") {
    std::cout << bundle.to_json() << '\n';
  } else {
    bundle.save(out_path);
  }
  for (std::size_t i = 0; i < kOrderSetCount; ++i) {
    std::cerr << "config " << i + 1 << " priority " << bundle.priority[i] << " cv "
              << ms(bundle.configs[i].cv_accuracy) << " holdout_f1 " << ms(bundle.configs[i].holdout_f1) << '\n';
  }
  return kExitOk;
}

int cmd_predict(const std::string& model, const std::string& file, const std::string& format) {
  const auto bundle = learn::ModelBundle::load(model);
  const auto sel = learn::select_order_config(extract_features(load(file)), bundle);
  const auto& chosen = standard_order_sets()[sel.config - 1];
  if (format == "json") {
    json per = json::array();
    for (std::size_t i = 0; i < kOrderSetCount; ++i) {
      per.push_back({{"config", i + 1},
                     {"order", standard_order_sets()[i].source()},
                     {"label", to_string(sel.predicted[i])}});
    }
    std::cout << json{{"config", sel.config}, {"order", chosen.source()}, {"predictions", per}}.dump(2) << '\n';
  } else {
    std::cout << chosen.source() << '\n';
    for (std::size_t i = 0; i < kOrderSetCount; ++i) {
      std::cout << i + 1 << ' ' << standard_order_sets()[i].source() << ' ' << to_string(sel.predicted[i]) << '\n';
    }
  }
  return kExitOk;
}

int cmd_run(const std::string& model, const std::string& file, bool compare_all, long timeout_ms,
            const std::string& format) {
  const auto doc = load(file);
  const auto kb = doc.knowledge_base();
  const auto bundle = learn::ModelBundle::load(model);
  const auto sel = learn::select_order_config(extract_features(doc), bundle);
  const auto budget = std::chrono::milliseconds(timeout_ms);

  std::array<std::optional<ClassificationResult>, kOrderSetCount> runs;
  runs[sel.config - 1] = classify_hierarchy(kb, standard_order_sets()[sel.config - 1], budget);
  if (compare_all) {
    for (std::size_t i = 0; i < kOrderSetCount; ++i) {
      if (!runs[i]) runs[i] = classify_hierarchy(kb, standard_order_sets()[i], budget);
    }
  }
  auto cell = [&](std::size_t i) -> Runtime {
    if (!runs[i] || runs[i]->status == Verdict::Timeout) return std::nullopt;
    return runs[i]->wall_ms;
  };
  const Runtime selected = cell(sel.config - 1);

  json j{{"config", sel.config}, {"order", standard_order_sets()[sel.config - 1].source()}};
  j["selected_ms"] = selected ? json(*selected) : json("TO");
  std::ostringstream text;
  text << "selected " << sel.config << ' ' << standard_order_sets()[sel.config - 1].source() << ' '
       << runtime_cell(selected) << " ms\n";

  if (compare_all) {
    // a timed-out config counts at the full budget, so ratios against it are lower bounds
    const double cap = static_cast<double>(timeout_ms);
    double worst = 0;
    double best = INFINITY;
    bool worst_capped = false;
    json sweep = json::array();
    for (std::size_t i = 0; i < kOrderSetCount; ++i) {
      const Runtime r = cell(i);
      const double v = r ? *r : cap;
      if (v > worst) {
        worst = v;
        worst_capped = !r;
      }
      best = std::min(best, v);
      sweep.push_back({{"config", i + 1}, {"order", standard_order_sets()[i].source()},
                       {"ms", r ? json(*r) : json("TO")}});
      text << "config " << i + 1 << ' ' << standard_order_sets()[i].source() << ' ' << runtime_cell(r) << '\n';
    }
    const double sel_ms = std::max(selected ? *selected : cap, 1e-6);
    const double vs_worst = worst / sel_ms;
    const double vs_best = best / sel_ms;
    j["sweep"] = sweep;
    j["speedup_vs_worst"] = vs_worst;
    j["speedup_vs_worst_is_lower_bound"] = worst_capped;
    j["ratio_to_best"] = vs_best;
    text << "speedup_vs_worst " << (worst_capped ? ">=" : "") << format_number(vs_worst) << '\n'
         << "ratio_to_best " << format_number(vs_best) << '\n';
  }
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text.str();
  }
  return selected ? kExitOk : kExitTimeout;
}

int cmd_generate(const std::string& kind, std::size_t count, std::size_t size, std::size_t depth,
                 const std::string& out_dir, std::uint64_t seed) {
  fs::create_directories(out_dir);
  for (std::size_t i = 0; i < count; ++i) {
    SourceDocument doc;
    std::string name;
    if (kind == "random") {
      doc = synthetic::random_kb(seed + i);
      name = "random_" + std::to_string(seed + i);
    } else {
      doc = synthetic::disjunction_bomb(size + i, depth);
      name = "bomb_" + std::to_string(size + i) + "_" + std::to_string(depth);
    }
    const fs::path path = fs::path(out_dir) / (name + ".ofs");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_document(doc);
    std::cout << path.string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tableau reasoning with learned rule orderings"};
  app.require_subcommand(1);
  int code = kExitOk;

  Common common;
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(allowed));
  };
  auto add_reasoning = [&](CLI::App* sub) {
    sub->add_option("--config", common.config,
                    "Order set: label 1-7 or a 6/7-digit priority string (default: stock JFact order)");
    sub->add_option("--timeout", common.timeout_ms, "Budget in milliseconds")->check(CLI::PositiveNumber);
  };

  std::string file;
  std::vector<std::string> paths;
  std::string out_path;

  auto* parse = app.add_subcommand("parse", "Parse an ontology and summarize it");
  bool canonical = false;
  parse->add_option("file", file, "Ontology in functional syntax")->required()->check(CLI::ExistingFile);
  parse->add_flag("--canonical", canonical, "Print the canonical serialization instead");
  add_format(parse, {"text", "json"});
  parse->callback([&] { code = cmd_parse(file, canonical, common.format); });

  auto* check = app.add_subcommand("check", "Test satisfiability of a class expression");
  std::string concept_text;
  check->add_option("file", file, "Ontology")->required()->check(CLI::ExistingFile);
  check->add_option("--concept", concept_text, "Class expression, e.g. :A or ObjectSomeValuesFrom(:R :B)")
      ->required();
  add_reasoning(check);
  add_format(check, {"text", "csv", "json"});
  check->callback([&] { code = cmd_check(file, concept_text, common); });

  auto* classify = app.add_subcommand("classify", "Compute the named-class hierarchy");
  classify->add_option("file", file, "Ontology")->required()->check(CLI::ExistingFile);
  add_reasoning(classify);
  add_format(classify, {"text", "json"});
  classify->callback([&] { code = cmd_classify(file, common); });

  auto* features = app.add_subcommand("features", "Extract the 48-column feature table");
  features->add_option("paths", paths, "Ontology files or directories")->required();
  features->add_option("--out", out_path, "Output file (default stdout)");
  add_format(features, {"csv", "json"});
  features->callback([&] { code = cmd_features(paths, out_path, common.format); });

  auto* bench = app.add_subcommand("bench", "Classify a corpus under all seven order sets");
  int repeats = kDefaultRepeats;
  unsigned jobs = 1;
  bool bench_full = false;
  bench->add_option("paths", paths, "Ontology files or directories")->required();
  bench->add_option("--out", out_path, "Benchmark CSV (default stdout)");
  bench->add_option("--timeout", common.timeout_ms, "Per-classification budget in ms")->check(CLI::PositiveNumber);
  bench->add_option("--repeats", repeats, "Runs per cell")->check(CLI::PositiveNumber);
  bench->add_option("--jobs", jobs, "Ontologies benchmarked in parallel")->check(CLI::PositiveNumber);
  bench->add_flag("--full-scale", bench_full, "Use the 500000 ms timeout");
  bench->callback([&] {
    code = cmd_bench(paths, out_path, bench_full ? kFullScaleTimeout.count() : common.timeout_ms, repeats, jobs);
  });

  auto* filter = app.add_subcommand("filter", "Drop rows that are order-insensitive or always time out");
  double delta = kDefaultDeltaMs;
  bool filter_full = false;
  std::string excluded_path;
  filter->add_option("runs", file, "Benchmark CSV")->required()->check(CLI::ExistingFile);
  filter->add_option("--delta", delta, "Minimum spread in ms")->check(CLI::NonNegativeNumber);
  filter->add_flag("--full-scale", filter_full, "Use delta = 2000 ms");
  filter->add_option("--out", out_path, "Kept rows (default stdout)");
  filter->add_option("--excluded", excluded_path, "Write excluded rows here");
  filter->callback([&] { code = cmd_filter(file, filter_full ? kFullScaleDeltaMs : delta, out_path, excluded_path); });

  auto* threshold = app.add_subcommand("threshold", "Derive the Good/Bad runtime threshold");
  threshold->add_option("runs", file, "Benchmark CSV")->required()->check(CLI::ExistingFile);
  threshold->add_option("--out", out_path, "Output file (default stdout)");
  common.format = "json";
  add_format(threshold, {"json", "csv"});
  threshold->callback([&] { code = cmd_threshold(file, out_path, common.format); });

  auto* label = app.add_subcommand("label", "Label each (ontology, order set) Good or Bad");
  std::string threshold_path;
  std::optional<double> tau;
  label->add_option("runs", file, "Benchmark CSV")->required()->check(CLI::ExistingFile);
  auto* topt = label->add_option("--threshold", threshold_path, "Threshold JSON")->check(CLI::ExistingFile);
  label->add_option("--tau", tau, "Threshold in ms")->excludes(topt);
  label->add_option("--out", out_path, "Label CSV (default stdout)");
  label->callback([&] { code = cmd_label(file, threshold_path, tau, out_path); });

  auto* train = app.add_subcommand("train", "Train one classifier per order set");
  std::string features_path;
  std::string labels_path;
  std::size_t folds = learn::kDefaultFolds;
  double holdout = learn::kDefaultHoldout;
  bool quick = false;
  train->add_option("--features", features_path, "Feature CSV")->required()->check(CLI::ExistingFile);
  train->add_option("--labels", labels_path, "Label CSV")->required()->check(CLI::ExistingFile);
  train->add_option("--out", out_path, "Model bundle JSON (default stdout)");
  train->add_option("--folds", folds, "Cross-validation folds")->check(CLI::Range(2, 1000));
  train->add_option("--holdout", holdout, "Held-out fraction")->check(CLI::Range(0.0, 0.9));
  train->add_flag("--quick", quick, "Two-point grid instead of the full 48-point one");
  train->add_option("--seed", common.seed, "Seed (falls back to TODO_TABLEAU_SEED, then 0)");
  train->callback([&] {
    code = cmd_train(features_path, labels_path, out_path, folds, holdout, quick, resolve_seed(common.seed));
  });

  auto* predict = app.add_subcommand("predict", "Choose an order set for an ontology");
  std::string model;
  predict->add_option("--model", model, "Model bundle JSON")->required()->check(CLI::ExistingFile);
  predict->add_option("file", file, "Ontology")->required()->check(CLI::ExistingFile);
  add_format(predict, {"text", "json"});
  predict->callback([&] { code = cmd_predict(model, file, common.format); });

  auto* run = app.add_subcommand("run", "Predict an order set, then classify with it");
  bool compare_all = false;
  run->add_option("--model", model, "Model bundle JSON")->required()->check(CLI::ExistingFile);
  run->add_option("file", file, "Ontology")->required()->check(CLI::ExistingFile);
  run->add_option("--timeout", common.timeout_ms, "Per-classification budget in ms")->check(CLI::PositiveNumber);
  run->add_flag("--compare-all", compare_all, "Also classify under every order set and report speedups");
  add_format(run, {"text", "json"});
  run->callback([&] { code = cmd_run(model, file, compare_all, common.timeout_ms, common.format); });

  auto* generate = app.add_subcommand("generate", "Write synthetic ontologies");
  std::string kind = "random";
  std::size_t count = 10;
  std::size_t size = 4;
  std::size_t depth = 1;
  generate->add_option("kind", kind, "random or bomb")->check(CLI::IsMember({"random", "bomb"}));
  generate->add_option("--out", out_path, "Output directory")->required();
  generate->add_option("--count", count, "Number of files")->check(CLI::PositiveNumber);
  generate->add_option("--size", size, "Bomb: disjunctions in the first file");
  generate->add_option("--depth", depth, "Bomb: role chain length")->check(CLI::PositiveNumber);
  generate->add_option("--seed", common.seed, "Seed (falls back to TODO_TABLEAU_SEED, then 0)");
  generate->callback([&] { code = cmd_generate(kind, count, size, depth, out_path, resolve_seed(common.seed)); });

  // threshold defaults to json; everything else to text or csv
  for (auto* sub : {parse, check, classify, predict, run}) {
    sub->preparse_callback([&](std::size_t) { common.format = "text"; });
  }
  features->preparse_callback([&](std::size_t) { common.format = "csv"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << (g_current_file.empty() ? std::string("<input>") : g_current_file) << ':' << e.line() << ':'
              << e.column() << ": " << e.message() << '\n';
    return kExitData;
  } catch (const TableError& e) {
    std::cerr << "table error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return code;
}
