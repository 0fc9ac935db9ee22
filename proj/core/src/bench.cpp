#include "ordo/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <nlohmann/json.hpp>
#include <thread>

#include "ordo/reasoner.hpp"

namespace ordo {

Runtime average_runtime(std::span<const Runtime> repeats) {
  if (repeats.empty()) return std::nullopt;
  double sum = 0;
  for (const auto& r : repeats) {
    if (!r) return std::nullopt;
    sum += *r;
  }
  return sum / static_cast<double>(repeats.size());
}

RuntimeRecord benchmark_ontology(std::string ontology_id, const SourceDocument& doc,
                                 std::span<const OrderConfig, kOrderSetCount> configs,
                                 const BenchmarkOptions& options) {
  RuntimeRecord record;
  record.ontology_id = std::move(ontology_id);
  const KnowledgeBase kb = doc.knowledge_base();
  const int repeats = std::max(options.repeats, 1);
  for (std::size_t i = 0; i < kOrderSetCount; ++i) {
    std::vector<Runtime> runs;
    for (int r = 0; r < repeats; ++r) {
      const auto result = classify_hierarchy(kb, configs[i], options.timeout);
      if (result.status == Verdict::Timeout) {
        runs.emplace_back(std::nullopt);
        break;
      }
      runs.emplace_back(result.wall_ms);
    }
    record.runtimes[i] = average_runtime(runs);
  }
  return record;
}

std::vector<RuntimeRecord> benchmark_corpus(std::span<const CorpusEntry> corpus,
                                            std::span<const OrderConfig, kOrderSetCount> configs,
                                            const BenchmarkOptions& options, unsigned jobs,
                                            const std::function<void(const RuntimeRecord&)>& progress) {
  std::vector<RuntimeRecord> out(corpus.size());
  std::atomic<std::size_t> next{0};
  std::mutex report;
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      out[i] = benchmark_ontology(corpus[i].ontology_id, corpus[i].document, configs, options);
      if (progress) {
        std::lock_guard lock(report);
        progress(out[i]);
      }
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(corpus.size())));
  if (n == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return out;
}

FilterResult filter_corpus(std::span<const RuntimeRecord> records, double delta_ms) {
  FilterResult out;
  for (const auto& rec : records) {
    std::size_t timeouts = 0;
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const auto& r : rec.runtimes) {
      if (!r) {
        ++timeouts;
        continue;
      }
      lo = std::min(lo, *r);
      hi = std::max(hi, *r);
    }
    if (timeouts == rec.runtimes.size()) {
      out.excluded.push_back(rec);
      out.reasons.emplace_back("timeout under every config");
    } else if (timeouts == 0 && hi - lo < delta_ms) {
      out.excluded.push_back(rec);
      out.reasons.push_back("spread " + std::to_string(hi - lo) + " ms below delta");
    } else {
      out.kept.push_back(rec);
    }
  }
  return out;
}

ThresholdReport threshold_from_moments(std::span<const ConfigMoments> moments) {
  ThresholdReport rep;
  double sum = 0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < moments.size() && i < kOrderSetCount; ++i) {
    if (moments[i].samples == 0) continue;
    rep.configs[i] = moments[i];
    sum += moments[i].threshold();
    ++used;
  }
  if (used > 0) {
    rep.tau_exact = sum / static_cast<double>(used);
    rep.tau_ms = static_cast<std::int64_t>(std::floor(rep.tau_exact));
  }
  return rep;
}

ThresholdReport compute_threshold(std::span<const RuntimeRecord> records) {
  std::array<ConfigMoments, kOrderSetCount> m{};
  for (std::size_t i = 0; i < kOrderSetCount; ++i) {
    double sum = 0;
    std::size_t n = 0;
    for (const auto& rec : records) {
      if (rec.runtimes[i]) {
        sum += *rec.runtimes[i];
        ++n;
      }
    }
    if (n == 0) continue;
    const double mean = sum / static_cast<double>(n);
    double ss = 0;
    for (const auto& rec : records) {
      if (rec.runtimes[i]) ss += (*rec.runtimes[i] - mean) * (*rec.runtimes[i] - mean);
    }
    m[i] = ConfigMoments{mean, std::sqrt(ss / static_cast<double>(n)), n};
  }
  return threshold_from_moments(m);
}

std::string ThresholdReport::to_json() const {
  nlohmann::json j;
  j["version"] = 1;
  j["tau_ms"] = tau_ms;
  j["tau_exact"] = tau_exact;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < kOrderSetCount; ++i) {
    nlohmann::json row;
    row["config"] = i + 1;
    row["order"] = standard_order_sets()[i].source();
    if (configs[i]) {
      row["mean"] = configs[i]->mean;
      row["std"] = configs[i]->std;
      row["mean_plus_std"] = configs[i]->threshold();
      row["samples"] = configs[i]->samples;
    } else {
      row["samples"] = 0;
    }
    rows.push_back(row);
  }
  j["configs"] = rows;
  return j.dump(2);
}

ThresholdReport ThresholdReport::from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  ThresholdReport rep;
  rep.tau_ms = j.at("tau_ms").get<std::int64_t>();
  rep.tau_exact = j.at("tau_exact").get<double>();
  for (const auto& row : j.at("configs")) {
    const auto i = row.at("config").get<std::size_t>() - 1;
    if (i >= kOrderSetCount) throw std::runtime_error("threshold report: config out of range");
    if (row.at("samples").get<std::size_t>() == 0) continue;
    rep.configs[i] = ConfigMoments{row.at("mean").get<double>(), row.at("std").get<double>(),
                                   row.at("samples").get<std::size_t>()};
  }
  return rep;
}

std::string_view to_string(Label l) { return l == Label::Good ? "Good" : "Bad"; }

Label label_for(const Runtime& runtime, double tau) {
  return runtime && *runtime < tau ? Label::Good : Label::Bad;
}

LabelTable assign_labels(std::span<const RuntimeRecord> records, double tau) {
  LabelTable out;
  for (const auto& rec : records) {
    LabelRow row;
    row.ontology_id = rec.ontology_id;
    for (std::size_t i = 0; i < kOrderSetCount; ++i) row.labels[i] = label_for(rec.runtimes[i], tau);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace ordo
