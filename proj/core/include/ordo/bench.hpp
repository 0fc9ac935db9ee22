#ifndef ORDO_BENCH_HPP
#define ORDO_BENCH_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordo/ofs.hpp"
#include "ordo/order_config.hpp"
#include "ordo/tableau.hpp"

namespace ordo {

/// Milliseconds, or nullopt for TIMEOUT.
using Runtime = std::optional<double>;

inline constexpr double kDefaultDeltaMs = 200.0;
inline constexpr double kFullScaleDeltaMs = 2000.0;
inline constexpr int kDefaultRepeats = 3;

struct RuntimeRecord {
  std::string ontology_id;
  std::array<Runtime, kOrderSetCount> runtimes{};

  bool operator==(const RuntimeRecord&) const = default;
};

struct BenchmarkOptions {
  int repeats = kDefaultRepeats;
  std::chrono::milliseconds timeout = kDefaultTimeout;
};

/// Mean of the repeats; TIMEOUT if any repeat timed out.
Runtime average_runtime(std::span<const Runtime> repeats);

/// Classifies the document under each config `repeats` times, serially.
RuntimeRecord benchmark_ontology(std::string ontology_id, const SourceDocument& doc,
                                 std::span<const OrderConfig, kOrderSetCount> configs,
                                 const BenchmarkOptions& options);

struct CorpusEntry {
  std::string ontology_id;
  SourceDocument document;
};

/// Benchmarks each entry; up to `jobs` ontologies run at once, each one's
/// seven-config sweep stays on a single worker. Output order follows input.
std::vector<RuntimeRecord> benchmark_corpus(std::span<const CorpusEntry> corpus,
                                            std::span<const OrderConfig, kOrderSetCount> configs,
                                            const BenchmarkOptions& options, unsigned jobs = 1,
                                            const std::function<void(const RuntimeRecord&)>& progress = {});

struct FilterResult {
  std::vector<RuntimeRecord> kept;
  std::vector<RuntimeRecord> excluded;
  std::vector<std::string> reasons;  // parallel to excluded
};

/// Drops rows whose seven runtimes all lie within delta_ms of each other (no
/// timeouts) and rows that time out under every config.
FilterResult filter_corpus(std::span<const RuntimeRecord> records, double delta_ms);

struct ConfigMoments {
  double mean = 0;
  double std = 0;  // population
  std::size_t samples = 0;

  double threshold() const { return mean + std; }
};

struct ThresholdReport {
  std::array<std::optional<ConfigMoments>, kOrderSetCount> configs{};
  double tau_exact = 0;     // mean of the per-config mean+std values
  std::int64_t tau_ms = 0;  // floored

  std::string to_json() const;
  static ThresholdReport from_json(std::string_view text);
};

/// Per-config population moments over non-timeout cells. A config with no
/// data is left out of the average.
ThresholdReport compute_threshold(std::span<const RuntimeRecord> records);
ThresholdReport threshold_from_moments(std::span<const ConfigMoments> moments);

enum class Label : std::uint8_t { Bad = 0, Good = 1 };
std::string_view to_string(Label l);

struct LabelRow {
  std::string ontology_id;
  std::array<Label, kOrderSetCount> labels{};

  bool operator==(const LabelRow&) const = default;
};
using LabelTable = std::vector<LabelRow>;

/// Good iff the runtime is below tau; TIMEOUT is Bad.
Label label_for(const Runtime& runtime, double tau);
LabelTable assign_labels(std::span<const RuntimeRecord> records, double tau);

}  // namespace ordo

#endif  // ORDO_BENCH_HPP
