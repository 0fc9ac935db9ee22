#ifndef ORDO_TABLES_HPP
#define ORDO_TABLES_HPP

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordo/bench.hpp"
#include "ordo/features.hpp"

namespace ordo {

/// Malformed CSV: header mismatch, bad cell, wrong arity. `line` is 1-based.
class TableError : public std::runtime_error {
 public:
  TableError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct FeatureRow {
  std::string ontology_id;
  FeatureVector values{};

  bool operator==(const FeatureRow&) const = default;
};
using FeatureTable = std::vector<FeatureRow>;

/// Shortest decimal form that reads back to the same double.
std::string format_number(double v);

void write_feature_table(std::ostream& out, const FeatureTable& rows);
FeatureTable read_feature_table(std::istream& in);
void write_feature_table(const std::filesystem::path& path, const FeatureTable& rows);
FeatureTable read_feature_table(const std::filesystem::path& path);

/// `ontology_id,config_1..config_7`; a cell is milliseconds or `TO`.
void write_benchmark_table(std::ostream& out, const std::vector<RuntimeRecord>& rows);
std::vector<RuntimeRecord> read_benchmark_table(std::istream& in);
void write_benchmark_table(const std::filesystem::path& path, const std::vector<RuntimeRecord>& rows);
std::vector<RuntimeRecord> read_benchmark_table(const std::filesystem::path& path);

/// Long format `ontology_id,config,label`, one line per (ontology, config).
void write_label_table(std::ostream& out, const LabelTable& rows);
LabelTable read_label_table(std::istream& in);
void write_label_table(const std::filesystem::path& path, const LabelTable& rows);
LabelTable read_label_table(const std::filesystem::path& path);

}  // namespace ordo

#endif  // ORDO_TABLES_HPP
