#include "ordo/tables.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace ordo {

TableError::TableError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

double parse_number(const std::string& cell, std::size_t line) {
  double v = 0;
  const char* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, v);
  if (ec != std::errc{} || ptr != end || cell.empty()) throw TableError(line, "non-numeric cell '" + cell + "'");
  if (!std::isfinite(v)) throw TableError(line, "non-finite cell '" + cell + "'");
  return v;
}

void check_id(const std::string& id) {
  if (id.empty() || id.find_first_of(",\n\r") != std::string::npos) {
    throw std::invalid_argument("ontology id unusable in CSV: '" + id + "'");
  }
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return in;
}

std::string benchmark_header() {
  std::string h = "ontology_id";
  for (std::size_t i = 1; i <= kOrderSetCount; ++i) h += ",config_" + std::to_string(i);
  return h;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_feature_table(std::ostream& out, const FeatureTable& rows) {
  out << "ontology_id";
  for (auto name : feature_names()) out << ',' << name;
  out << '\n';
  for (const auto& row : rows) {
    check_id(row.ontology_id);
    out << row.ontology_id;
    for (double v : row.values) out << ',' << format_number(v);
    out << '\n';
  }
}

FeatureTable read_feature_table(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw TableError(1, "missing header");
  const auto header = split(line);
  if (header.size() != kFeatureCount + 1 || header[0] != "ontology_id") {
    throw TableError(1, "header does not match the feature schema");
  }
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (header[i + 1] != feature_names()[i]) {
      throw TableError(1, "expected column '" + std::string(feature_names()[i]) + "', found '" + header[i + 1] + "'");
    }
  }
  FeatureTable rows;
  std::size_t n = 1;
  while (next_line(in, line)) {
    ++n;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != kFeatureCount + 1) throw TableError(n, "expected 49 cells");
    FeatureRow row;
    row.ontology_id = cells[0];
    for (std::size_t i = 0; i < kFeatureCount; ++i) row.values[i] = parse_number(cells[i + 1], n);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_benchmark_table(std::ostream& out, const std::vector<RuntimeRecord>& rows) {
  out << benchmark_header() << '\n';
  for (const auto& rec : rows) {
    check_id(rec.ontology_id);
    out << rec.ontology_id;
    for (const auto& r : rec.runtimes) out << ',' << (r ? format_number(*r) : std::string("TO"));
    out << '\n';
  }
}

std::vector<RuntimeRecord> read_benchmark_table(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw TableError(1, "missing header");
  if (line != benchmark_header()) throw TableError(1, "expected header '" + benchmark_header() + "'");
  std::vector<RuntimeRecord> rows;
  std::size_t n = 1;
  while (next_line(in, line)) {
    ++n;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != kOrderSetCount + 1) throw TableError(n, "expected 8 cells");
    RuntimeRecord rec;
    rec.ontology_id = cells[0];
    for (std::size_t i = 0; i < kOrderSetCount; ++i) {
      if (cells[i + 1] == "TO") continue;
      const double v = parse_number(cells[i + 1], n);
      if (v < 0) throw TableError(n, "negative runtime");
      rec.runtimes[i] = v;
    }
    rows.push_back(std::move(rec));
  }
  return rows;
}

void write_label_table(std::ostream& out, const LabelTable& rows) {
  out << "ontology_id,config,label\n";
  for (const auto& row : rows) {
    check_id(row.ontology_id);
    for (std::size_t i = 0; i < kOrderSetCount; ++i) {
      out << row.ontology_id << ',' << i + 1 << ',' << to_string(row.labels[i]) << '\n';
    }
  }
}

LabelTable read_label_table(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw TableError(1, "missing header");
  if (line != "ontology_id,config,label") throw TableError(1, "expected header 'ontology_id,config,label'");
  LabelTable rows;
  std::map<std::string, std::pair<std::size_t, unsigned>> seen;  // id -> (row, config mask)
  std::size_t n = 1;
  while (next_line(in, line)) {
    ++n;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != 3) throw TableError(n, "expected 3 cells");
    int cfg = 0;
    const auto& c = cells[1];
    auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), cfg);
    if (ec != std::errc{} || ptr != c.data() + c.size() || cfg < 1 || cfg > static_cast<int>(kOrderSetCount)) {
      throw TableError(n, "config must be 1..7");
    }
    Label label;
    if (cells[2] == "Good") {
      label = Label::Good;
    } else if (cells[2] == "Bad") {
      label = Label::Bad;
    } else {
      throw TableError(n, "label must be Good or Bad");
    }
    auto [it, fresh] = seen.try_emplace(cells[0], rows.size(), 0U);
    if (fresh) rows.push_back(LabelRow{cells[0], {}});
    const unsigned bit = 1U << (cfg - 1);
    if (it->second.second & bit) throw TableError(n, "duplicate config for " + cells[0]);
    it->second.second |= bit;
    rows[it->second.first].labels[static_cast<std::size_t>(cfg - 1)] = label;
  }
  for (const auto& [id, entry] : seen) {
    if (entry.second != (1U << kOrderSetCount) - 1) throw TableError(n, "missing configs for " + id);
  }
  return rows;
}

void write_feature_table(const std::filesystem::path& path, const FeatureTable& rows) {
  auto out = open_out(path);
  write_feature_table(out, rows);
}
FeatureTable read_feature_table(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_feature_table(in);
}
void write_benchmark_table(const std::filesystem::path& path, const std::vector<RuntimeRecord>& rows) {
  auto out = open_out(path);
  write_benchmark_table(out, rows);
}
std::vector<RuntimeRecord> read_benchmark_table(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_benchmark_table(in);
}
void write_label_table(const std::filesystem::path& path, const LabelTable& rows) {
  auto out = open_out(path);
  write_label_table(out, rows);
}
LabelTable read_label_table(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_label_table(in);
}

}  // namespace ordo
