#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wglab/util.hpp"

namespace wglab {

/// Tabular experiment report; renders to versioned CSV (12 significant
/// digits, fixed locale, '\n' endings) or JSON.
class Report {
 public:
  explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void comment(std::string line) { comments_.push_back(std::move(line)); }

  Report& begin_row() {
    rows_.emplace_back();
    return *this;
  }
  Report& cell(int64_t v) {
    rows_.back().push_back(nlohmann::ordered_json(v));
    return *this;
  }
  Report& cell(double v) {
    rows_.back().push_back(nlohmann::ordered_json(v));
    return *this;
  }
  Report& cell(const std::string& v) {
    rows_.back().push_back(nlohmann::ordered_json(v));
    return *this;
  }
  Report& cell(int128 v) { return cell(int128_to_string(v)); }

  size_t row_count() const { return rows_.size(); }

  std::string to_csv(bool with_header = true) const {
    std::string out;
    if (with_header) {
      out += "# wglab-v1\n";
      out += "# seed: none\n";
      for (const auto& c : comments_) out += "# " + c + "\n";
      for (size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += ',';
        out += columns_[i];
      }
      out += '\n';
    }
    for (const auto& row : rows_) {
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += format_cell(row[i]);
      }
      out += '\n';
    }
    return out;
  }

  std::string to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "wglab-v1";
    j["seed"] = nullptr;
    j["columns"] = columns_;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& cell : row) {
        if (cell.is_number_float()) r.push_back(format_cell(cell));
        else r.push_back(cell);
      }
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
  }

 private:
  static std::string format_cell(const nlohmann::ordered_json& v) {
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_number_integer()) return std::to_string(v.get<int64_t>());
    return v.get<std::string>();
  }

  std::vector<std::string> columns_;
  std::vector<std::string> comments_;
  std::vector<std::vector<nlohmann::ordered_json>> rows_;
};

/// Whole-file write, performed only after the content is fully built so a
/// failing computation never leaves a partial file behind.
inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("write_file: cannot open " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::invalid_argument("write_file: short write to " + path);
}

}  // namespace wglab
