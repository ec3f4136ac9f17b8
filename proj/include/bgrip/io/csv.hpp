#ifndef BGRIP_IO_CSV_HPP
#define BGRIP_IO_CSV_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "bgrip/errors.hpp"

// Minimal CSV: comma separated, LF endings, numbers with 17 significant
// digits so every double round-trips. NaN is written as an empty field.

namespace bgrip {

inline std::string csv_number(double v) {
  if (std::isnan(v))
    return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + '"';
}

class CsvWriter {
public:
  explicit CsvWriter(const std::vector<std::string> &header) : columns_(header.size()) {
    std::vector<std::string> cells;
    for (const auto &h : header)
      cells.push_back(csv_field(h));
    append(cells);
  }

  /// A row of already formatted cells.
  void row(const std::vector<std::string> &cells) {
    if (cells.size() != columns_)
      throw ContractViolation("csv row has " + std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(columns_));
    std::vector<std::string> quoted;
    for (const auto &c : cells)
      quoted.push_back(csv_field(c));
    append(quoted);
  }

  void row(const std::vector<double> &values) {
    std::vector<std::string> cells;
    for (double v : values)
      cells.push_back(csv_number(v));
    row(cells);
  }

  [[nodiscard]] const std::string &str() const { return text_; }

private:
  void append(const std::vector<std::string> &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i)
        text_ += ',';
      text_ += cells[i];
    }
    text_ += '\n';
  }

  std::size_t columns_;
  std::string text_;
};

inline void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw ContractViolation("cannot write '" + path + "'");
  out << text;
  if (!out)
    throw ContractViolation("write to '" + path + "' failed");
}

} // namespace bgrip

#endif // BGRIP_IO_CSV_HPP
