#pragma once

#include <string>
#include <vector>

namespace siqm::cli {

// Shortest round-trip text for a double ("%.17g"), so reruns are bitwise equal.
std::string format_number(double v);
std::string format_integer(long long v);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  std::size_t rows() const { return rows_.size(); }
  std::string str() const;

  // Throws invalid-parameter when the file cannot be written.
  void write(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace siqm::cli
