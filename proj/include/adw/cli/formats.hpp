#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adw {

// fixed 17-significant-digit rendering; the determinism contract for CSV
std::string fmt17(double v);

std::uint64_t fnv1a64(const std::string& text);
std::string hex64(std::uint64_t v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// comma separator, one header line, '\n' endings, no quoting
void csv_write(const std::string& path, const CsvTable& table);
CsvTable csv_read(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace adw
