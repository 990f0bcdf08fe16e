#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace donorthz::io {

// Shortest exact decimal form via %.17g fallback; stable across runs.
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 if absent
};

// Writes UTF-8, comma-separated, one header row; temp file + rename so a
// concurrent reader never sees a partial file.
void write_csv_atomic(const std::filesystem::path& path,
                      const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

CsvTable read_csv(const std::filesystem::path& path);

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& content);

double parse_double(const std::string& field, const std::string& context);

}  // namespace donorthz::io
