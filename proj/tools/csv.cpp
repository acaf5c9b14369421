#include "csv.hpp"

#include <cstdio>
#include <stdexcept>

#include "version.hpp"

namespace latosc::cli {

CsvWriter::CsvWriter(const std::string& path, const std::string& command,
                     const std::string& config_echo)
    : path_(path), out_(path) {
  if (!out_) throw std::runtime_error("csv: cannot open " + path + " for writing");
  out_ << "# latosc " << kVersion << "\n";
  out_ << "# command: " << command << "\n";
  out_ << "# config: " << config_echo << "\n";
}

void CsvWriter::comment(const std::string& line) { out_ << "# " << line << "\n"; }

void CsvWriter::columns(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    out_ << (i ? "," : "") << names[i];
  }
  out_ << "\n";
}

void CsvWriter::begin_row() {
  row_open_ = true;
  first_field_ = true;
}

void CsvWriter::field(double v) { field(format(v)); }

void CsvWriter::field(long v) { field(std::to_string(v)); }

void CsvWriter::field(const std::string& v) {
  if (!row_open_) throw std::logic_error("csv: field outside row");
  if (!first_field_) out_ << ",";
  out_ << v;
  first_field_ = false;
}

void CsvWriter::end_row() {
  out_ << "\n";
  row_open_ = false;
}

std::string CsvWriter::format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
  auto dot = path.find_last_of('.');
  auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + "_" + suffix;
  }
  return path.substr(0, dot) + "_" + suffix + path.substr(dot);
}

}  // namespace latosc::cli
