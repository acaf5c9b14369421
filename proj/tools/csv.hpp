#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace latosc::cli {

// CSV with '#'-prefixed header comments, comma delimiter, full double
// precision (17 significant digits).  No timestamps or other run-varying
// content: re-running a command with the same configuration reproduces the
// file byte for byte.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& command,
            const std::string& config_echo);

  void comment(const std::string& line);
  void columns(const std::vector<std::string>& names);

  void begin_row();
  void field(double v);
  void field(long v);
  void field(const std::string& v);
  void end_row();

  const std::string& path() const { return path_; }

  static std::string format(double v);  // %.17g

 private:
  std::string path_;
  std::ofstream out_;
  bool row_open_ = false;
  bool first_field_ = true;
};

// "<stem>_<suffix><ext>" next to `path` (e.g. foo.csv -> foo_inset.csv).
std::string sibling_path(const std::string& path, const std::string& suffix);

}  // namespace latosc::cli
