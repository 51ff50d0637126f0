#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fnls::cli {

// RFC-4180 writer (CRLF records, quoted fields where needed) whose first
// line is a '#'-prefixed schema comment such as "# schema: fnls-verify/1".
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::string& schema,
            const std::vector<std::string>& header);

  void row(const std::vector<std::string>& fields);

 private:
  void write(const std::vector<std::string>& fields);

  std::ostream& out_;
  std::size_t width_;
};

// Round-trip decimal text for a double (17 significant digits).
std::string fmt(double value);
std::string fmt(long long value);
inline std::string fmt(int value) { return fmt(static_cast<long long>(value)); }
inline std::string fmt(bool value) { return value ? "1" : "0"; }

}  // namespace fnls::cli
