#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fnls::cli {
namespace {

std::string escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

CsvWriter::CsvWriter(std::ostream& out, const std::string& schema,
                     const std::vector<std::string>& header)
    : out_(out), width_(header.size()) {
  out_ << "# schema: " << schema << "\r\n";
  write(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) throw std::logic_error("csv row width mismatch");
  write(fields);
}

void CsvWriter::write(const std::vector<std::string>& fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k > 0) out_ << ',';
    out_ << escape(fields[k]);
  }
  out_ << "\r\n";
}

std::string fmt(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string fmt(long long value) { return std::to_string(value); }

}  // namespace fnls::cli
