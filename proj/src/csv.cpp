#include "lamhom/csv.hpp"

#include <cstdio>

namespace lamhom {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void CsvWriter::header(std::span<const std::string> names) { row(names); }

void CsvWriter::row(std::span<const std::string> fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os_ << ',';
    os_ << fields[i];
  }
  os_ << '\n';
}

}  // namespace lamhom
