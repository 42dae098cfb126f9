#ifndef LAMHOM_CSV_HPP
#define LAMHOM_CSV_HPP

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace lamhom {

/// Shortest representation carrying 17 significant digits, locale-independent.
std::string format_double(double v);

/// Minimal RFC-4180 writer with LF line endings. All values this project
/// emits are numeric or plain identifiers, so quoting never triggers.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void header(std::span<const std::string> names);
  void row(std::span<const std::string> fields);

  static std::string field(double v) { return format_double(v); }
  static std::string field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
  }

 private:
  std::ostream& os_;
};

}  // namespace lamhom

#endif  // LAMHOM_CSV_HPP
