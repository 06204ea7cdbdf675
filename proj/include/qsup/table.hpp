#ifndef QSUP_TABLE_HPP
#define QSUP_TABLE_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qsup {

// Numeric table with named columns; the common carrier for all CLI output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

// Doubles are rendered with 17 significant digits ("%.17g"), enough to
// round-trip; special values come out as "inf"/"nan".
std::string format_double(double v);

// RFC-4180-style CSV: header line, comma separators, LF line endings.
void write_csv(const Table& table, std::ostream& out);

// The same rows as a JSON array of column->value objects.
void write_json(const Table& table, std::ostream& out);

enum class OutputFormat { csv, json };

// Writes to path ("-" for stdout); throws std::ios_base::failure on I/O
// errors so the CLI can map them to its I/O exit code.
void write_table(const Table& table, const std::string& path,
                 OutputFormat format);

}  // namespace qsup

#endif  // QSUP_TABLE_HPP
