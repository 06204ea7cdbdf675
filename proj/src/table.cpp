#include "qsup/table.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace qsup {

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("Table: row width does not match header");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      out << format_double(row[c]);
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  out << "[\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << "  {";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c > 0) out << ", ";
      out << '"' << table.columns[c] << "\": " << format_double(table.rows[r][c]);
    }
    out << (r + 1 < table.rows.size() ? "},\n" : "}\n");
  }
  out << "]\n";
}

void write_table(const Table& table, const std::string& path,
                 OutputFormat format) {
  auto emit = [&](std::ostream& out) {
    if (format == OutputFormat::csv) {
      write_csv(table, out);
    } else {
      write_json(table, out);
    }
    out.flush();
    if (!out) {
      throw std::ios_base::failure("write_table: stream write failed");
    }
  };
  if (path == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);  // binary keeps LF endings
  if (!file) {
    throw std::ios_base::failure("write_table: cannot open " + path);
  }
  emit(file);
}

}  // namespace qsup
