#pragma once

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace edlat {

/// Rectangular numeric result set; rows always match the header arity.
struct OutputTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Canonical number formatting for emitted files: six significant digits.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline std::string to_csv(const OutputTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

inline std::string to_json(const OutputTable& table) {
  std::string out = "{\"header\":[";
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += '"';
    out += table.header[i];
    out += '"';
  }
  out += "],\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (r) out += ',';
    out += '[';
    const auto& row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

/// Serializes the table to `path` ("" or "-" writes to stdout). CSV uses LF
/// line endings and a header line; JSON carries the same header/rows layout.
inline void write_table(const OutputTable& table, const std::string& path,
                        const std::string& format) {
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw std::logic_error("write_table: row arity does not match header");
    }
  }
  std::string payload;
  if (format == "csv") {
    payload = to_csv(table);
  } else if (format == "json") {
    payload = to_json(table);
  } else {
    throw std::invalid_argument("write_table: format must be 'csv' or 'json'");
  }
  if (path.empty() || path == "-") {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_table: cannot open '" + path + "': " + std::strerror(errno));
  }
  out << payload;
  out.flush();
  if (!out) {
    throw std::runtime_error("write_table: failed writing '" + path + "': " + std::strerror(errno));
  }
}

}  // namespace edlat
