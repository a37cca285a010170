#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

// Tabular report sections. TSV is the machine format; "pretty" carries the
// same cells, aligned.

enum class Format { tsv, pretty };

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

inline void print_table(std::ostream& out, const Table& t, Format fmt) {
  if (fmt == Format::tsv) {
    if (!t.title.empty()) out << "# " << t.title << "\n";
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
      out << "\n";
    };
    if (!t.header.empty()) line(t.header);
    for (const auto& r : t.rows) line(r);
    return;
  }
  std::vector<std::size_t> width;
  auto measure = [&](const std::vector<std::string>& cells) {
    if (width.size() < cells.size()) width.resize(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(t.header);
  for (const auto& r : t.rows) measure(r);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    out << s << "\n";
  };
  if (!t.title.empty()) out << t.title << "\n";
  if (!t.header.empty()) {
    line(t.header);
    std::size_t total = 0;
    for (auto w : width) total += w;
    out << std::string(total + 2 * (width.size() - 1), '-') << "\n";
  }
  for (const auto& r : t.rows) line(r);
}

inline void print_report(std::ostream& out, const std::vector<Table>& tables, Format fmt) {
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i) out << "\n";
    print_table(out, tables[i], fmt);
  }
}
