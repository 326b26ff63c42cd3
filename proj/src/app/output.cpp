#include "output.hpp"

#include "ncrotor/errors.hpp"

#include <fmt/format.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace ncrotor::app {

std::string format_number(double x) { return fmt::format("{}", x); }

std::string format_number(const Rational& x) { return ncrotor::to_string(x); }

nlohmann::json exact_json(const Rational& x) { return {{"exact", ncrotor::to_string(x)}, {"value", to_double(x)}}; }

namespace {

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string render_csv(const Table& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_cell(cells[i]);
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
  return out;
}

std::string render_table(const Table& table, const std::vector<std::string>& notes) {
  std::vector<std::size_t> width(table.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(table.header);
  for (const auto& row : table.rows) measure(row);

  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) text += "  ";
      text += fmt::format("{:<{}}", cells[i], width[i]);
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text + '\n';
  };
  line(table.header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : table.rows) line(row);
  if (!notes.empty()) out += '\n';
  for (const auto& note : notes) out += note + '\n';
  return out;
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return report.json.dump(2) + '\n';
    case OutputFormat::csv:
      return render_csv(report.table);
    case OutputFormat::table:
      return render_table(report.table, report.notes);
  }
  return {};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

OutputFormat default_format() { return isatty(fileno(stdout)) ? OutputFormat::table : OutputFormat::json; }

}  // namespace ncrotor::app
