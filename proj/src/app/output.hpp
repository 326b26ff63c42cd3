#pragma once

#include "config.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ncrotor::app {

/// Tabular part of a command result. Cells are preformatted; numbers use
/// the shortest round-trip representation.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// What a command produced: a JSON document and the table shown for the
/// csv and table formats.
struct Report {
  nlohmann::json json;
  Table table;
  /// Extra lines shown under the table in the human-readable format.
  std::vector<std::string> notes;
};

std::string format_number(double x);
std::string format_number(const Rational& x);

/// {"exact": "p/q", "value": double}
nlohmann::json exact_json(const Rational& x);

std::string render_csv(const Table& table);
std::string render_table(const Table& table, const std::vector<std::string>& notes);
std::string render(const Report& report, OutputFormat format);

/// Writes to path, or to stdout when path is empty.
void emit(const std::string& text, const std::string& path);

/// Table when stdout is a terminal, JSON otherwise.
OutputFormat default_format();

}  // namespace ncrotor::app
