#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sevac/bigint.hpp"
#include "sevac/crosscheck.hpp"
#include "sevac/oracles.hpp"

namespace sevac::render {

enum class TableFamily { S, S_star, c, c_star, s_totals, s_star_totals };
enum class Source { formula, oracle, both };
enum class Format { markdown, csv, json };

/// Throws Error(UnknownFamily) / Error(ParseError) on unrecognised names.
TableFamily parse_family(std::string_view name);
Source parse_source(std::string_view name);
Format parse_format(std::string_view name);
std::string family_name(TableFamily family);
std::string source_name(Source source);

struct Cell {
  std::optional<BigInt> formula;
  std::optional<BigInt> oracle;

  bool agrees() const { return !formula || !oracle || *formula == *oracle; }
  const BigInt& value() const { return formula ? *formula : *oracle; }
};

struct TableRow {
  long n = 0;
  std::vector<Cell> cells;  // cells[i] belongs to column i; missing cells are blank
};

struct Table {
  TableFamily family = TableFamily::S;
  Source source = Source::formula;
  std::string corner;                // e.g. "n/d"
  std::vector<std::string> columns;  // column headers
  std::vector<TableRow> rows;

  bool agrees() const;
};

struct TableRequest {
  TableFamily family = TableFamily::S;
  long max_n = 10;
  long max_m = 4;  // columns of the c and c_star tables
  Source source = Source::formula;
  oracles::EnumerationCaps caps;
};

/// Builds the table row by row. Rows the formulas do not cover (odd n in
/// family S) come from enumeration whatever the source; families defined
/// only for even lengths skip odd n. Throws Error(CapExceeded) when an
/// oracle row is out of reach.
Table build_table(const TableRequest& request);

std::string to_markdown(const Table& table);
std::string to_csv(const Table& table);
nlohmann::json to_json(const Table& table);
std::string render(const Table& table, Format format);

/// Plain-text rendering of a verification report, one line per identity.
std::string to_text(const crosscheck::Report& report);

}  // namespace sevac::render
