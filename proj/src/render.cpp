#include "sevac/render.hpp"

#include <algorithm>
#include <sstream>

#include "sevac/error.hpp"
#include "sevac/formulas.hpp"

namespace sevac::render {

namespace {

struct Name {
  std::string_view text;
  TableFamily family;
};

constexpr Name kFamilies[] = {
    {"S", TableFamily::S},           {"S_star", TableFamily::S_star},
    {"c", TableFamily::c},           {"c_star", TableFamily::c_star},
    {"s_totals", TableFamily::s_totals}, {"s_star_totals", TableFamily::s_star_totals},
};

bool even_only(TableFamily family) {
  return family == TableFamily::S_star || family == TableFamily::c_star ||
         family == TableFamily::s_star_totals;
}

// Either side may be shorter; the missing entries of a present side are
// zeros, so a length disagreement shows up as a mismatch.
std::vector<Cell> merge(const std::optional<std::vector<BigInt>>& formula,
                        const std::optional<std::vector<BigInt>>& oracle) {
  const std::size_t width =
      std::max(formula ? formula->size() : 0, oracle ? oracle->size() : 0);
  std::vector<Cell> cells(width);
  for (std::size_t i = 0; i < width; ++i) {
    if (formula) cells[i].formula = i < formula->size() ? (*formula)[i] : BigInt(0);
    if (oracle) cells[i].oracle = i < oracle->size() ? (*oracle)[i] : BigInt(0);
  }
  return cells;
}

std::string cell_text(const Cell& cell) {
  if (cell.agrees()) return cell.value().str();
  return cell.formula->str() + " [oracle " + cell.oracle->str() + "]";
}

std::size_t column_count(const Table& table) {
  std::size_t count = table.columns.size();
  for (const auto& row : table.rows) count = std::max(count, row.cells.size());
  return count;
}

}  // namespace

TableFamily parse_family(std::string_view name) {
  for (const auto& entry : kFamilies) {
    if (entry.text == name) return entry.family;
  }
  throw Error(ErrorCode::UnknownFamily, "unknown table family '" + std::string(name) + "'");
}

std::string family_name(TableFamily family) {
  for (const auto& entry : kFamilies) {
    if (entry.family == family) return std::string(entry.text);
  }
  return "?";
}

Source parse_source(std::string_view name) {
  if (name == "formula") return Source::formula;
  if (name == "oracle") return Source::oracle;
  if (name == "both") return Source::both;
  throw Error(ErrorCode::ParseError, "unknown source '" + std::string(name) + "'");
}

std::string source_name(Source source) {
  switch (source) {
    case Source::formula: return "formula";
    case Source::oracle: return "oracle";
    case Source::both: return "both";
  }
  return "?";
}

Format parse_format(std::string_view name) {
  if (name == "markdown") return Format::markdown;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(name) + "'");
}

bool Table::agrees() const {
  for (const auto& row : rows) {
    for (const auto& cell : row.cells) {
      if (!cell.agrees()) return false;
    }
  }
  return true;
}

Table build_table(const TableRequest& request) {
  namespace f = sevac::formulas;
  Table table;
  table.family = request.family;
  table.source = request.source;
  const bool use_formula = request.source != Source::oracle;
  const bool use_oracle = request.source != Source::formula;

  switch (request.family) {
    case TableFamily::S:
    case TableFamily::S_star:
      table.corner = "n/d";
      for (long d = 0; d < std::max(request.max_n, 1L); ++d) {
        table.columns.push_back(std::to_string(d));
      }
      break;
    case TableFamily::c:
    case TableFamily::c_star:
      table.corner = "n/m";
      for (long m = 1; m <= request.max_m; ++m) table.columns.push_back(std::to_string(m));
      break;
    case TableFamily::s_totals:
    case TableFamily::s_star_totals:
      table.corner = "n";
      table.columns.push_back("total");
      break;
  }

  const bool fpf = even_only(request.family);
  for (long n = 0; n <= request.max_n; ++n) {
    if (fpf && n % 2 != 0) continue;
    std::optional<std::vector<BigInt>> formula;
    std::optional<std::vector<BigInt>> oracle;
    const int small_n = static_cast<int>(n);
    switch (request.family) {
      case TableFamily::S:
      case TableFamily::S_star:
        if (use_formula && n % 2 == 0) {
          formula = request.family == TableFamily::S ? f::s_row(n) : f::s_star_row(n);
        }
        if (use_oracle || n % 2 != 0) {
          oracle = oracles::brute_s_row(small_n, fpf, request.caps);
        }
        break;
      case TableFamily::c:
      case TableFamily::c_star:
        if (use_formula) {
          formula.emplace();
          for (long m = 1; m <= request.max_m; ++m) {
            formula->push_back(fpf ? f::c_star_count(n, m) : f::c_count(n, m));
          }
        }
        if (use_oracle) {
          oracle.emplace();
          for (long m = 1; m <= request.max_m; ++m) {
            oracle->push_back(oracles::brute_c(small_n, static_cast<int>(m), fpf, request.caps));
          }
        }
        break;
      case TableFamily::s_totals:
      case TableFamily::s_star_totals:
        if (use_formula) {
          formula = std::vector<BigInt>{fpf ? f::s_star_total(n) : f::s_total(n)};
        }
        if (use_oracle) {
          oracle = std::vector<BigInt>{oracles::brute_s_total(small_n, fpf, request.caps)};
        }
        break;
    }
    table.rows.push_back(TableRow{n, merge(formula, oracle)});
  }
  return table;
}

std::string to_markdown(const Table& table) {
  const std::size_t columns = column_count(table);
  std::ostringstream out;
  out << "| " << table.corner << " |";
  for (std::size_t i = 0; i < columns; ++i) {
    out << ' ' << (i < table.columns.size() ? table.columns[i] : std::to_string(i)) << " |";
  }
  out << "\n|---|";
  for (std::size_t i = 0; i < columns; ++i) out << "---|";
  out << '\n';
  for (const auto& row : table.rows) {
    out << "| " << row.n << " |";
    for (std::size_t i = 0; i < columns; ++i) {
      if (i < row.cells.size()) {
        out << ' ' << cell_text(row.cells[i]) << " |";
      } else {
        out << "  |";
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string to_csv(const Table& table) {
  const std::size_t columns = column_count(table);
  std::ostringstream out;
  out << table.corner;
  for (std::size_t i = 0; i < columns; ++i) {
    out << ',' << (i < table.columns.size() ? table.columns[i] : std::to_string(i));
  }
  out << '\n';
  for (const auto& row : table.rows) {
    out << row.n;
    for (std::size_t i = 0; i < columns; ++i) {
      out << ',';
      if (i < row.cells.size()) out << cell_text(row.cells[i]);
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const Table& table) {
  nlohmann::json out;
  out["family"] = family_name(table.family);
  out["source"] = source_name(table.source);
  out["columns"] = table.columns;
  out["agree"] = table.agrees();
  out["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json values = nlohmann::json::array();
    nlohmann::json mismatches = nlohmann::json::array();
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      const auto& cell = row.cells[i];
      values.push_back(cell.value().str());
      if (!cell.agrees()) {
        mismatches.push_back({{"column", i < table.columns.size() ? table.columns[i] : std::to_string(i)},
                              {"formula", cell.formula->str()},
                              {"oracle", cell.oracle->str()}});
      }
    }
    out["rows"].push_back({{"n", row.n}, {"values", values}, {"mismatches", mismatches}});
  }
  return out;
}

std::string render(const Table& table, Format format) {
  switch (format) {
    case Format::markdown: return to_markdown(table);
    case Format::csv: return to_csv(table);
    case Format::json: return to_json(table).dump(2) + "\n";
  }
  return {};
}

std::string to_text(const crosscheck::Report& report) {
  std::ostringstream out;
  std::size_t failures = 0;
  for (const auto& record : report.records) {
    out << (record.matched() ? "match    " : "MISMATCH ") << record.suite << '/'
        << record.identity << "  (" << record.range << ", " << record.millis << " ms)\n";
    if (const auto& ce = record.counterexample) {
      ++failures;
      out << "    first counterexample: " << ce->parameters << "\n"
          << "    expected: " << ce->expected << "\n"
          << "    actual:   " << ce->actual << "\n";
    }
  }
  out << report.records.size() << " identities, " << failures << " mismatched\n";
  return out.str();
}

}  // namespace sevac::render
