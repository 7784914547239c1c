#include "sevac/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "sevac/biword.hpp"
#include "sevac/crosscheck.hpp"
#include "sevac/error.hpp"
#include "sevac/involution.hpp"
#include "sevac/render.hpp"
#include "sevac/tableau.hpp"

namespace sevac {

namespace {

struct Options {
  std::string family;
  long max_n = 10;
  long max_m = 4;
  std::string format = "markdown";
  std::string source = "formula";
  std::string caps;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string suite = "all";
  bool eq9_literal = false;
  std::string operation;
  std::string input;
  std::string apply_format = "text";
};

int status_of(const Error& error) {
  return error.code() == ErrorCode::CapExceeded ? exit_cap_exceeded : exit_usage;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  file << text;
}

int run_table(const Options& options, std::ostream& out) {
  render::TableRequest request;
  request.family = render::parse_family(options.family);
  request.source = render::parse_source(options.source);
  request.max_n = options.max_n;
  request.max_m = options.max_m;
  if (!options.caps.empty()) {
    request.caps = crosscheck::parse_caps(options.caps).enumeration;
  }
  const auto format = render::parse_format(options.format);
  if (options.max_n < 0) throw Error(ErrorCode::ParseError, "--max-n must be >= 0");
  if (options.max_m < 1) throw Error(ErrorCode::ParseError, "--max-m must be >= 1");

  const auto table = render::build_table(request);
  const auto text = render::render(table, format);
  if (options.out_path.empty()) {
    out << text;
  } else {
    write_file(options.out_path, text);
  }
  return table.agrees() ? exit_ok : exit_mismatch;
}

crosscheck::Suite parse_suite(std::string_view name) {
  if (name == "all") return crosscheck::Suite::all;
  if (name == "formulas") return crosscheck::Suite::formulas;
  if (name == "tableaux") return crosscheck::Suite::tableaux;
  if (name == "witnesses") return crosscheck::Suite::witnesses;
  throw Error(ErrorCode::ParseError, "unknown suite '" + std::string(name) + "'");
}

std::string report_csv(const crosscheck::Report& report) {
  std::ostringstream out;
  out << "suite,identity,status,millis,parameters,expected,actual\n";
  for (const auto& r : report.records) {
    out << r.suite << ',' << r.identity << ',' << (r.matched() ? "match" : "mismatch") << ','
        << r.millis;
    if (r.counterexample) {
      out << ",\"" << r.counterexample->parameters << "\",\"" << r.counterexample->expected
          << "\",\"" << r.counterexample->actual << '"';
    } else {
      out << ",,,";
    }
    out << '\n';
  }
  return out.str();
}

int run_verify(const Options& options, std::ostream& out) {
  const auto suite = parse_suite(options.suite);
  auto caps = options.caps.empty() ? crosscheck::Caps{} : crosscheck::parse_caps(options.caps);
  if (options.seed) caps.seed = *options.seed;
  caps.literal_star_recurrence = options.eq9_literal;

  const auto report = crosscheck::crosscheck_all(caps, suite);
  if (options.format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else if (options.format == "csv") {
    out << report_csv(report);
  } else if (options.format == "markdown" || options.format == "text") {
    out << render::to_text(report);
  } else {
    throw Error(ErrorCode::ParseError, "unknown format '" + options.format + "'");
  }
  if (!options.out_path.empty()) write_file(options.out_path, report.to_json().dump(2) + "\n");
  return report.all_match() ? exit_ok : exit_mismatch;
}

bool looks_like_biword(std::string_view input) { return input.find('=') != std::string_view::npos; }

std::string join_positions(const PositionSet& set) {
  std::string text;
  for (int i : set.positions) {
    if (!text.empty()) text += ',';
    text += std::to_string(i);
  }
  return text;
}

nlohmann::json tableau_json(const TableauRows& rows) { return rows; }

nlohmann::json biword_json(const GeneralizedInvolution& alpha) {
  nlohmann::json top = nlohmann::json::array();
  nlohmann::json bottom = nlohmann::json::array();
  for (const auto& column : alpha.columns()) {
    top.push_back(column.top);
    bottom.push_back(column.bottom);
  }
  return {{"x", top}, {"y", bottom}, {"m", alpha.alphabet_size()}};
}

int run_apply(const Options& options, std::ostream& out) {
  const bool json = options.apply_format == "json";
  if (!json && options.apply_format != "text") {
    throw Error(ErrorCode::ParseError, "apply supports --format text or json");
  }
  const std::string& op = options.operation;
  nlohmann::json result;
  std::string text;

  if (looks_like_biword(options.input)) {
    const auto alpha = parse_biword(options.input);
    if (op == "rsk") {
      const auto tableau = rsk_biword(alpha);
      text = format_tableau(tableau.rows());
      result = tableau_json(tableau.rows());
    } else if (op == "evacuate") {
      const auto image = evacuate_biword(alpha);
      text = format_biword(image);
      result = biword_json(image);
    } else if (op == "polarize") {
      const auto sigma = polarize(alpha);
      text = to_string(sigma);
      result = to_string(sigma);
    } else if (op == "self-evac-check") {
      const bool answer = is_self_evacuated_biword(alpha);
      text = answer ? "true" : "false";
      result = answer;
    } else if (op == "descents") {
      throw Error(ErrorCode::ParseError, "descents expects an involution");
    } else {
      throw Error(ErrorCode::ParseError, "unknown operation '" + op + "'");
    }
  } else {
    const auto sigma = parse_involution(options.input);
    if (op == "rsk") {
      const auto tableau = rsk_involution(sigma);
      text = format_tableau(tableau.rows());
      result = tableau_json(tableau.rows());
    } else if (op == "evacuate") {
      text = to_string(complement_conjugate(sigma));
      result = text;
    } else if (op == "descents") {
      text = join_positions(descent_set(sigma));
      result = descent_set(sigma).positions;
    } else if (op == "self-evac-check") {
      const bool answer = is_self_evacuated(sigma);
      text = answer ? "true" : "false";
      result = answer;
    } else if (op == "polarize") {
      throw Error(ErrorCode::ParseError, "polarize expects a biword");
    } else {
      throw Error(ErrorCode::ParseError, "unknown operation '" + op + "'");
    }
  }

  if (json) {
    out << nlohmann::json{{"operation", op}, {"input", options.input}, {"result", result}}.dump()
        << '\n';
  } else {
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-evacuated involutions: tables, verification and tableau operations", "sevac"};
  app.require_subcommand(1);
  Options options;

  auto* table = app.add_subcommand("table", "Render a table of counts");
  table->add_option("family", options.family, "S, S_star, c, c_star, s_totals or s_star_totals")
      ->required();
  table->add_option("--max-n", options.max_n, "Largest length n")->capture_default_str();
  table->add_option("--max-m", options.max_m, "Largest alphabet size for c and c_star")
      ->capture_default_str();
  table->add_option("--format", options.format, "markdown, csv or json")->capture_default_str();
  table->add_option("--source", options.source, "formula, oracle or both")->capture_default_str();
  table->add_option("--caps", options.caps, "Enumeration caps, e.g. inv-n=14,matrix-states=1000000");
  table->add_option("--out", options.out_path, "Write the table to this file");

  auto* verify = app.add_subcommand("verify", "Cross-check formulas against enumeration");
  verify->add_option("suite", options.suite, "all, formulas, tableaux or witnesses")
      ->capture_default_str();
  verify->add_option("--caps", options.caps, "key=value overrides, or 'none'");
  verify->add_option("--seed", options.seed, "Seed for the sampled checks");
  verify->add_flag("--eq9-literal", options.eq9_literal,
                   "Check the s* recurrence with the literal coefficient (2n-2), n = 2k");
  verify->add_option("--format", options.format, "text, json or csv");
  verify->add_option("--out", options.out_path, "Also write the JSON report to this file");

  auto* apply = app.add_subcommand("apply", "Apply one operation to an involution or biword");
  apply->add_option("operation", options.operation,
                    "rsk, evacuate, polarize, descents or self-evac-check")
      ->required();
  apply->add_option("input", options.input,
                    "Involution such as 2143 or 1,2,11,...; biword such as x=1,2;y=2,1;m=2")
      ->required();
  apply->add_option("--format", options.apply_format, "text or json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*table) return run_table(options, out);
    if (*verify) {
      if (verify->count("--format") == 0) options.format = "text";
      return run_verify(options, out);
    }
    return run_apply(options, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return status_of(e);
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace sevac
