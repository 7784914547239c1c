#include "sevac/crosscheck.hpp"

#include <chrono>
#include <charconv>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "sevac/biword.hpp"
#include "sevac/error.hpp"
#include "sevac/formulas.hpp"
#include "sevac/involution.hpp"
#include "sevac/polynomial.hpp"
#include "sevac/tableau.hpp"

namespace sevac::crosscheck {

namespace f = sevac::formulas;

Caps Caps::none() {
  Caps caps;
  for (int* bound : {&caps.recurrence_max_n, &caps.oracle_max_n, &caps.central_max_k,
                     &caps.rises_max_k, &caps.table_max_n, &caps.transform_max_k,
                     &caps.transform_max_m, &caps.c_oracle_max_n, &caps.c_oracle_max_m,
                     &caps.c_odd_max_n, &caps.c_from_oracle_max_k, &caps.c_from_oracle_max_m,
                     &caps.star_recurrence_max_k, &caps.gen_max_n, &caps.gen_max_m,
                     &caps.involution_max_n, &caps.rsk_max_n, &caps.biword_max_length,
                     &caps.biword_max_m, &caps.characterization_max_m,
                     &caps.polarization_max_length, &caps.polarization_max_m,
                     &caps.sample_count, &caps.sample_max_length, &caps.sample_max_m,
                     &caps.witness_n}) {
    *bound = -1;
  }
  return caps;
}

Caps parse_caps(std::string_view text, Caps base) {
  if (text == "none") return Caps::none();
  Caps caps = base;
  const std::map<std::string, int*, std::less<>> keys = {
      {"inv-n", &caps.enumeration.max_involution_n},
      {"rec-n", &caps.recurrence_max_n},
      {"oracle-n", &caps.oracle_max_n},
      {"central-k", &caps.central_max_k},
      {"rises-k", &caps.rises_max_k},
      {"table-n", &caps.table_max_n},
      {"transform-k", &caps.transform_max_k},
      {"transform-m", &caps.transform_max_m},
      {"c-n", &caps.c_oracle_max_n},
      {"c-m", &caps.c_oracle_max_m},
      {"c-odd-n", &caps.c_odd_max_n},
      {"c-oracle-k", &caps.c_from_oracle_max_k},
      {"c-oracle-m", &caps.c_from_oracle_max_m},
      {"star-rec-k", &caps.star_recurrence_max_k},
      {"gen-n", &caps.gen_max_n},
      {"gen-m", &caps.gen_max_m},
      {"involution-n", &caps.involution_max_n},
      {"rsk-n", &caps.rsk_max_n},
      {"biword-len", &caps.biword_max_length},
      {"biword-m", &caps.biword_max_m},
      {"char-m", &caps.characterization_max_m},
      {"polar-len", &caps.polarization_max_length},
      {"polar-m", &caps.polarization_max_m},
      {"samples", &caps.sample_count},
      {"sample-len", &caps.sample_max_length},
      {"sample-m", &caps.sample_max_m},
      {"witness-n", &caps.witness_n},
  };
  for (std::string_view rest = text; !rest.empty();) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "cap '" + std::string(item) + "' is not key=value");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    long long parsed = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
      throw Error(ErrorCode::ParseError, "cap '" + std::string(key) + "' needs an integer");
    }
    if (key == "matrix-states") {
      if (parsed < 0) throw Error(ErrorCode::ParseError, "matrix-states must be >= 0");
      caps.enumeration.max_matrix_states = static_cast<std::uint64_t>(parsed);
    } else if (const auto it = keys.find(key); it != keys.end()) {
      *it->second = static_cast<int>(parsed);
    } else {
      throw Error(ErrorCode::ParseError, "unknown cap '" + std::string(key) + "'");
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return caps;
}

bool Report::all_match() const {
  for (const auto& record : records) {
    if (!record.matched()) return false;
  }
  return true;
}

const Record* Report::find(std::string_view identity) const {
  for (const auto& record : records) {
    if (record.identity == identity) return &record;
  }
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["all_match"] = all_match();
  out["records"] = nlohmann::json::array();
  for (const auto& record : records) {
    nlohmann::json item;
    item["suite"] = record.suite;
    item["identity"] = record.identity;
    item["caps"] = record.range;
    item["status"] = record.matched() ? "match" : "mismatch";
    if (record.counterexample) {
      item["counterexample"] = {{"parameters", record.counterexample->parameters},
                                {"expected", record.counterexample->expected},
                                {"actual", record.counterexample->actual}};
    } else {
      item["counterexample"] = nullptr;
    }
    item["millis"] = record.millis;
    out["records"].push_back(std::move(item));
  }
  return out;
}

const std::vector<std::vector<long>>& reference_s_table() {
  static const std::vector<std::vector<long>> table = {
      {1},
      {1},
      {1, 1},
      {1, 0, 1},
      {1, 2, 2, 1},
      {1, 0, 4, 0, 1},
      {1, 3, 6, 6, 3, 1},
      {1, 0, 9, 0, 9, 0, 1},
      {1, 4, 13, 20, 20, 13, 4, 1},
      {1, 0, 17, 0, 40, 0, 17, 0, 1},
      {1, 5, 23, 49, 78, 78, 49, 23, 5, 1},
  };
  return table;
}

const std::vector<std::vector<long>>& reference_s_star_table() {
  static const std::vector<std::vector<long>> table = {
      {1},
      {1},
      {1, 1, 1},
      {1, 1, 3, 1, 1},
      {1, 2, 7, 5, 7, 2, 1},
      {1, 2, 12, 12, 27, 12, 12, 2, 1},
  };
  return table;
}

namespace {

using Outcome = std::optional<Counterexample>;

std::string str(const BigInt& v) { return v.str(); }

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += values[i].str();
  }
  return out;
}

template <typename T>
std::string join_ints(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

Outcome fail(std::string parameters, std::string expected, std::string actual) {
  return Counterexample{std::move(parameters), std::move(expected), std::move(actual)};
}

std::vector<BigInt> widen(const std::vector<long>& row) {
  return std::vector<BigInt>(row.begin(), row.end());
}

// Trailing zeros beyond the formula's range are not part of either row.
std::vector<BigInt> trimmed(std::vector<BigInt> row) {
  while (row.size() > 1 && row.back() == 0) row.pop_back();
  return row;
}

class Runner {
 public:
  Runner(Report& report, Suite selected) : report_(report), selected_(selected) {}

  void run(Suite suite, std::string identity, std::string range, bool enabled,
           const std::function<Outcome()>& body) {
    if (!enabled) return;
    if (selected_ != Suite::all && selected_ != suite) return;
    const auto start = std::chrono::steady_clock::now();
    Record record;
    record.suite = suite_name(suite);
    record.identity = std::move(identity);
    record.range = std::move(range);
    record.counterexample = body();
    record.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    report_.records.push_back(std::move(record));
  }

 private:
  static std::string suite_name(Suite suite) {
    switch (suite) {
      case Suite::formulas: return "formulas";
      case Suite::tableaux: return "tableaux";
      case Suite::witnesses: return "witnesses";
      case Suite::all: break;
    }
    return "all";
  }

  Report& report_;
  Suite selected_;
};

std::string le(const char* what, int bound) { return std::string(what) + " <= " + std::to_string(bound); }

// Every generalized involution of length <= max_length over [m] for
// 1 <= m <= max_m.
void for_each_biword(int max_length, int max_m, std::uint64_t max_states,
                     const std::function<void(const GeneralizedInvolution&)>& visit) {
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 0; n <= max_length; ++n) {
      oracles::for_each_symmetric_matrix(m, n, max_states, [&](const SymmetricMatrix& a) {
        visit(GeneralizedInvolution(a));
      });
    }
  }
}

void formula_identities(Runner& run, const Caps& caps) {
  const auto& enumeration = caps.enumeration;

  run.run(Suite::formulas, "s_total.explicit_vs_recurrence", le("even n", caps.recurrence_max_n),
          caps.recurrence_max_n >= 0, [&]() -> Outcome {
            for (int n = 0; n <= caps.recurrence_max_n; n += 2) {
              const auto a = f::s_total(n);
              const auto b = f::s_total_rec(n);
              if (a != b) return fail("n=" + std::to_string(n), str(a), str(b));
            }
            return {};
          });

  run.run(Suite::formulas, "s_total.explicit_vs_oracle", le("n", caps.oracle_max_n),
          caps.oracle_max_n >= 0, [&]() -> Outcome {
            for (int n = 0; n <= caps.oracle_max_n; ++n) {
              const auto a = f::s_total(n);
              const auto b = oracles::brute_s_total(n, false, enumeration);
              if (a != b) return fail("n=" + std::to_string(n), str(a), str(b));
            }
            return {};
          });

  run.run(Suite::formulas, "s_total.even_equals_odd_oracle", le("k", caps.central_max_k),
          caps.central_max_k >= 0, [&]() -> Outcome {
            for (int k = 0; k <= caps.central_max_k; ++k) {
              const auto a = oracles::brute_s_total(2 * k, false, enumeration);
              const auto b = oracles::brute_s_total(2 * k + 1, false, enumeration);
              if (a != b) return fail("k=" + std::to_string(k), str(a), str(b));
            }
            return {};
          });

  run.run(Suite::formulas, "s_by_rises.row_sum_equals_total", le("k", caps.rises_max_k),
          caps.rises_max_k >= 0, [&]() -> Outcome {
            for (int k = 0; k <= caps.rises_max_k; ++k) {
              BigInt sum = 0;
              for (const auto& v : f::s_row(2 * k)) sum += v;
              const auto total = f::s_total(2 * k);
              if (sum != total) return fail("k=" + std::to_string(k), str(total), str(sum));
            }
            return {};
          });

  run.run(Suite::formulas, "s_by_rises.vs_oracle", le("even n", caps.oracle_max_n),
          caps.oracle_max_n >= 0, [&]() -> Outcome {
            for (int n = 0; n <= caps.oracle_max_n; n += 2) {
              const auto oracle = trimmed(oracles::brute_s_row(n, false, enumeration));
              const auto formula = trimmed(f::s_row(n));
              if (oracle != formula) {
                return fail("n=" + std::to_string(n), join(oracle), join(formula));
              }
            }
            return {};
          });

  run.run(Suite::formulas, "s_by_rises.reference_table", le("n", caps.table_max_n),
          caps.table_max_n >= 0, [&]() -> Outcome {
            const auto& table = reference_s_table();
            for (int n = 0; n <= caps.table_max_n && n < static_cast<int>(table.size()); ++n) {
              const auto expected = widen(table[static_cast<std::size_t>(n)]);
              const auto actual = polynomial_of(Family::S, n).coefficients();
              if (expected != actual) {
                return fail("n=" + std::to_string(n), join(expected), join(actual));
              }
              const auto oracle = trimmed(oracles::brute_s_row(n, false, enumeration));
              if (expected != oracle) {
                return fail("n=" + std::to_string(n) + " (oracle)", join(expected),
                                join(oracle));
              }
            }
            return {};
          });

  run.run(Suite::formulas, "s_by_rises.symmetry", le("k", caps.rises_max_k),
          caps.rises_max_k >= 0, [&]() -> Outcome {
            for (int k = 1; k <= caps.rises_max_k; ++k) {
              const auto row = f::s_row(2 * k);
              for (int i = 0; i < 2 * k; ++i) {
                const auto& a = row[static_cast<std::size_t>(i)];
                const auto& b = row[static_cast<std::size_t>(2 * k - 1 - i)];
                if (a != b) {
                  return fail("k=" + std::to_string(k) + " i=" + std::to_string(i), str(a),
                                  str(b));
                }
              }
            }
            return {};
          });

  run.run(Suite::formulas, "s_by_rises.symmetry_oracle", le("even n", caps.oracle_max_n),
          caps.oracle_max_n >= 0, [&]() -> Outcome {
            for (int n = 2; n <= caps.oracle_max_n; n += 2) {
              const auto row = oracles::brute_s_row(n, false, enumeration);
              for (int i = 0; i < n; ++i) {
                const auto& a = row[static_cast<std::size_t>(i)];
                const auto& b = row[static_cast<std::size_t>(n - 1 - i)];
                if (a != b) {
                  return fail("n=" + std::to_string(n) + " i=" + std::to_string(i), str(a),
                                  str(b));
                }
              }
            }
            return {};
          });

  run.run(Suite::formulas, "c_from_s.consistency",
          le("k", caps.transform_max_k) + ", " + le("m", caps.transform_max_m),
          caps.transform_max_k >= 0 && caps.transform_max_m >= 1, [&]() -> Outcome {
            for (int k = 0; k <= caps.transform_max_k; ++k) {
              const auto row = f::s_row(2 * k);
              for (int m = 1; m <= caps.transform_max_m; ++m) {
                const auto a = f::c_count(2 * k, m);
                const auto b = f::c_from_s(2 * k, m, row);
                if (a != b) {
                  return fail("k=" + std::to_string(k) + " m=" + std::to_string(m), str(a),
                                  str(b));
                }
              }
            }
            return {};
          });

  run.run(Suite::formulas, "rise_transform.inversion_roundtrip",
          le("k", caps.transform_max_k) + ", " + le("m", caps.transform_max_m),
          caps.transform_max_k >= 1 && caps.transform_max_m >= 1, [&]() -> Outcome {
            for (int k = 1; k <= caps.transform_max_k; ++k) {
              const long n = 2L * k;
              const auto row = f::s_row(n);
              auto c_of = [&](long j) { return f::c_from_s(n, j, row); };
              for (long d = 0; d < std::min<long>(n, caps.transform_max_m); ++d) {
                const auto back = f::invert_rise_transform(n, d, c_of);
                if (back != row[static_cast<std::size_t>(d)]) {
                  return fail("k=" + std::to_string(k) + " d=" + std::to_string(d),
                                  str(row[static_cast<std::size_t>(d)]), str(back));
                }
              }
            }
            return {};
          });

  run.run(Suite::formulas, "c_count.vs_oracle",
          le("even n", caps.c_oracle_max_n) + ", " + le("m", caps.c_oracle_max_m),
          caps.c_oracle_max_n >= 0 && caps.c_oracle_max_m >= 1, [&]() -> Outcome {
            for (int n = 0; n <= caps.c_oracle_max_n; n += 2) {
              for (int m = 1; m <= caps.c_oracle_max_m; ++m) {
                const auto a = f::c_count(n, m);
                const auto b = oracles::brute_c(n, m, false, enumeration);
                if (a != b) {
                  return fail("n=" + std::to_string(n) + " m=" + std::to_string(m), str(a),
                                  str(b));
                }
              }
            }
            return {};
          });

  run.run(Suite::formulas, "c_count.odd_length_rules_oracle",
          le("odd n", caps.c_odd_max_n) + ", " + le("m", caps.c_oracle_max_m),
          caps.c_odd_max_n >= 1 && caps.c_oracle_max_m >= 1, [&]() -> Outcome {
            for (int n = 1; n <= caps.c_odd_max_n; n += 2) {
              for (int m = 1; m <= caps.c_oracle_max_m; ++m) {
                const BigInt expected =
                    m % 2 == 0 ? BigInt(0) : oracles::brute_c(n - 1, m, false, enumeration);
                const auto b = oracles::brute_c(n, m, false, enumeration);
                if (expected != b) {
                  return fail("n=" + std::to_string(n) + " m=" + std::to_string(m),
                                  str(expected), str(b));
                }
                if (f::c_count(n, m) != b) {
                  return fail("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                      " (formula)",
                                  str(f::c_count(n, m)), str(b));
                }
              }
            }
            return {};
          });

  run.run(Suite::formulas, "c_from_s.oracle_rows",
          le("k", caps.c_from_oracle_max_k) + ", " + le("m", caps.c_from_oracle_max_m),
          caps.c_from_oracle_max_k >= 0 && caps.c_from_oracle_max_m >= 1, [&]() -> Outcome {
            for (int k = 0; k <= caps.c_from_oracle_max_k; ++k) {
              const auto row = oracles::brute_s_row(2 * k, false, enumeration);
              for (int m = 1; m <= caps.c_from_oracle_max_m; ++m) {
                const auto a = f::c_count(2 * k, m);
                const auto b = f::c_from_s(2 * k, m, row);
                if (a != b) {
                  return fail("k=" + std::to_string(k) + " m=" + std::to_string(m), str(a),
                                  str(b));
                }
              }
            }
            return {};
          });

  const bool literal = caps.literal_star_recurrence;
  run.run(Suite::formulas,
          literal ? "s_star_total.explicit_vs_literal_recurrence"
                  : "s_star_total.explicit_vs_recurrence",
          le("k", caps.star_recurrence_max_k), caps.star_recurrence_max_k >= 0,
          [&]() -> Outcome {
            const auto coefficient =
                literal ? f::StarRecurrence::literal : f::StarRecurrence::corrected;
            for (int k = 0; k <= caps.star_recurrence_max_k; ++k) {
              const auto a = f::s_star_total(2 * k);
              const auto b = f::s_star_total_rec(2 * k, coefficient);
              if (a != b) return fail("k=" + std::to_string(k), str(a), str(b));
            }
            return {};
          });

  run.run(Suite::formulas, "s_star_total.explicit_vs_oracle", le("even n", caps.oracle_max_n),
          caps.oracle_max_n >= 0, [&]() -> Outcome {
            for (int n = 0; n <= caps.oracle_max_n; n += 2) {
              const auto a = f::s_star_total(n);
              const auto b = oracles::brute_s_total(n, true, enumeration);
              if (a != b) return fail("n=" + std::to_string(n), str(a), str(b));
            }
            return {};
          });

  run.run(Suite::formulas, "s_star_by_rises.row_sum_equals_total", le("k", caps.rises_max_k),
          caps.rises_max_k >= 0, [&]() -> Outcome {
            for (int k = 0; k <= caps.rises_max_k; ++k) {
              BigInt sum = 0;
              for (const auto& v : f::s_star_row(2 * k)) sum += v;
              const auto total = f::s_star_total(2 * k);
              if (sum != total) return fail("k=" + std::to_string(k), str(total), str(sum));
            }
            return {};
          });

  run.run(Suite::formulas, "c_star_count.vs_oracle",
          le("even n", caps.c_oracle_max_n) + ", " + le("m", caps.c_oracle_max_m),
          caps.c_oracle_max_n >= 0 && caps.c_oracle_max_m >= 1, [&]() -> Outcome {
            for (int n = 0; n <= caps.c_oracle_max_n; n += 2) {
              for (int m = 1; m <= caps.c_oracle_max_m; ++m) {
                const auto a = f::c_star_count(n, m);
                const auto b = oracles::brute_c(n, m, true, enumeration);
                if (a != b) {
                  return fail("n=" + std::to_string(n) + " m=" + std::to_string(m), str(a),
                                  str(b));
                }
              }
            }
            return {};
          });

  run.run(Suite::formulas, "s_star_by_rises.vs_oracle", le("even n", caps.oracle_max_n),
          caps.oracle_max_n >= 0, [&]() -> Outcome {
            for (int n = 0; n <= caps.oracle_max_n; n += 2) {
              const auto oracle = trimmed(oracles::brute_s_row(n, true, enumeration));
              const auto formula = trimmed(f::s_star_row(n));
              if (oracle != formula) {
                return fail("n=" + std::to_string(n), join(oracle), join(formula));
              }
            }
            return {};
          });

  run.run(Suite::formulas, "s_star_by_rises.reference_table", le("even n", caps.table_max_n),
          caps.table_max_n >= 0, [&]() -> Outcome {
            const auto& table = reference_s_star_table();
            for (int n = 0; n <= caps.table_max_n && n / 2 < static_cast<int>(table.size());
                 n += 2) {
              const auto expected = widen(table[static_cast<std::size_t>(n / 2)]);
              const auto actual = polynomial_of(Family::S_star, n).coefficients();
              if (expected != actual) {
                return fail("n=" + std::to_string(n), join(expected), join(actual));
              }
              const auto oracle = trimmed(oracles::brute_s_row(n, true, enumeration));
              if (expected != oracle) {
                return fail("n=" + std::to_string(n) + " (oracle)", join(expected),
                                join(oracle));
              }
            }
            return {};
          });

  run.run(Suite::formulas, "s_star_by_rises.symmetry", le("k", caps.rises_max_k),
          caps.rises_max_k >= 0, [&]() -> Outcome {
            for (int k = 1; k <= caps.rises_max_k; ++k) {
              const auto row = f::s_star_row(2 * k);
              for (int d = 0; d <= 2 * k - 2; ++d) {
                const auto& a = row[static_cast<std::size_t>(d)];
                const auto& b = row[static_cast<std::size_t>(2 * k - 2 - d)];
                if (a != b) {
                  return fail("k=" + std::to_string(k) + " d=" + std::to_string(d), str(a),
                                  str(b));
                }
              }
            }
            return {};
          });

  run.run(Suite::formulas, "s_star_by_rises.symmetry_oracle", le("even n", caps.oracle_max_n),
          caps.oracle_max_n >= 0, [&]() -> Outcome {
            for (int n = 2; n <= caps.oracle_max_n; n += 2) {
              const auto row = oracles::brute_s_row(n, true, enumeration);
              for (int d = 0; d <= n - 2; ++d) {
                const auto& a = row[static_cast<std::size_t>(d)];
                const auto& b = row[static_cast<std::size_t>(n - 2 - d)];
                if (a != b) {
                  return fail("n=" + std::to_string(n) + " d=" + std::to_string(d), str(a),
                                  str(b));
                }
              }
            }
            return {};
          });

  run.run(Suite::formulas, "star_rise_transform.inversion_roundtrip",
          le("k", caps.transform_max_k) + ", " + le("m", caps.transform_max_m),
          caps.transform_max_k >= 1 && caps.transform_max_m >= 1, [&]() -> Outcome {
            for (int k = 1; k <= caps.transform_max_k; ++k) {
              const long n = 2L * k;
              const auto row = f::s_star_row(n);
              for (int m = 1; m <= caps.transform_max_m; ++m) {
                const auto a = f::c_star_count(n, m);
                const auto b = f::c_star_from_s_star(n, m, row);
                if (a != b) {
                  return fail("k=" + std::to_string(k) + " m=" + std::to_string(m), str(a),
                                  str(b));
                }
              }
              auto c_of = [&](long j) { return f::c_star_from_s_star(n, j, row); };
              for (long d = 0; d < std::min<long>(n - 1, caps.transform_max_m); ++d) {
                const auto back = f::invert_rise_transform(n, d, c_of);
                if (back != row[static_cast<std::size_t>(d)]) {
                  return fail("k=" + std::to_string(k) + " d=" + std::to_string(d),
                                  str(row[static_cast<std::size_t>(d)]), str(back));
                }
              }
            }
            return {};
          });

  run.run(Suite::formulas, "gen_count.vs_oracle",
          le("n", caps.gen_max_n) + ", " + le("m", caps.gen_max_m),
          caps.gen_max_n >= 0 && caps.gen_max_m >= 1, [&]() -> Outcome {
            for (int n = 0; n <= caps.gen_max_n; ++n) {
              for (const auto& sigma : enumerate_involutions(n, InvolutionFilter::all)) {
                const int t = rise_count(sigma);
                for (int m = 1; m <= caps.gen_max_m; ++m) {
                  const auto a = f::gen_count(n, m, t);
                  const auto b = oracles::brute_gen_count(sigma, m, enumeration);
                  if (a != b) {
                    return fail("sigma=" + to_string(sigma) + " m=" + std::to_string(m),
                                    str(a), str(b));
                  }
                }
              }
            }
            return {};
          });
}

void tableau_identities(Runner& run, const Caps& caps) {
  run.run(Suite::tableaux, "involutions.constructive_vs_filtering",
          le("n", caps.involution_max_n), caps.involution_max_n >= 0, [&]() -> Outcome {
            for (int n = 0; n <= caps.involution_max_n; ++n) {
              for (auto filter : {InvolutionFilter::all, InvolutionFilter::self_evacuated,
                                  InvolutionFilter::self_evacuated_fixed_point_free}) {
                const auto a = enumerate_involutions(n, filter);
                const auto b = enumerate_involutions_by_filtering(n, filter);
                if (a != b) {
                  return fail("n=" + std::to_string(n) + " filter=" +
                                      std::to_string(static_cast<int>(filter)),
                                  std::to_string(b.size()) + " involutions",
                                  std::to_string(a.size()) + " involutions");
                }
                if (!std::is_sorted(a.begin(), a.end())) {
                  return fail("n=" + std::to_string(n), "lexicographic order", "unsorted");
                }
              }
            }
            return {};
          });

  run.run(Suite::tableaux, "involutions.self_evacuated_iff_conjugation_fixed",
          le("n", caps.involution_max_n), caps.involution_max_n >= 0, [&]() -> Outcome {
            for (int n = 0; n <= caps.involution_max_n; ++n) {
              for (const auto& sigma : enumerate_involutions(n, InvolutionFilter::all)) {
                const bool a = is_self_evacuated(sigma);
                const bool b = complement_conjugate(sigma) == sigma;
                if (a != b) return fail("sigma=" + to_string(sigma), "equal", "different");
              }
            }
            return {};
          });

  run.run(Suite::tableaux, "involutions.mirror_descents", le("n", caps.involution_max_n),
          caps.involution_max_n >= 0, [&]() -> Outcome {
            for (int n = 0; n <= caps.involution_max_n; ++n) {
              for (const auto& sigma : enumerate_involutions(n, InvolutionFilter::all)) {
                PositionSet mirrored;
                for (int i : descent_set(sigma).positions) {
                  mirrored.positions.insert(mirrored.positions.begin(), n - i);
                }
                const auto image = descent_set(complement_conjugate(sigma));
                if (image != mirrored) {
                  return fail("sigma=" + to_string(sigma), join_ints(mirrored.positions),
                                  join_ints(image.positions));
                }
              }
            }
            return {};
          });

  run.run(Suite::tableaux, "involutions.complement_compose_rises",
          le("n", caps.involution_max_n), caps.involution_max_n >= 0, [&]() -> Outcome {
            for (int n = 0; n <= caps.involution_max_n; ++n) {
              for (const auto& sigma : enumerate_involutions(n, InvolutionFilter::self_evacuated)) {
                const auto tau = complement_compose(sigma);
                if (!is_self_evacuated(tau)) {
                  return fail("sigma=" + to_string(sigma), "self-evacuated", to_string(tau));
                }
                if (descent_set(tau) != rise_set(sigma)) {
                  return fail("sigma=" + to_string(sigma), join_ints(rise_set(sigma).positions),
                                  join_ints(descent_set(tau).positions));
                }
              }
            }
            return {};
          });

  run.run(Suite::tableaux, "involutions.central_symbol_bijection",
          le("k", std::min(caps.central_max_k, 5)), caps.central_max_k >= 0, [&]() -> Outcome {
            for (int k = 0; k <= std::min(caps.central_max_k, 5); ++k) {
              const auto even = enumerate_involutions(2 * k, InvolutionFilter::self_evacuated);
              const auto odd = enumerate_involutions(2 * k + 1, InvolutionFilter::self_evacuated);
              if (even.size() != odd.size()) {
                return fail("k=" + std::to_string(k), std::to_string(even.size()),
                                std::to_string(odd.size()));
              }
              for (std::size_t i = 0; i < odd.size(); ++i) {
                if (delete_central_symbol(odd[i]) != even[i] ||
                    insert_central_symbol(even[i]) != odd[i]) {
                  return fail("sigma=" + to_string(odd[i]), to_string(even[i]),
                                  to_string(delete_central_symbol(odd[i])));
                }
              }
            }
            return {};
          });

  run.run(Suite::tableaux, "rsk.bijection_roundtrip", le("n", caps.rsk_max_n),
          caps.rsk_max_n >= 0, [&]() -> Outcome {
            for (int n = 0; n <= caps.rsk_max_n; ++n) {
              std::set<StandardTableau> images;
              for (const auto& sigma : enumerate_involutions(n, InvolutionFilter::all)) {
                const auto tableau = rsk_involution(sigma);
                const auto back = inverse_rsk(tableau);
                if (back != sigma) {
                  return fail("sigma=" + to_string(sigma), to_string(sigma), to_string(back));
                }
                if (rsk_involution(back) != tableau) {
                  return fail("sigma=" + to_string(sigma), "rsk(inverse(T)) = T", "differs");
                }
                if (!images.insert(tableau).second) {
                  return fail("sigma=" + to_string(sigma), "distinct tableau", "repeated");
                }
              }
            }
            return {};
          });

  run.run(Suite::tableaux, "evacuation.involutive", le("n", caps.rsk_max_n),
          caps.rsk_max_n >= 0, [&]() -> Outcome {
            for (int n = 0; n <= caps.rsk_max_n; ++n) {
              for (const auto& sigma : enumerate_involutions(n, InvolutionFilter::all)) {
                const auto tableau = rsk_involution(sigma);
                const auto image = evacuate_standard(tableau);
                if (image.shape() != tableau.shape() || evacuate_standard(image) != tableau) {
                  return fail("sigma=" + to_string(sigma), format_tableau(tableau.rows()),
                                  format_tableau(evacuate_standard(image).rows()));
                }
              }
            }
            return {};
          });

  run.run(Suite::tableaux, "evacuation.matches_complement_conjugation", le("n", caps.rsk_max_n),
          caps.rsk_max_n >= 0, [&]() -> Outcome {
            for (int n = 0; n <= caps.rsk_max_n; ++n) {
              for (const auto& sigma : enumerate_involutions(n, InvolutionFilter::all)) {
                const auto slid = evacuate_standard(rsk_involution(sigma));
                const auto direct = rsk_involution(complement_conjugate(sigma));
                if (slid != direct) {
                  return fail("sigma=" + to_string(sigma), format_tableau(direct.rows()),
                                  format_tableau(slid.rows()));
                }
              }
            }
            return {};
          });

  const std::uint64_t states = caps.enumeration.max_matrix_states;

  run.run(Suite::tableaux, "biword.rsk_roundtrip",
          le("length", caps.biword_max_length) + ", " + le("m", caps.biword_max_m),
          caps.biword_max_length >= 0 && caps.biword_max_m >= 1, [&]() -> Outcome {
            Outcome failure;
            std::set<std::pair<int, TableauRows>> images;
            for_each_biword(caps.biword_max_length, caps.biword_max_m, states,
                            [&](const GeneralizedInvolution& alpha) {
                              if (failure) return;
                              const auto [insertion, recording] = rsk_biword_pair(alpha);
                              const auto tableau = rsk_biword(alpha);
                              if (insertion != recording) {
                                failure = fail(format_biword(alpha), "P = Q", "P != Q");
                              } else if (biword_of_tableau(tableau) != alpha) {
                                failure = fail(format_biword(alpha), format_biword(alpha),
                                                   format_biword(biword_of_tableau(tableau)));
                              } else if (!images.insert({alpha.alphabet_size(), tableau.rows()})
                                              .second) {
                                failure = fail(format_biword(alpha), "distinct tableau",
                                                   "repeated");
                              }
                            });
            return failure;
          });

  run.run(Suite::tableaux, "biword.evacuation_involutive",
          le("length", caps.biword_max_length) + ", " + le("m", caps.biword_max_m),
          caps.biword_max_length >= 0 && caps.biword_max_m >= 1, [&]() -> Outcome {
            Outcome failure;
            for_each_biword(caps.biword_max_length, caps.biword_max_m, states,
                            [&](const GeneralizedInvolution& alpha) {
                              if (!failure && evacuate_biword(evacuate_biword(alpha)) != alpha) {
                                failure = fail(format_biword(alpha), "ev(ev(a)) = a",
                                                   "differs");
                              }
                            });
            return failure;
          });

  auto commutes = [](const GeneralizedInvolution& alpha) -> Outcome {
    const auto a = polarize(evacuate_biword(alpha));
    const auto b = complement_conjugate(polarize(alpha));
    if (a != b) return fail(format_biword(alpha), to_string(b), to_string(a));
    return {};
  };

  run.run(Suite::tableaux, "biword.polarization_commutes_with_evacuation",
          le("length", caps.biword_max_length) + ", " + le("m", caps.biword_max_m),
          caps.biword_max_length >= 0 && caps.biword_max_m >= 1, [&]() -> Outcome {
            Outcome failure;
            for_each_biword(caps.biword_max_length, caps.biword_max_m, states,
                            [&](const GeneralizedInvolution& alpha) {
                              if (!failure) failure = commutes(alpha);
                            });
            return failure;
          });

  run.run(Suite::tableaux, "biword.polarization_commutes_sampled",
          std::to_string(caps.sample_count) + " samples, " +
              le("length", caps.sample_max_length) + ", " + le("m", caps.sample_max_m) +
              ", seed " + std::to_string(caps.seed),
          caps.sample_count >= 0 && caps.sample_max_length >= 0 && caps.sample_max_m >= 1,
          [&]() -> Outcome {
            std::mt19937_64 rng(caps.seed);
            for (int s = 0; s < caps.sample_count; ++s) {
              const int m = std::uniform_int_distribution<int>(1, caps.sample_max_m)(rng);
              int left = std::uniform_int_distribution<int>(0, caps.sample_max_length)(rng);
              SymmetricMatrix a(m);
              std::uniform_int_distribution<int> symbol(1, m);
              while (left > 0) {
                const int i = symbol(rng);
                const int j = symbol(rng);
                if (i == j) {
                  a.set(i, i, a(i, i) + 1);
                  left -= 1;
                } else if (left >= 2) {
                  a.set(i, j, a(i, j) + 1);
                  left -= 2;
                }
              }
              if (auto failure = commutes(GeneralizedInvolution(a))) return failure;
            }
            return {};
          });

  run.run(Suite::tableaux, "biword.self_evacuation_characterizations",
          le("length", caps.biword_max_length) + ", " + le("m", caps.characterization_max_m),
          caps.biword_max_length >= 0 && caps.characterization_max_m >= 1, [&]() -> Outcome {
            Outcome failure;
            for_each_biword(caps.biword_max_length, caps.characterization_max_m, states,
                            [&](const GeneralizedInvolution& alpha) {
                              if (failure) return;
                              const bool a = is_self_evacuated_biword(alpha);
                              const bool b = is_self_evacuated_biword_by_content(alpha);
                              const bool c = evacuate_biword(alpha) == alpha;
                              if (a != b || a != c) {
                                failure = fail(format_biword(alpha), a ? "true" : "false",
                                                   b ? "true" : "false");
                              }
                            });
            return failure;
          });

  run.run(Suite::tableaux, "gen.count_and_polarization",
          le("n", caps.gen_max_n) + ", " + le("m", caps.gen_max_m),
          caps.gen_max_n >= 0 && caps.gen_max_m >= 1, [&]() -> Outcome {
            for (int n = 0; n <= caps.gen_max_n; ++n) {
              for (const auto& sigma : enumerate_involutions(n, InvolutionFilter::all)) {
                for (int m = 1; m <= caps.gen_max_m; ++m) {
                  long count = 0;
                  Outcome failure;
                  for_each_gen(sigma, m, false, [&](const GeneralizedInvolution& alpha) {
                    ++count;
                    if (!failure && polarize(alpha) != sigma) {
                      failure = fail("sigma=" + to_string(sigma), to_string(sigma),
                                         to_string(polarize(alpha)));
                    }
                  });
                  if (failure) return failure;
                  const auto expected = f::gen_count(n, m, rise_count(sigma));
                  if (expected != count) {
                    return fail("sigma=" + to_string(sigma) + " m=" + std::to_string(m),
                                    str(expected), std::to_string(count));
                  }
                }
              }
            }
            return {};
          });

  run.run(Suite::tableaux, "gen.self_evacuated_count",
          le("even n", caps.gen_max_n) + ", " + le("m", caps.gen_max_m),
          caps.gen_max_n >= 0 && caps.gen_max_m >= 1, [&]() -> Outcome {
            for (int n = 0; n <= caps.gen_max_n; n += 2) {
              const int k = n / 2;
              for (const auto& sigma : enumerate_involutions(n, InvolutionFilter::self_evacuated)) {
                for (int m = 1; m <= caps.gen_max_m; ++m) {
                  long count = 0;
                  Outcome failure;
                  for_each_gen(sigma, m, true, [&](const GeneralizedInvolution& alpha) {
                    ++count;
                    if (!failure && !is_self_evacuated_biword(alpha)) {
                      failure = fail("sigma=" + to_string(sigma), "self-evacuated",
                                         format_biword(alpha));
                    }
                  });
                  if (failure) return failure;
                  const long free = m - 1 - rise_count(sigma);
                  const BigInt expected = free < 0 ? BigInt(0) : f::binomial(k + free / 2, free / 2);
                  if (expected != count) {
                    return fail("sigma=" + to_string(sigma) + " m=" + std::to_string(m),
                                    str(expected), std::to_string(count));
                  }
                }
              }
            }
            return {};
          });

  run.run(Suite::tableaux, "biword.self_evacuated_polarization",
          le("even length", caps.polarization_max_length) + ", " +
              le("m", caps.polarization_max_m),
          caps.polarization_max_length >= 0 && caps.polarization_max_m >= 1, [&]() -> Outcome {
            for (int n = 0; n <= caps.polarization_max_length; n += 2) {
              for (int m = 1; m <= caps.polarization_max_m; ++m) {
                Outcome failure;
                oracles::for_each_symmetric_matrix(m, n, states, [&](const SymmetricMatrix& a) {
                  const GeneralizedInvolution alpha(a);
                  if (failure || !is_self_evacuated_biword(alpha)) return;
                  const auto sigma = polarize(alpha);
                  const auto x = alpha.content();
                  bool symmetric = true;
                  for (std::size_t i = 0; i < x.size(); ++i) {
                    symmetric = symmetric && x[i] + x[x.size() - 1 - i] == m + 1;
                  }
                  if (!is_self_evacuated(sigma) || !symmetric) {
                    failure = fail(format_biword(alpha), "self-evacuated, symmetric content",
                                       to_string(sigma));
                  } else if (has_even_repetitions(alpha) == has_fixed_point(sigma)) {
                    failure = fail(format_biword(alpha),
                                       "even repetitions iff fixed-point-free polarization",
                                       to_string(sigma));
                  }
                });
                if (failure) return failure;
              }
            }
            return {};
          });
}

void witness_identities(Runner& run, const Caps& caps) {
  run.run(Suite::witnesses, "witness.s_not_log_concave", "n = " + std::to_string(caps.witness_n),
          caps.witness_n >= 2, [&]() -> Outcome {
            const long n = caps.witness_n;
            const auto s0 = f::s_by_rises(n, 0);
            const auto s1 = f::s_by_rises(n, 1);
            const auto s2 = f::s_by_rises(n, 2);
            const std::string values = str(s0) + "*" + str(s2) + " vs " + str(s1) + "^2";
            if (!(s0 * s2 > s1 * s1)) {
              return fail("n=" + std::to_string(n), "s0*s2 > s1^2", values);
            }
            if (n == 100 && (s0 != 1 || s1 != 50 || s2 != 11950)) {
              return fail("n=100", "1*11950 vs 50^2", values);
            }
            return {};
          });

  run.run(Suite::witnesses, "witness.s_star_not_unimodal", "n = 8", caps.witness_n >= 0,
          [&]() -> Outcome {
            const auto p = polynomial_of(Family::S_star, 8);
            const auto report = analyze(p);
            const std::vector<BigInt> expected{1, 2, 7, 5, 7, 2, 1};
            if (p.coefficients() != expected) {
              return fail("n=8", join(expected), join(p.coefficients()));
            }
            const std::array<std::size_t, 3> witness{2, 3, 4};
            if (report.unimodal || report.unimodal_witness != witness) {
              return fail("n=8", "not unimodal at (2,3,4)",
                              report.unimodal ? "unimodal" : "different witness");
            }
            return {};
          });
}

}  // namespace

Report crosscheck_all(const Caps& caps, Suite suite) {
  Report report;
  Runner run(report, suite);
  formula_identities(run, caps);
  tableau_identities(run, caps);
  witness_identities(run, caps);
  return report;
}

}  // namespace sevac::crosscheck
