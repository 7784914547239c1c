#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sevac/oracles.hpp"

namespace sevac::crosscheck {

enum class Suite { all, formulas, tableaux, witnesses };

/// Parameter ranges for every identity. A negative bound skips the identity.
struct Caps {
  oracles::EnumerationCaps enumeration;

  int recurrence_max_n = 60;        // s_total vs recurrence, even n
  int oracle_max_n = 14;            // formula vs enumeration of involutions
  int central_max_k = 6;            // s_{2k} = s_{2k+1} by enumeration
  int rises_max_k = 15;             // row sums and symmetry of the closed forms
  int table_max_n = 10;             // reference tables
  int transform_max_k = 8;          // c-from-s consistency and inversion
  int transform_max_m = 10;
  int c_oracle_max_n = 8;           // c_count / c_star_count vs matrices
  int c_oracle_max_m = 4;
  int c_odd_max_n = 7;
  int c_from_oracle_max_k = 4;      // c_from_s applied to enumerated rows
  int c_from_oracle_max_m = 8;
  int star_recurrence_max_k = 30;
  int gen_max_n = 6;                // Gen_m(sigma) counts
  int gen_max_m = 6;
  int involution_max_n = 10;        // generator, mirror symmetry, psi laws
  int rsk_max_n = 8;
  int biword_max_length = 4;        // exhaustive biword laws
  int biword_max_m = 3;
  int characterization_max_m = 4;
  int polarization_max_length = 6;  // self-evacuated biword consistency
  int polarization_max_m = 3;
  int sample_count = 1000;          // seeded commutation samples
  int sample_max_length = 8;
  int sample_max_m = 5;
  int witness_n = 100;

  std::uint64_t seed = 1729;
  /// Check the s* recurrence with the literal (2n-2) coefficient instead of 2k-2.
  bool literal_star_recurrence = false;

  /// Every identity disabled: the report comes back empty.
  static Caps none();
};

/// Applies "key=value,key=value" overrides (or the single word "none") on
/// top of `base`. Throws Error(ParseError) for unknown keys or bad values.
Caps parse_caps(std::string_view text, Caps base = {});

struct Counterexample {
  std::string parameters;
  std::string expected;
  std::string actual;
};

struct Record {
  std::string suite;
  std::string identity;
  std::string range;
  std::optional<Counterexample> counterexample;  // empty on a match
  long long millis = 0;

  bool matched() const { return !counterexample.has_value(); }
};

struct Report {
  std::vector<Record> records;

  bool all_match() const;
  const Record* find(std::string_view identity) const;
  nlohmann::json to_json() const;
};

Report crosscheck_all(const Caps& caps, Suite suite = Suite::all);

/// The s_{n,d} and s*_{2k,d} values as published (rows n = 0..10 and
/// n = 0, 2, ..., 10).
const std::vector<std::vector<long>>& reference_s_table();
const std::vector<std::vector<long>>& reference_s_star_table();

}  // namespace sevac::crosscheck
