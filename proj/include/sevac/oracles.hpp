#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sevac/bigint.hpp"
#include "sevac/biword.hpp"
#include "sevac/involution.hpp"

// Brute-force enumerators. They count by explicit generation and share no
// arithmetic with sevac::formulas, so agreement between the two is evidence
// for both.
namespace sevac::oracles {

struct EnumerationCaps {
  /// Largest n for which involutions are enumerated.
  int max_involution_n = 14;
  /// Largest number of symmetric matrices visited by one brute_c call.
  std::uint64_t max_matrix_states = 10'000'000;
};

/// Entry d counts the self-evacuated involutions on [n] (fixed-point-free
/// ones if requested) with exactly d rises. The row has max(n, 1) entries for
/// the full family and max(n - 1, 1) for the fixed-point-free one. Work is
/// split by sigma(1) across threads and merged in a fixed order.
/// Throws Error(CapExceeded) above caps.max_involution_n.
std::vector<BigInt> brute_s_row(int n, bool fixed_point_free, const EnumerationCaps& caps = {});

/// Number of self-evacuated involutions on [n] by enumeration.
BigInt brute_s_total(int n, bool fixed_point_free, const EnumerationCaps& caps = {});

using MatrixVisitor = std::function<void(const SymmetricMatrix&)>;

/// Every symmetric m x m nonnegative integer matrix with entry sum `total`,
/// in lexicographic order of the upper triangle. Throws Error(CapExceeded)
/// once more than `max_states` matrices have been produced.
void for_each_symmetric_matrix(int m, int total, std::uint64_t max_states,
                               const MatrixVisitor& visit);

/// Counts symmetric matrices of sum n over [m] with A(i,j) = A(m+1-j, m+1-i),
/// optionally keeping only those whose biword repetitions all have even
/// multiplicity.
BigInt brute_c(int n, int m, bool even_multiplicity_only, const EnumerationCaps& caps = {});

/// Counts the contents compatible with sigma by generating every weakly
/// increasing word over [m] and filtering. Throws Error(CapExceeded) when the
/// number of words C(n+m-1, n) exceeds caps.max_matrix_states.
BigInt brute_gen_count(const Involution& sigma, int m, const EnumerationCaps& caps = {});

}  // namespace sevac::oracles
