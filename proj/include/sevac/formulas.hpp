#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sevac/bigint.hpp"

// Exact counting formulas for self-evacuated involutions and self-evacuated
// generalized involutions. Every length argument named `n` is the full
// length; the even-length formulas take n = 2k and throw Error(OddLength)
// otherwise. Nothing here touches floating point.
namespace sevac::formulas {

/// C(a, b) for a >= 0; zero when b < 0 or b > a.
BigInt binomial(long a, long b);

/// C(x + j - 1, j): j-multisets from an alphabet of size x. multichoose(0, 0)
/// is 1 and multichoose(0, j) is 0 for j >= 1.
BigInt multichoose(long x, long j);

BigInt factorial(long n);
/// n (n-2) (n-4) ... down to 1 or 2; 1 for n <= 0.
BigInt double_factorial(long n);

/// |Gen_m(sigma)| for an involution of length n with t rises:
/// C(n + m - t - 1, n).
BigInt gen_count(long n, long m, long t);

/// Number of self-evacuated involutions on n symbols, summed over the number
/// h of smooth transposition pairs. Odd n reuses n - 1 (the central symbol is
/// always fixed).
BigInt s_total(long n);

/// s_{2k} = 2 s_{2k-2} + (2k-2) s_{2k-4}, with s_0 = 1 and s_2 = 2.
BigInt s_total_rec(long n);

/// Self-evacuated generalized involutions of length n over [m]. Odd lengths
/// follow the parity rules: 0 for even m, c_{n-1,m} for odd m.
BigInt c_count(long n, long m);

/// c_{2k,m} rebuilt from a row s_{2k,0..}; entries missing from `s_row` are
/// read as zero.
BigInt c_from_s(long n, long m, std::span<const BigInt> s_row);

/// Inverts the c-from-s transform: recovers s_{2k,d} from c_{2k,1..d+1}.
/// `c_of` is called with alphabet sizes j = 1..d+1.
BigInt invert_rise_transform(long n, long d, const std::function<BigInt(long)>& c_of);

/// Self-evacuated involutions of length n = 2k with exactly d rises,
/// 0 <= d <= 2k-1 (n = 0 is the single row entry d = 0).
BigInt s_by_rises(long n, long d);

/// Fixed-point-free self-evacuated involutions on n = 2k symbols.
BigInt s_star_total(long n);

enum class StarRecurrence {
  /// s*_{2k} = s*_{2k-2} + (2k-2) s*_{2k-4}.
  corrected,
  /// The literal (2n-2) coefficient read with n = 2k. Kept only to show that
  /// it fails.
  literal,
};

/// Second-order recurrence for s*_{2k} with s*_0 = s*_2 = 1.
BigInt s_star_total_rec(long n, StarRecurrence coefficient = StarRecurrence::corrected);

/// Self-evacuated generalized involutions of length n = 2k over [m] whose
/// repetitions all have even multiplicity.
BigInt c_star_count(long n, long m);

/// c*_{2k,m} rebuilt from a row s*_{2k,0..}.
BigInt c_star_from_s_star(long n, long m, std::span<const BigInt> s_star_row);

/// Fixed-point-free self-evacuated involutions of length n = 2k with d
/// rises, 0 <= d <= max(2k-2, 0).
BigInt s_star_by_rises(long n, long d);

/// s_by_rises(n, d) for every d in range.
std::vector<BigInt> s_row(long n);
/// s_star_by_rises(n, d) for every d in range.
std::vector<BigInt> s_star_row(long n);

}  // namespace sevac::formulas
