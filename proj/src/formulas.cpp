#include "sevac/formulas.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "sevac/error.hpp"

namespace sevac::formulas {

namespace {

long half_of_even(long n, const char* what) {
  if (n < 0 || n % 2 != 0) {
    throw Error(ErrorCode::OddLength,
                std::string(what) + " needs an even, nonnegative length (got " +
                    std::to_string(n) + ")");
  }
  return n / 2;
}

class FactorialTable {
 public:
  BigInt get(long n) {
    std::lock_guard lock(mutex_);
    while (static_cast<long>(values_.size()) <= n) {
      const auto next = static_cast<long>(values_.size());
      values_.push_back(values_.back() * next);
    }
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  std::mutex mutex_;
  std::vector<BigInt> values_{BigInt(1)};
};

FactorialTable& factorials() {
  static FactorialTable table;
  return table;
}

// Pure function cache keyed on (n, m); entries are never invalidated.
class CountCache {
 public:
  template <typename Compute>
  BigInt get(long n, long m, Compute compute) {
    {
      std::lock_guard lock(mutex_);
      if (const auto it = values_.find({n, m}); it != values_.end()) return it->second;
    }
    BigInt value = compute();
    std::lock_guard lock(mutex_);
    values_.emplace(std::pair{n, m}, value);
    return value;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<long, long>, BigInt> values_;
};

// Shared shape of the two generalized-involution counts: pairs of symmetric
// orbits are chosen as a multiset of size j from `orbit_types`, the remaining
// k - 2j slots as a multiset from `free_types`.
BigInt orbit_sum(long k, long orbit_types, long free_types) {
  BigInt total = 0;
  for (long j = 0; j <= k / 2; ++j) {
    total += multichoose(orbit_types, j) * binomial(free_types + k - 2 * j - 1, k - 2 * j);
  }
  return total;
}

// C(m, 2) -/+ floor(m/2), halved; the difference/sum is always even.
long smooth_orbit_types(long m) {
  const long raw = m * (m - 1) / 2 - m / 2;
  return raw / 2;
}

long star_orbit_types(long m) {
  const long raw = m * (m - 1) / 2 + m / 2;
  return raw / 2;
}

}  // namespace

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  return factorials().get(n);
}

BigInt double_factorial(long n) {
  BigInt out = 1;
  for (long i = n; i > 1; i -= 2) out *= i;
  return out;
}

BigInt binomial(long a, long b) {
  if (b < 0) return 0;
  if (a < 0) throw std::domain_error("binomial with negative upper index");
  if (b > a) return 0;
  return factorial(a) / (factorial(b) * factorial(a - b));
}

BigInt multichoose(long x, long j) {
  if (x < 0 || j < 0) throw std::domain_error("multichoose of negative arguments");
  if (x == 0) return j == 0 ? 1 : 0;
  return binomial(x + j - 1, j);
}

BigInt gen_count(long n, long m, long t) { return binomial(n + m - t - 1, n); }

BigInt s_total(long n) {
  if (n < 0) throw std::domain_error("negative size");
  const long k = n / 2;
  const BigInt numerator = double_factorial(2 * k);
  BigInt total = 0;
  for (long h = 0; h <= k / 2; ++h) {
    const BigInt denominator = factorial(k - 2 * h) * factorial(h) * (BigInt(1) << (2 * h));
    total += numerator / denominator;
  }
  return total;
}

BigInt s_total_rec(long n) {
  const long k = half_of_even(n, "s_total_rec");
  BigInt older = 1;  // s_0
  BigInt old = 2;    // s_2
  if (k == 0) return older;
  for (long i = 2; i <= k; ++i) {
    BigInt next = 2 * old + (2 * i - 2) * older;
    older = std::move(old);
    old = std::move(next);
  }
  return old;
}

BigInt c_count(long n, long m) {
  if (n < 0 || m < 1) throw std::domain_error("c_count needs n >= 0 and m >= 1");
  if (n % 2 == 1) return m % 2 == 0 ? BigInt(0) : c_count(n - 1, m);
  static CountCache cache;
  return cache.get(n, m, [&] { return orbit_sum(n / 2, smooth_orbit_types(m), m); });
}

namespace {

BigInt rise_transform(long k, long m, std::span<const BigInt> row) {
  BigInt total = 0;
  for (long j = 0; j <= m - 1; ++j) {
    const long d = m - 1 - j;
    if (d >= static_cast<long>(row.size())) continue;
    total += binomial(k + j / 2, j / 2) * row[static_cast<std::size_t>(d)];
  }
  return total;
}

}  // namespace

BigInt c_from_s(long n, long m, std::span<const BigInt> s_row) {
  return rise_transform(half_of_even(n, "c_from_s"), m, s_row);
}

BigInt invert_rise_transform(long n, long d, const std::function<BigInt(long)>& c_of) {
  const long k = half_of_even(n, "invert_rise_transform");
  BigInt total = 0;
  for (long j = 1; j <= d + 1; ++j) {
    // floor((d - j)/2 + 1) = (d - j + 2) / 2 since d - j + 2 >= 1.
    const long exponent = (d - j + 2) / 2;
    BigInt term = binomial(k, (d + 1 - j) / 2) * c_of(j);
    if (exponent % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigInt s_by_rises(long n, long d) {
  const long k = half_of_even(n, "s_by_rises");
  const long top = k == 0 ? 0 : 2 * k - 1;
  if (d < 0 || d > top) {
    throw std::out_of_range("rise count " + std::to_string(d) + " outside 0.." +
                            std::to_string(top));
  }
  if (k == 0) return 1;
  return invert_rise_transform(n, d, [n](long j) { return c_count(n, j); });
}

BigInt s_star_total(long n) {
  const long k = half_of_even(n, "s_star_total");
  BigInt total = 0;
  for (long h = 0; h <= k / 2; ++h) {
    total += factorial(k) / (factorial(k - 2 * h) * factorial(h));
  }
  return total;
}

BigInt s_star_total_rec(long n, StarRecurrence coefficient) {
  const long k = half_of_even(n, "s_star_total_rec");
  BigInt older = 1;  // s*_0
  BigInt old = 1;    // s*_2
  if (k == 0) return older;
  for (long i = 2; i <= k; ++i) {
    const long factor = coefficient == StarRecurrence::corrected ? 2 * i - 2 : 2 * (2 * i) - 2;
    BigInt next = old + factor * older;
    older = std::move(old);
    old = std::move(next);
  }
  return old;
}

BigInt c_star_count(long n, long m) {
  const long k = half_of_even(n, "c_star_count");
  if (m < 1) throw std::domain_error("c_star_count needs m >= 1");
  static CountCache cache;
  return cache.get(n, m, [&] { return orbit_sum(k, star_orbit_types(m), (m + 1) / 2); });
}

BigInt c_star_from_s_star(long n, long m, std::span<const BigInt> s_star_row) {
  return rise_transform(half_of_even(n, "c_star_from_s_star"), m, s_star_row);
}

BigInt s_star_by_rises(long n, long d) {
  const long k = half_of_even(n, "s_star_by_rises");
  const long top = k == 0 ? 0 : 2 * k - 2;
  if (d < 0 || d > top) {
    throw std::out_of_range("rise count " + std::to_string(d) + " outside 0.." +
                            std::to_string(top));
  }
  if (k == 0) return 1;
  return invert_rise_transform(n, d, [n](long j) { return c_star_count(n, j); });
}

std::vector<BigInt> s_row(long n) {
  const long k = half_of_even(n, "s_row");
  std::vector<BigInt> row;
  const long top = k == 0 ? 0 : 2 * k - 1;
  for (long d = 0; d <= top; ++d) row.push_back(s_by_rises(n, d));
  return row;
}

std::vector<BigInt> s_star_row(long n) {
  const long k = half_of_even(n, "s_star_row");
  std::vector<BigInt> row;
  const long top = k == 0 ? 0 : 2 * k - 2;
  for (long d = 0; d <= top; ++d) row.push_back(s_star_by_rises(n, d));
  return row;
}

}  // namespace sevac::formulas
