#include "sevac/oracles.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "sevac/error.hpp"

namespace sevac::oracles {

namespace {

void check_involution_cap(int n, const EnumerationCaps& caps) {
  if (n > caps.max_involution_n) {
    throw Error(ErrorCode::CapExceeded, "involution enumeration capped at n = " +
                                            std::to_string(caps.max_involution_n) + " (asked " +
                                            std::to_string(n) + ")");
  }
}

std::size_t row_width(int n, bool fixed_point_free) {
  const int width = fixed_point_free ? n - 1 : n;
  return static_cast<std::size_t>(std::max(width, 1));
}

}  // namespace

std::vector<BigInt> brute_s_row(int n, bool fixed_point_free, const EnumerationCaps& caps) {
  check_involution_cap(n, caps);
  const auto filter = fixed_point_free ? InvolutionFilter::self_evacuated_fixed_point_free
                                       : InvolutionFilter::self_evacuated;
  const std::size_t width = row_width(n, fixed_point_free);
  std::vector<BigInt> row(width, 0);
  if (n == 0) {
    for_each_involution(0, filter, [&](const Involution&) { row[0] += 1; });
    return row;
  }

  // One task per value of sigma(1); each owns its histogram.
  std::vector<std::future<std::vector<std::uint64_t>>> tasks;
  for (int first = 1; first <= n; ++first) {
    tasks.push_back(std::async(std::launch::async, [=] {
      std::vector<std::uint64_t> histogram(width, 0);
      for_each_involution_with_first(n, filter, first, [&](const Involution& sigma) {
        ++histogram[static_cast<std::size_t>(rise_count(sigma))];
      });
      return histogram;
    }));
  }
  for (auto& task : tasks) {
    const auto histogram = task.get();
    for (std::size_t d = 0; d < width; ++d) row[d] += histogram[d];
  }
  return row;
}

BigInt brute_s_total(int n, bool fixed_point_free, const EnumerationCaps& caps) {
  BigInt total = 0;
  for (const auto& count : brute_s_row(n, fixed_point_free, caps)) total += count;
  return total;
}

void for_each_symmetric_matrix(int m, int total, std::uint64_t max_states,
                               const MatrixVisitor& visit) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) cells.emplace_back(i, j);
  }
  SymmetricMatrix matrix(m);
  std::uint64_t states = 0;
  std::function<void(std::size_t, int)> fill = [&](std::size_t index, int left) {
    if (index == cells.size()) {
      if (left != 0) return;
      if (++states > max_states) {
        throw Error(ErrorCode::CapExceeded,
                    "more than " + std::to_string(max_states) + " symmetric matrices");
      }
      visit(matrix);
      return;
    }
    const auto [i, j] = cells[index];
    const int weight = i == j ? 1 : 2;
    for (int v = 0; v * weight <= left; ++v) {
      matrix.set(i, j, v);
      fill(index + 1, left - weight * v);
    }
    matrix.set(i, j, 0);
  };
  if (m >= 1) fill(0, total);
}

BigInt brute_c(int n, int m, bool even_multiplicity_only, const EnumerationCaps& caps) {
  std::uint64_t count = 0;
  for_each_symmetric_matrix(m, n, caps.max_matrix_states, [&](const SymmetricMatrix& a) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        if (a(i, j) != a(m + 1 - j, m + 1 - i)) return;
      }
    }
    if (even_multiplicity_only && !has_even_repetitions(GeneralizedInvolution(a))) return;
    ++count;
  });
  return count;
}

BigInt brute_gen_count(const Involution& sigma, int m, const EnumerationCaps& caps) {
  const int n = sigma.size();
  std::vector<int> word(static_cast<std::size_t>(n));
  std::uint64_t states = 0;
  std::uint64_t count = 0;
  std::function<void(int, int)> fill = [&](int i, int low) {
    if (i == n) {
      if (++states > caps.max_matrix_states) {
        throw Error(ErrorCode::CapExceeded, "too many contents to enumerate");
      }
      if (is_compatible_content(sigma, word, m)) ++count;
      return;
    }
    for (int v = low; v <= m; ++v) {
      word[static_cast<std::size_t>(i)] = v;
      fill(i + 1, v);
    }
  };
  if (m >= 1) fill(0, 1);
  return count;
}

}  // namespace sevac::oracles
