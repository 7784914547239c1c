#include "sevac/involution.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "detail.hpp"
#include "sevac/error.hpp"

namespace sevac {

Involution make_trusted_involution(std::vector<int> values) {
  return Involution(Involution::Trusted{}, std::move(values));
}

Involution::Involution(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::NotAPermutation,
                  "one-line notation is not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 1; i <= n; ++i) {
    if ((*this)((*this)(i)) != i) {
      throw Error(ErrorCode::NotSelfInverse,
                  "sigma(sigma(" + std::to_string(i) + ")) != " + std::to_string(i));
    }
  }
}

Involution Involution::identity(int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  return make_trusted_involution(std::move(values));
}

Involution Involution::reversal(int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = n - i;
  return make_trusted_involution(std::move(values));
}

Involution make_involution(std::vector<int> values) { return Involution(std::move(values)); }

bool PositionSet::contains(int i) const {
  return std::binary_search(positions.begin(), positions.end(), i);
}

PositionSet descent_set(const Involution& sigma) {
  PositionSet out;
  for (int i = 1; i < sigma.size(); ++i) {
    if (sigma(i) > sigma(i + 1)) out.positions.push_back(i);
  }
  return out;
}

PositionSet rise_set(const Involution& sigma) {
  PositionSet out;
  for (int i = 1; i < sigma.size(); ++i) {
    if (sigma(i) < sigma(i + 1)) out.positions.push_back(i);
  }
  return out;
}

int rise_count(const Involution& sigma) {
  int count = 0;
  for (int i = 1; i < sigma.size(); ++i) count += sigma(i) < sigma(i + 1) ? 1 : 0;
  return count;
}

bool is_self_evacuated(const Involution& sigma) {
  const int n = sigma.size();
  for (int i = 1; i <= n; ++i) {
    if (sigma(i) + sigma(n + 1 - i) != n + 1) return false;
  }
  return true;
}

bool has_fixed_point(const Involution& sigma) {
  for (int i = 1; i <= sigma.size(); ++i) {
    if (sigma(i) == i) return true;
  }
  return false;
}

Involution complement_conjugate(const Involution& sigma) {
  const int n = sigma.size();
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) values[static_cast<std::size_t>(i - 1)] = n + 1 - sigma(n + 1 - i);
  return make_trusted_involution(std::move(values));
}

Involution complement_compose(const Involution& sigma) {
  if (!is_self_evacuated(sigma)) {
    throw Error(ErrorCode::NotSelfEvacuated,
                "psi*sigma is an involution only for self-evacuated sigma (" + to_string(sigma) +
                    ")");
  }
  const int n = sigma.size();
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) values[static_cast<std::size_t>(i - 1)] = n + 1 - sigma(i);
  return make_trusted_involution(std::move(values));
}

CycleReport cycle_report(const Involution& sigma) {
  const int n = sigma.size();
  CycleReport report;
  for (int i = 1; i <= n; ++i) {
    const int j = sigma(i);
    if (j == i) {
      report.fixed_points.push_back(i);
    } else if (i < j) {
      if (j == n + 1 - i) {
        report.nonsmooth_transpositions.emplace_back(i, j);
      } else {
        report.smooth_transpositions.emplace_back(i, j);
      }
    }
  }
  return report;
}

namespace {

// Walks involutions of `symbols` (sorted; closed under the complement
// symbols[t] <-> symbols[L-1-t] when a self-evacuated filter is active).
// `values` is indexed by symbol and holds the partial assignment.
class Generator {
 public:
  Generator(int n, InvolutionFilter filter, const InvolutionVisitor& visit)
      : filter_(filter), visit_(visit), values_(static_cast<std::size_t>(n) + 1, 0) {}

  void run(std::vector<int> symbols, int first) {
    if (filter_ == InvolutionFilter::all) {
      all(std::move(symbols), first);
    } else {
      self_evacuated(std::move(symbols), first);
    }
  }

 private:
  void emit() {
    visit_(make_trusted_involution(std::vector<int>(values_.begin() + 1, values_.end())));
  }

  void assign(int a, int b) {
    values_[static_cast<std::size_t>(a)] = b;
    values_[static_cast<std::size_t>(b)] = a;
  }

  // first == 0 means no restriction on the image of the smallest symbol.
  void all(std::vector<int> symbols, int first) {
    if (symbols.empty()) {
      emit();
      return;
    }
    const int head = symbols.front();
    std::vector<int> rest(symbols.begin() + 1, symbols.end());
    if (first == 0 || first == head) {
      assign(head, head);
      all(rest, 0);
    }
    for (std::size_t t = 0; t < rest.size(); ++t) {
      if (first != 0 && first != rest[t]) continue;
      assign(head, rest[t]);
      std::vector<int> remaining;
      remaining.reserve(rest.size() - 1);
      for (std::size_t u = 0; u < rest.size(); ++u) {
        if (u != t) remaining.push_back(rest[u]);
      }
      all(std::move(remaining), 0);
    }
  }

  void self_evacuated(std::vector<int> symbols, int first) {
    const std::size_t len = symbols.size();
    const bool fpf = filter_ == InvolutionFilter::self_evacuated_fixed_point_free;
    if (len == 0) {
      emit();
      return;
    }
    if (len == 1) {
      if (fpf) return;
      if (first != 0 && first != symbols[0]) return;
      assign(symbols[0], symbols[0]);
      emit();
      return;
    }
    const int head = symbols.front();
    const int tail = symbols.back();
    const std::vector<int> inner(symbols.begin() + 1, symbols.end() - 1);
    const bool odd = len % 2 == 1;
    const std::size_t mid = len / 2;

    if (!fpf && (first == 0 || first == head)) {
      assign(head, head);
      assign(tail, tail);
      self_evacuated(inner, 0);
    }
    // head -> symbols[t], forcing symbols[t] -> head, tail -> symbols[len-1-t]
    // and symbols[len-1-t] -> tail.
    for (std::size_t t = 1; t + 1 < len; ++t) {
      if (odd && t == mid) continue;
      if (first != 0 && first != symbols[t]) continue;
      const std::size_t mirror = len - 1 - t;
      assign(head, symbols[t]);
      assign(tail, symbols[mirror]);
      std::vector<int> remaining;
      remaining.reserve(len - 4);
      for (std::size_t u = 1; u + 1 < len; ++u) {
        if (u != t && u != mirror) remaining.push_back(symbols[u]);
      }
      self_evacuated(std::move(remaining), 0);
    }
    if (first == 0 || first == tail) {
      assign(head, tail);
      self_evacuated(inner, 0);
    }
  }

  InvolutionFilter filter_;
  const InvolutionVisitor& visit_;
  std::vector<int> values_;
};

std::vector<int> symbols_up_to(int n) {
  std::vector<int> symbols(static_cast<std::size_t>(n));
  std::iota(symbols.begin(), symbols.end(), 1);
  return symbols;
}

}  // namespace

void for_each_involution(int n, InvolutionFilter filter, const InvolutionVisitor& visit) {
  if (n < 0) return;
  Generator(n, filter, visit).run(symbols_up_to(n), 0);
}

void for_each_involution_with_first(int n, InvolutionFilter filter, int first,
                                    const InvolutionVisitor& visit) {
  if (n < 1 || first < 1 || first > n) return;
  Generator(n, filter, visit).run(symbols_up_to(n), first);
}

std::vector<Involution> enumerate_involutions(int n, InvolutionFilter filter) {
  std::vector<Involution> out;
  for_each_involution(n, filter, [&](const Involution& sigma) { out.push_back(sigma); });
  return out;
}

std::vector<Involution> enumerate_involutions_by_filtering(int n, InvolutionFilter filter) {
  std::vector<Involution> out;
  for_each_involution(n, InvolutionFilter::all, [&](const Involution& sigma) {
    const bool keep =
        filter == InvolutionFilter::all ||
        (is_self_evacuated(sigma) &&
         (filter == InvolutionFilter::self_evacuated || !has_fixed_point(sigma)));
    if (keep) out.push_back(sigma);
  });
  return out;
}

Involution delete_central_symbol(const Involution& sigma) {
  const int n = sigma.size();
  const int center = (n + 1) / 2;
  if (n % 2 == 0 || !is_self_evacuated(sigma)) {
    throw Error(ErrorCode::NotSelfEvacuated,
                "central symbol deletion needs a self-evacuated involution of odd size");
  }
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n; ++i) {
    if (i == center) continue;
    const int v = sigma(i);
    values.push_back(v > center ? v - 1 : v);
  }
  return make_trusted_involution(std::move(values));
}

Involution insert_central_symbol(const Involution& sigma) {
  const int n = sigma.size();
  if (n % 2 != 0) {
    throw Error(ErrorCode::OddLength, "central symbol insertion needs an even size");
  }
  const int center = n / 2 + 1;
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n; ++i) {
    if (i == center) values.push_back(center);
    const int v = sigma(i);
    values.push_back(v >= center ? v + 1 : v);
  }
  if (n == 0) values.push_back(1);
  return make_trusted_involution(std::move(values));
}

std::string to_string(const Involution& sigma) {
  std::string out;
  const bool compact = sigma.size() <= 9;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (!compact && i > 1) out += ',';
    out += std::to_string(sigma(i));
  }
  return out;
}

Involution parse_involution(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw Error(ErrorCode::ParseError, "expected digits 1-9 in '" + std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  } else {
    for (std::string_view rest = text; !rest.empty();) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
        throw Error(ErrorCode::ParseError, "bad entry '" + std::string(item) + "'");
      }
      values.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
      if (rest.empty()) throw Error(ErrorCode::ParseError, "trailing comma");
    }
  }
  return make_involution(std::move(values));
}

}  // namespace sevac
