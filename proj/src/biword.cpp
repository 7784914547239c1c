#include "sevac/biword.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "sevac/error.hpp"

namespace sevac {

int SymmetricMatrix::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

namespace {

// Builds the matrix from column counts, which must already be symmetric.
SymmetricMatrix matrix_from_counts(const std::vector<int>& counts, int m) {
  SymmetricMatrix matrix(m);
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      const int a = counts[static_cast<std::size_t>((i - 1) * m + (j - 1))];
      const int b = counts[static_cast<std::size_t>((j - 1) * m + (i - 1))];
      if (a != b) {
        throw Error(ErrorCode::MalformedBiword,
                    "column (" + std::to_string(i) + "," + std::to_string(j) +
                        ") has no matching transposed column");
      }
      matrix.set(i, j, a);
    }
  }
  return matrix;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (std::string_view rest = text;;) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::ParseError, "bad integer '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

GeneralizedInvolution GeneralizedInvolution::from_columns(const std::vector<BiwordColumn>& columns,
                                                          int alphabet_size) {
  const int m = alphabet_size;
  if (m < 1) throw Error(ErrorCode::MalformedBiword, "alphabet size must be positive");
  std::vector<int> counts(static_cast<std::size_t>(m * m), 0);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const auto [x, y] = columns[i];
    if (x < 1 || x > m || y < 1 || y > m) {
      throw Error(ErrorCode::MalformedBiword, "symbol outside [1," + std::to_string(m) + "]");
    }
    if (i > 0) {
      const auto& prev = columns[i - 1];
      if (prev.top > x) throw Error(ErrorCode::MalformedBiword, "top row must weakly increase");
      if (prev.top == x && prev.bottom < y) {
        throw Error(ErrorCode::MalformedBiword,
                    "bottom row must weakly decrease within equal tops");
      }
    }
    ++counts[static_cast<std::size_t>((x - 1) * m + (y - 1))];
  }
  return GeneralizedInvolution(matrix_from_counts(counts, m));
}

std::vector<BiwordColumn> GeneralizedInvolution::columns() const {
  std::vector<BiwordColumn> out;
  const int m = matrix_.dim();
  for (int x = 1; x <= m; ++x) {
    for (int y = m; y >= 1; --y) {
      for (int r = 0; r < matrix_(x, y); ++r) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<int> GeneralizedInvolution::content() const {
  std::vector<int> out;
  for (const auto& column : columns()) out.push_back(column.top);
  return out;
}

namespace {

// Returns the row where the new box was created.
std::size_t insert_strict(TableauRows& rows, int value) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({value});
      return r;
    }
    auto& row = rows[r];
    const auto it = std::lower_bound(row.begin(), row.end(), value);
    if (it == row.end()) {
      row.push_back(value);
      return r;
    }
    std::swap(*it, value);
  }
}

}  // namespace

std::pair<TableauRows, TableauRows> rsk_biword_pair(const GeneralizedInvolution& alpha) {
  TableauRows insertion;
  TableauRows recording;
  for (const auto& column : alpha.columns()) {
    const std::size_t r = insert_strict(insertion, column.bottom);
    if (r == recording.size()) recording.emplace_back();
    recording[r].push_back(column.top);
  }
  return {std::move(insertion), std::move(recording)};
}

SemistandardTableau rsk_biword(const GeneralizedInvolution& alpha) {
  auto [insertion, recording] = rsk_biword_pair(alpha);
  return SemistandardTableau(std::move(insertion), alpha.alphabet_size());
}

GeneralizedInvolution biword_of_tableau(const SemistandardTableau& tableau) {
  // The tableau serves as both insertion and recording tableau. Among the
  // boxes holding the largest recorded symbol, the lowest one was created
  // last.
  TableauRows insertion = tableau.rows();
  TableauRows recording = tableau.rows();
  std::vector<BiwordColumn> reversed;
  while (!recording.empty()) {
    int top = 0;
    std::size_t row = 0;
    for (std::size_t r = 0; r < recording.size(); ++r) {
      if (recording[r].back() >= top) {
        top = recording[r].back();
        row = r;
      }
    }
    if (row + 1 < recording.size() && recording[row + 1].size() == recording[row].size()) {
      throw Error(ErrorCode::MalformedBiword, "recording tableau has no valid last box");
    }
    recording[row].pop_back();
    if (recording[row].empty()) recording.pop_back();

    int value = insertion[row].back();
    insertion[row].pop_back();
    if (insertion[row].empty()) insertion.pop_back();
    while (row > 0) {
      --row;
      auto& line = insertion[row];
      // The entry that bumped `value` is the largest one not exceeding it.
      auto it = std::upper_bound(line.begin(), line.end(), value);
      if (it == line.begin()) {
        throw Error(ErrorCode::MalformedBiword, "reverse bumping failed");
      }
      --it;
      std::swap(*it, value);
    }
    reversed.push_back({top, value});
  }
  std::reverse(reversed.begin(), reversed.end());
  return GeneralizedInvolution::from_columns(reversed, tableau.alphabet_size());
}

GeneralizedInvolution evacuate_biword(const GeneralizedInvolution& alpha) {
  const int m = alpha.alphabet_size();
  SymmetricMatrix out(m);
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) out.set(i, j, alpha.matrix()(m + 1 - i, m + 1 - j));
  }
  return GeneralizedInvolution(std::move(out));
}

Involution polarize(const GeneralizedInvolution& alpha) {
  const auto columns = alpha.columns();
  const std::size_t n = columns.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (columns[a].bottom != columns[b].bottom) return columns[a].bottom < columns[b].bottom;
    return a > b;
  });
  std::vector<int> ranks(n);
  for (std::size_t rank = 0; rank < n; ++rank) ranks[order[rank]] = static_cast<int>(rank) + 1;
  return make_involution(std::move(ranks));
}

bool is_self_evacuated_biword(const GeneralizedInvolution& alpha) {
  const auto& a = alpha.matrix();
  const int m = a.dim();
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (a(i, j) != a(m + 1 - j, m + 1 - i)) return false;
    }
  }
  return true;
}

bool is_self_evacuated_biword_by_content(const GeneralizedInvolution& alpha) {
  const auto x = alpha.content();
  const int m = alpha.alphabet_size();
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] + x[n - 1 - i] != m + 1) return false;
  }
  return is_self_evacuated(polarize(alpha));
}

std::vector<std::pair<int, int>> repetitions(const GeneralizedInvolution& alpha) {
  std::vector<std::pair<int, int>> runs;
  bool in_run = false;
  for (const auto& [x, y] : alpha.columns()) {
    if (x != y) {
      in_run = false;
      continue;
    }
    if (in_run && runs.back().first == x) {
      ++runs.back().second;
    } else {
      runs.emplace_back(x, 1);
      in_run = true;
    }
  }
  return runs;
}

bool has_even_repetitions(const GeneralizedInvolution& alpha) {
  return std::ranges::all_of(repetitions(alpha),
                             [](const auto& run) { return run.second % 2 == 0; });
}

bool is_compatible_content(const Involution& sigma, const std::vector<int>& content, int m) {
  const int n = sigma.size();
  if (static_cast<int>(content.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (content[static_cast<std::size_t>(i)] < 1 || content[static_cast<std::size_t>(i)] > m) {
      return false;
    }
  }
  for (int i = 1; i < n; ++i) {
    const int a = content[static_cast<std::size_t>(i - 1)];
    const int b = content[static_cast<std::size_t>(i)];
    const bool rise = sigma(i) < sigma(i + 1);
    if (rise ? !(a < b) : a > b) return false;
  }
  return true;
}

GeneralizedInvolution generalized_involution_from_content(const Involution& sigma,
                                                          const std::vector<int>& content,
                                                          int m) {
  if (!is_compatible_content(sigma, content, m)) {
    throw Error(ErrorCode::MalformedBiword, "content is not compatible with the involution");
  }
  std::vector<int> counts(static_cast<std::size_t>(m * m), 0);
  for (int i = 1; i <= sigma.size(); ++i) {
    const int x = content[static_cast<std::size_t>(i - 1)];
    const int y = content[static_cast<std::size_t>(sigma(i) - 1)];
    ++counts[static_cast<std::size_t>((x - 1) * m + (y - 1))];
  }
  return GeneralizedInvolution(matrix_from_counts(counts, m));
}

void for_each_gen(const Involution& sigma, int m, bool self_evacuated_only,
                  const BiwordVisitor& visit) {
  if (self_evacuated_only && !is_self_evacuated(sigma)) {
    throw Error(ErrorCode::NotSelfEvacuated,
                "self-evacuated elements of Gen_m(sigma) need a self-evacuated sigma");
  }
  const int n = sigma.size();
  if (m < 1) return;
  const PositionSet rises = rise_set(sigma);
  std::vector<int> content(static_cast<std::size_t>(n));

  auto symmetric = [&] {
    for (int i = 0; i < n; ++i) {
      if (content[static_cast<std::size_t>(i)] + content[static_cast<std::size_t>(n - 1 - i)] !=
          m + 1) {
        return false;
      }
    }
    return true;
  };

  // x_1 is free; x_{i+1} >= x_i off the rises and x_{i+1} > x_i on them.
  std::function<void(int)> extend = [&](int i) {
    if (i == n) {
      if (!self_evacuated_only || symmetric()) {
        visit(generalized_involution_from_content(sigma, content, m));
      }
      return;
    }
    const int prev = content[static_cast<std::size_t>(i - 1)];
    for (int v = rises.contains(i) ? prev + 1 : prev; v <= m; ++v) {
      content[static_cast<std::size_t>(i)] = v;
      extend(i + 1);
    }
  };

  if (n == 0) {
    visit(GeneralizedInvolution(SymmetricMatrix(m)));
    return;
  }
  for (int v = 1; v <= m; ++v) {
    content[0] = v;
    extend(1);
  }
}

std::vector<GeneralizedInvolution> enumerate_gen(const Involution& sigma, int m,
                                                 bool self_evacuated_only) {
  std::vector<GeneralizedInvolution> out;
  for_each_gen(sigma, m, self_evacuated_only,
               [&](const GeneralizedInvolution& alpha) { out.push_back(alpha); });
  return out;
}

std::string format_biword(const GeneralizedInvolution& alpha) {
  const auto columns = alpha.columns();
  std::size_t width = 1;
  for (const auto& [x, y] : columns) {
    width = std::max({width, std::to_string(x).size(), std::to_string(y).size()});
  }
  auto pad = [&](int v) {
    std::string s = std::to_string(v);
    return std::string(width - s.size(), ' ') + s;
  };
  std::string top;
  std::string bottom;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) {
      top += ' ';
      bottom += ' ';
    }
    top += pad(columns[i].top);
    bottom += pad(columns[i].bottom);
  }
  return top + '\n' + bottom + '\n';
}

GeneralizedInvolution parse_biword(std::string_view text) {
  std::vector<int> top;
  std::vector<int> bottom;
  int m = 0;
  bool saw_top = false;
  bool saw_bottom = false;
  for (std::string_view rest = text; !rest.empty();) {
    const auto semi = rest.find(';');
    const std::string_view field = rest.substr(0, semi);
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "expected key=value in '" + std::string(field) + "'");
    }
    const std::string_view key = field.substr(0, eq);
    const std::string_view value = field.substr(eq + 1);
    if (key == "x") {
      top = parse_int_list(value);
      saw_top = true;
    } else if (key == "y") {
      bottom = parse_int_list(value);
      saw_bottom = true;
    } else if (key == "m") {
      const auto list = parse_int_list(value);
      if (list.size() != 1) throw Error(ErrorCode::ParseError, "m takes one integer");
      m = list.front();
    } else {
      throw Error(ErrorCode::ParseError, "unknown key '" + std::string(key) + "'");
    }
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  if (!saw_top || !saw_bottom || top.size() != bottom.size()) {
    throw Error(ErrorCode::ParseError, "need x=... and y=... of equal length");
  }
  std::vector<BiwordColumn> columns;
  int largest = 1;
  for (std::size_t i = 0; i < top.size(); ++i) {
    columns.push_back({top[i], bottom[i]});
    largest = std::max({largest, top[i], bottom[i]});
  }
  return GeneralizedInvolution::from_columns(columns, m == 0 ? largest : m);
}

}  // namespace sevac
