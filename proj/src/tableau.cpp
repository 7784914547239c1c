#include "sevac/tableau.hpp"

#include <algorithm>

#include "detail.hpp"
#include "sevac/error.hpp"

namespace sevac {

namespace {

void check_ferrers(const TableauRows& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) throw Error(ErrorCode::MalformedTableau, "empty row");
    if (r > 0 && rows[r].size() > rows[r - 1].size()) {
      throw Error(ErrorCode::MalformedTableau, "row lengths must weakly decrease");
    }
  }
}

Shape shape_of(const TableauRows& rows) {
  Shape shape;
  for (const auto& row : rows) shape.row_lengths.push_back(static_cast<int>(row.size()));
  return shape;
}

int size_of(const TableauRows& rows) {
  int n = 0;
  for (const auto& row : rows) n += static_cast<int>(row.size());
  return n;
}

}  // namespace

int Shape::box_count() const {
  int n = 0;
  for (int len : row_lengths) n += len;
  return n;
}

std::vector<int> Shape::column_lengths() const {
  std::vector<int> cols;
  if (row_lengths.empty()) return cols;
  cols.assign(static_cast<std::size_t>(row_lengths.front()), 0);
  for (int len : row_lengths) {
    for (int c = 0; c < len; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return cols;
}

StandardTableau::StandardTableau(TableauRows rows) : rows_(std::move(rows)) {
  check_ferrers(rows_);
  const int n = size_of(rows_);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
        throw Error(ErrorCode::MalformedTableau, "entries must be 1..n, each once");
      }
      seen[static_cast<std::size_t>(v)] = true;
      if (c > 0 && rows_[r][c - 1] >= v) {
        throw Error(ErrorCode::MalformedTableau, "rows must strictly increase");
      }
      if (r > 0 && rows_[r - 1][c] >= v) {
        throw Error(ErrorCode::MalformedTableau, "columns must strictly increase");
      }
    }
  }
}

Shape StandardTableau::shape() const { return shape_of(rows_); }
int StandardTableau::size() const { return size_of(rows_); }

SemistandardTableau::SemistandardTableau(TableauRows rows, int alphabet_size)
    : rows_(std::move(rows)), alphabet_size_(alphabet_size) {
  check_ferrers(rows_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > alphabet_size_) {
        throw Error(ErrorCode::MalformedTableau, "entry outside the alphabet");
      }
      if (c > 0 && rows_[r][c - 1] >= v) {
        throw Error(ErrorCode::MalformedTableau, "rows must strictly increase");
      }
      if (r > 0 && rows_[r - 1][c] > v) {
        throw Error(ErrorCode::MalformedTableau, "columns must weakly increase");
      }
    }
  }
}

Shape SemistandardTableau::shape() const { return shape_of(rows_); }
int SemistandardTableau::size() const { return size_of(rows_); }

StandardTableau rsk_involution(const Involution& sigma) {
  TableauRows rows;
  for (int value : sigma.values()) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({value});
        break;
      }
      auto& row = rows[r];
      const auto it = std::upper_bound(row.begin(), row.end(), value);
      if (it == row.end()) {
        row.push_back(value);
        break;
      }
      std::swap(*it, value);
    }
  }
  return StandardTableau(std::move(rows));
}

Involution inverse_rsk(const StandardTableau& tableau) {
  // Insertion and recording tableaux are equal, so the box holding the
  // largest remaining entry of the recording copy is the last box created.
  TableauRows insertion = tableau.rows();
  const int n = tableau.size();
  std::vector<std::pair<std::size_t, std::size_t>> where(static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r < insertion.size(); ++r) {
    for (std::size_t c = 0; c < insertion[r].size(); ++c) {
      where[static_cast<std::size_t>(insertion[r][c])] = {r, c};
    }
  }
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int step = n; step >= 1; --step) {
    std::size_t r = where[static_cast<std::size_t>(step)].first;
    int value = insertion[r].back();
    insertion[r].pop_back();
    if (insertion[r].empty()) insertion.pop_back();
    while (r > 0) {
      --r;
      auto& row = insertion[r];
      // The entry that bumped `value` is the largest one below it.
      auto it = std::lower_bound(row.begin(), row.end(), value);
      --it;
      std::swap(*it, value);
    }
    word[static_cast<std::size_t>(step - 1)] = value;
  }
  return make_involution(std::move(word));
}

StandardTableau evacuate_standard(const StandardTableau& tableau) {
  TableauRows work = tableau.rows();
  const int n = tableau.size();
  TableauRows result;
  for (const auto& row : work) result.emplace_back(row.size(), 0);

  auto exists = [&](std::size_t r, std::size_t c) {
    return r < work.size() && c < work[r].size();
  };

  for (int step = 1; step <= n; ++step) {
    // The smallest remaining entry always sits in the corner (0, 0).
    std::size_t r = 0;
    std::size_t c = 0;
    for (;;) {
      const bool right = exists(r, c + 1);
      const bool below = exists(r + 1, c);
      if (!right && !below) break;
      if (right && (!below || work[r][c + 1] < work[r + 1][c])) {
        work[r][c] = work[r][c + 1];
        ++c;
      } else {
        work[r][c] = work[r + 1][c];
        ++r;
      }
    }
    work[r].pop_back();
    if (work[r].empty()) work.pop_back();
    result[r][c] = n + 1 - step;
  }
  return StandardTableau(std::move(result));
}

std::string format_tableau(const TableauRows& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace sevac
