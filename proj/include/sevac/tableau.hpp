#pragma once

#include <string>
#include <vector>

#include "sevac/involution.hpp"

namespace sevac {

using TableauRows = std::vector<std::vector<int>>;

/// A Ferrers diagram, stored as its row lengths (top row first).
struct Shape {
  std::vector<int> row_lengths;

  int box_count() const;
  /// Row lengths of the conjugate diagram.
  std::vector<int> column_lengths() const;
  friend bool operator==(const Shape&, const Shape&) = default;
};

/// Entries 1..n, each once, strictly increasing along rows and down columns.
class StandardTableau {
 public:
  StandardTableau() = default;
  /// Throws Error(MalformedTableau) unless `rows` is a standard filling of a
  /// Ferrers diagram.
  explicit StandardTableau(TableauRows rows);

  const TableauRows& rows() const noexcept { return rows_; }
  Shape shape() const;
  int size() const;
  int at(int row, int col) const {
    return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

 private:
  TableauRows rows_;
};

/// Filling by symbols of [m] that is strictly increasing along rows and
/// weakly increasing down columns. This is the transpose of the more common
/// row-weak/column-strict convention.
class SemistandardTableau {
 public:
  SemistandardTableau() = default;
  /// Throws Error(MalformedTableau) on a bad shape, an entry outside [m], or
  /// a violated row/column condition.
  SemistandardTableau(TableauRows rows, int alphabet_size);

  const TableauRows& rows() const noexcept { return rows_; }
  int alphabet_size() const noexcept { return alphabet_size_; }
  Shape shape() const;
  int size() const;

  friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;

 private:
  TableauRows rows_;
  int alphabet_size_ = 0;
};

/// Robinson-Schensted row insertion of sigma(1)..sigma(n). For an involution
/// the insertion and recording tableaux coincide, so one tableau is returned.
StandardTableau rsk_involution(const Involution& sigma);

/// The involution whose insertion tableau is `tableau`.
Involution inverse_rsk(const StandardTableau& tableau);

/// Schuetzenberger evacuation by repeated jeu de taquin: delete the entry i,
/// slide the smaller neighbour (right or below) into the hole until the hole
/// reaches an outer corner, and write n+1-i into that corner of the result.
StandardTableau evacuate_standard(const StandardTableau& tableau);

/// Rows of space separated entries, one row per line.
std::string format_tableau(const TableauRows& rows);

}  // namespace sevac
