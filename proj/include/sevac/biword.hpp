#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sevac/involution.hpp"
#include "sevac/tableau.hpp"

namespace sevac {

/// m x m nonnegative integer matrix with A(i,j) = A(j,i), 1-based indices.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim * dim), 0) {}

  int dim() const noexcept { return dim_; }
  int operator()(int i, int j) const { return entries_[index(i, j)]; }
  /// Sets both A(i,j) and A(j,i).
  void set(int i, int j, int value) {
    entries_[index(i, j)] = value;
    entries_[index(j, i)] = value;
  }
  /// Sum of all entries, i.e. the length of the encoded biword.
  int total() const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;
  friend auto operator<=>(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * dim_ + (j - 1));
  }

  int dim_ = 0;
  std::vector<int> entries_;
};

/// One column (x over y) of a biword.
struct BiwordColumn {
  int top = 0;
  int bottom = 0;
  friend bool operator==(const BiwordColumn&, const BiwordColumn&) = default;
};

/// A biword whose multiset of columns is closed under swapping top and
/// bottom, sorted by top ascending and by bottom descending within equal
/// tops. Stored as its symmetric multiplicity matrix, which is canonical.
class GeneralizedInvolution {
 public:
  GeneralizedInvolution() = default;
  explicit GeneralizedInvolution(SymmetricMatrix matrix) : matrix_(std::move(matrix)) {}

  /// Validates the three biword axioms on the columns as given (symmetric
  /// column multiset, weakly increasing top row, weakly decreasing bottom
  /// row within equal tops). Throws Error(MalformedBiword).
  static GeneralizedInvolution from_columns(const std::vector<BiwordColumn>& columns,
                                            int alphabet_size);

  const SymmetricMatrix& matrix() const noexcept { return matrix_; }
  int alphabet_size() const noexcept { return matrix_.dim(); }
  int length() const { return matrix_.total(); }

  /// The canonical biword view.
  std::vector<BiwordColumn> columns() const;
  /// Top row of the biword.
  std::vector<int> content() const;

  friend bool operator==(const GeneralizedInvolution&, const GeneralizedInvolution&) = default;
  friend auto operator<=>(const GeneralizedInvolution&, const GeneralizedInvolution&) = default;

 private:
  SymmetricMatrix matrix_;
};

/// Row insertion into strictly increasing rows: the incoming symbol bumps the
/// smallest entry greater than or equal to it. Columns are inserted in
/// canonical biword order.
SemistandardTableau rsk_biword(const GeneralizedInvolution& alpha);

/// Insertion and recording tableaux of the same insertion; they coincide for
/// every generalized involution.
std::pair<TableauRows, TableauRows> rsk_biword_pair(const GeneralizedInvolution& alpha);

/// Two-sided inverse of rsk_biword. Throws Error(MalformedBiword) when the
/// tableau is not the image of any generalized involution.
GeneralizedInvolution biword_of_tableau(const SemistandardTableau& tableau);

/// Reverses the biword and complements every symbol (s -> m+1-s).
GeneralizedInvolution evacuate_biword(const GeneralizedInvolution& alpha);

/// Replaces the bottom row by its ranks, with a later occurrence of an equal
/// symbol ranked lower.
Involution polarize(const GeneralizedInvolution& alpha);

/// A(i,j) = A(m+1-j, m+1-i) for all i, j.
bool is_self_evacuated_biword(const GeneralizedInvolution& alpha);

/// Second characterization: the content is symmetric (x_i + x_{n+1-i} = m+1)
/// and the polarization is a self-evacuated involution.
bool is_self_evacuated_biword_by_content(const GeneralizedInvolution& alpha);

/// Maximal runs of consecutive (a over a) columns as (a, run length).
std::vector<std::pair<int, int>> repetitions(const GeneralizedInvolution& alpha);

/// True when every repetition has even multiplicity.
bool has_even_repetitions(const GeneralizedInvolution& alpha);

/// Content compatible with sigma: weakly increasing over [m] and strictly
/// increasing at every rise of sigma. Descents allow either.
bool is_compatible_content(const Involution& sigma, const std::vector<int>& content, int m);

/// The generalized involution with the given compatible content whose
/// polarization is sigma: column i is (x_i over x_sigma(i)).
GeneralizedInvolution generalized_involution_from_content(const Involution& sigma,
                                                          const std::vector<int>& content,
                                                          int m);

using BiwordVisitor = std::function<void(const GeneralizedInvolution&)>;

/// Walks Gen_m(sigma), one element per compatible content, in lexicographic
/// order of content. With `self_evacuated_only`, only symmetric contents are
/// visited and sigma must be self-evacuated (else Error(NotSelfEvacuated)).
void for_each_gen(const Involution& sigma, int m, bool self_evacuated_only,
                  const BiwordVisitor& visit);

std::vector<GeneralizedInvolution> enumerate_gen(const Involution& sigma, int m,
                                                 bool self_evacuated_only);

/// Two aligned rows, top row first.
std::string format_biword(const GeneralizedInvolution& alpha);

/// Grammar: "x=1,1,2;y=2,1,2" with an optional ";m=<alphabet>" (default: the
/// largest symbol present). Throws Error(ParseError) or Error(MalformedBiword).
GeneralizedInvolution parse_biword(std::string_view text);

}  // namespace sevac
