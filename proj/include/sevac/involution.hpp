#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sevac {

/// A self-inverse permutation of {1..n} in one-line notation. Positions and
/// values are 1-based everywhere in the public interface.
class Involution {
 public:
  /// The empty involution (n = 0).
  Involution() = default;

  /// Validates `values` as a permutation of {1..n} with sigma(sigma(i)) = i.
  /// Throws Error(NotAPermutation) or Error(NotSelfInverse).
  explicit Involution(std::vector<int> values);

  static Involution identity(int n);
  /// The complement map psi: i -> n+1-i.
  static Involution reversal(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> values() const noexcept { return values_; }

  friend bool operator==(const Involution&, const Involution&) = default;
  friend auto operator<=>(const Involution&, const Involution&) = default;

 private:
  struct Trusted {};
  Involution(Trusted, std::vector<int> values) : values_(std::move(values)) {}
  friend Involution make_trusted_involution(std::vector<int> values);

  std::vector<int> values_;
};

Involution make_involution(std::vector<int> values);

/// Strictly increasing positions in {1..n-1}.
struct PositionSet {
  std::vector<int> positions;

  std::size_t size() const noexcept { return positions.size(); }
  bool contains(int i) const;
  friend bool operator==(const PositionSet&, const PositionSet&) = default;
};

PositionSet descent_set(const Involution& sigma);
PositionSet rise_set(const Involution& sigma);
int rise_count(const Involution& sigma);

/// sigma(i) + sigma(n+1-i) = n+1 for every i, i.e. sigma commutes with psi.
bool is_self_evacuated(const Involution& sigma);

bool has_fixed_point(const Involution& sigma);

/// psi * sigma * psi, the involution whose tableau is the evacuation of
/// sigma's tableau.
Involution complement_conjugate(const Involution& sigma);

/// psi * sigma (i -> n+1-sigma(i)). Throws Error(NotSelfEvacuated) unless
/// sigma is self-evacuated, since only then is the product an involution.
Involution complement_compose(const Involution& sigma);

struct CycleReport {
  std::vector<int> fixed_points;
  /// (i, j) with i < j and j != n+1-i.
  std::vector<std::pair<int, int>> smooth_transpositions;
  /// (i, n+1-i) with i < n+1-i.
  std::vector<std::pair<int, int>> nonsmooth_transpositions;

  friend bool operator==(const CycleReport&, const CycleReport&) = default;
};

CycleReport cycle_report(const Involution& sigma);

enum class InvolutionFilter { all, self_evacuated, self_evacuated_fixed_point_free };

using InvolutionVisitor = std::function<void(const Involution&)>;

/// Emits every qualifying involution of {1..n} exactly once, in
/// lexicographic order of one-line notation. Self-evacuated filters are
/// generated constructively by the sigma(1) case split, so no rejected
/// candidates are ever built.
void for_each_involution(int n, InvolutionFilter filter, const InvolutionVisitor& visit);

/// The slice of for_each_involution with sigma(1) == first. The slices for
/// first = 1..n partition the full sequence and can be walked independently.
void for_each_involution_with_first(int n, InvolutionFilter filter, int first,
                                    const InvolutionVisitor& visit);

std::vector<Involution> enumerate_involutions(int n, InvolutionFilter filter);

/// Generates all involutions and keeps the qualifying ones. Slow; used only
/// to cross-check the constructive generator.
std::vector<Involution> enumerate_involutions_by_filtering(int n, InvolutionFilter filter);

/// For odd n the central symbol of a self-evacuated involution is fixed;
/// removing it gives a self-evacuated involution on n-1 symbols.
Involution delete_central_symbol(const Involution& sigma);
/// Inverse of delete_central_symbol: n = 2k becomes 2k+1 with k+1 fixed.
Involution insert_central_symbol(const Involution& sigma);

/// "2143" for n <= 9, "1,2,11,..." otherwise; "" for n = 0.
std::string to_string(const Involution& sigma);

/// Accepts either the compact digit form (n <= 9) or a comma separated list.
/// Throws Error(ParseError) for malformed text and the make_involution errors
/// for invalid permutations.
Involution parse_involution(std::string_view text);

}  // namespace sevac
