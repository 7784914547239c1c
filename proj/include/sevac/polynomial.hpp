#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sevac/bigint.hpp"

namespace sevac {

/// Coefficients c_0, c_1, ... of an integer polynomial; trailing zeros are
/// trimmed on construction.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coefficients_.size()) - 1; }
  const BigInt& operator[](std::size_t i) const { return coefficients_[i]; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

struct PropertyReport {
  bool symmetric = true;
  /// Coefficients are symmetric about degree / 2.
  long degree = -1;

  bool unimodal = true;
  /// (i, j, l) with i < j < l and c_j < c_i, c_j < c_l.
  std::optional<std::array<std::size_t, 3>> unimodal_witness;

  bool log_concave = true;
  /// j with c_{j-1} c_{j+1} > c_j^2.
  std::optional<std::size_t> log_concave_witness;
};

PropertyReport analyze(const IntPolynomial& p);

enum class Family { S, S_star };

/// S_n(x) = sum_d s_{n,d} x^d or S*_n(x). Even n uses the closed formulas;
/// odd n in family S is counted by enumeration, because the closed formulas
/// only cover even lengths. Family S_star with odd n throws Error(OddLength).
IntPolynomial polynomial_of(Family family, long n);

}  // namespace sevac
