#include "sevac/polynomial.hpp"

#include "sevac/error.hpp"
#include "sevac/formulas.hpp"
#include "sevac/oracles.hpp"

namespace sevac {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

PropertyReport analyze(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  const std::size_t size = c.size();
  PropertyReport report;
  report.degree = p.degree();

  for (std::size_t j = 0; j < size; ++j) {
    if (c[j] != c[size - 1 - j]) {
      report.symmetric = false;
      break;
    }
  }

  // First strict drop, then the valley it leads into, then any later rise.
  for (std::size_t i = 0; i + 1 < size; ++i) {
    if (c[i + 1] >= c[i]) continue;
    std::size_t valley = i + 1;
    while (valley + 1 < size && c[valley + 1] <= c[valley]) ++valley;
    if (valley + 1 < size) {
      report.unimodal = false;
      report.unimodal_witness = std::array<std::size_t, 3>{i, valley, valley + 1};
    }
    break;
  }

  for (std::size_t j = 1; j + 1 < size; ++j) {
    if (c[j - 1] * c[j + 1] > c[j] * c[j]) {
      report.log_concave = false;
      report.log_concave_witness = j;
      break;
    }
  }
  return report;
}

IntPolynomial polynomial_of(Family family, long n) {
  if (family == Family::S_star) return IntPolynomial(formulas::s_star_row(n));
  if (n % 2 == 0) return IntPolynomial(formulas::s_row(n));
  return IntPolynomial(oracles::brute_s_row(static_cast<int>(n), false));
}

}  // namespace sevac
