#include <doctest.h>

#include "sevac/error.hpp"
#include "sevac/polynomial.hpp"

using namespace sevac;

namespace {

IntPolynomial poly(std::initializer_list<long> c) {
  return IntPolynomial(std::vector<BigInt>(c.begin(), c.end()));
}

}  // namespace

TEST_CASE("trailing zeros are trimmed") {
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(poly({}).degree() == -1);
  CHECK(poly({0}).degree() == -1);
}

TEST_CASE("S_10 is symmetric and unimodal") {
  const auto report = analyze(poly({1, 5, 23, 49, 78, 78, 49, 23, 5, 1}));
  CHECK(report.symmetric);
  CHECK(report.degree == 9);
  CHECK(report.unimodal);
  CHECK_FALSE(report.unimodal_witness.has_value());
}

TEST_CASE("S*_8 is neither unimodal nor log-concave") {
  const auto p = polynomial_of(Family::S_star, 8);
  CHECK(p == poly({1, 2, 7, 5, 7, 2, 1}));
  const auto report = analyze(p);
  CHECK(report.symmetric);
  CHECK_FALSE(report.unimodal);
  REQUIRE(report.unimodal_witness.has_value());
  CHECK(*report.unimodal_witness == std::array<std::size_t, 3>{2, 3, 4});
  CHECK_FALSE(report.log_concave);
}

TEST_CASE("S_100 fails log-concavity at its first coefficients") {
  const auto report = analyze(polynomial_of(Family::S, 100));
  CHECK(report.symmetric);
  CHECK_FALSE(report.log_concave);
  CHECK(report.log_concave_witness == std::optional<std::size_t>(1));
}

TEST_CASE("families and parities") {
  CHECK(polynomial_of(Family::S, 5) == poly({1, 0, 4, 0, 1}));
  CHECK(polynomial_of(Family::S, 0) == poly({1}));
  CHECK_THROWS_AS(polynomial_of(Family::S_star, 7), Error);
  CHECK(analyze(poly({1, 0, 4, 0, 1})).unimodal == false);
  CHECK(analyze(poly({3, 1, 1})).unimodal);
  CHECK(analyze(poly({1, 1, 2})).log_concave == false);
}
