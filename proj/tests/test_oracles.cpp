#include <doctest.h>

#include "sevac/error.hpp"
#include "sevac/formulas.hpp"
#include "sevac/oracles.hpp"

using namespace sevac;
using namespace sevac::oracles;

namespace {

std::vector<BigInt> big(std::initializer_list<long> values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

}  // namespace

TEST_CASE("enumerated rise rows") {
  CHECK(brute_s_row(4, false) == big({1, 2, 2, 1}));
  CHECK(brute_s_row(9, false) == big({1, 0, 17, 0, 40, 0, 17, 0, 1}));
  CHECK(brute_s_row(10, true) == big({1, 2, 12, 12, 27, 12, 12, 2, 1}));
  CHECK(brute_s_row(0, false) == big({1}));
  CHECK(brute_s_row(14, false) == formulas::s_row(14));
  CHECK(brute_s_total(11, false) == 312);
}

TEST_CASE("enumeration caps") {
  EnumerationCaps caps;
  caps.max_involution_n = 6;
  try {
    brute_s_row(7, false, caps);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  caps.max_matrix_states = 5;
  CHECK_THROWS_AS(brute_c(4, 4, false, caps), Error);
}

TEST_CASE("symmetric matrices") {
  int count = 0;
  for_each_symmetric_matrix(2, 2, 100, [&](const SymmetricMatrix& a) {
    CHECK(a.total() == 2);
    ++count;
  });
  CHECK(count == 4);  // three diagonal fillings and one off-diagonal pair
}

TEST_CASE("generalized involution counts by enumeration") {
  CHECK(brute_c(2, 3, false) == 3);
  CHECK(brute_c(2, 1, false) == 1);
  CHECK(brute_c(4, 2, true) == 2);
  CHECK(brute_c(4, 3, true) == 5);
}

TEST_CASE("compatible contents by enumeration") {
  CHECK(brute_gen_count(parse_involution("21"), 3) == 6);
  CHECK(brute_gen_count(Involution::identity(2), 3) == 3);
  CHECK(brute_gen_count(Involution::identity(1), 1) == 1);
}
