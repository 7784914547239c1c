#include <doctest.h>

#include "sevac/error.hpp"
#include "sevac/involution.hpp"

using namespace sevac;

namespace {

std::vector<std::string> names(const std::vector<Involution>& list) {
  std::vector<std::string> out;
  for (const auto& sigma : list) out.push_back(to_string(sigma));
  return out;
}

}  // namespace

TEST_CASE("construction rejects non-involutions") {
  CHECK_THROWS_AS(Involution({1, 1}), Error);
  try {
    Involution({2, 3, 1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSelfInverse);
  }
  try {
    Involution({1, 4});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPermutation);
  }
  CHECK(Involution().size() == 0);
}

TEST_CASE("descent and rise sets") {
  const auto sigma = parse_involution("32146578");
  CHECK(descent_set(sigma).positions == std::vector<int>{1, 2, 5});
  CHECK(rise_count(sigma) == 4);
  const auto id = Involution::identity(5);
  CHECK(descent_set(id).size() == 0);
  CHECK(rise_set(id).positions == std::vector<int>{1, 2, 3, 4});
  CHECK(rise_set(id).contains(3));
  CHECK_FALSE(rise_set(id).contains(5));
}

TEST_CASE("self-evacuation test") {
  CHECK(is_self_evacuated(parse_involution("1234")));
  CHECK_FALSE(is_self_evacuated(parse_involution("2134")));
  CHECK(is_self_evacuated(parse_involution("17563428")));
}

TEST_CASE("conjugation by the complement map") {
  CHECK(to_string(complement_conjugate(parse_involution("32146578"))) == "12435876");
  CHECK(complement_conjugate(Involution::identity(6)) == Involution::identity(6));
  const auto sigma = parse_involution("2143");
  CHECK(complement_conjugate(complement_conjugate(sigma)) == sigma);
}

TEST_CASE("composition with the complement map") {
  const auto sigma = parse_involution("17563428");
  const auto tau = complement_compose(sigma);
  CHECK(to_string(tau) == "82436571");
  CHECK(descent_set(tau) == rise_set(sigma));
  CHECK(descent_set(tau).positions == std::vector<int>{1, 3, 5, 7});
  CHECK(complement_compose(Involution::identity(6)) == Involution::reversal(6));
  try {
    complement_compose(parse_involution("2134"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSelfEvacuated);
  }
}

TEST_CASE("cycle classification") {
  const auto psi = cycle_report(parse_involution("4321"));
  CHECK(psi.fixed_points.empty());
  CHECK(psi.smooth_transpositions.empty());
  CHECK(psi.nonsmooth_transpositions == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});

  const auto pairs = cycle_report(parse_involution("3412"));
  CHECK(pairs.smooth_transpositions == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK(pairs.nonsmooth_transpositions.empty());

  const auto mixed = cycle_report(parse_involution("1324"));
  CHECK(mixed.fixed_points == std::vector<int>{1, 4});
  CHECK(mixed.nonsmooth_transpositions == std::vector<std::pair<int, int>>{{2, 3}});
}

TEST_CASE("enumeration by filter") {
  CHECK(names(enumerate_involutions(4, InvolutionFilter::self_evacuated)) ==
        std::vector<std::string>{"1234", "1324", "2143", "3412", "4231", "4321"});
  CHECK(names(enumerate_involutions(4, InvolutionFilter::self_evacuated_fixed_point_free)) ==
        std::vector<std::string>{"2143", "3412", "4321"});
  CHECK(enumerate_involutions(0, InvolutionFilter::all).size() == 1);
  CHECK(enumerate_involutions(5, InvolutionFilter::self_evacuated_fixed_point_free).empty());

  const std::size_t expected[] = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
  for (int n = 0; n <= 10; ++n) {
    CHECK(enumerate_involutions(n, InvolutionFilter::all).size() == expected[n]);
  }
}

TEST_CASE("constructive generator agrees with filtering") {
  for (int n = 0; n <= 9; ++n) {
    for (auto filter : {InvolutionFilter::self_evacuated,
                        InvolutionFilter::self_evacuated_fixed_point_free}) {
      CHECK(enumerate_involutions(n, filter) == enumerate_involutions_by_filtering(n, filter));
    }
  }
}

TEST_CASE("slices by first value partition the sequence") {
  const int n = 8;
  std::vector<Involution> joined;
  for (int first = 1; first <= n; ++first) {
    for_each_involution_with_first(n, InvolutionFilter::self_evacuated, first,
                                   [&](const Involution& s) {
                                     CHECK(s(1) == first);
                                     joined.push_back(s);
                                   });
  }
  CHECK(joined == enumerate_involutions(n, InvolutionFilter::self_evacuated));
}

TEST_CASE("central symbol") {
  const auto odd = parse_involution("52341");
  CHECK(to_string(delete_central_symbol(odd)) == "4231");
  CHECK(insert_central_symbol(parse_involution("4231")) == odd);
}

TEST_CASE("text form") {
  CHECK(to_string(Involution::identity(3)) == "123");
  CHECK(to_string(Involution::identity(11)) == "1,2,3,4,5,6,7,8,9,10,11");
  CHECK(parse_involution("1,2,3,4,5,6,7,8,9,11,10").size() == 11);
  CHECK(parse_involution("") == Involution());
  try {
    parse_involution("12a");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}
