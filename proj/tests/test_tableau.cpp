#include <doctest.h>

#include "sevac/error.hpp"
#include "sevac/tableau.hpp"

using namespace sevac;

TEST_CASE("small insertions") {
  CHECK(rsk_involution(Involution::identity(3)).rows() == TableauRows{{1, 2, 3}});
  CHECK(rsk_involution(parse_involution("21")).rows() == TableauRows{{1}, {2}});
  CHECK(rsk_involution(Involution()).rows().empty());
  CHECK(inverse_rsk(StandardTableau(TableauRows{{1}})) == Involution::identity(1));
}

TEST_CASE("shape helpers") {
  const StandardTableau t({{1, 2, 4}, {3}});
  CHECK(t.shape().row_lengths == std::vector<int>{3, 1});
  CHECK(t.shape().column_lengths() == std::vector<int>{2, 1, 1});
  CHECK(t.size() == 4);
  CHECK(format_tableau(t.rows()) == "1 2 4\n3\n");
}

TEST_CASE("malformed tableaux are rejected") {
  auto code_of = [](auto&& make) {
    try {
      make();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code_of([] { StandardTableau({{1, 4}, {2, 3}}); }) == ErrorCode::MalformedTableau);
  CHECK(code_of([] { StandardTableau({{2, 1}}); }) == ErrorCode::MalformedTableau);
  CHECK(code_of([] { StandardTableau({{1, 1}}); }) == ErrorCode::MalformedTableau);
  CHECK(code_of([] { StandardTableau({{1, 3}, {2, 4}, {5, 6}}); }) != ErrorCode::MalformedTableau);
  CHECK(code_of([] { StandardTableau({{1}, {2, 3}}); }) == ErrorCode::MalformedTableau);
  CHECK(code_of([] { SemistandardTableau({{1, 1}}, 2); }) == ErrorCode::MalformedTableau);
  CHECK(code_of([] { SemistandardTableau({{1, 2}, {1}}, 2); }) != ErrorCode::MalformedTableau);
  CHECK(code_of([] { SemistandardTableau({{2}, {1}}, 2); }) == ErrorCode::MalformedTableau);
}

TEST_CASE("inverse insertion round-trips on small tableaux") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& sigma : enumerate_involutions(n, InvolutionFilter::all)) {
      const auto t = rsk_involution(sigma);
      CHECK(inverse_rsk(t) == sigma);
      CHECK(rsk_involution(inverse_rsk(t)) == t);
    }
  }
}

TEST_CASE("evacuation") {
  const auto line = rsk_involution(Involution::identity(5));
  CHECK(evacuate_standard(line) == line);

  const auto sigma = parse_involution("32146578");
  CHECK(evacuate_standard(rsk_involution(sigma)) ==
        rsk_involution(parse_involution("12435876")));

  for (const auto& s : enumerate_involutions(7, InvolutionFilter::all)) {
    const auto t = rsk_involution(s);
    CHECK(evacuate_standard(evacuate_standard(t)) == t);
    CHECK(evacuate_standard(t).shape() == t.shape());
  }
}
