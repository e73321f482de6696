#include <catch2/catch_amalgamated.hpp>

#include "sprs/enumerate.hpp"
#include "sprs/pointer.hpp"

using namespace sprs;

namespace {

const char* kRunningExample = "5 4 3 7 2 5 6 2 -7 3 4 6";

}  // namespace

TEST_CASE("parse_legal_string accepts the running example") {
  const LegalString u = parse_legal_string(kRunningExample);
  REQUIRE(u.size() == 12);
  CHECK(u[0] == Pointer{5, false});
  CHECK(u[8] == Pointer{7, true});
  CHECK(render(u) == kRunningExample);
}

TEST_CASE("parse_legal_string edge cases") {
  CHECK(parse_legal_string("").empty());
  CHECK(parse_legal_string("  \t\n").empty());
  CHECK(parse_legal_string("5,4 3,7 2 5 6 2 -7 3 4 6") ==
        parse_legal_string(kRunningExample));
  CHECK(parse_legal_string("-4 3 7 -7 -4 3").size() == 6);

  CHECK_THROWS_AS(parse_legal_string("4 2 4"), NotLegal);
  CHECK_THROWS_AS(parse_legal_string("2 2 2 2"), NotLegal);
  CHECK_THROWS_AS(parse_legal_string("x"), MalformedToken);
  CHECK_THROWS_AS(parse_legal_string("1 1"), MalformedToken);
  CHECK_THROWS_AS(parse_legal_string("-1 -1"), MalformedToken);
  CHECK_THROWS_AS(parse_legal_string("2.5 2.5"), MalformedToken);
  CHECK_THROWS_AS(parse_legal_string("- 2"), MalformedToken);
}

TEST_CASE("render is the inverse of parse") {
  CHECK(render(LegalString{}).empty());
  CHECK(render(PointerString{Pointer{4, true}, Pointer{3, false}}) == "-4 3");
  const LegalString u = parse_legal_string(kRunningExample);
  CHECK(parse_legal_string(render(u)) == u);
}

TEST_CASE("bar flips polarity and is an involution") {
  CHECK(bar(Pointer{7, false}) == Pointer{7, true});
  CHECK(bar(Pointer{7, true}) == Pointer{7, false});
  CHECK(bar(bar(Pointer{2, false})) == Pointer{2, false});
}

TEST_CASE("inverse reverses and bars") {
  const PointerString u = parse_pointer_string("-4 3 7 -7 -4 3");
  CHECK(render(inverse(u)) == "-3 4 7 -7 -3 4");
  CHECK(inverse(PointerString{}).empty());
  CHECK(render(inverse(parse_pointer_string("2"))) == "-2");
  CHECK(inverse(inverse(u)) == u);
}

TEST_CASE("domain collects unbarred labels") {
  CHECK(domain(parse_legal_string("-4 3 7 -7 -4 3")) == std::set<Label>{3, 4, 7});
  CHECK(domain(LegalString{}).empty());
  CHECK(domain(parse_legal_string(kRunningExample)) ==
        std::set<Label>{2, 3, 4, 5, 6, 7});
}

TEST_CASE("p_interval spans the two occurrences inclusively") {
  const LegalString u = parse_legal_string("-4 3 7 -7 -4 3");
  CHECK(render(p_interval(u, 3)) == "3 7 -7 -4 3");
  CHECK(render(p_interval(u, 7)) == "7 -7");
  CHECK_THROWS_AS(p_interval(u, 5), LabelAbsent);
}

TEST_CASE("overlap checks both directions") {
  const LegalString u = parse_legal_string("-4 3 7 -7 -4 3");
  CHECK(overlap(u, 3, 4));
  CHECK_FALSE(overlap(u, 3, 7));
  CHECK_THROWS_AS(overlap(u, 3, 3), SameLabel);
  CHECK_THROWS_AS(overlap(u, 3, 9), LabelAbsent);
}

TEST_CASE("overlap is symmetric over the two-label universe") {
  for_each_legal_string(2, [](const LegalString& u) {
    REQUIRE(overlap(u, 2, 3) == overlap(u, 3, 2));
  });
}

TEST_CASE("is_positive distinguishes polarity patterns") {
  const LegalString u = parse_legal_string("-4 3 7 -7 -4 3");
  CHECK(is_positive(u, 7));
  CHECK_FALSE(is_positive(u, 3));
  CHECK_FALSE(is_positive(u, 4));
  CHECK_THROWS_AS(is_positive(LegalString{}, 2), LabelAbsent);
}

TEST_CASE("remove_pointers erases whole labels") {
  const LegalString u = parse_legal_string(kRunningExample);
  CHECK(render(remove_pointers(u, {4, 6, 7, 9})) == "5 3 2 5 2 3");
  CHECK(remove_pointers(u, {}) == u);
  CHECK(render(remove_pointers(u, {2, 7})) == "5 4 3 5 6 3 4 6");
  CHECK(remove_pointers(LegalString{}, {2}).empty());
}

TEST_CASE("remove_pointers composes over unions") {
  for_each_legal_string(2, [](const LegalString& u) {
    REQUIRE(remove_pointers(remove_pointers(u, {2}), {3}) ==
            remove_pointers(u, {2, 3}));
    REQUIRE(domain(remove_pointers(u, {3})) == std::set<Label>{2});
  });
}
