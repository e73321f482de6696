#include <catch2/catch_amalgamated.hpp>

#include "sprs/enumerate.hpp"
#include "sprs/reduction_graph.hpp"
#include "sprs/rules.hpp"

using namespace sprs;

namespace {

const char* kRunningExample = "5 4 3 7 2 5 6 2 -7 3 4 6";

ReductionGraph graph_of(const char* text) {
  return build_reduction_graph(parse_legal_string(text));
}

}  // namespace

TEST_CASE("running example graph matches the published counts") {
  const ReductionGraph g = graph_of(kRunningExample);
  CHECK(g.vertices.size() == 26);
  CHECK(g.reality_edges.size() == 13);
  CHECK(g.desire_edges.size() == 12);
  const ComponentReport report = components(g);
  CHECK(report.cyclic_count() == 3);
  CHECK(report.membership.size() == 26);
}

TEST_CASE("empty string graph is a single reality edge") {
  const ReductionGraph g = build_reduction_graph(LegalString{});
  CHECK(g.vertices == std::set<RGVertex>{g.source, g.target});
  CHECK(g.reality_edges == std::set<RGEdge>{RGEdge(g.source, g.target)});
  CHECK(g.desire_edges.empty());
  CHECK(components(g).cyclic_count() == 0);
}

TEST_CASE("adjacent equal pair yields a coincident two-vertex cycle") {
  const ReductionGraph g = graph_of("2 2");
  const RGEdge pair(RGVertex::right(1), RGVertex::left(2));
  CHECK(g.reality_edges.count(pair) == 1);
  CHECK(g.desire_edges.count(pair) == 1);
  const ComponentReport report = components(g);
  CHECK(report.cyclic_count() == 1);
  CHECK(report.membership.at(RGVertex::right(1)) ==
        report.membership.at(RGVertex::left(2)));
  CHECK(report.membership.at(RGVertex::left(1)) == report.linear);
  CHECK(report.membership.at(RGVertex::right(2)) == report.linear);
}

TEST_CASE("cyclic component counts for derived strings") {
  CHECK(components(graph_of("5 4 3 5 6 3 4 6")).cyclic_count() == 2);
  CHECK(components(graph_of("2 3 2 3")).cyclic_count() == 0);
  CHECK(components(graph_of("4 7 6 -7 4 6")).cyclic_count() == 0);
  CHECK(components(graph_of("5 7 5 6 -7 6")).cyclic_count() == 1);
}

TEST_CASE("reduction_function is the identity on absent labels") {
  const ReductionGraph g = graph_of(kRunningExample);
  CHECK(reduction_function(g, 9) == g);
}

TEST_CASE("reduction functions simulate reductions") {
  const LegalString u = parse_legal_string(kRunningExample);
  ReductionGraph image = build_reduction_graph(u);
  for (const Label p : {3, 4, 5}) image = reduction_function(image, p);
  validate(image);
  CHECK(is_isomorphic(image, graph_of("6 2 -7 7 2 6")));
  CHECK_FALSE(is_isomorphic(image, graph_of("2 3 2 3")));
}

TEST_CASE("reduction functions commute") {
  const ReductionGraph g = graph_of(kRunningExample);
  for (const Label p : {2, 3, 4, 5, 6, 7}) {
    for (const Label q : {2, 3, 4, 5, 6, 7}) {
      if (p >= q) continue;
      CHECK(reduction_function(reduction_function(g, p), q) ==
            reduction_function(reduction_function(g, q), p));
    }
  }
}

TEST_CASE("reduction function images stay well-formed") {
  for_each_legal_string(2, [](const LegalString& u) {
    const ReductionGraph g = build_reduction_graph(u);
    for (const Label p : domain(u)) {
      const ReductionGraph img = reduction_function(g, p);
      REQUIRE_NOTHROW(validate(img));
    }
  });
}

TEST_CASE("canonical forms match the published isomorphisms") {
  CHECK(canonical_form(graph_of("2 3 2 3")) == canonical_form(graph_of("2 3 -2 3")));
  CHECK(canonical_form(graph_of("2 3 2 -4 3 4")) ==
        canonical_form(graph_of("2 3 4 -2 3 4")));
  CHECK(canonical_form(graph_of("2 2")) != canonical_form(graph_of("2 -2")));

  CHECK(is_isomorphic(graph_of("2 3 2 3"), graph_of("2 3 -2 3")));
  CHECK(is_isomorphic(graph_of("2 3 2 -4 3 4"), graph_of("2 3 4 -2 3 4")));
  CHECK_FALSE(is_isomorphic(graph_of("2 2"), graph_of("2 -2")));
}

TEST_CASE("canonical form is a stable string") {
  const std::string c = canonical_form(graph_of("2 2"));
  CHECK(c == "CYC[2D,2R];LIN[2D,2R]");
  CHECK(canonical_form(graph_of("2 2")) == c);
}

TEST_CASE("labels are part of the isomorphism type") {
  CHECK_FALSE(is_isomorphic(graph_of("2 2"), graph_of("3 3")));
}

TEST_CASE("components rejects malformed graphs") {
  ReductionGraph g = graph_of("2 2");
  g.reality_edges.erase(RGEdge(g.source, RGVertex::left(1)));
  CHECK_THROWS_AS(components(g), MalformedGraph);

  ReductionGraph h = graph_of("2 2");
  h.labels.erase(RGVertex::left(1));
  CHECK_THROWS_AS(validate(h), MalformedGraph);
}

TEST_CASE("rf over a rule's domain matches the reduced string's graph") {
  for_each_legal_string(2, [](const LegalString& u) {
    const ReductionGraph g = build_reduction_graph(u);
    for (const ReductionRule& r : applicable_rules(u)) {
      ReductionGraph image = g;
      for (const Label p : r.domain()) image = reduction_function(image, p);
      REQUIRE(is_isomorphic(image, build_reduction_graph(apply_rule(u, r))));
    }
  });
}
