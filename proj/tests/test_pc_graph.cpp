#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "sprs/enumerate.hpp"
#include "sprs/pc_graph.hpp"

using namespace sprs;

namespace {

const char* kRunningExample = "5 4 3 7 2 5 6 2 -7 3 4 6";

PCGraph pc_of(const char* text) { return build_pc_graph(parse_legal_string(text)); }

// Component ids of the running example in the naming of the worked example:
// c1 = the cyclic component carrying the loop 7, c2 = the cyclic endpoint of
// edge 5, c3 = the remaining cyclic component.
struct RunningExampleIds {
  int r, c1, c2, c3;
};

RunningExampleIds identify(const PCGraph& pc) {
  RunningExampleIds ids{};
  REQUIRE(pc.root.has_value());
  ids.r = *pc.root;
  const auto& e7 = pc.endpoints.at(7);
  REQUIRE(e7.first == e7.second);
  ids.c1 = e7.first;
  const auto& e5 = pc.endpoints.at(5);
  REQUIRE(e5.first != e5.second);
  ids.c2 = e5.first == ids.r ? e5.second : e5.first;
  for (const int v : pc.vertices) {
    if (v != ids.r && v != ids.c1 && v != ids.c2) ids.c3 = v;
  }
  return ids;
}

}  // namespace

TEST_CASE("running example pointer-component graph matches the edge table") {
  const PCGraph pc = pc_of(kRunningExample);
  REQUIRE(pc.vertices.size() == 4);
  REQUIRE(pc.edge_labels() == std::set<Label>{2, 3, 4, 5, 6, 7});
  const RunningExampleIds ids = identify(pc);
  auto ends = [&](Label e) { return pc.endpoints.at(e); };
  auto pair_of = [](int a, int b) {
    return std::pair<int, int>{std::min(a, b), std::max(a, b)};
  };
  CHECK(ends(7) == pair_of(ids.c1, ids.c1));
  CHECK(ends(2) == pair_of(ids.c1, ids.c2));
  CHECK(ends(3) == pair_of(ids.c1, ids.c3));
  CHECK(ends(4) == pair_of(ids.c2, ids.c3));
  CHECK(ends(5) == pair_of(ids.c2, ids.r));
  CHECK(ends(6) == pair_of(ids.c2, ids.r));
}

TEST_CASE("degenerate pointer-component graphs") {
  const PCGraph empty = build_pc_graph(LegalString{});
  CHECK(empty.vertices.size() == 1);
  CHECK(empty.endpoints.empty());
  CHECK(empty.root.has_value());

  const PCGraph two = pc_of("2 2");
  CHECK(two.vertices.size() == 2);
  REQUIRE(two.endpoints.size() == 1);
  CHECK_FALSE(two.is_loop(2));
}

TEST_CASE("snrdom is the set of non-loop edges") {
  CHECK(snrdom(parse_legal_string(kRunningExample)) ==
        std::set<Label>{2, 3, 4, 5, 6});
  CHECK(snrdom(parse_legal_string("2 3 2 3")).empty());
  CHECK(snrdom(LegalString{}).empty());
}

TEST_CASE("restrict keeps all vertices") {
  const PCGraph pc = pc_of(kRunningExample);
  const PCGraph sub = restrict(pc, {2, 3, 5});
  CHECK(sub.vertices == pc.vertices);
  CHECK(sub.edge_labels() == std::set<Label>{2, 3, 5});
  CHECK(is_spanning_tree(pc, {2, 3, 5}));

  const PCGraph none = restrict(pc, {});
  CHECK(none.vertices.size() == 4);
  CHECK(none.endpoints.empty());

  const PCGraph loop_only = restrict(pc, {7});
  CHECK(loop_only.is_loop(7));
  CHECK_THROWS_AS(restrict(pc, {9}), UnknownEdge);
}

TEST_CASE("pc reduction functions simulate reductions") {
  PCGraph image = pc_of(kRunningExample);
  for (const Label p : {3, 4, 5}) image = pc_reduction_function(image, p);
  CHECK(is_isomorphic(image, pc_of("6 2 -7 7 2 6")));

  // The reduced string's graph, built by hand: a path root -- 6 -- x -- 2 -- y
  // with the loop 7 on y.
  PCGraph expected;
  expected.vertices = {0, 1, 2};
  expected.root = 0;
  expected.endpoints[6] = {0, 2};
  expected.endpoints[2] = {1, 2};
  expected.endpoints[7] = {1, 1};
  CHECK(is_isomorphic(image, expected));
}

TEST_CASE("pc reduction function edge cases") {
  const PCGraph pc = pc_of(kRunningExample);
  const PCGraph no7 = pc_reduction_function(pc, 7);
  CHECK(no7.vertices == pc.vertices);  // c1 still meets edges 2 and 3
  CHECK(no7.endpoints.count(7) == 0);

  const PCGraph single = pc_reduction_function(pc_of("2 2"), 2);
  CHECK(single.vertices.size() == 1);
  CHECK(single.endpoints.empty());
  CHECK(single.root.has_value());

  CHECK_THROWS_AS(pc_reduction_function(pc, 9), UnknownEdge);
}

TEST_CASE("merge contracts a non-loop edge") {
  const PCGraph pc = pc_of(kRunningExample);
  const PCGraph merged = merge(pc, 2);
  CHECK(merged.order() == pc.order() - 1);
  CHECK(is_isomorphic(merged, pc_of("5 4 3 7 5 6 -7 3 4 6")));  // rem_{2}(u)

  CHECK_THROWS_AS(merge(pc, 7), NotMergeable);
  CHECK_THROWS_AS(merge(pc, 9), NotMergeable);
}

TEST_CASE("merges commute") {
  const PCGraph pc = pc_of(kRunningExample);
  CHECK(merge(merge(pc, 2), 4) == merge(merge(pc, 4), 2));
  CHECK(merge(merge(pc, 5), 3) == merge(merge(pc, 3), 5));
}

TEST_CASE("merge sequences apply exactly on acyclic restrictions") {
  const PCGraph pc = pc_of(kRunningExample);
  CHECK(merge_sequence_applicable(pc, {2, 3, 5}));
  CHECK_FALSE(merge_sequence_applicable(pc, {2, 3, 4}));
  CHECK(merge_sequence_applicable(pc, {}));
}

TEST_CASE("acyclicity counts loops and parallel pairs as cycles") {
  const PCGraph pc = pc_of(kRunningExample);
  CHECK_FALSE(is_acyclic_restriction(pc, {5, 6}));
  CHECK_FALSE(is_acyclic_restriction(pc, {7}));
  CHECK(is_acyclic_restriction(pc, {2, 3}));
}

TEST_CASE("spanning tree test") {
  const PCGraph pc = pc_of(kRunningExample);
  CHECK(is_spanning_tree(pc, {2, 3, 5}));
  CHECK_FALSE(is_spanning_tree(pc, {2, 3, 4}));
  CHECK(is_spanning_tree(pc, {2, 4, 6}));
  CHECK_FALSE(is_spanning_tree(pc, {2, 3}));  // acyclic but not spanning
}

TEST_CASE("enumerate_snr_domains lists exactly the spanning trees") {
  const std::set<std::set<Label>> expected{{2, 3, 5}, {2, 3, 6}, {2, 4, 5},
                                           {2, 4, 6}, {3, 4, 5}, {3, 4, 6}};
  CHECK(enumerate_snr_domains(pc_of(kRunningExample)) == expected);
  CHECK(enumerate_snr_domains(build_pc_graph(LegalString{})) ==
        std::set<std::set<Label>>{{}});
  CHECK(enumerate_snr_domains(pc_of("2 3 2 3")) == std::set<std::set<Label>>{{}});
}

TEST_CASE("pointer-component graphs are connected") {
  CHECK(is_connected(pc_of(kRunningExample)));
  CHECK(is_connected(build_pc_graph(LegalString{})));
  for_each_legal_string(2, [](const LegalString& u) {
    REQUIRE(is_connected(build_pc_graph(u)));
  });
}

TEST_CASE("required_snr_count is the vertex count minus one") {
  CHECK(required_snr_count(parse_legal_string(kRunningExample)) == 3);
  CHECK(required_snr_count(LegalString{}) == 0);
  CHECK(required_snr_count(parse_legal_string("2 3 2 3")) == 0);
}

TEST_CASE("edge-topological orderings of the running example trees") {
  const PCGraph pc = pc_of(kRunningExample);
  CHECK(edge_topological_orderings(pc, {2, 3, 5}) ==
        std::set<EdgeOrdering>{{3, 2, 5}});
  CHECK(edge_topological_orderings(pc, {2, 4, 6}) ==
        std::set<EdgeOrdering>{{2, 4, 6}, {4, 2, 6}});
  CHECK(edge_topological_orderings(build_pc_graph(LegalString{}), {}) ==
        std::set<EdgeOrdering>{{}});
  CHECK_THROWS_AS(edge_topological_orderings(pc, {2, 3, 4}), NotATree);
}

TEST_CASE("is_valid_snr_order accepts exactly the realizable orders") {
  const LegalString u = parse_legal_string(kRunningExample);
  CHECK(is_valid_snr_order(u, {3, 2, 5}));
  std::string why;
  CHECK_FALSE(is_valid_snr_order(u, {5, 2, 3}, &why));
  CHECK_FALSE(why.empty());
  CHECK(is_valid_snr_order(LegalString{}, {}));
  CHECK_FALSE(is_valid_snr_order(u, {3, 2, 9}, &why));
  CHECK_FALSE(is_valid_snr_order(u, {3, 3, 5}, &why));
}

TEST_CASE("realize_snr_order builds a verified witness") {
  const LegalString u = parse_legal_string(kRunningExample);
  const Reduction witness = realize_snr_order(u, {3, 2, 5});
  CHECK(apply_reduction(u, witness).empty());
  std::vector<Label> snr_order;
  for (const ReductionRule& r : witness.rules) {
    if (r.kind == RuleKind::Snr) snr_order.push_back(r.first.label);
  }
  CHECK(snr_order == std::vector<Label>{3, 2, 5});
  CHECK(realize_snr_order(LegalString{}, {}).empty());
  CHECK_THROWS_AS(realize_snr_order(u, {5, 2, 3}), NotATree);
}

TEST_CASE("parallel_now demands both application orders") {
  CHECK(parallel_now(parse_legal_string("6 2 2 4 4 6"), 2, 4));
  CHECK_FALSE(parallel_now(parse_legal_string(kRunningExample), 2, 4));
  CHECK(parallel_now(parse_legal_string("2 2 3 3"), 2, 3));
  CHECK_THROWS_AS(parallel_now(parse_legal_string("2 2 3 3"), 2, 2), SameLabel);
}

TEST_CASE("parallel tree condition scans spanning trees for leaf edges") {
  const LegalString u = parse_legal_string(kRunningExample);
  CHECK(parallel_tree_condition(u, 2, 4));
  CHECK_FALSE(parallel_tree_condition(u, 5, 6));
  CHECK_THROWS_AS(parallel_tree_condition(u, 2, 9), LabelAbsent);
  CHECK_THROWS_AS(parallel_tree_condition(u, 2, 2), SameLabel);
}

TEST_CASE("eventually-parallel condition demands incomparable tree edges") {
  const LegalString u = parse_legal_string(kRunningExample);
  CHECK(eventually_parallel_condition(u, 2, 4));
  CHECK_FALSE(eventually_parallel_condition(u, 2, 3));  // always chained below R
  CHECK_THROWS_AS(eventually_parallel_condition(u, 2, 9), LabelAbsent);
}

TEST_CASE("pc isomorphism is label-sensitive and root-sensitive") {
  PCGraph a;
  a.vertices = {0, 1};
  a.endpoints[2] = {0, 1};
  a.root = 0;
  PCGraph b = a;
  CHECK(is_isomorphic(a, b));
  b.endpoints.clear();
  b.endpoints[3] = {0, 1};
  CHECK_FALSE(is_isomorphic(a, b));
  PCGraph c = a;
  c.root.reset();
  CHECK_FALSE(is_isomorphic(a, c));
  PCGraph renamed;
  renamed.vertices = {5, 9};
  renamed.endpoints[2] = {5, 9};
  renamed.root = 9;
  CHECK(is_isomorphic(a, renamed));
}
