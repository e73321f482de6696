#pragma once

// The pointer-component multigraph PC_u: one vertex per connected component
// of the reduction graph, one edge per label of dom(u), each edge joining
// the one or two components holding vertices with that label. Carries a root
// mark on the linear component. Everything the loop-recombination questions
// need lives here: snrdom, merges, acyclicity and spanning-tree tests,
// edge-topological orderings, and the parallel-application conditions.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pointer.hpp"
#include "reduction_graph.hpp"
#include "rules.hpp"

namespace sprs {

struct PCGraph {
  std::set<int> vertices;
  // label -> endpoint pair, normalized first <= second; loop when equal.
  std::map<Label, std::pair<int, int>> endpoints;
  // The linear component. Absent only in graphs produced by reduction
  // functions that do not correspond to an actual reduction.
  std::optional<int> root;

  std::size_t order() const { return vertices.size(); }
  std::set<Label> edge_labels() const {
    std::set<Label> out;
    for (const auto& [label, ends] : endpoints) out.insert(label);
    return out;
  }
  bool is_loop(Label e) const {
    const auto& ends = endpoints.at(e);
    return ends.first == ends.second;
  }

  friend bool operator==(const PCGraph&, const PCGraph&) = default;
};

inline PCGraph build_pc_graph(const LegalString& u) {
  const ReductionGraph g = build_reduction_graph(u);
  const ComponentReport report = components(g);
  PCGraph pc;
  for (const auto& [v, id] : report.membership) pc.vertices.insert(id);
  pc.root = report.linear;
  for (const Label label : domain(u)) {
    std::set<int> ends;
    for (const auto& [v, l] : g.labels) {
      if (l == label) ends.insert(report.membership.at(v));
    }
    pc.endpoints[label] = {*ends.begin(), *ends.rbegin()};
  }
  return pc;
}

// Labels occurring in two different components (the non-loop edges).
inline std::set<Label> snrdom(const PCGraph& pc) {
  std::set<Label> out;
  for (const auto& [label, ends] : pc.endpoints) {
    if (ends.first != ends.second) out.insert(label);
  }
  return out;
}

inline std::set<Label> snrdom(const LegalString& u) {
  return snrdom(build_pc_graph(u));
}

namespace detail {

inline void require_edges(const PCGraph& pc, const std::set<Label>& d) {
  for (const Label e : d) {
    if (pc.endpoints.count(e) == 0) {
      throw UnknownEdge("no edge labelled " + std::to_string(e));
    }
  }
}

// Small union-find over the vertex ids of a PCGraph.
struct PCUnionFind {
  std::map<int, int> parent;

  explicit PCUnionFind(const std::set<int>& vertices) {
    for (const int v : vertices) parent[v] = v;
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  // False when both endpoints were already connected.
  bool unite(int a, int b) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
    return true;
  }
  std::size_t component_count() {
    std::set<int> roots;
    for (const auto& [v, p] : parent) roots.insert(find(v));
    return roots.size();
  }
};

}  // namespace detail

// Same vertex set, edges restricted to D (isolated vertices kept).
inline PCGraph restrict(const PCGraph& pc, const std::set<Label>& d) {
  detail::require_edges(pc, d);
  PCGraph out;
  out.vertices = pc.vertices;
  out.root = pc.root;
  for (const Label e : d) out.endpoints[e] = pc.endpoints.at(e);
  return out;
}

// rf_p on multigraphs: drop edge p, then drop the vertices left isolated.
// When no edges remain the result is the single-vertex graph.
inline PCGraph pc_reduction_function(const PCGraph& pc, Label label) {
  detail::require_edges(pc, {label});
  PCGraph out;
  for (const auto& [e, ends] : pc.endpoints) {
    if (e == label) continue;
    out.endpoints[e] = ends;
    out.vertices.insert(ends.first);
    out.vertices.insert(ends.second);
  }
  if (out.endpoints.empty()) {
    out.vertices = {0};
    out.root = 0;
    return out;
  }
  if (pc.root && out.vertices.count(*pc.root) != 0) out.root = *pc.root;
  return out;
}

// merge_p: contract a non-loop edge p, replacing its two endpoints by a
// fresh vertex (the smaller of the two ids, which is free once both are
// removed). The root mark is inherited when an endpoint carried it.
inline PCGraph merge(const PCGraph& pc, Label label) {
  const auto it = pc.endpoints.find(label);
  if (it == pc.endpoints.end()) {
    throw NotMergeable("no edge labelled " + std::to_string(label));
  }
  const auto [a, b] = it->second;
  if (a == b) {
    throw NotMergeable("edge " + std::to_string(label) + " is a loop");
  }
  const int fresh = std::min(a, b);
  auto remap = [&](int v) { return (v == a || v == b) ? fresh : v; };
  PCGraph out;
  for (const int v : pc.vertices) {
    if (v != a && v != b) out.vertices.insert(v);
  }
  out.vertices.insert(fresh);
  for (const auto& [e, ends] : pc.endpoints) {
    if (e == label) continue;
    const int x = remap(ends.first);
    const int y = remap(ends.second);
    out.endpoints[e] = {std::min(x, y), std::max(x, y)};
  }
  if (pc.root) out.root = remap(*pc.root);
  return out;
}

// No cycle among the edges of D; loops and parallel pairs count as cycles.
inline bool is_acyclic_restriction(const PCGraph& pc, const std::set<Label>& d) {
  detail::require_edges(pc, d);
  detail::PCUnionFind uf(pc.vertices);
  for (const Label e : d) {
    const auto& [a, b] = pc.endpoints.at(e);
    if (a == b || !uf.unite(a, b)) return false;
  }
  return true;
}

// Merges over D are applicable in some (equivalently any) order iff the
// restriction to D is acyclic. Both routes are computed and compared.
inline bool merge_sequence_applicable(const PCGraph& pc, const std::set<Label>& d) {
  detail::require_edges(pc, d);
  const bool acyclic = is_acyclic_restriction(pc, d);
  bool sequential = true;
  try {
    PCGraph g = pc;
    for (const Label e : d) g = merge(g, e);
  } catch (const NotMergeable&) {
    sequential = false;
  }
  if (sequential != acyclic) {
    throw MalformedGraph("merge applicability disagrees with acyclicity check");
  }
  return acyclic;
}

// Acyclic and connected over the full vertex set.
inline bool is_spanning_tree(const PCGraph& pc, const std::set<Label>& d) {
  detail::require_edges(pc, d);
  detail::PCUnionFind uf(pc.vertices);
  for (const Label e : d) {
    const auto& [a, b] = pc.endpoints.at(e);
    if (a == b || !uf.unite(a, b)) return false;
  }
  return uf.component_count() == 1;
}

inline bool is_connected(const PCGraph& pc) {
  detail::PCUnionFind uf(pc.vertices);
  for (const auto& [e, ends] : pc.endpoints) uf.unite(ends.first, ends.second);
  return uf.component_count() <= 1;
}

// All D whose restriction is a spanning tree: exhaustive over the
// (order-1)-subsets of the edge labels.
inline std::set<std::set<Label>> enumerate_snr_domains(const PCGraph& pc) {
  std::set<std::set<Label>> out;
  const std::size_t need = pc.order() - 1;
  const std::set<Label> label_set = pc.edge_labels();
  const std::vector<Label> labels(label_set.begin(), label_set.end());
  if (need > labels.size()) return out;
  std::vector<std::size_t> pick(need);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::set<Label> d;
    for (const std::size_t i : pick) d.insert(labels[i]);
    if (is_spanning_tree(pc, d)) out.insert(d);
    // next combination
    std::size_t k = need;
    while (k > 0 && pick[k - 1] == labels.size() - need + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

inline std::size_t required_snr_count(const LegalString& u) {
  return build_pc_graph(u).order() - 1;
}

using EdgeOrdering = std::vector<Label>;

namespace detail {

// Rooted-tree structure of a spanning tree D: for each edge, the edge one
// step closer to the root (nullopt for edges at the root).
struct RootedTree {
  std::map<Label, std::optional<Label>> father;
  std::map<Label, int> child_vertex;  // the endpoint farther from the root
};

inline RootedTree root_tree(const PCGraph& pc, const std::set<Label>& d, int root) {
  std::map<int, std::vector<std::pair<Label, int>>> adj;  // vertex -> (edge, other)
  for (const Label e : d) {
    const auto& [a, b] = pc.endpoints.at(e);
    adj[a].push_back({e, b});
    adj[b].push_back({e, a});
  }
  RootedTree tree;
  std::map<int, std::optional<Label>> up;  // vertex -> edge toward root
  std::vector<int> queue{root};
  std::set<int> seen{root};
  up[root] = std::nullopt;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (const auto& [e, w] : adj[v]) {
      if (!seen.insert(w).second) continue;
      up[w] = e;
      tree.father[e] = up[v];
      tree.child_vertex[e] = w;
      queue.push_back(w);
    }
  }
  return tree;
}

inline void extend_orderings(const RootedTree& tree,
                             std::map<Label, int>& pending_children,
                             std::set<Label>& available, EdgeOrdering& prefix,
                             std::size_t total, std::set<EdgeOrdering>& out) {
  if (prefix.size() == total) {
    out.insert(prefix);
    return;
  }
  const std::vector<Label> choices(available.begin(), available.end());
  for (const Label e : choices) {
    available.erase(e);
    prefix.push_back(e);
    const std::optional<Label> father = tree.father.at(e);
    if (father && --pending_children[*father] == 0) available.insert(*father);
    extend_orderings(tree, pending_children, available, prefix, total, out);
    if (father && pending_children[*father]++ == 0) available.erase(*father);
    prefix.pop_back();
    available.insert(e);
  }
}

}  // namespace detail

// All orderings of the spanning tree D in which every edge appears before
// the edge above it (child before father), rooted at the linear component.
inline std::set<EdgeOrdering> edge_topological_orderings(const PCGraph& pc,
                                                         const std::set<Label>& d) {
  detail::require_edges(pc, d);
  if (!is_spanning_tree(pc, d)) {
    throw NotATree("restriction is not a spanning tree");
  }
  if (!pc.root) {
    throw NotATree("graph carries no root mark to order from");
  }
  const detail::RootedTree tree = detail::root_tree(pc, d, *pc.root);
  std::map<Label, int> pending_children;
  for (const Label e : d) pending_children[e] = 0;
  for (const Label e : d) {
    const std::optional<Label> f = tree.father.at(e);
    if (f) ++pending_children[*f];
  }
  std::set<Label> available;
  for (const Label e : d) {
    if (pending_children[e] == 0) available.insert(e);
  }
  std::set<EdgeOrdering> out;
  EdgeOrdering prefix;
  detail::extend_orderings(tree, pending_children, available, prefix, d.size(), out);
  return out;
}

// True iff the labels of L form a spanning tree of PC_u and L is an
// edge-topological ordering of it rooted at the linear component. Invalid
// input (duplicates, unknown labels, non-tree) yields false with a
// diagnostic.
inline bool is_valid_snr_order(const LegalString& u, const EdgeOrdering& order,
                               std::string* diagnostic = nullptr) {
  auto fail = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why;
    return false;
  };
  const PCGraph pc = build_pc_graph(u);
  std::set<Label> d;
  for (const Label e : order) {
    if (pc.endpoints.count(e) == 0) {
      return fail("label " + std::to_string(e) + " is not in dom(u)");
    }
    if (!d.insert(e).second) {
      return fail("label " + std::to_string(e) + " listed twice");
    }
  }
  if (!is_spanning_tree(pc, d)) {
    return fail("labels do not form a spanning tree of the pointer-component graph");
  }
  const detail::RootedTree tree = detail::root_tree(pc, d, *pc.root);
  std::map<Label, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  for (const Label e : order) {
    const std::optional<Label> f = tree.father.at(e);
    if (f && position.at(e) > position.at(*f)) {
      return fail("edge " + std::to_string(e) + " is ordered after its father edge " +
                  std::to_string(*f));
    }
  }
  if (diagnostic) diagnostic->clear();
  return true;
}

// Operational parallelism: some polarity choice makes both application
// orders of the two snr rules applicable to u itself.
inline bool parallel_now(const LegalString& u, Label p, Label q) {
  if (p == q) {
    throw SameLabel("parallel_now needs two distinct labels, got " +
                    std::to_string(p) + " twice");
  }
  for (const bool pbar : {false, true}) {
    for (const bool qbar : {false, true}) {
      const ReductionRule rp = ReductionRule::snr(Pointer{p, pbar});
      const ReductionRule rq = ReductionRule::snr(Pointer{q, qbar});
      if (!rule_applicable(u, rp) || !rule_applicable(u, rq)) continue;
      if (rule_applicable(apply_rule(u, rp), rq) &&
          rule_applicable(apply_rule(u, rq), rp)) {
        return true;
      }
    }
  }
  return false;
}

namespace detail {

inline void require_pair_in_domain(const LegalString& u, Label p, Label q,
                                   const char* op) {
  if (p == q) {
    throw SameLabel(std::string(op) + " needs two distinct labels, got " +
                    std::to_string(p) + " twice");
  }
  const std::set<Label> dom = domain(u);
  for (const Label l : {p, q}) {
    if (dom.count(l) == 0) {
      throw LabelAbsent("label " + std::to_string(l) + " does not occur in \"" +
                        render(u) + "\"");
    }
  }
}

// Leaf edges of a rooted spanning tree: edges whose child-side endpoint has
// no child edges.
inline std::set<Label> leaf_edges(const PCGraph& pc, const std::set<Label>& d) {
  const RootedTree tree = root_tree(pc, d, *pc.root);
  std::set<Label> leaves;
  for (const Label e : d) leaves.insert(e);
  for (const Label e : d) {
    const std::optional<Label> f = tree.father.at(e);
    if (f) leaves.erase(*f);
  }
  return leaves;
}

}  // namespace detail

// Graph condition of the first parallelism corollary: some spanning tree
// contains p and q with both incident to leaves (root = linear component).
inline bool parallel_tree_condition(const LegalString& u, Label p, Label q) {
  detail::require_pair_in_domain(u, p, q, "parallel_tree_condition");
  const PCGraph pc = build_pc_graph(u);
  for (const std::set<Label>& d : enumerate_snr_domains(pc)) {
    if (d.count(p) == 0 || d.count(q) == 0) continue;
    const std::set<Label> leaves = detail::leaf_edges(pc, d);
    if (leaves.count(p) != 0 && leaves.count(q) != 0) return true;
  }
  return false;
}

// Graph condition of the second parallelism corollary: some spanning tree
// contains p and q with neither an ancestor of the other, i.e. no simple
// walk from the root traverses both.
inline bool eventually_parallel_condition(const LegalString& u, Label p, Label q) {
  detail::require_pair_in_domain(u, p, q, "eventually_parallel_condition");
  const PCGraph pc = build_pc_graph(u);
  for (const std::set<Label>& d : enumerate_snr_domains(pc)) {
    if (d.count(p) == 0 || d.count(q) == 0) continue;
    const detail::RootedTree tree = detail::root_tree(pc, d, *pc.root);
    auto is_ancestor = [&](Label high, Label low) {
      std::optional<Label> cur = tree.father.at(low);
      while (cur) {
        if (*cur == high) return true;
        cur = tree.father.at(*cur);
      }
      return false;
    };
    if (!is_ancestor(p, q) && !is_ancestor(q, p)) return true;
  }
  return false;
}

// Labelled-multigraph canonical form: the sorted multiset of per-vertex
// signatures (root mark, sorted incident labels). Edge labels are unique, so
// equal signature multisets characterize isomorphism with matching labels
// and preserved root.
inline std::string canonical_form(const PCGraph& pc) {
  std::map<int, std::set<Label>> incident;
  for (const int v : pc.vertices) incident[v];
  for (const auto& [e, ends] : pc.endpoints) {
    incident[ends.first].insert(e);
    incident[ends.second].insert(e);
  }
  std::vector<std::string> signatures;
  for (const auto& [v, labels] : incident) {
    std::string sig = (pc.root && *pc.root == v) ? "R[" : "C[";
    for (const Label l : labels) {
      if (sig.back() != '[') sig += ',';
      sig += std::to_string(l);
    }
    sig += ']';
    signatures.push_back(std::move(sig));
  }
  std::sort(signatures.begin(), signatures.end());
  std::string out;
  for (const std::string& s : signatures) {
    if (!out.empty()) out += ';';
    out += s;
  }
  return out;
}

inline bool is_isomorphic(const PCGraph& a, const PCGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

// Builds one successful reduction realizing the snr order L: greedily
// reduces rem_{L'}(u) with positive/double rules, lifts that sequence to u,
// then applies the snr rules in order with polarities read off the string.
// Precondition: is_valid_snr_order(u, L).
inline Reduction realize_snr_order(const LegalString& u, const EdgeOrdering& order) {
  std::string why;
  if (!is_valid_snr_order(u, order, &why)) {
    throw NotATree("order is not realizable: " + why);
  }
  const std::set<Label> lset(order.begin(), order.end());
  Reduction out;
  LegalString w = remove_pointers(u, lset);
  while (!w.empty()) {
    const std::set<ReductionRule> rules = applicable_rules(w);
    const auto chosen =
        std::find_if(rules.begin(), rules.end(), [](const ReductionRule& r) {
          return r.kind != RuleKind::Snr;
        });
    if (chosen == rules.end()) {
      throw MalformedGraph("no positive/double rule applicable while reducing rem_D(u)");
    }
    out.rules.push_back(*chosen);
    w = apply_rule(w, *chosen);
  }
  LegalString v = apply_reduction(u, out);
  for (const Label l : order) {
    ReductionRule r = ReductionRule::snr(Pointer{l, false});
    if (!rule_applicable(v, r)) r = ReductionRule::snr(Pointer{l, true});
    out.rules.push_back(r);
    v = apply_rule(v, r);  // throws if the characterization failed
  }
  if (!v.empty()) {
    throw MalformedGraph("snr order replay did not reach the empty string");
  }
  return out;
}

}  // namespace sprs
