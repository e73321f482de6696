#pragma once

// The reduction graph R_u: a 2-edge-coloured graph with a source and a
// target, reality edges following adjacency in u and desire edges following
// pointer identity. Every well-formed graph decomposes into one linear
// source-target path plus alternating cycles; the p-reduction function
// removes p-labelled vertices and contracts the alternating walks through
// them into single reality edges.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pointer.hpp"

namespace sprs {

struct RGVertex {
  enum class Role : std::uint8_t { Source, Left, Right, Target };

  Role role = Role::Source;
  int index = 0;  // 1-based position in u for Left/Right; 0 for s and t

  static RGVertex source() { return RGVertex{Role::Source, 0}; }
  static RGVertex target() { return RGVertex{Role::Target, 0}; }
  static RGVertex left(int i) { return RGVertex{Role::Left, i}; }
  static RGVertex right(int i) { return RGVertex{Role::Right, i}; }

  friend auto operator<=>(const RGVertex&, const RGVertex&) = default;
};

// "s", "t", "I<i>", "Ip<i>"
inline std::string vertex_name(const RGVertex& v) {
  switch (v.role) {
    case RGVertex::Role::Source: return "s";
    case RGVertex::Role::Target: return "t";
    case RGVertex::Role::Left: return "I" + std::to_string(v.index);
    case RGVertex::Role::Right: return "Ip" + std::to_string(v.index);
  }
  return "?";
}

// Unordered vertex pair; loops ({x,x}) allowed.
struct RGEdge {
  RGVertex a, b;

  RGEdge(RGVertex x, RGVertex y) : a(x), b(y) {
    if (b < a) std::swap(a, b);
  }
  bool loop() const { return a == b; }
  RGVertex other(const RGVertex& v) const { return v == a ? b : a; }

  friend auto operator<=>(const RGEdge&, const RGEdge&) = default;
};

struct ReductionGraph {
  std::set<RGVertex> vertices;
  std::set<RGEdge> reality_edges;
  std::set<RGEdge> desire_edges;  // may coincide with reality edges
  std::map<RGVertex, Label> labels;  // defined exactly on non-source/target vertices
  RGVertex source = RGVertex::source();
  RGVertex target = RGVertex::target();

  friend bool operator==(const ReductionGraph&, const ReductionGraph&) = default;
};

inline ReductionGraph build_reduction_graph(const LegalString& u) {
  ReductionGraph g;
  const int n = static_cast<int>(u.size());
  g.vertices.insert(g.source);
  g.vertices.insert(g.target);
  for (int i = 1; i <= n; ++i) {
    g.vertices.insert(RGVertex::left(i));
    g.vertices.insert(RGVertex::right(i));
    g.labels[RGVertex::left(i)] = u[static_cast<std::size_t>(i - 1)].label;
    g.labels[RGVertex::right(i)] = u[static_cast<std::size_t>(i - 1)].label;
  }
  if (n == 0) {
    g.reality_edges.insert(RGEdge(g.source, g.target));
    return g;
  }
  g.reality_edges.insert(RGEdge(g.source, RGVertex::left(1)));
  for (int i = 1; i < n; ++i) {
    g.reality_edges.insert(RGEdge(RGVertex::right(i), RGVertex::left(i + 1)));
  }
  g.reality_edges.insert(RGEdge(RGVertex::right(n), g.target));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Pointer pi = u[static_cast<std::size_t>(i - 1)];
      const Pointer pj = u[static_cast<std::size_t>(j - 1)];
      if (pi == pj) {
        g.desire_edges.insert(RGEdge(RGVertex::right(i), RGVertex::left(j)));
        g.desire_edges.insert(RGEdge(RGVertex::left(i), RGVertex::right(j)));
      } else if (pi == bar(pj)) {
        g.desire_edges.insert(RGEdge(RGVertex::left(i), RGVertex::left(j)));
        g.desire_edges.insert(RGEdge(RGVertex::right(i), RGVertex::right(j)));
      }
    }
  }
  return g;
}

namespace detail {

enum : int { kDesire = 0, kReality = 1 };

// Per-vertex incident edges by colour. Well-formed graphs have exactly one
// of each on internal vertices and a single reality edge on s and t.
struct RGAdjacency {
  std::map<RGVertex, std::vector<RGVertex>> reality;
  std::map<RGVertex, std::vector<RGVertex>> desire;

  const std::vector<RGVertex>& partners(const RGVertex& v, int colour) const {
    static const std::vector<RGVertex> none;
    const auto& side = colour == kReality ? reality : desire;
    const auto it = side.find(v);
    return it == side.end() ? none : it->second;
  }
};

inline RGAdjacency rg_adjacency(const ReductionGraph& g) {
  RGAdjacency adj;
  auto add = [](std::map<RGVertex, std::vector<RGVertex>>& side, const RGEdge& e) {
    side[e.a].push_back(e.b);
    if (!e.loop()) side[e.b].push_back(e.a);
  };
  for (const RGEdge& e : g.reality_edges) add(adj.reality, e);
  for (const RGEdge& e : g.desire_edges) add(adj.desire, e);
  return adj;
}

}  // namespace detail

// Structural invariants: every internal vertex carries a label and is
// incident to exactly one reality and one desire edge; s and t have one
// reality edge and no desire edge; each label touches exactly two desire
// edges.
inline void validate(const ReductionGraph& g) {
  if (g.vertices.count(g.source) == 0 || g.vertices.count(g.target) == 0) {
    throw MalformedGraph("source or target vertex missing");
  }
  for (const RGEdge& e : g.reality_edges) {
    if (g.vertices.count(e.a) == 0 || g.vertices.count(e.b) == 0) {
      throw MalformedGraph("reality edge endpoint outside vertex set");
    }
  }
  for (const RGEdge& e : g.desire_edges) {
    if (g.vertices.count(e.a) == 0 || g.vertices.count(e.b) == 0) {
      throw MalformedGraph("desire edge endpoint outside vertex set");
    }
  }
  const detail::RGAdjacency adj = detail::rg_adjacency(g);
  std::map<Label, int> desire_per_label;
  for (const RGVertex& v : g.vertices) {
    const std::size_t nr = adj.partners(v, detail::kReality).size();
    const std::size_t nd = adj.partners(v, detail::kDesire).size();
    if (v == g.source || v == g.target) {
      if (nr != 1 || nd != 0) {
        throw MalformedGraph(vertex_name(v) + " must touch exactly one reality edge and no desire edge");
      }
      continue;
    }
    if (g.labels.count(v) == 0) {
      throw MalformedGraph("unlabelled vertex " + vertex_name(v));
    }
    if (nr != 1 || nd != 1) {
      throw MalformedGraph(vertex_name(v) + " must touch exactly one reality and one desire edge");
    }
  }
  for (const auto& [v, label] : g.labels) {
    if (g.vertices.count(v) == 0) {
      throw MalformedGraph("label map mentions removed vertex " + vertex_name(v));
    }
  }
  for (const RGEdge& e : g.desire_edges) {
    ++desire_per_label[g.labels.at(e.a)];
    if (g.labels.at(e.b) != g.labels.at(e.a)) ++desire_per_label[g.labels.at(e.b)];
  }
  for (const auto& [label, count] : desire_per_label) {
    if (count != 2) {
      throw MalformedGraph("label " + std::to_string(label) + " touches " +
                           std::to_string(count) + " desire edges, expected 2");
    }
  }
}

struct ComponentReport {
  int linear = 0;
  std::set<int> cyclic;
  std::map<RGVertex, int> membership;

  std::size_t cyclic_count() const { return cyclic.size(); }
};

// Connected components; ids are assigned in order of each component's
// smallest vertex, so the linear component (which holds s) is always id 0.
inline ComponentReport components(const ReductionGraph& g) {
  validate(g);
  std::map<RGVertex, RGVertex> parent;
  for (const RGVertex& v : g.vertices) parent[v] = v;
  auto find = [&](RGVertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](const RGVertex& a, const RGVertex& b) {
    const RGVertex ra = find(a), rb = find(b);
    if (!(ra == rb)) parent[ra] = rb;
  };
  for (const RGEdge& e : g.reality_edges) unite(e.a, e.b);
  for (const RGEdge& e : g.desire_edges) unite(e.a, e.b);

  ComponentReport report;
  std::map<RGVertex, int> id_of_root;
  int next_id = 0;
  for (const RGVertex& v : g.vertices) {
    const RGVertex root = find(v);
    auto [it, inserted] = id_of_root.try_emplace(root, next_id);
    if (inserted) ++next_id;
    report.membership[v] = it->second;
  }
  report.linear = report.membership.at(g.source);
  if (report.membership.at(g.target) != report.linear) {
    throw MalformedGraph("source and target lie in different components");
  }
  for (const auto& [v, id] : report.membership) {
    if (id != report.linear) report.cyclic.insert(id);
  }
  return report;
}

// rf_p: remove the vertices labelled `label`, drop every edge touching them,
// and contract each maximal alternating walk running through them (more than
// two edges long) into a single new reality edge between its non-`label`
// endpoints. Total: absent labels leave the graph unchanged.
inline ReductionGraph reduction_function(const ReductionGraph& g, Label label) {
  const detail::RGAdjacency adj = detail::rg_adjacency(g);
  std::set<RGVertex> removed;
  for (const auto& [v, l] : g.labels) {
    if (l == label) removed.insert(v);
  }

  ReductionGraph out;
  out.source = g.source;
  out.target = g.target;
  for (const RGVertex& v : g.vertices) {
    if (removed.count(v) == 0) out.vertices.insert(v);
  }
  for (const auto& [v, l] : g.labels) {
    if (removed.count(v) == 0) out.labels[v] = l;
  }
  auto touches_removed = [&](const RGEdge& e) {
    return removed.count(e.a) != 0 || removed.count(e.b) != 0;
  };
  for (const RGEdge& e : g.reality_edges) {
    if (!touches_removed(e)) out.reality_edges.insert(e);
  }
  for (const RGEdge& e : g.desire_edges) {
    if (!touches_removed(e)) out.desire_edges.insert(e);
  }

  // Contract: from every kept vertex, follow the forced alternating walk
  // into the removed set until it exits. Each interior vertex has one edge
  // of each colour, so the walk is deterministic.
  const std::size_t step_guard = 2 * g.vertices.size() + 2;
  for (const RGVertex& y : out.vertices) {
    for (const int colour : {detail::kReality, detail::kDesire}) {
      const auto& partners = adj.partners(y, colour);
      if (partners.empty() || removed.count(partners.front()) == 0) continue;
      RGVertex cur = partners.front();
      int arrived = colour;
      std::size_t edges_used = 1;
      while (removed.count(cur) != 0) {
        const int leave = arrived == detail::kReality ? detail::kDesire : detail::kReality;
        const auto& next = adj.partners(cur, leave);
        if (next.size() != 1) {
          throw MalformedGraph("alternating walk through removed vertices is not forced");
        }
        cur = next.front();
        arrived = leave;
        if (++edges_used > step_guard) {
          throw MalformedGraph("unterminated alternating walk");
        }
      }
      if (edges_used > 2) out.reality_edges.insert(RGEdge(y, cur));
    }
  }
  return out;
}

namespace detail {

using WalkToken = std::pair<Label, int>;  // (vertex label, next-edge colour)

inline std::string serialize_tokens(const std::vector<WalkToken>& tokens) {
  std::string out;
  for (const auto& [label, colour] : tokens) {
    if (!out.empty()) out += ',';
    out += std::to_string(label);
    out += colour == kReality ? 'R' : 'D';
  }
  return out;
}

}  // namespace detail

// Total isomorphism-invariant encoding. Each component becomes a token
// string: the linear component is read from both ends and the smaller
// reading kept; cyclic components are minimized over all rotations and both
// directions (equivalently, every start vertex with either starting colour).
// Component encodings are sorted and joined.
inline std::string canonical_form(const ReductionGraph& g) {
  const ComponentReport report = components(g);  // validates
  const detail::RGAdjacency adj = detail::rg_adjacency(g);
  const std::size_t guard = 2 * g.vertices.size() + 2;

  auto linear_tokens = [&](const RGVertex& from, const RGVertex& to) {
    std::vector<detail::WalkToken> tokens;
    RGVertex cur = from;
    int colour = detail::kReality;
    std::size_t steps = 0;
    while (true) {
      const auto& partners = adj.partners(cur, colour);
      if (partners.size() != 1) throw MalformedGraph("broken linear component");
      const RGVertex next = partners.front();
      if (next == to) break;
      const int leave = colour == detail::kReality ? detail::kDesire : detail::kReality;
      tokens.emplace_back(g.labels.at(next), leave);
      cur = next;
      colour = leave;
      if (++steps > guard) throw MalformedGraph("unterminated linear walk");
    }
    return tokens;
  };

  auto cycle_tokens = [&](const RGVertex& start, int colour) {
    std::vector<detail::WalkToken> tokens;
    RGVertex cur = start;
    int c = colour;
    std::size_t steps = 0;
    do {
      tokens.emplace_back(g.labels.at(cur), c);
      const auto& partners = adj.partners(cur, c);
      if (partners.size() != 1) throw MalformedGraph("broken cyclic component");
      cur = partners.front();
      c = c == detail::kReality ? detail::kDesire : detail::kReality;
      if (++steps > guard) throw MalformedGraph("unterminated cyclic walk");
    } while (!(cur == start && c == colour));
    return tokens;
  };

  std::map<int, std::vector<RGVertex>> members;
  for (const auto& [v, id] : report.membership) members[id].push_back(v);

  std::vector<std::string> encodings;
  for (const auto& [id, verts] : members) {
    if (id == report.linear) {
      const auto forward = linear_tokens(g.source, g.target);
      const auto backward = linear_tokens(g.target, g.source);
      encodings.push_back("LIN[" +
                          detail::serialize_tokens(std::min(forward, backward)) +
                          "]");
    } else {
      std::optional<std::vector<detail::WalkToken>> best;
      for (const RGVertex& v : verts) {
        for (const int colour : {detail::kDesire, detail::kReality}) {
          auto candidate = cycle_tokens(v, colour);
          if (!best || candidate < *best) best = std::move(candidate);
        }
      }
      encodings.push_back("CYC[" + detail::serialize_tokens(*best) + "]");
    }
  }
  std::sort(encodings.begin(), encodings.end());
  std::string out;
  for (const std::string& e : encodings) {
    if (!out.empty()) out += ';';
    out += e;
  }
  return out;
}

inline bool is_isomorphic(const ReductionGraph& a, const ReductionGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace sprs
