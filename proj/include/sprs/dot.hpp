#pragma once

// Deterministic Graphviz DOT output: reduction graphs draw reality edges
// bold and desire edges dashed; pointer-component graphs label each edge
// with its pointer, loops as self-edges. Byte-identical across runs on the
// same input.

#include <map>
#include <string>

#include "pc_graph.hpp"
#include "reduction_graph.hpp"

namespace sprs {

inline std::string export_dot(const ReductionGraph& g) {
  std::string out = "graph reduction_graph {\n";
  for (const RGVertex& v : g.vertices) {
    const std::string name = vertex_name(v);
    const auto it = g.labels.find(v);
    const std::string display = it == g.labels.end() ? name : std::to_string(it->second);
    out += "  \"" + name + "\" [label=\"" + display + "\"];\n";
  }
  for (const RGEdge& e : g.reality_edges) {
    out += "  \"" + vertex_name(e.a) + "\" -- \"" + vertex_name(e.b) +
           "\" [style=bold];\n";
  }
  for (const RGEdge& e : g.desire_edges) {
    out += "  \"" + vertex_name(e.a) + "\" -- \"" + vertex_name(e.b) +
           "\" [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

// "R" for the root (linear component), "C1".."Cn" for the rest in id order.
inline std::map<int, std::string> component_names(const PCGraph& pc) {
  std::map<int, std::string> names;
  int next = 1;
  for (const int v : pc.vertices) {
    if (pc.root && *pc.root == v) {
      names[v] = "R";
    } else {
      names[v] = "C" + std::to_string(next++);
    }
  }
  return names;
}

inline std::string export_dot(const PCGraph& pc) {
  const std::map<int, std::string> names = component_names(pc);
  std::string out = "graph pc_graph {\n";
  for (const int v : pc.vertices) {
    out += "  \"" + names.at(v) + "\";\n";
  }
  for (const auto& [label, ends] : pc.endpoints) {
    out += "  \"" + names.at(ends.first) + "\" -- \"" + names.at(ends.second) +
           "\" [label=\"" + std::to_string(label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace sprs
