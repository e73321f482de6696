#pragma once

// The per-string analysis report behind `analyze`: domain, snrdom, component
// counts, the pointer-component edge table, the snr-domain list (spanning
// trees) and the edge-topological orderings of each.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dot.hpp"
#include "pc_graph.hpp"
#include "pointer.hpp"
#include "reduction_graph.hpp"

namespace sprs {

struct AnalysisReport {
  std::string input;
  std::set<Label> dom;
  std::set<Label> snr_dom;
  std::size_t cyclic_components = 0;
  std::size_t required_snr = 0;
  // label -> endpoint component names, sorted; one name for a loop.
  std::map<Label, std::vector<std::string>> pc_edges;
  std::set<std::set<Label>> snr_domains;
  std::map<std::set<Label>, std::set<EdgeOrdering>> orderings;
};

inline std::string render_label_set(const std::set<Label>& s) {
  std::string out = "{";
  for (const Label l : s) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(l);
  }
  out += '}';
  return out;
}

inline std::string render_ordering(const EdgeOrdering& order) {
  std::string out = "(";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(order[i]);
  }
  out += ')';
  return out;
}

inline AnalysisReport build_analysis_report(const LegalString& u) {
  AnalysisReport report;
  report.input = render(u);
  report.dom = domain(u);

  const ReductionGraph g = build_reduction_graph(u);
  report.cyclic_components = components(g).cyclic_count();

  const PCGraph pc = build_pc_graph(u);
  report.snr_dom = snrdom(pc);
  report.required_snr = pc.order() - 1;
  if (report.required_snr != report.cyclic_components) {
    throw std::logic_error("cyclic component count disagrees with o(PC_u) - 1");
  }
  const std::map<int, std::string> names = component_names(pc);
  for (const auto& [label, ends] : pc.endpoints) {
    std::vector<std::string>& cell = report.pc_edges[label];
    cell.push_back(names.at(ends.first));
    if (ends.second != ends.first) cell.push_back(names.at(ends.second));
    std::sort(cell.begin(), cell.end());
  }
  report.snr_domains = enumerate_snr_domains(pc);
  for (const std::set<Label>& d : report.snr_domains) {
    report.orderings[d] = edge_topological_orderings(pc, d);
  }
  return report;
}

inline std::string render_text(const AnalysisReport& r) {
  std::string out;
  out += "input: " + r.input + "\n";
  out += "domain: " + render_label_set(r.dom) + "\n";
  out += "snrdom: " + render_label_set(r.snr_dom) + "\n";
  out += "cyclic components: " + std::to_string(r.cyclic_components) + "\n";
  out += "required snr count: " + std::to_string(r.required_snr) + "\n";
  out += "pc edges:\n";
  for (const auto& [label, cell] : r.pc_edges) {
    out += "  " + std::to_string(label) + ": " + cell.front();
    if (cell.size() == 2) {
      out += " -- " + cell.back();
    } else {
      out += " (loop)";
    }
    out += "\n";
  }
  out += "snr domains (spanning trees):\n";
  for (const auto& [d, orders] : r.orderings) {
    out += "  " + render_label_set(d) + "  orderings:";
    for (const EdgeOrdering& o : orders) out += " " + render_ordering(o);
    out += "\n";
  }
  return out;
}

inline std::string render_comma_list(const std::set<Label>& s) {
  std::string out;
  for (const Label l : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(l);
  }
  return out;
}

inline std::string render_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["input"] = r.input;
  j["domain"] = r.dom;
  j["snrdom"] = r.snr_dom;
  j["cyclic_components"] = r.cyclic_components;
  j["required_snr_count"] = r.required_snr;
  nlohmann::json edges = nlohmann::json::object();
  for (const auto& [label, cell] : r.pc_edges) edges[std::to_string(label)] = cell;
  j["pc_edges"] = edges;
  nlohmann::json domains = nlohmann::json::array();
  for (const std::set<Label>& d : r.snr_domains) domains.push_back(d);
  j["snr_domains"] = domains;
  nlohmann::json orderings = nlohmann::json::object();
  for (const auto& [d, orders] : r.orderings) {
    nlohmann::json list = nlohmann::json::array();
    for (const EdgeOrdering& o : orders) list.push_back(o);
    orderings[render_comma_list(d)] = list;
  }
  j["orderings"] = orderings;
  return j.dump(2) + "\n";
}

}  // namespace sprs
