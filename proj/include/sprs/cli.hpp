#pragma once

// Command-line surface. Subcommands: analyze | reduce | snr-domains |
// check-order | parallel | verify | dot. Exit codes: 0 success, 1
// verification counterexample, 2 input error, 3 rule-application error.
// Every command is deterministic: identical inputs give byte-identical
// output. A legal string argument of "-" is read from standard input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dot.hpp"
#include "pc_graph.hpp"
#include "pointer.hpp"
#include "report.hpp"
#include "rules.hpp"
#include "verify.hpp"

namespace sprs {

namespace cli_detail {

inline std::string resolve_input(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return text;
}

inline void write_file(const std::filesystem::path& path, const std::string& body,
                       std::ostream& out) {
  std::ofstream file(path, std::ios::binary);
  file << body;
  out << "wrote " << path.string() << "\n";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace cli_detail

// Runs the CLI on `args` (without the program name); returns the exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"string pointer reduction system toolkit"};
  app.require_subcommand(1);

  std::string string_arg, reduction_arg, order_arg;
  std::string label_p, label_q;
  std::string dot_dir;
  bool json = false;
  int max_labels = 3;
  std::optional<std::size_t> limit;
  std::size_t limit_value = 0;

  auto* analyze = app.add_subcommand("analyze", "full report for a legal string");
  analyze->add_option("string", string_arg, "legal string (\"-\" reads stdin)")->required();
  analyze->add_flag("--json", json, "emit the report as JSON");
  analyze->add_option("--dot", dot_dir, "directory for DOT exports");

  auto* reduce = app.add_subcommand("reduce", "apply a reduction to a legal string");
  reduce->add_option("string", string_arg, "legal string (\"-\" reads stdin)")->required();
  reduce->add_option("reduction", reduction_arg,
                     "rules in application order, e.g. \"sdr(5,3); snr(4)\"")
      ->required();
  reduce->add_flag("--json", json);

  auto* snr_domains_cmd = app.add_subcommand("snr-domains",
                                             "all pointer sets usable as the snr steps");
  snr_domains_cmd->add_option("string", string_arg)->required();
  snr_domains_cmd->add_flag("--json", json);

  auto* check_order = app.add_subcommand("check-order",
                                         "can snr rules be applied in this label order?");
  check_order->add_option("string", string_arg)->required();
  check_order->add_option("order", order_arg, "comma-separated labels, e.g. \"3,2,5\"");
  check_order->add_flag("--json", json);

  auto* parallel = app.add_subcommand("parallel",
                                      "parallel-application queries for two labels");
  parallel->add_option("string", string_arg)->required();
  parallel->add_option("p", label_p)->required();
  parallel->add_option("q", label_q)->required();
  parallel->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify",
                                    "replay every invariant against the brute-force oracle");
  verify->add_option("--max-labels", max_labels, "largest label count to enumerate")
      ->check(CLI::PositiveNumber);
  auto* limit_opt = verify->add_option("--limit", limit_value,
                                       "cap oracle enumeration per string");
  verify->add_flag("--json", json);

  auto* dot = app.add_subcommand("dot", "DOT export of both graphs");
  dot->add_option("string", string_arg)->required();
  dot->add_option("--dot", dot_dir, "directory to write files into (stdout otherwise)");

  try {
    std::vector<const char*> argv;
    argv.push_back("sprs");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) {
      const LegalString u =
          parse_legal_string(cli_detail::resolve_input(string_arg, in));
      const AnalysisReport report = build_analysis_report(u);
      out << (json ? render_json(report) : render_text(report));
      if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        std::ostream& notes = json ? err : out;  // keep stdout parseable
        cli_detail::write_file(std::filesystem::path(dot_dir) / "reduction_graph.dot",
                               export_dot(build_reduction_graph(u)), notes);
        cli_detail::write_file(std::filesystem::path(dot_dir) / "pc_graph.dot",
                               export_dot(build_pc_graph(u)), notes);
      }
      return 0;
    }

    if (reduce->parsed()) {
      const LegalString u =
          parse_legal_string(cli_detail::resolve_input(string_arg, in));
      const Reduction phi = parse_reduction(reduction_arg);
      LegalString result;
      try {
        result = apply_reduction(u, phi);
      } catch (const NotApplicable& e) {
        err << "error: " << e.what() << "\n";
        return 3;
      }
      if (json) {
        nlohmann::json j;
        j["result"] = render(result);
        j["domain_before"] = domain(u);
        j["rule_domain"] = reduction_domain(phi);
        j["domain_after"] = domain(result);
        out << j.dump(2) << "\n";
      } else {
        out << (result.empty() ? "(empty)" : render(result)) << "\n";
        out << "dom(u)      = " << render_label_set(domain(u)) << "\n";
        out << "dom(phi)    = " << render_label_set(reduction_domain(phi)) << "\n";
        out << "dom(result) = " << render_label_set(domain(result)) << "\n";
      }
      return 0;
    }

    if (snr_domains_cmd->parsed()) {
      const LegalString u =
          parse_legal_string(cli_detail::resolve_input(string_arg, in));
      const std::set<std::set<Label>> domains =
          enumerate_snr_domains(build_pc_graph(u));
      if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const std::set<Label>& d : domains) j.push_back(d);
        out << j.dump(2) << "\n";
      } else {
        for (const std::set<Label>& d : domains) {
          out << render_label_set(d) << "\n";
        }
      }
      return 0;
    }

    if (check_order->parsed()) {
      const LegalString u =
          parse_legal_string(cli_detail::resolve_input(string_arg, in));
      EdgeOrdering order;
      for (const Pointer& p : parse_pointer_string(order_arg)) {
        if (p.barred) throw MalformedToken("snr order labels are unbarred");
        order.push_back(p.label);
      }
      std::string why;
      const bool valid = is_valid_snr_order(u, order, &why);
      std::string witness_text;
      if (valid) {
        witness_text = render(realize_snr_order(u, order));
      }
      if (json) {
        nlohmann::json j;
        j["order"] = order;
        j["valid"] = valid;
        if (valid) {
          j["witness"] = witness_text;
        } else {
          j["reason"] = why;
        }
        out << j.dump(2) << "\n";
      } else if (valid) {
        out << "yes\n";
        out << "witness: " << (witness_text.empty() ? "(empty)" : witness_text)
            << "\n";
      } else {
        out << "no\n";
        out << "reason: " << why << "\n";
      }
      return 0;
    }

    if (parallel->parsed()) {
      const LegalString u =
          parse_legal_string(cli_detail::resolve_input(string_arg, in));
      const PointerString ps = parse_pointer_string(label_p + " " + label_q);
      if (ps.size() != 2 || ps[0].barred || ps[1].barred) {
        throw MalformedToken("parallel takes two unbarred labels");
      }
      const Label p = ps[0].label, q = ps[1].label;
      const bool now = parallel_now(u, p, q);
      const bool tree = parallel_tree_condition(u, p, q);
      const bool eventually = eventually_parallel_condition(u, p, q);
      if (json) {
        nlohmann::json j;
        j["parallel_now"] = now;
        j["tree_leaf_condition"] = tree;
        j["eventually_parallel_condition"] = eventually;
        out << j.dump(2) << "\n";
      } else {
        out << "parallel now: " << cli_detail::yes_no(now) << "\n";
        out << "tree-leaf condition: " << cli_detail::yes_no(tree) << "\n";
        out << "eventually-parallel condition: " << cli_detail::yes_no(eventually)
            << "\n";
      }
      return 0;
    }

    if (verify->parsed()) {
      VerifyOptions opts;
      opts.max_labels = max_labels;
      if (limit_opt->count() > 0) limit = limit_value;
      opts.oracle_limit = limit;
      const VerificationReport report = run_verification(opts);
      if (json) {
        nlohmann::json j;
        j["total_strings"] = report.total_strings;
        j["strings_per_size"] = report.strings_per_size;
        j["ok"] = report.ok();
        nlohmann::json checks = nlohmann::json::array();
        for (const CheckResult& c : report.checks) {
          checks.push_back({{"name", c.name},
                            {"fatal", c.fatal},
                            {"cases", c.cases},
                            {"failures", c.failures}});
        }
        j["checks"] = checks;
        j["notes"] = report.notes;
        out << j.dump(2) << "\n";
      } else {
        out << report.render_text();
      }
      return report.ok() ? 0 : 1;
    }

    if (dot->parsed()) {
      const LegalString u =
          parse_legal_string(cli_detail::resolve_input(string_arg, in));
      const std::string reduction_dot = export_dot(build_reduction_graph(u));
      const std::string pc_dot = export_dot(build_pc_graph(u));
      if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        cli_detail::write_file(std::filesystem::path(dot_dir) / "reduction_graph.dot",
                               reduction_dot, out);
        cli_detail::write_file(std::filesystem::path(dot_dir) / "pc_graph.dot",
                               pc_dot, out);
      } else {
        out << reduction_dot << pc_dot;
      }
      return 0;
    }
  } catch (const NotApplicable& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace sprs
