#pragma once

// The rewrite engine: snr / spr / sdr rule instances, applicability and
// application, reductions, the deterministic successful-reduction search,
// the exhaustive strategy enumerator, and snr postponement.
//
// A rule instance is identified structurally by its kind and the exact
// pointers as written in the template; snr_p requires the literal substring
// "p p", spr_p requires p before bar(p), sdr_{p,q} requires the four
// occurrences p..q..p..q with those exact polarities. Since each label
// occurs exactly twice in a legal string, at most one decomposition exists
// per instance.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pointer.hpp"

namespace sprs {

enum class RuleKind : std::uint8_t { Snr, Spr, Sdr };

inline std::string_view rule_kind_name(RuleKind k) {
  switch (k) {
    case RuleKind::Snr: return "snr";
    case RuleKind::Spr: return "spr";
    case RuleKind::Sdr: return "sdr";
  }
  return "?";
}

struct ReductionRule {
  RuleKind kind = RuleKind::Snr;
  Pointer first{};
  // Meaningful for sdr only; kept at {0,false} otherwise so that structural
  // comparison behaves.
  Pointer second{0, false};

  static ReductionRule snr(Pointer p) {
    return ReductionRule{RuleKind::Snr, p, Pointer{0, false}};
  }
  static ReductionRule spr(Pointer p) {
    return ReductionRule{RuleKind::Spr, p, Pointer{0, false}};
  }
  static ReductionRule sdr(Pointer p, Pointer q) {
    if (p.label == q.label) {
      throw SameLabel("sdr needs two distinct labels, got " +
                      std::to_string(p.label) + " twice");
    }
    return ReductionRule{RuleKind::Sdr, p, q};
  }

  std::set<Label> domain() const {
    std::set<Label> out{first.label};
    if (kind == RuleKind::Sdr) out.insert(second.label);
    return out;
  }

  friend auto operator<=>(const ReductionRule&, const ReductionRule&) = default;
};

inline std::string render(const ReductionRule& r) {
  std::string out(rule_kind_name(r.kind));
  out += '(' + render(r.first);
  if (r.kind == RuleKind::Sdr) out += ',' + render(r.second);
  out += ')';
  return out;
}

// A sequence of rules in application order: rules[0] is applied first.
// (Composition notation elsewhere writes the first-applied rule rightmost;
// rendering and parsing both use application order.)
struct Reduction {
  std::vector<ReductionRule> rules;

  bool empty() const noexcept { return rules.empty(); }
  std::size_t size() const noexcept { return rules.size(); }

  friend auto operator<=>(const Reduction&, const Reduction&) = default;
};

inline std::set<Label> reduction_domain(const Reduction& phi) {
  std::set<Label> out;
  for (const ReductionRule& r : phi.rules) {
    out.merge(r.domain());
  }
  return out;
}

// "sdr(5,3); spr(-7); snr(2)": semicolon-separated tokens in application
// order. Inverse of render.
inline std::string render(const Reduction& phi) {
  std::string out;
  for (const ReductionRule& r : phi.rules) {
    if (!out.empty()) out += "; ";
    out += render(r);
  }
  return out;
}

inline Reduction parse_reduction(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_pointer_token = [&](std::string_view tok) {
    const PointerString ps = parse_pointer_string(tok);
    if (ps.size() != 1) throw MalformedToken("expected one pointer, got \"" + std::string(tok) + "\"");
    return ps.front();
  };

  Reduction out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    std::string_view piece = text.substr(
        start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    piece = trim(piece);
    if (!piece.empty()) {
      const std::size_t open = piece.find('(');
      if (open == std::string_view::npos || piece.back() != ')') {
        throw MalformedToken("malformed rule token \"" + std::string(piece) + "\"");
      }
      const std::string_view name = trim(piece.substr(0, open));
      const std::string_view args = piece.substr(open + 1, piece.size() - open - 2);
      const std::size_t comma = args.find(',');
      if (name == "snr" || name == "spr") {
        if (comma != std::string_view::npos) {
          throw MalformedToken(std::string(name) + " takes one pointer: \"" +
                               std::string(piece) + "\"");
        }
        const Pointer p = parse_pointer_token(args);
        out.rules.push_back(name == "snr" ? ReductionRule::snr(p)
                                          : ReductionRule::spr(p));
      } else if (name == "sdr") {
        if (comma == std::string_view::npos) {
          throw MalformedToken("sdr takes two pointers: \"" + std::string(piece) + "\"");
        }
        out.rules.push_back(ReductionRule::sdr(
            parse_pointer_token(args.substr(0, comma)),
            parse_pointer_token(args.substr(comma + 1))));
      } else {
        throw MalformedToken("unknown rule \"" + std::string(name) + "\"");
      }
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

inline bool rule_applicable(const LegalString& u, const ReductionRule& r) {
  switch (r.kind) {
    case RuleKind::Snr: {
      const auto occ = occurrence_pair(u, r.first.label);
      return occ && occ->second == occ->first + 1 && u[occ->first] == r.first &&
             u[occ->second] == r.first;
    }
    case RuleKind::Spr: {
      const auto occ = occurrence_pair(u, r.first.label);
      return occ && u[occ->first] == r.first && u[occ->second] == bar(r.first);
    }
    case RuleKind::Sdr: {
      const auto po = occurrence_pair(u, r.first.label);
      const auto qo = occurrence_pair(u, r.second.label);
      return po && qo && u[po->first] == r.first && u[po->second] == r.first &&
             u[qo->first] == r.second && u[qo->second] == r.second &&
             po->first < qo->first && qo->first < po->second &&
             po->second < qo->second;
    }
  }
  return false;
}

inline LegalString apply_rule(const LegalString& u, const ReductionRule& r) {
  if (!rule_applicable(u, r)) {
    throw NotApplicable(render(r), render(u));
  }
  const PointerString& s = u.items();
  auto seg = [&](std::size_t from, std::size_t to) {  // [from, to)
    return PointerString(s.begin() + static_cast<std::ptrdiff_t>(from),
                         s.begin() + static_cast<std::ptrdiff_t>(to));
  };
  auto append = [](PointerString& dst, const PointerString& src) {
    dst.insert(dst.end(), src.begin(), src.end());
  };
  PointerString out;
  out.reserve(s.size());
  switch (r.kind) {
    case RuleKind::Snr: {
      // u1 p p u2 -> u1 u2
      const auto [i, j] = *occurrence_pair(u, r.first.label);
      append(out, seg(0, i));
      append(out, seg(j + 1, s.size()));
      break;
    }
    case RuleKind::Spr: {
      // u1 p u2 bar(p) u3 -> u1 inverse(u2) u3
      const auto [i, j] = *occurrence_pair(u, r.first.label);
      append(out, seg(0, i));
      append(out, inverse(seg(i + 1, j)));
      append(out, seg(j + 1, s.size()));
      break;
    }
    case RuleKind::Sdr: {
      // u1 p u2 q u3 p u4 q u5 -> u1 u4 u3 u2 u5
      const auto [i1, i2] = *occurrence_pair(u, r.first.label);
      const auto [j1, j2] = *occurrence_pair(u, r.second.label);
      append(out, seg(0, i1));
      append(out, seg(i2 + 1, j2));
      append(out, seg(j1 + 1, i2));
      append(out, seg(i1 + 1, j1));
      append(out, seg(j2 + 1, s.size()));
      break;
    }
  }
  return LegalString(std::move(out));
}

// Left-to-right fold of apply_rule; reports the 0-based index of the first
// failing rule.
inline LegalString apply_reduction(const LegalString& u, const Reduction& phi) {
  LegalString v = u;
  for (std::size_t k = 0; k < phi.rules.size(); ++k) {
    if (!rule_applicable(v, phi.rules[k])) {
      throw NotApplicable(render(phi.rules[k]), render(v), k);
    }
    v = apply_rule(v, phi.rules[k]);
  }
  return v;
}

inline bool reduction_applicable(const LegalString& u, const Reduction& phi) {
  LegalString v = u;
  for (const ReductionRule& r : phi.rules) {
    if (!rule_applicable(v, r)) return false;
    v = apply_rule(v, r);
  }
  return true;
}

// The complete finite set of applicable rule instances.
inline std::set<ReductionRule> applicable_rules(const LegalString& u) {
  std::set<ReductionRule> out;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    if (u[i] == u[i + 1]) out.insert(ReductionRule::snr(u[i]));
  }
  const std::set<Label> dom = domain(u);
  for (Label l : dom) {
    const auto [i, j] = *occurrence_pair(u, l);
    if (u[j] == bar(u[i])) out.insert(ReductionRule::spr(u[i]));
  }
  for (Label a : dom) {
    const auto [i1, i2] = *occurrence_pair(u, a);
    if (u[i1] != u[i2]) continue;
    for (Label b : dom) {
      if (a == b) continue;
      const auto [j1, j2] = *occurrence_pair(u, b);
      if (u[j1] == u[j2] && i1 < j1 && j1 < i2 && i2 < j2) {
        out.insert(ReductionRule::sdr(u[i1], u[j1]));
      }
    }
  }
  return out;
}

// Deterministic greedy search: at each step the smallest applicable rule
// (kind rank snr < spr < sdr, then pointer order) is applied. Always reaches
// the empty string since every non-empty legal string admits a rule and each
// application shrinks the domain.
inline Reduction find_successful_reduction(const LegalString& u) {
  Reduction out;
  LegalString v = u;
  while (!v.empty()) {
    const std::set<ReductionRule> rules = applicable_rules(v);
    const ReductionRule& chosen = *rules.begin();
    out.rules.push_back(chosen);
    v = apply_rule(v, chosen);
  }
  return out;
}

struct EnumerationResult {
  std::vector<Reduction> reductions;
  bool truncated = false;
};

namespace detail {

inline bool enumerate_rec(const LegalString& u, std::vector<ReductionRule>& prefix,
                          std::vector<Reduction>& out, std::size_t cap) {
  if (out.size() > cap) return false;
  if (u.empty()) {
    out.push_back(Reduction{prefix});
    return out.size() <= cap;
  }
  for (const ReductionRule& r : applicable_rules(u)) {
    prefix.push_back(r);
    const bool keep_going = enumerate_rec(apply_rule(u, r), prefix, out, cap);
    prefix.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace detail

// Every successful reduction of u, as rule sequences in application order
// (exhaustive depth-first search, rules tried in their structural order at
// each step). With a limit, at most `limit` reductions are returned and
// `truncated` marks that more exist. Exponential; intended for small domains.
inline EnumerationResult enumerate_successful_reductions(
    const LegalString& u, std::optional<std::size_t> limit = std::nullopt) {
  EnumerationResult result;
  std::vector<ReductionRule> prefix;
  const std::size_t cap = limit ? *limit : std::numeric_limits<std::size_t>::max() - 1;
  detail::enumerate_rec(u, prefix, result.reductions, cap);
  if (result.reductions.size() > cap) {
    result.reductions.resize(cap);
    result.truncated = true;
  }
  return result;
}

// Stable partition of phi with all non-snr rules first and the snr tail
// last, each class keeping its original relative order. Moving an snr past a
// positive/double rule can invert the string segment holding its adjacent
// pair (e.g. 2 2 becomes -2 -2), so snr polarities are renormalized against
// the string during replay; labels and order are preserved.
inline Reduction postpone_snr(const LegalString& u, const Reduction& phi) {
  {
    LegalString v = u;  // applicability gate on the original sequence
    for (std::size_t k = 0; k < phi.rules.size(); ++k) {
      if (!rule_applicable(v, phi.rules[k])) {
        throw NotApplicable(render(phi.rules[k]), render(v), k);
      }
      v = apply_rule(v, phi.rules[k]);
    }
  }
  std::vector<ReductionRule> reordered;
  reordered.reserve(phi.rules.size());
  for (const ReductionRule& r : phi.rules) {
    if (r.kind != RuleKind::Snr) reordered.push_back(r);
  }
  for (const ReductionRule& r : phi.rules) {
    if (r.kind == RuleKind::Snr) reordered.push_back(r);
  }
  Reduction out;
  LegalString v = u;
  for (std::size_t k = 0; k < reordered.size(); ++k) {
    ReductionRule r = reordered[k];
    if (r.kind == RuleKind::Snr && !rule_applicable(v, r)) {
      const ReductionRule flipped = ReductionRule::snr(bar(r.first));
      if (rule_applicable(v, flipped)) r = flipped;
    }
    if (!rule_applicable(v, r)) {
      throw NotApplicable(render(r), render(v), k);
    }
    v = apply_rule(v, r);
    out.rules.push_back(r);
  }
  return out;
}

}  // namespace sprs
