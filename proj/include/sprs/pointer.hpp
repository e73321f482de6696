#pragma once

// Pointers and legal strings, the string domain of the string pointer
// reduction system. A legal string contains every occurring label exactly
// twice, counting both polarities. External text format: whitespace- or
// comma-separated integer tokens with a leading minus marking a barred
// pointer, e.g. "5 4 3 7 2 5 6 2 -7 3 4 6".

#include <charconv>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sprs {

using Label = int;

// A pointer: a label (integer >= 2) plus a polarity.
struct Pointer {
  Label label = 2;
  bool barred = false;

  friend auto operator<=>(const Pointer&, const Pointer&) = default;
};

// Polarity flip; an involution.
inline Pointer bar(Pointer p) { return Pointer{p.label, !p.barred}; }

// Strings over the pointer alphabet, not necessarily legal. Used for the
// substrings u1..u5 in rule templates.
using PointerString = std::vector<Pointer>;

// x1..xn -> bar(xn) .. bar(x1)
inline PointerString inverse(const PointerString& u) {
  PointerString out;
  out.reserve(u.size());
  for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(bar(*it));
  return out;
}

// Unbarred variants of the occurring pointers.
inline std::set<Label> domain(const PointerString& u) {
  std::set<Label> out;
  for (const Pointer& p : u) out.insert(p.label);
  return out;
}

inline std::string render(const Pointer& p) {
  return (p.barred ? "-" : "") + std::to_string(p.label);
}

inline std::string render(const PointerString& u) {
  std::string out;
  for (const Pointer& p : u) {
    if (!out.empty()) out += ' ';
    out += render(p);
  }
  return out;
}

inline PointerString parse_pointer_string(std::string_view text) {
  PointerString out;
  auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v' || c == ',';
  };
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !is_sep(text[j])) ++j;
    const std::string_view token = text.substr(i, j - i);
    std::string_view digits = token;
    bool barred = false;
    if (!digits.empty() && digits.front() == '-') {
      barred = true;
      digits.remove_prefix(1);
    }
    int value = 0;
    const auto [last, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() ||
        last != digits.data() + digits.size()) {
      throw MalformedToken("malformed pointer token \"" + std::string(token) +
                           "\"");
    }
    if (value < 2) {
      throw MalformedToken("pointer label must be >= 2, got \"" +
                           std::string(token) + "\"");
    }
    out.push_back(Pointer{value, barred});
    i = j;
  }
  return out;
}

// A pointer string in which every occurring label has exactly two
// occurrences, counting both polarities. Immutable after construction.
class LegalString {
 public:
  LegalString() = default;
  explicit LegalString(PointerString items) : items_(std::move(items)) {
    check_legal(items_);
  }

  const PointerString& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Pointer& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  friend auto operator<=>(const LegalString&, const LegalString&) = default;

 private:
  static void check_legal(const PointerString& items) {
    std::map<Label, int> counts;
    for (const Pointer& p : items) {
      if (p.label < 2) {
        throw NotLegal("invalid label " + std::to_string(p.label) +
                       " (labels start at 2)");
      }
      ++counts[p.label];
    }
    for (const auto& [label, count] : counts) {
      if (count != 2) {
        throw NotLegal("label " + std::to_string(label) + " occurs " +
                       std::to_string(count) + " times, expected 2");
      }
    }
  }

  PointerString items_;
};

inline LegalString parse_legal_string(std::string_view text) {
  return LegalString(parse_pointer_string(text));
}

inline std::string render(const LegalString& u) { return render(u.items()); }

inline std::set<Label> domain(const LegalString& u) {
  return domain(u.items());
}

// Positions (first, second) of the two occurrences of `label`, either
// polarity; nullopt when the label is absent.
inline std::optional<std::pair<std::size_t, std::size_t>> occurrence_pair(
    const LegalString& u, Label label) {
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].label != label) continue;
    if (!first) {
      first = i;
    } else {
      return std::make_pair(*first, i);
    }
  }
  return std::nullopt;
}

// The substring from the first to the second occurrence of `label`,
// inclusive.
inline PointerString p_interval(const LegalString& u, Label label) {
  const auto occ = occurrence_pair(u, label);
  if (!occ) {
    throw LabelAbsent("label " + std::to_string(label) +
                      " does not occur in \"" + render(u) + "\"");
  }
  return PointerString(u.items().begin() + static_cast<std::ptrdiff_t>(occ->first),
                       u.items().begin() + static_cast<std::ptrdiff_t>(occ->second) + 1);
}

// True iff each label occurs inside the other's interval.
inline bool overlap(const LegalString& u, Label p, Label q) {
  if (p == q) {
    throw SameLabel("overlap needs two distinct labels, got " +
                    std::to_string(p) + " twice");
  }
  const std::set<Label> ip = domain(p_interval(u, p));
  const std::set<Label> iq = domain(p_interval(u, q));
  return ip.count(q) != 0 && iq.count(p) != 0;
}

// True iff the two occurrences of `label` have opposite polarity.
inline bool is_positive(const LegalString& u, Label label) {
  const auto occ = occurrence_pair(u, label);
  if (!occ) {
    throw LabelAbsent("label " + std::to_string(label) +
                      " does not occur in \"" + render(u) + "\"");
  }
  return u[occ->first].barred != u[occ->second].barred;
}

// rem_D: erase all occurrences (either polarity) of the labels in D.
// Labels absent from u are ignored.
inline LegalString remove_pointers(const LegalString& u,
                                   const std::set<Label>& d) {
  PointerString kept;
  kept.reserve(u.size());
  for (const Pointer& p : u) {
    if (d.count(p.label) == 0) kept.push_back(p);
  }
  return LegalString(std::move(kept));
}

}  // namespace sprs
