#pragma once

// Exhaustive legal-string universe: every legal string with exactly n
// labels, the labels fixed to 2..n+1 (all interleavings of the doubled
// multiset, times all four polarity patterns per label).

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pointer.hpp"

namespace sprs {

// Calls fn(const LegalString&) once per string; no duplicates.
template <class Fn>
void for_each_legal_string(int n_labels, Fn&& fn) {
  std::vector<Label> pattern;
  for (int l = 2; l <= n_labels + 1; ++l) {
    pattern.push_back(l);
    pattern.push_back(l);
  }
  std::sort(pattern.begin(), pattern.end());
  do {
    // Positions of each label's two occurrences, for polarity assignment.
    std::vector<std::pair<std::size_t, std::size_t>> slots(
        static_cast<std::size_t>(n_labels));
    std::vector<bool> seen(static_cast<std::size_t>(n_labels), false);
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      const std::size_t k = static_cast<std::size_t>(pattern[i] - 2);
      if (!seen[k]) {
        slots[k].first = i;
        seen[k] = true;
      } else {
        slots[k].second = i;
      }
    }
    const std::uint64_t combos = std::uint64_t{1} << (2 * n_labels);
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
      PointerString items;
      items.reserve(pattern.size());
      for (const Label l : pattern) items.push_back(Pointer{l, false});
      for (int k = 0; k < n_labels; ++k) {
        items[slots[static_cast<std::size_t>(k)].first].barred =
            (mask >> (2 * k)) & 1;
        items[slots[static_cast<std::size_t>(k)].second].barred =
            (mask >> (2 * k + 1)) & 1;
      }
      fn(LegalString(std::move(items)));
    }
  } while (std::next_permutation(pattern.begin(), pattern.end()));
}

inline std::vector<LegalString> enumerate_legal_strings(int n_labels) {
  std::vector<LegalString> out;
  for_each_legal_string(n_labels, [&](const LegalString& u) { out.push_back(u); });
  return out;
}

}  // namespace sprs
