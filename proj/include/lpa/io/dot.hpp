#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lpa::io {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

/// Hasse diagram: `labels[i]` per node, `covers` as (lower, upper), drawn bottom-up.
inline std::string hasse_dot(const std::string& name, const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::string out = "digraph \"" + dot_escape(name) + "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(labels[i]) + "\"];\n";
  }
  for (const auto& [lo, hi] : covers) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  return out + "}\n";
}

/// Covering pairs of a finite order given by `leq(i, j)`.
template <class Leq>
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(std::size_t n, Leq&& leq) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k) {
        if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
      }
      if (direct) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace lpa::io
