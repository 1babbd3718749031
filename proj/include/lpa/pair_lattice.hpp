#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpa/closure.hpp"

namespace lpa {

/// (H, S) with H hereditary saturated and S a set of breaking vertices for H.
struct AdmissiblePair {
  VertexSet H;
  VertexSet S;

  auto operator<=>(const AdmissiblePair&) const = default;
};

inline bool is_admissible(const Graph& g, const AdmissiblePair& p) {
  return is_hereditary_saturated(g, p.H) && p.S.subset_of(breaking_vertices(g, p.H));
}

/// (H₁,S₁) ≤ (H₂,S₂) iff H₁ ⊆ H₂ and S₁ ⊆ H₂ ∪ S₂.
inline bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b) {
  return a.H.subset_of(b.H) && a.S.subset_of(b.H | b.S);
}

inline AdmissiblePair pair_meet(const AdmissiblePair& a, const AdmissiblePair& b) {
  return {a.H & b.H, (a.S & b.S) | ((a.S | b.S) & (a.H | b.H))};
}

/// Supremum of an arbitrary finite family; the empty family yields (∅,∅).
inline AdmissiblePair pair_sup(const Graph& g, std::span<const AdmissiblePair> family) {
  VertexSet h, s;
  for (const auto& p : family) {
    h |= p.H;
    s |= p.S;
  }
  VertexSet sat = s_saturation(g, h, s);
  return {sat, s - sat};
}

inline AdmissiblePair pair_join(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b) {
  const AdmissiblePair both[] = {a, b};
  return pair_sup(g, both);
}

inline std::string pair_label(const Graph& g, const AdmissiblePair& p) {
  std::string h = g.label(p.H);
  if (p.S.empty()) return h;
  h.pop_back();
  std::string s = g.label(p.S);
  return h + "|" + s.substr(1);
}

/// The finite lattice of all admissible pairs of a graph, with order, meet
/// and join tabulated by index. Index 0 is (∅,∅); the last index is (E⁰,∅).
class PairLattice {
 public:
  /// Enumeration visits every vertex subset, so it is capped.
  static constexpr std::size_t kMaxVertices = 20;

  explicit PairLattice(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kMaxVertices) {
      throw DomainError("lattice-too-large",
                        "admissible-pair enumeration is limited to 20 vertices");
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      VertexSet h(bits);
      if (!is_hereditary_saturated(g, h)) continue;
      VertexSet b = detail::breaking_vertices_unchecked(g, h);
      // all subsets of b
      std::uint64_t mask = b.bits();
      for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
        pairs_.push_back({h, VertexSet(sub)});
        if (sub == 0) break;
      }
    }
    std::sort(pairs_.begin(), pairs_.end(), [](const AdmissiblePair& a, const AdmissiblePair& b) {
      auto ka = a.H.size() + a.S.size();
      auto kb = b.H.size() + b.S.size();
      if (ka != kb) return ka < kb;
      return a < b;
    });
    for (std::size_t i = 0; i < pairs_.size(); ++i) index_.emplace(pairs_[i], i);

    const std::size_t m = pairs_.size();
    leq_.assign(m * m, false);
    join_.assign(m * m, 0);
    meet_.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        leq_[i * m + j] = pair_leq(pairs_[i], pairs_[j]);
        join_[i * m + j] = index_.at(pair_join(g, pairs_[i], pairs_[j]));
        meet_[i * m + j] = index_.at(pair_meet(pairs_[i], pairs_[j]));
      }
    }
    for (std::size_t i = 0; i < m; ++i) labels_.push_back(pair_label(g, pairs_[i]));
  }

  std::size_t size() const { return pairs_.size(); }
  const std::vector<AdmissiblePair>& pairs() const { return pairs_; }
  const AdmissiblePair& operator[](std::size_t i) const { return pairs_.at(i); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return pairs_.size() - 1; }

  std::optional<std::size_t> index_of(const AdmissiblePair& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require_index(const AdmissiblePair& p) const {
    if (auto i = index_of(p)) return *i;
    throw DomainError("not-admissible", "pair is not an admissible pair of this graph");
  }

  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }

  std::size_t sup(std::span<const std::size_t> family) const {
    std::size_t acc = bottom();
    for (std::size_t i : family) acc = join(acc, i);
    return acc;
  }

  /// Covering relation of the Hasse diagram: (lower, upper).
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (i == j || !leq(i, j)) continue;
        bool direct = true;
        for (std::size_t k = 0; k < size() && direct; ++k) {
          if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
        }
        if (direct) out.emplace_back(i, j);
      }
    }
    return out;
  }

 private:
  std::vector<AdmissiblePair> pairs_;
  std::vector<std::string> labels_;
  std::map<AdmissiblePair, std::size_t> index_;
  std::vector<bool> leq_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
};

inline PairLattice pair_lattice(const Graph& g) { return PairLattice(g); }

}  // namespace lpa
