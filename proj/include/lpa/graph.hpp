#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {

/// A set of vertex indices of one graph, stored as a 64-bit mask.
class VertexSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(std::size_t v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first(std::size_t n) {
    return VertexSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t v) const { return v < kCapacity && ((bits_ >> v) & 1U) != 0; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr void insert(std::size_t v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(std::size_t v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const VertexSet&) const = default;

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Number of parallel edges in a bundle: a positive integer or ω.
class Multiplicity {
 public:
  static constexpr Multiplicity finite(std::uint32_t k) {
    if (k == 0) throw DomainError("bad-multiplicity", "bundle multiplicity must be positive");
    return Multiplicity(k);
  }
  static constexpr Multiplicity omega() { return Multiplicity(0); }

  constexpr bool is_omega() const { return count_ == 0; }
  /// Only meaningful when !is_omega().
  constexpr std::uint32_t count() const { return count_; }

  constexpr bool operator==(const Multiplicity&) const = default;

 private:
  constexpr explicit Multiplicity(std::uint32_t k) : count_(k) {}
  std::uint32_t count_;
};

struct Bundle {
  std::string id;
  std::size_t source;
  std::size_t target;
  Multiplicity multiplicity;
};

/// Finite presentation of a directed graph. Parallel edges are grouped into
/// bundles; an ω-bundle stands for countably many parallel edges, which is
/// how infinite emitters are expressed.
class Graph {
 public:
  Graph() = default;

  std::size_t add_vertex(std::string id) {
    if (id.empty()) throw DomainError("empty-id", "vertex id must be non-empty");
    if (vertex_index_.contains(id) || bundle_index_.contains(id)) {
      throw DomainError("duplicate-id", "duplicate id '" + id + "'");
    }
    if (vertices_.size() >= VertexSet::kCapacity) {
      throw DomainError("too-many-vertices", "graphs are limited to 64 vertices");
    }
    vertex_index_.emplace(id, vertices_.size());
    vertices_.push_back(std::move(id));
    out_.emplace_back();
    in_.emplace_back();
    return vertices_.size() - 1;
  }

  std::size_t add_bundle(std::string id, std::string_view source, std::string_view target,
                         Multiplicity m = Multiplicity::finite(1)) {
    return add_bundle(std::move(id), require_vertex(source), require_vertex(target), m);
  }

  std::size_t add_bundle(std::string id, std::size_t source, std::size_t target,
                         Multiplicity m = Multiplicity::finite(1)) {
    if (id.empty()) throw DomainError("empty-id", "bundle id must be non-empty");
    if (vertex_index_.contains(id) || bundle_index_.contains(id)) {
      throw DomainError("duplicate-id", "duplicate id '" + id + "'");
    }
    if (source >= vertices_.size() || target >= vertices_.size()) {
      throw DomainError("unknown-vertex", "bundle '" + id + "' refers to an unknown vertex");
    }
    if (!m.is_omega() && m.count() == 0) {
      throw DomainError("bad-multiplicity", "bundle '" + id + "' has multiplicity 0");
    }
    bundle_index_.emplace(id, bundles_.size());
    bundles_.push_back(Bundle{std::move(id), source, target, m});
    out_[source].push_back(bundles_.size() - 1);
    in_[target].push_back(bundles_.size() - 1);
    return bundles_.size() - 1;
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t bundle_count() const { return bundles_.size(); }
  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Bundle>& bundles() const { return bundles_; }
  const Bundle& bundle(std::size_t b) const { return bundles_.at(b); }

  std::optional<std::size_t> find_vertex(std::string_view id) const {
    auto it = vertex_index_.find(std::string(id));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_bundle(std::string_view id) const {
    auto it = bundle_index_.find(std::string(id));
    if (it == bundle_index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require_vertex(std::string_view id) const {
    if (auto v = find_vertex(id)) return *v;
    throw DomainError("unknown-vertex", "unknown vertex '" + std::string(id) + "'");
  }

  std::span<const std::size_t> out_bundles(std::size_t v) const { return out_.at(v); }
  std::span<const std::size_t> in_bundles(std::size_t v) const { return in_.at(v); }

  VertexSet all_vertices() const { return VertexSet::first(vertices_.size()); }

  bool is_sink(std::size_t v) const { return out_.at(v).empty(); }
  bool is_infinite_emitter(std::size_t v) const {
    for (std::size_t b : out_.at(v)) {
      if (bundles_[b].multiplicity.is_omega()) return true;
    }
    return false;
  }
  bool is_regular(std::size_t v) const { return !is_sink(v) && !is_infinite_emitter(v); }

  /// r(s⁻¹(v)).
  VertexSet successors(std::size_t v) const {
    VertexSet out;
    for (std::size_t b : out_.at(v)) out.insert(bundles_[b].target);
    return out;
  }

  VertexSet parse_set(std::span<const std::string> ids) const {
    VertexSet out;
    for (const auto& id : ids) out.insert(require_vertex(id));
    return out;
  }

  /// "{u,v}" in vertex declaration order.
  std::string label(VertexSet s) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t v : s.members()) {
      if (!first) out += ",";
      out += vertices_.at(v);
      first = false;
    }
    return out + "}";
  }

  void check_subset(VertexSet s) const {
    if (!s.subset_of(all_vertices())) {
      throw DomainError("unknown-vertex", "vertex set refers to vertices outside the graph");
    }
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Bundle> bundles_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> bundle_index_;
};

}  // namespace lpa
