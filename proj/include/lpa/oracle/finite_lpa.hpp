#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lpa/cycles.hpp"
#include "lpa/graph.hpp"
#include "lpa/oracle/concrete_ideal.hpp"
#include "lpa/ring.hpp"

namespace lpa::oracle {

/// One of the parallel edges of a bundle.
struct Edge {
  std::size_t bundle;
  std::uint32_t copy;
  std::size_t source;
  std::size_t target;
};

struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> edges;

  auto operator<=>(const Path&) const = default;
};

/// L_R(E) for a finite acyclic graph without ω-bundles over ℤ/n, with basis
/// the symbols αβ* where α and β end at the same sink.
class FiniteLPA {
 public:
  static constexpr std::size_t kMaxDimension = 4096;

  FiniteLPA(Graph g, const RingSpec& r) : graph_(std::move(g)) {
    if (!r.is_finite()) throw DomainError("out-of-scope", "the finite algebra oracle needs a finite ring");
    if (r.modulus() > (mpz_class(1) << 30)) throw DomainError("oracle-too-large", "ring modulus too large");
    n_ = r.modulus().get_si();
    out_edges_.resize(graph_.vertex_count());
    for (std::size_t b = 0; b < graph_.bundle_count(); ++b) {
      const Bundle& bd = graph_.bundle(b);
      if (bd.multiplicity.is_omega()) throw DomainError("out-of-scope", "the finite algebra oracle needs finite bundles");
      for (std::uint32_t k = 0; k < bd.multiplicity.count(); ++k) {
        out_edges_[bd.source].push_back(edges_.size());
        edges_.push_back({b, k, bd.source, bd.target});
      }
    }
    if (!cycles(graph_).empty()) throw DomainError("out-of-scope", "the finite algebra oracle needs an acyclic graph");

    std::map<std::size_t, std::vector<Path>> to_sink;
    for (std::size_t v = 0; v < graph_.vertex_count(); ++v) collect_paths(Path{v, {}}, to_sink);
    for (const auto& [sink, paths] : to_sink) {
      if (basis_.size() + paths.size() * paths.size() > kMaxDimension) {
        throw DomainError("oracle-too-large", "algebra dimension exceeds " + std::to_string(kMaxDimension));
      }
      for (const Path& a : paths) {
        for (const Path& b : paths) {
          index_.emplace(std::make_pair(a, b), basis_.size());
          basis_.emplace_back(a, b);
        }
      }
    }
    right_.resize(basis_.size());
    left_.resize(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        Element prod = symbol_product(basis_[i], basis_[j]);
        for (std::size_t k = 0; k < prod.size(); ++k) {
          if (prod[k] == 0) continue;
          right_[i].push_back({j, k, prod[k]});
          left_[j].push_back({i, k, prod[k]});
        }
      }
    }
  }

  const Graph& graph() const { return graph_; }
  std::int64_t modulus() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::pair<Path, Path>& symbol(std::size_t i) const { return basis_.at(i); }

  Element zero() const { return Element(dim(), 0); }
  Element basis_element(std::size_t i) const {
    Element e = zero();
    e.at(i) = 1 % n_;
    return e;
  }

  /// αβ* for any paths with a common range, rewritten by (CK2) into the basis.
  Element symbol_element(const Path& a, const Path& b) const {
    Element out = zero();
    expand(a, b, 1, out);
    return out;
  }
  Element vertex(std::size_t v) const { return symbol_element(Path{v, {}}, Path{v, {}}); }
  Element edge(std::size_t e) const {
    const Edge& ed = edges_.at(e);
    return symbol_element(Path{ed.source, {e}}, Path{ed.target, {}});
  }
  Element ghost(std::size_t e) const {
    const Edge& ed = edges_.at(e);
    return symbol_element(Path{ed.target, {}}, Path{ed.source, {e}});
  }
  const std::vector<std::size_t>& edges_from(std::size_t v) const { return out_edges_.at(v); }

  Element add(const Element& a, const Element& b) const {
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod(a[i] + b[i], n_);
    return out;
  }
  Element scale(const Element& a, std::int64_t r) const {
    Element out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod(mod(r, n_) * a[i], n_);
    return out;
  }

  Element multiply(const Element& a, const Element& b) const {
    Element out = zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (const Term& t : right_[i]) {
        if (b[t.other] != 0) out[t.result] = mod(out[t.result] + a[i] * b[t.other] % n_ * t.coeff, n_);
      }
    }
    return out;
  }

  /// b_i · x and x · b_j without materializing the basis element.
  Element left_basis(std::size_t i, const Element& x) const {
    Element out = zero();
    for (const Term& t : right_[i]) {
      if (x[t.other] != 0) out[t.result] = mod(out[t.result] + x[t.other] * t.coeff, n_);
    }
    return out;
  }
  Element right_basis(const Element& x, std::size_t j) const {
    Element out = zero();
    for (const Term& t : left_[j]) {
      if (x[t.other] != 0) out[t.result] = mod(out[t.result] + x[t.other] * t.coeff, n_);
    }
    return out;
  }

  /// The two-sided ideal generated by xs. The algebra is unital, so this is
  /// the span of all b x b'.
  ConcreteIdeal ideal(const std::vector<Element>& xs) const {
    ConcreteIdeal out(dim(), n_);
    for (const Element& x : xs) {
      for (std::size_t i = 0; i < dim(); ++i) {
        Element y = left_basis(i, x);
        if (is_zero(y)) continue;
        for (std::size_t j = 0; j < dim(); ++j) out.insert(right_basis(y, j));
      }
    }
    return out;
  }

  bool is_ideal(const ConcreteIdeal& m) const {
    for (const Element& x : m.generators()) {
      for (std::size_t i = 0; i < dim(); ++i) {
        if (!m.contains(left_basis(i, x)) || !m.contains(right_basis(x, i))) return false;
      }
    }
    return true;
  }

  ConcreteIdeal product(const ConcreteIdeal& a, const ConcreteIdeal& b) const {
    ConcreteIdeal out(dim(), n_);
    for (const Element& x : a.generators()) {
      for (const Element& y : b.generators()) out.insert(multiply(x, y));
    }
    return out;
  }

  std::string path_label(const Path& p) const {
    if (p.edges.empty()) return graph_.vertex_id(p.start);
    std::string out;
    for (std::size_t e : p.edges) {
      if (!out.empty()) out += ".";
      out += edge_label(e);
    }
    return out;
  }
  std::string edge_label(std::size_t e) const {
    const Edge& ed = edges_.at(e);
    const Bundle& b = graph_.bundle(ed.bundle);
    if (b.multiplicity.count() == 1) return b.id;
    return b.id + "#" + std::to_string(ed.copy + 1);
  }
  std::string symbol_label(std::size_t i) const {
    const auto& [a, b] = basis_.at(i);
    if (a == b && a.edges.empty()) return path_label(a);
    std::string right = b.edges.empty() ? std::string() : (b.edges.size() == 1 ? path_label(b) + "*" : "(" + path_label(b) + ")*");
    if (a.edges.empty()) return right;
    return right.empty() ? path_label(a) : path_label(a) + " " + right;
  }
  std::string element_to_string(const Element& x) const {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += (x[i] == 1 ? std::string() : std::to_string(x[i]) + "*") + symbol_label(i);
    }
    return out.empty() ? "0" : out;
  }

  static bool is_zero(const Element& x) {
    for (auto c : x) {
      if (c != 0) return false;
    }
    return true;
  }

 private:
  struct Term {
    std::size_t other;
    std::size_t result;
    std::int64_t coeff;
  };

  std::size_t range(const Path& p) const { return p.edges.empty() ? p.start : edges_[p.edges.back()].target; }

  void collect_paths(const Path& p, std::map<std::size_t, std::vector<Path>>& out) const {
    std::size_t end = range(p);
    if (graph_.is_sink(end)) {
      out[end].push_back(p);
      return;
    }
    for (std::size_t e : out_edges_[end]) {
      Path q = p;
      q.edges.push_back(e);
      collect_paths(q, out);
    }
  }

  void expand(const Path& a, const Path& b, std::int64_t c, Element& out) const {
    std::size_t end = range(a);
    if (end != range(b)) throw DomainError("bad-symbol", "symbol paths must share their range");
    if (graph_.is_sink(end)) {
      std::size_t k = index_.at({a, b});
      out[k] = mod(out[k] + c, n_);
      return;
    }
    for (std::size_t e : out_edges_[end]) {
      Path a2 = a;
      Path b2 = b;
      a2.edges.push_back(e);
      b2.edges.push_back(e);
      expand(a2, b2, c, out);
    }
  }

  static bool is_prefix(const Path& p, const Path& q) {
    return p.start == q.start && p.edges.size() <= q.edges.size() &&
           std::equal(p.edges.begin(), p.edges.end(), q.edges.begin());
  }

  /// αβ*·γδ*: αγ̂δ* if γ = βγ̂, α(δβ̂)* if β = γβ̂, otherwise 0.
  Element symbol_product(const std::pair<Path, Path>& x, const std::pair<Path, Path>& y) const {
    const auto& [alpha, beta] = x;
    const auto& [gamma, delta] = y;
    if (is_prefix(beta, gamma)) {
      Path a = alpha;
      a.edges.insert(a.edges.end(), gamma.edges.begin() + static_cast<std::ptrdiff_t>(beta.edges.size()), gamma.edges.end());
      return symbol_element(a, delta);
    }
    if (is_prefix(gamma, beta)) {
      Path d = delta;
      d.edges.insert(d.edges.end(), beta.edges.begin() + static_cast<std::ptrdiff_t>(gamma.edges.size()), beta.edges.end());
      return symbol_element(alpha, d);
    }
    return zero();
  }

  Graph graph_;
  std::int64_t n_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_edges_;
  std::vector<std::pair<Path, Path>> basis_;
  std::map<std::pair<Path, Path>, std::size_t> index_;
  std::vector<std::vector<Term>> right_;
  std::vector<std::vector<Term>> left_;
};

inline Element lpa_multiply(const FiniteLPA& alg, const Element& a, const Element& b) { return alg.multiply(a, b); }

/// Every two-sided ideal of the algebra. The symbols αα* are orthogonal
/// idempotents summing to 1 whose corners αα*·A·ββ* lie in R·αβ*, so each
/// ideal is the sum of ideals generated by scaled basis symbols; these are
/// closed under pairwise sums until nothing new appears.
inline std::vector<ConcreteIdeal> enumerate_concrete_ideals(const FiniteLPA& alg,
                                                            std::size_t max_seeds = 2'000'000) {
  const std::int64_t n = alg.modulus();
  std::vector<std::int64_t> scalars;
  for (std::int64_t r = 1; r < n; ++r) {
    if (n % r == 0) scalars.push_back(r);
  }
  if (alg.dim() * scalars.size() > max_seeds) {
    throw DomainError("oracle-too-large", "too many closure seeds");
  }
  std::vector<ConcreteIdeal> out;
  std::map<std::vector<std::int64_t>, std::size_t> seen;
  auto add = [&](ConcreteIdeal i) {
    auto key = i.key();
    if (seen.contains(key)) return false;
    seen.emplace(std::move(key), out.size());
    out.push_back(std::move(i));
    return true;
  };
  add(ConcreteIdeal(alg.dim(), n));
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::int64_t r : scalars) add(alg.ideal({alg.scale(alg.basis_element(i), r)}));
  }
  for (std::size_t done = 0; done < out.size();) {
    std::size_t end = out.size();
    for (std::size_t a = done; a < end; ++a) {
      for (std::size_t b = 0; b < a; ++b) add(ConcreteIdeal::sum(out[a], out[b]));
    }
    done = end;
  }
  return out;
}

}  // namespace lpa::oracle
