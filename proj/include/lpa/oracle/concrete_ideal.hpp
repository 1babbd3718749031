#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lpa/error.hpp"

namespace lpa::oracle {

using Element = std::vector<std::int64_t>;

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

namespace detail {

struct ExtGcd {
  std::int64_t g, s, t;
};

/// g = s·a + t·b with g ≥ 0.
inline ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

}  // namespace detail

/// A submodule of (ℤ/n)^d, stored as the Hermite normal form of its preimage
/// in ℤ^d (a lattice containing nℤ^d) with all entries reduced mod n. Row c
/// has pivot p_c | n in column c; p_c = n means the row is n·e_c.
class Submodule {
 public:
  Submodule(std::size_t dim, std::int64_t n) : dim_(dim), n_(n), pivots_(dim, n), rows_(dim, Element(dim, 0)) {}

  std::size_t dim() const { return dim_; }
  std::int64_t modulus() const { return n_; }

  void insert(Element v) {
    for (auto& x : v) x = mod(x, n_);
    for (std::size_t c = 0; c < dim_; ++c) {
      if (v[c] == 0) continue;
      Element& r = rows_[c];
      const std::int64_t p = pivots_[c];
      auto [g, s, t] = detail::ext_gcd(p, v[c]);
      const std::int64_t pa = p / g;
      const std::int64_t xa = v[c] / g;
      s = mod(s, n_);
      t = mod(t, n_);
      for (std::size_t k = c + 1; k < dim_; ++k) {
        std::int64_t rk = r[k];
        std::int64_t vk = v[k];
        r[k] = mod(s * rk + t * vk, n_);
        v[k] = mod(mod(xa, n_) * rk - mod(pa, n_) * vk, n_);
      }
      r[c] = g % n_;
      pivots_[c] = g;
      v[c] = 0;
      reduced_ = false;
    }
  }

  bool contains(Element w) const {
    for (auto& x : w) x = mod(x, n_);
    for (std::size_t c = 0; c < dim_; ++c) {
      if (w[c] == 0) continue;
      if (w[c] % pivots_[c] != 0) return false;
      const std::int64_t q = w[c] / pivots_[c];
      for (std::size_t k = c + 1; k < dim_; ++k) w[k] = mod(w[k] - q * rows_[c][k], n_);
      w[c] = 0;
    }
    return true;
  }

  bool subset_of(const Submodule& o) const {
    for (const Element& g : generators()) {
      if (!o.contains(g)) return false;
    }
    return true;
  }

  /// Rows with a proper pivot; together with nℤ^d they span the lattice.
  std::vector<Element> generators() const {
    std::vector<Element> out;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (pivots_[c] != n_) out.push_back(rows_[c]);
    }
    return out;
  }

  bool is_zero() const {
    for (auto p : pivots_) {
      if (p != n_) return false;
    }
    return true;
  }

  /// log of the cardinality is Σ log(n/p_c); this is the exact count when it fits.
  std::uint64_t cardinality() const {
    std::uint64_t out = 1;
    for (auto p : pivots_) out *= static_cast<std::uint64_t>(n_ / p);
    return out;
  }

  /// Canonical HNF: entries above each pivot reduced into [0, p_c).
  const Submodule& reduce() const {
    if (reduced_) return *this;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (pivots_[c] == n_) continue;
      for (std::size_t i = 0; i < c; ++i) {
        if (pivots_[i] == n_) continue;
        const std::int64_t q = rows_[i][c] / pivots_[c];
        if (q == 0) continue;
        for (std::size_t k = c; k < dim_; ++k) rows_[i][k] = mod(rows_[i][k] - q * rows_[c][k], n_);
      }
    }
    reduced_ = true;
    return *this;
  }

  /// Canonical flattening, equal iff the submodules are equal.
  std::vector<std::int64_t> key() const {
    reduce();
    std::vector<std::int64_t> out(pivots_.begin(), pivots_.end());
    for (std::size_t c = 0; c < dim_; ++c) {
      if (pivots_[c] == n_) continue;
      out.insert(out.end(), rows_[c].begin() + static_cast<std::ptrdiff_t>(c) + 1, rows_[c].end());
    }
    return out;
  }

  bool operator==(const Submodule& o) const { return dim_ == o.dim_ && n_ == o.n_ && key() == o.key(); }

  static Submodule sum(const Submodule& a, const Submodule& b) {
    Submodule out = a;
    for (const Element& g : b.generators()) out.insert(g);
    return out;
  }

  /// A ∩ B from the rows of the HNF of [A A; B 0] whose pivots lie in the
  /// second block.
  static Submodule intersection(const Submodule& a, const Submodule& b) {
    const std::size_t d = a.dim_;
    Submodule big(2 * d, a.n_);
    for (const Element& g : a.generators()) {
      Element v(2 * d);
      std::copy(g.begin(), g.end(), v.begin());
      std::copy(g.begin(), g.end(), v.begin() + static_cast<std::ptrdiff_t>(d));
      big.insert(std::move(v));
    }
    for (const Element& g : b.generators()) {
      Element v(2 * d, 0);
      std::copy(g.begin(), g.end(), v.begin());
      big.insert(std::move(v));
    }
    Submodule out(d, a.n_);
    for (std::size_t c = d; c < 2 * d; ++c) {
      if (big.pivots_[c] == a.n_) continue;
      out.insert(Element(big.rows_[c].begin() + static_cast<std::ptrdiff_t>(d), big.rows_[c].end()));
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::int64_t n_;
  std::vector<std::int64_t> pivots_;
  mutable std::vector<Element> rows_;
  mutable bool reduced_ = true;
};

using ConcreteIdeal = Submodule;

}  // namespace lpa::oracle
