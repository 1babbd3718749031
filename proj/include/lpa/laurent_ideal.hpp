#pragma once

#include <string>
#include <vector>

#include "lpa/groebner.hpp"
#include "lpa/laurent_poly.hpp"
#include "lpa/ring.hpp"

namespace lpa {

namespace detail {

/// Dense univariate polynomial over a field, index = exponent.
using Dense = std::vector<Scalar>;

inline void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Scalar field_inverse(const RingSpec& r, const Scalar& a) {
  if (r.kind() == RingSpec::Kind::Rationals) return 1 / a;
  return r.normalize(Scalar(1) / a);
}

inline Dense dense_from(const RingSpec& r, const LaurentPoly& p) {
  Dense out;
  if (p.is_zero()) return out;
  const std::int64_t base = p.min_exponent();
  out.assign(static_cast<std::size_t>(p.max_exponent() - base + 1), Scalar(0));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - base)] = r.normalize(c);
  trim(out);
  return out;
}

inline LaurentPoly laurent_from(const Dense& p) {
  LaurentPoly out;
  for (std::size_t i = 0; i < p.size(); ++i) out.add_term(static_cast<std::int64_t>(i), p[i]);
  return out;
}

inline Dense monic(const RingSpec& r, Dense p) {
  trim(p);
  if (p.empty()) return p;
  Scalar inv = field_inverse(r, p.back());
  for (auto& c : p) c = r.normalize(c * inv);
  return p;
}

/// Strip the x^k factor, then make monic.
inline Dense field_normalize(const RingSpec& r, Dense p) {
  trim(p);
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
  return monic(r, std::move(p));
}

inline Dense dense_mul(const RingSpec& r, const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = r.normalize(out[i + j] + a[i] * b[j]);
  }
  trim(out);
  return out;
}

/// Remainder of a modulo nonzero b.
inline Dense dense_rem(const RingSpec& r, Dense a, const Dense& b) {
  Scalar inv = field_inverse(r, b.back());
  while (a.size() >= b.size()) {
    Scalar q = r.normalize(a.back() * inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = r.normalize(a[shift + i] - q * b[i]);
    trim(a);
  }
  return a;
}

inline Dense dense_quot(const RingSpec& r, Dense a, const Dense& b) {
  Scalar inv = field_inverse(r, b.back());
  Dense q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Scalar(0));
  while (a.size() >= b.size()) {
    Scalar c = r.normalize(a.back() * inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = r.normalize(a[shift + i] - c * b[i]);
    trim(a);
  }
  trim(q);
  return q;
}

inline Dense dense_gcd(const RingSpec& r, Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense t = dense_rem(r, a, b);
    a = std::move(b);
    b = std::move(t);
  }
  return monic(r, std::move(a));
}

inline gb::Poly lift(const LaurentPoly& p) {
  gb::Poly out;
  if (p.is_zero()) return out;
  const std::int64_t base = p.min_exponent();
  for (const auto& [e, c] : p.terms()) {
    out.emplace(gb::Mono{0, static_cast<std::int32_t>(e - base)}, c.get_num());
  }
  return out;
}

inline LaurentPoly unlift(const gb::Poly& p) {
  LaurentPoly out;
  for (const auto& [m, c] : p) out.add_term(m.x, Scalar(c));
  return out;
}

}  // namespace detail

/// Ideal of R[x, x⁻¹] in canonical form. Over fields the basis is one monic
/// generator with nonzero constant term (empty for the zero ideal). Over ℤ
/// and ℤ/n it is the reduced strong Gröbner basis of the x-saturated
/// contraction to ℤ[x] (for ℤ/n, the preimage in ℤ[x], so n is a member).
class LaurentIdeal {
 public:
  static LaurentIdeal generated(const RingSpec& r, const std::vector<LaurentPoly>& gens) {
    LaurentIdeal out(r);
    std::vector<LaurentPoly> reduced;
    for (const auto& p : gens) {
      LaurentPoly q = p.reduced(r);
      if (!q.is_zero()) reduced.push_back(std::move(q));
    }
    if (r.uses_field_engine()) {
      detail::Dense g;
      for (const auto& p : reduced) g = detail::dense_gcd(r, g, detail::dense_from(r, p));
      g = detail::field_normalize(r, g);
      if (!g.empty()) out.basis_.push_back(detail::laurent_from(g));
      return out;
    }
    gb::Basis lifted;
    for (const auto& p : reduced) lifted.push_back(detail::lift(p));
    if (r.kind() == RingSpec::Kind::IntegersMod) lifted.push_back(gb::Poly{{gb::Mono{}, r.modulus()}});
    out.set_from_gb(gb::saturate_x(gb::groebner(lifted)));
    return out;
  }

  static LaurentIdeal zero(const RingSpec& r) { return generated(r, {}); }
  static LaurentIdeal unit(const RingSpec& r) { return generated(r, {LaurentPoly(1)}); }
  /// J[x, x⁻¹].
  static LaurentIdeal extend(const RingIdeal& j) {
    return generated(j.ring(), {LaurentPoly(Scalar(j.generator()))});
  }

  const RingSpec& ring() const { return ring_; }
  /// Canonical basis (over ℤ/n it contains the lift of 0, the constant n, or a divisor of it).
  const std::vector<LaurentPoly>& basis() const { return basis_; }

  /// Basis elements that are nonzero in R[x, x⁻¹].
  std::vector<LaurentPoly> generators() const {
    std::vector<LaurentPoly> out;
    for (const auto& p : basis_) {
      LaurentPoly q = p.reduced(ring_);
      if (!q.is_zero()) out.push_back(std::move(q));
    }
    return out;
  }

  bool is_zero() const { return coefficient_ideal().is_zero(); }
  bool is_unit() const { return basis_.size() == 1 && basis_.front() == LaurentPoly(1); }

  bool member(const LaurentPoly& p) const {
    LaurentPoly q = p.reduced(ring_);
    if (q.is_zero()) return true;
    if (ring_.uses_field_engine()) {
      if (basis_.empty()) return false;
      return detail::dense_rem(ring_, detail::dense_from(ring_, q), detail::dense_from(ring_, basis_.front())).empty();
    }
    return gb::member(detail::lift(q), gb_basis());
  }

  /// other ⊆ this.
  bool contains(const LaurentIdeal& other) const {
    require_same_ring(ring_, other.ring_);
    for (const auto& p : other.basis_) {
      if (!member(p)) return false;
    }
    return true;
  }

  /// I ∩ R.
  RingIdeal contract() const {
    if (ring_.uses_field_engine()) return is_unit() ? RingIdeal::unit(ring_) : RingIdeal::zero(ring_);
    if (!basis_.empty() && basis_.front().is_constant()) return RingIdeal(ring_, basis_.front().coefficient(0));
    return RingIdeal::zero(ring_);
  }

  /// Smallest J with I ⊆ J[x, x⁻¹].
  RingIdeal coefficient_ideal() const {
    if (ring_.uses_field_engine()) return basis_.empty() ? RingIdeal::zero(ring_) : RingIdeal::unit(ring_);
    mpz_class g = 0;
    for (const auto& p : basis_) {
      for (const auto& [e, c] : p.terms()) g = gcd(g, c.get_num());
    }
    return RingIdeal(ring_, Scalar(g));
  }

  bool is_graded() const { return *this == extend(contract()); }

  LaurentIdeal operator+(const LaurentIdeal& o) const {
    require_same_ring(ring_, o.ring_);
    std::vector<LaurentPoly> gens = basis_;
    gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
    return generated(ring_, gens);
  }

  LaurentIdeal operator*(const LaurentIdeal& o) const {
    require_same_ring(ring_, o.ring_);
    std::vector<LaurentPoly> gens;
    for (const auto& a : basis_) {
      for (const auto& b : o.basis_) gens.push_back(a * b);
    }
    return generated(ring_, gens);
  }

  LaurentIdeal operator&(const LaurentIdeal& o) const {
    require_same_ring(ring_, o.ring_);
    if (ring_.uses_field_engine()) {
      if (basis_.empty() || o.basis_.empty()) return zero(ring_);
      auto a = detail::dense_from(ring_, basis_.front());
      auto b = detail::dense_from(ring_, o.basis_.front());
      auto l = detail::dense_quot(ring_, detail::dense_mul(ring_, a, b), detail::dense_gcd(ring_, a, b));
      return generated(ring_, {detail::laurent_from(l)});
    }
    LaurentIdeal out(ring_);
    out.set_from_gb(gb::saturate_x(gb::intersect(gb_basis(), o.gb_basis())));
    return out;
  }

  /// `<p1, p2>` with ring-reduced generators; `<0>` for the zero ideal.
  std::string to_string() const {
    auto gens = generators();
    if (gens.empty()) return "<0>";
    std::string out = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i > 0) out += ", ";
      out += gens[i].to_string();
    }
    return out + ">";
  }

  bool operator==(const LaurentIdeal& o) const { return ring_ == o.ring_ && basis_ == o.basis_; }

  /// Basis of the x-saturated contraction in ℤ[x] (ℤ and ℤ/n only).
  gb::Basis gb_basis() const {
    gb::Basis out;
    for (const auto& p : basis_) out.push_back(detail::lift(p));
    return out;
  }

 private:
  explicit LaurentIdeal(RingSpec r) : ring_(std::move(r)) {}

  void set_from_gb(const gb::Basis& b) {
    basis_.clear();
    for (const auto& p : b) basis_.push_back(detail::unlift(p));
  }

  RingSpec ring_;
  std::vector<LaurentPoly> basis_;
};

inline LaurentIdeal laurent_sum(const LaurentIdeal& a, const LaurentIdeal& b) { return a + b; }
inline LaurentIdeal laurent_intersect(const LaurentIdeal& a, const LaurentIdeal& b) { return a & b; }
inline LaurentIdeal laurent_product(const LaurentIdeal& a, const LaurentIdeal& b) { return a * b; }
inline bool laurent_eq(const LaurentIdeal& a, const LaurentIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  return a == b;
}
inline bool laurent_member(const LaurentIdeal& i, const LaurentPoly& p) { return i.member(p); }
inline LaurentIdeal laurent_extend(const RingIdeal& j) { return LaurentIdeal::extend(j); }
inline RingIdeal laurent_contract(const LaurentIdeal& i) { return i.contract(); }
inline RingIdeal laurent_coefficient_ideal(const LaurentIdeal& i) { return i.coefficient_ideal(); }
inline bool laurent_is_graded(const LaurentIdeal& i) { return i.is_graded(); }

}  // namespace lpa
