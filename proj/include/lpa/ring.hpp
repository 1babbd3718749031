#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {

/// Ring elements are carried as rationals and reduced into the ring on entry.
using Scalar = mpq_class;

/// One of ℤ, ℤ/n (n ≥ 2), F_p (p prime), ℚ.
class RingSpec {
 public:
  enum class Kind { Integers, IntegersMod, PrimeField, Rationals };

  static RingSpec integers() { return RingSpec(Kind::Integers, 0); }
  static RingSpec rationals() { return RingSpec(Kind::Rationals, 0); }
  static RingSpec integers_mod(const mpz_class& n) {
    if (n < 2) throw DomainError("bad-ring", "Z/n needs n >= 2");
    return RingSpec(Kind::IntegersMod, n);
  }
  static RingSpec prime_field(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
      throw DomainError("bad-ring", "F" + p.get_str() + ": characteristic must be prime");
    }
    return RingSpec(Kind::PrimeField, p);
  }

  /// Accepts `Z`, `Z/12`, `F7`, `Q`.
  static RingSpec parse(std::string_view text) {
    auto number = [&](std::string_view digits) {
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError(1, 1, "bad ring spec '" + std::string(text) + "'");
      }
      return mpz_class(std::string(digits));
    };
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text.starts_with("Z/")) return integers_mod(number(text.substr(2)));
    if (text.starts_with("F")) return prime_field(number(text.substr(1)));
    throw ParseError(1, 1, "bad ring spec '" + std::string(text) + "' (expected Z, Z/n, Fp or Q)");
  }

  Kind kind() const { return kind_; }
  /// n for ℤ/n, p for F_p, 0 otherwise.
  const mpz_class& modulus() const { return modulus_; }

  bool is_finite() const { return kind_ == Kind::IntegersMod || kind_ == Kind::PrimeField; }
  /// Rings whose Laurent ideals are principal with a field normal form.
  bool uses_field_engine() const { return kind_ == Kind::PrimeField || kind_ == Kind::Rationals; }
  bool is_field() const {
    return uses_field_engine() ||
           (kind_ == Kind::IntegersMod && mpz_probab_prime_p(modulus_.get_mpz_t(), 30) != 0);
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Integers: return "Z";
      case Kind::Rationals: return "Q";
      case Kind::IntegersMod: return "Z/" + modulus_.get_str();
      case Kind::PrimeField: return "F" + modulus_.get_str();
    }
    return {};
  }

  /// Canonical representative: integers for ℤ, [0, n) for ℤ/n and F_p.
  Scalar normalize(const Scalar& r) const {
    switch (kind_) {
      case Kind::Rationals: return r;
      case Kind::Integers:
        if (r.get_den() != 1) throw DomainError("not-in-ring", r.get_str() + " is not an integer");
        return r;
      case Kind::IntegersMod:
      case Kind::PrimeField: {
        mpz_class num = r.get_num();
        mpz_class den = r.get_den();
        if (den != 1) {
          mpz_class inv;
          if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
            throw DomainError("not-in-ring", r.get_str() + " has no image in " + to_string());
          }
          num *= inv;
        }
        mpz_class out;
        mpz_fdiv_r(out.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t());
        return Scalar(out);
      }
    }
    return r;
  }

  bool operator==(const RingSpec&) const = default;

 private:
  RingSpec(Kind k, mpz_class m) : kind_(k), modulus_(std::move(m)) {}
  Kind kind_;
  mpz_class modulus_;
};

inline void require_same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) throw DomainError("ring-mismatch", "operands live over " + a.to_string() + " and " + b.to_string());
}

/// An ideal of R in canonical form: ℤ → nonnegative generator; ℤ/n → divisor
/// d of n with the zero ideal stored as 0; fields → 0 or 1.
class RingIdeal {
 public:
  RingIdeal(RingSpec ring, const Scalar& generator) : ring_(std::move(ring)) {
    Scalar r = ring_.normalize(generator);
    switch (ring_.kind()) {
      case RingSpec::Kind::Integers: gen_ = abs(r.get_num()); break;
      case RingSpec::Kind::Rationals: gen_ = (r == 0) ? 0 : 1; break;
      case RingSpec::Kind::IntegersMod:
      case RingSpec::Kind::PrimeField: gen_ = canonical_divisor(r.get_num()); break;
    }
  }

  static RingIdeal zero(const RingSpec& r) { return RingIdeal(r, 0); }
  static RingIdeal unit(const RingSpec& r) { return RingIdeal(r, 1); }

  const RingSpec& ring() const { return ring_; }
  const mpz_class& generator() const { return gen_; }
  bool is_zero() const { return gen_ == 0; }
  bool is_unit() const { return gen_ == 1; }

  /// True when `other` ⊆ this.
  bool contains(const RingIdeal& other) const {
    require_same_ring(ring_, other.ring_);
    return mpz_divisible_p(other.gen_.get_mpz_t(), gen_.get_mpz_t()) != 0;
  }
  bool member(const Scalar& r) const { return contains(RingIdeal(ring_, r)); }

  RingIdeal operator+(const RingIdeal& o) const {
    require_same_ring(ring_, o.ring_);
    return from_integer(gcd(gen_, o.gen_));
  }
  RingIdeal operator*(const RingIdeal& o) const {
    require_same_ring(ring_, o.ring_);
    return from_integer(gen_ * o.gen_);
  }
  RingIdeal operator&(const RingIdeal& o) const {
    require_same_ring(ring_, o.ring_);
    return from_integer(lcm(gen_, o.gen_));
  }

  bool is_prime() const {
    switch (ring_.kind()) {
      case RingSpec::Kind::Integers:
        return gen_ == 0 || mpz_probab_prime_p(gen_.get_mpz_t(), 30) != 0;
      case RingSpec::Kind::IntegersMod:
        if (gen_ == 0) return mpz_probab_prime_p(ring_.modulus().get_mpz_t(), 30) != 0;
        return mpz_probab_prime_p(gen_.get_mpz_t(), 30) != 0;
      case RingSpec::Kind::PrimeField:
      case RingSpec::Kind::Rationals:
        return gen_ == 0;
    }
    return false;
  }

  std::string to_string() const { return "(" + gen_.get_str() + ")"; }

  bool operator==(const RingIdeal& o) const { return ring_ == o.ring_ && gen_ == o.gen_; }

 private:
  RingIdeal from_integer(const mpz_class& n) const { return RingIdeal(ring_, Scalar(n)); }

  mpz_class canonical_divisor(const mpz_class& r) const {
    mpz_class d = gcd(r, ring_.modulus());
    if (d == ring_.modulus()) return 0;
    if (ring_.kind() == RingSpec::Kind::PrimeField) return 1;
    return d;
  }

  RingSpec ring_;
  mpz_class gen_;
};

inline RingIdeal ideal_sum(const RingIdeal& a, const RingIdeal& b) { return a + b; }
inline RingIdeal ideal_intersect(const RingIdeal& a, const RingIdeal& b) { return a & b; }
inline RingIdeal ideal_product(const RingIdeal& a, const RingIdeal& b) { return a * b; }
inline bool ideal_eq(const RingIdeal& a, const RingIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  return a == b;
}
inline bool ideal_contains(const RingIdeal& outer, const RingIdeal& inner) { return outer.contains(inner); }
inline bool ideal_member(const RingIdeal& ideal, const Scalar& r) { return ideal.member(r); }
inline bool ideal_is_prime(const RingIdeal& a) { return a.is_prime(); }

/// Every ideal of a finite ring once: zero first, then by decreasing generator.
inline std::vector<RingIdeal> ideal_enumerate(const RingSpec& r) {
  if (!r.is_finite()) {
    throw DomainError("infinite-lattice", r.to_string() + " has infinitely many ideals");
  }
  std::vector<RingIdeal> out{RingIdeal::zero(r)};
  if (r.kind() == RingSpec::Kind::PrimeField) {
    out.push_back(RingIdeal::unit(r));
    return out;
  }
  const mpz_class& n = r.modulus();
  std::vector<mpz_class> divisors;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divisors.push_back(d);
      if (d * d != n) divisors.push_back(n / d);
    }
  }
  std::sort(divisors.begin(), divisors.end(), std::greater<>());
  for (const auto& d : divisors) {
    if (d != n) out.emplace_back(r, Scalar(d));
  }
  return out;
}

}  // namespace lpa
