#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lpa/ring.hpp"

namespace lpa {

/// Element of R[x, x⁻¹]: exponent ↦ nonzero coefficient.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Scalar>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Scalar& c, std::int64_t exponent = 0) { add_term(exponent, c); }

  static LaurentPoly monomial(std::int64_t exponent, const Scalar& c = 1) { return LaurentPoly(c, exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  std::int64_t min_exponent() const { return terms_.begin()->first; }
  std::int64_t max_exponent() const { return terms_.rbegin()->first; }

  Scalar coefficient(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(std::int64_t e, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [e1, c1] : a.terms_) {
      for (const auto& [e2, c2] : b.terms_) out.add_term(e1 + e2, c1 * c2);
    }
    return out;
  }
  LaurentPoly scaled(const Scalar& s) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }
  /// Multiplication by x^k.
  LaurentPoly shifted(std::int64_t k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  /// Coefficients reduced into `r`; terms that vanish are dropped.
  LaurentPoly reduced(const RingSpec& r) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(e, r.normalize(c));
    return out;
  }

  /// Highest power first, e.g. `2x^2 - x + 3x^-1`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Scalar mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      bool show_coeff = (mag != 1) || e == 0;
      if (show_coeff) out += mag.get_str();
      if (show_coeff && e != 0 && mag.get_den() != 1) out += "*";
      if (e != 0) {
        out += "x";
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  bool operator==(const LaurentPoly&) const = default;
  bool operator<(const LaurentPoly& o) const {
    // Degree-major comparison used only for deterministic ordering.
    return std::lexicographical_compare(terms_.rbegin(), terms_.rend(), o.terms_.rbegin(), o.terms_.rend());
  }

 private:
  Terms terms_;
};

}  // namespace lpa
