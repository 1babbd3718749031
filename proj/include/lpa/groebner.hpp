#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace lpa::gb {

/// t^t x^x, ordered lexicographically with t > x.
struct Mono {
  std::int32_t t = 0;
  std::int32_t x = 0;

  auto operator<=>(const Mono&) const = default;
};

inline bool divides(Mono a, Mono b) { return a.t <= b.t && a.x <= b.x; }
inline Mono mono_lcm(Mono a, Mono b) { return {std::max(a.t, b.t), std::max(a.x, b.x)}; }
inline Mono operator-(Mono a, Mono b) { return {a.t - b.t, a.x - b.x}; }
inline Mono operator+(Mono a, Mono b) { return {a.t + b.t, a.x + b.x}; }

/// Polynomial in ℤ[t, x]; iteration starts at the leading term.
using Poly = std::map<Mono, mpz_class, std::greater<>>;
using Basis = std::vector<Poly>;

inline Mono lm(const Poly& p) { return p.begin()->first; }
inline const mpz_class& lc(const Poly& p) { return p.begin()->second; }

/// p += c · m · q.
inline void axpy(Poly& p, const mpz_class& c, Mono m, const Poly& q) {
  if (c == 0) return;
  for (const auto& [mono, coeff] : q) {
    auto [it, inserted] = p.try_emplace(mono + m, 0);
    it->second += c * coeff;
    if (it->second == 0) p.erase(it);
  }
}

inline Poly times(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [m, c] : a) axpy(out, c, m, b);
  return out;
}

inline void make_positive(Poly& p) {
  if (!p.empty() && lc(p) < 0) {
    for (auto& [m, c] : p) c = -c;
  }
}

inline bool is_t_free(const Poly& p) {
  for (const auto& [m, c] : p) {
    if (m.t != 0) return false;
  }
  return true;
}

namespace detail {

template <class Reducers>
Poly reduce(Poly f, const Reducers& basis) {
  Poly out;
  while (!f.empty()) {
    auto [m, c] = *f.begin();
    const Poly* best = nullptr;
    for (const Poly* g : basis) {
      if (divides(lm(*g), m) && (best == nullptr || lc(*g) < lc(*best))) best = g;
    }
    if (best != nullptr) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), c.get_mpz_t(), lc(*best).get_mpz_t());
      axpy(f, -q, m - lm(*best), *best);
    }
    auto it = f.find(m);
    if (it != f.end()) {
      out.emplace(it->first, it->second);
      f.erase(it);
    }
  }
  return out;
}

}  // namespace detail

/// Canonical remainder: each monomial's coefficient is reduced into
/// [0, c) where c is the smallest leading coefficient among basis elements
/// whose leading monomial divides it.
inline Poly normal_form(Poly f, const Basis& basis) {
  std::vector<const Poly*> ptrs;
  for (const Poly& g : basis) ptrs.push_back(&g);
  return detail::reduce(std::move(f), ptrs);
}

namespace detail {

inline Poly s_poly(const Poly& f, const Poly& g) {
  Mono gamma = mono_lcm(lm(f), lm(g));
  mpz_class l = lcm(lc(f), lc(g));
  Poly out;
  axpy(out, l / lc(f), gamma - lm(f), f);
  axpy(out, -(l / lc(g)), gamma - lm(g), g);
  return out;
}

inline Poly g_poly(const Poly& f, const Poly& g) {
  Mono gamma = mono_lcm(lm(f), lm(g));
  mpz_class d, s, u;
  mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), lc(f).get_mpz_t(), lc(g).get_mpz_t());
  Poly out;
  axpy(out, s, gamma - lm(f), f);
  axpy(out, u, gamma - lm(g), g);
  return out;
}

inline bool strongly_divides(const Poly& g, const Poly& f) {
  return divides(lm(g), lm(f)) && mpz_divisible_p(lc(f).get_mpz_t(), lc(g).get_mpz_t()) != 0;
}

}  // namespace detail

/// Reduced strong Gröbner basis over ℤ (lex, t > x): minimal leading terms,
/// positive leading coefficients, tails in canonical normal form, sorted by
/// increasing leading monomial. Two generating sets of the same ideal give
/// identical output.
inline Basis groebner(const Basis& generators) {
  Basis g;
  std::vector<bool> alive;
  // Pairs by increasing lcm of leading monomials.
  std::set<std::tuple<Mono, std::size_t, std::size_t>> pairs;
  std::vector<Poly> pending(generators.begin(), generators.end());
  auto add = [&](Poly f) {
    std::vector<const Poly*> live;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (alive[i]) live.push_back(&g[i]);
    }
    f = detail::reduce(std::move(f), live);
    if (f.empty()) return;
    make_positive(f);
    const std::size_t k = g.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (alive[i] && detail::strongly_divides(f, g[i])) {
        alive[i] = false;
        pending.push_back(g[i]);
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (alive[i]) pairs.emplace(mono_lcm(lm(g[i]), lm(f)), i, k);
    }
    g.push_back(std::move(f));
    alive.push_back(true);
  };
  for (;;) {
    while (!pending.empty()) {
      Poly f = std::move(pending.back());
      pending.pop_back();
      add(std::move(f));
    }
    if (pairs.empty()) break;
    auto [gamma, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (!alive[i] || !alive[j]) continue;
    const Poly& gi = g[i];
    const Poly& gj = g[j];
    bool coprime_leads = mono_lcm(lm(gi), lm(gj)) == lm(gi) + lm(gj) && gcd(lc(gi), lc(gj)) == 1;
    bool comparable = mpz_divisible_p(lc(gi).get_mpz_t(), lc(gj).get_mpz_t()) != 0 ||
                      mpz_divisible_p(lc(gj).get_mpz_t(), lc(gi).get_mpz_t()) != 0;
    if (!coprime_leads) pending.push_back(detail::s_poly(gi, gj));
    if (!comparable) pending.push_back(detail::g_poly(gi, gj));
  }
  Basis live;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (alive[i]) live.push_back(std::move(g[i]));
  }
  g = std::move(live);

  Basis minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !detail::strongly_divides(g[j], g[i])) continue;
      bool same_lead = lm(g[i]) == lm(g[j]) && lc(g[i]) == lc(g[j]);
      redundant = !same_lead || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  Basis reduced;
  for (const Poly& p : minimal) {
    Poly tail = p;
    tail.erase(tail.begin());
    Poly r = normal_form(std::move(tail), minimal);
    r.emplace(lm(p), lc(p));
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) { return lm(a) < lm(b); });
  return reduced;
}

inline bool member(const Poly& f, const Basis& gb) { return normal_form(f, gb).empty(); }

/// t-free part of a lex basis: a basis of the ideal intersected with ℤ[x].
inline Basis eliminate_t(const Basis& gb) {
  Basis out;
  for (const Poly& p : gb) {
    if (is_t_free(p)) out.push_back(p);
  }
  return out;
}

/// I ∩ J for ideals of ℤ[x], via t·I + (1 − t)·J.
inline Basis intersect(const Basis& a, const Basis& b) {
  const Poly t{{Mono{1, 0}, 1}};
  const Poly one_minus_t{{Mono{1, 0}, -1}, {Mono{0, 0}, 1}};
  Basis gens;
  for (const Poly& f : a) gens.push_back(times(t, f));
  for (const Poly& f : b) gens.push_back(times(one_minus_t, f));
  return eliminate_t(groebner(gens));
}

/// I : x, computed as (I ∩ ⟨x⟩) / x.
inline Basis colon_x(const Basis& a) {
  const Basis x{Poly{{Mono{0, 1}, 1}}};
  Basis out;
  for (const Poly& p : intersect(a, x)) {
    Poly q;
    for (const auto& [m, c] : p) q.emplace(Mono{m.t, m.x - 1}, c);
    out.push_back(std::move(q));
  }
  return out;
}

/// I : x^∞ by iterating the colon until it stabilizes. `a` must be reduced.
inline Basis saturate_x(Basis a) {
  for (;;) {
    Basis next = colon_x(a);
    if (next == a) return a;
    a = std::move(next);
  }
}

/// I : x^∞ as (I + ⟨1 − t·x⟩) ∩ ℤ[x].
inline Basis saturate_x_rabinowitsch(const Basis& a) {
  Basis gens = a;
  gens.push_back(Poly{{Mono{1, 1}, -1}, {Mono{0, 0}, 1}});
  return eliminate_t(groebner(gens));
}

}  // namespace lpa::gb
