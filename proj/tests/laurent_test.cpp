#include <gtest/gtest.h>

#include <random>

#include "lpa/io/literals.hpp"
#include "lpa/laurent_ideal.hpp"
#include "support/membership_oracle.hpp"

using namespace lpa;

namespace {

LaurentPoly P(const char* text) { return io::parse_poly(text); }

LaurentIdeal ideal(const RingSpec& r, std::initializer_list<const char*> gens) {
  std::vector<LaurentPoly> ps;
  for (const char* g : gens) ps.push_back(P(g));
  return LaurentIdeal::generated(r, ps);
}

LaurentPoly random_poly(std::mt19937& rng, int lo, int hi, int max_coeff) {
  LaurentPoly p;
  for (int e = lo; e <= hi; ++e) {
    long c = static_cast<long>(rng() % (2 * max_coeff + 1)) - max_coeff;
    if (c != 0) p.add_term(e, c);
  }
  return p;
}

LaurentIdeal random_ideal(std::mt19937& rng, const RingSpec& r, std::size_t max_gens) {
  std::vector<LaurentPoly> gens;
  std::size_t k = 1 + rng() % max_gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_poly(rng, -1, 1 + static_cast<int>(rng() % 2), 4));
  return LaurentIdeal::generated(r, gens);
}

// Every Laurent polynomial with exponents in [-1, 2] and coefficients in
// [-2, 2].
std::vector<LaurentPoly> small_polys() {
  std::vector<LaurentPoly> out;
  for (int code = 0; code < 5 * 5 * 5 * 5; ++code) {
    LaurentPoly p;
    int rest = code;
    for (int e = -1; e <= 2; ++e) {
      p.add_term(e, rest % 5 - 2);
      rest /= 5;
    }
    out.push_back(p);
  }
  return out;
}

Scalar eval(const LaurentPoly& p, long x) {
  Scalar out = 0;
  for (const auto& [e, c] : p.terms()) {
    Scalar power = 1;
    for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) power *= x;
    out += e < 0 ? Scalar(c / power) : Scalar(c * power);
  }
  return out;
}

const std::vector<RingSpec>& all_rings() {
  static const std::vector<RingSpec> rings{RingSpec::integers(), RingSpec::integers_mod(4),
                                           RingSpec::integers_mod(6), RingSpec::prime_field(2),
                                           RingSpec::prime_field(5), RingSpec::rationals()};
  return rings;
}

}  // namespace

TEST(LaurentPoly, ArithmeticAndPrinting) {
  LaurentPoly p = P("3x^-2 + 1 - x");
  EXPECT_EQ(p.min_exponent(), -2);
  EXPECT_EQ(p.max_exponent(), 1);
  EXPECT_EQ(p.coefficient(-2), 3);
  EXPECT_EQ(p.to_string(), "-x + 1 + 3x^-2");
  EXPECT_EQ((P("x - 1") * P("x + 1")).to_string(), "x^2 - 1");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(P("x").shifted(-1), LaurentPoly(1));
  EXPECT_EQ(P("7x + 3").reduced(RingSpec::integers_mod(4)), P("3x + 3"));
  EXPECT_EQ(P("1/2 x").to_string(), "1/2*x");
}

TEST(LaurentIdeal, FieldExamples) {
  RingSpec q = RingSpec::rationals();
  EXPECT_TRUE((ideal(q, {"x - 1"}) + ideal(q, {"x + 1"})).is_unit());
  // x^3 - x^2 - x + 1 = (x - 1)^2 (x + 1)
  LaurentIdeal i = ideal(q, {"x^3 - x^2 - x + 1", "x^2 + x - 2"});
  EXPECT_EQ(i, ideal(q, {"x - 1"}));
  EXPECT_EQ((ideal(q, {"x - 1"}) & ideal(q, {"x + 1"})), ideal(q, {"x^2 - 1"}));
  EXPECT_EQ(ideal(q, {"2x^-1 - 2"}).basis().front(), P("x - 1"));
  EXPECT_EQ(ideal(q, {"x^5"}), LaurentIdeal::unit(q));
  EXPECT_TRUE(ideal(q, {}).is_zero());
  EXPECT_EQ(ideal(q, {"x - 1"}).to_string(), "<x - 1>");
}

TEST(LaurentIdeal, FieldNormalFormIsInvariantUnderUnitRescaling) {
  std::mt19937 rng(3);
  for (const RingSpec& r : {RingSpec::rationals(), RingSpec::prime_field(7)}) {
    for (int trial = 0; trial < 200; ++trial) {
      LaurentPoly p = random_poly(rng, -2, 3, 6).reduced(r);
      if (p.is_zero()) continue;
      LaurentIdeal i = LaurentIdeal::generated(r, {p});
      long u = 1 + static_cast<long>(rng() % 6);
      int k = static_cast<int>(rng() % 7) - 3;
      EXPECT_EQ(LaurentIdeal::generated(r, {p.scaled(u).shifted(k)}), i);
      const LaurentPoly& g = i.basis().front();
      EXPECT_EQ(g.min_exponent(), 0);
      EXPECT_NE(g.coefficient(0), 0);
      EXPECT_EQ(g.coefficient(g.max_exponent()), 1);
    }
  }
}

TEST(LaurentIdeal, IntegerIntersectionExample) {
  RingSpec z = RingSpec::integers();
  LaurentIdeal both = ideal(z, {"2"}) & ideal(z, {"x - 1"});
  EXPECT_EQ(both, ideal(z, {"2x - 2"}));
  EXPECT_EQ(both.to_string(), "<2x - 2>");
  // Over ℤ, p ∈ ⟨2⟩ iff every coefficient is even and p ∈ ⟨x − 1⟩ iff p(1) = 0.
  for (const LaurentPoly& p : small_polys()) {
    bool even = true;
    for (const auto& [e, c] : p.terms()) even = even && c.get_num() % 2 == 0;
    bool root = eval(p, 1) == 0;
    EXPECT_EQ(both.member(p), even && root) << p.to_string();
    EXPECT_EQ(ideal(z, {"2"}).member(p), even);
    EXPECT_EQ(ideal(z, {"x - 1"}).member(p), root);
  }
}

TEST(LaurentIdeal, IntegerContraction) {
  RingSpec z = RingSpec::integers();
  LaurentIdeal i = ideal(z, {"2", "x - 1"});
  EXPECT_EQ(i.contract(), RingIdeal(z, 2));
  EXPECT_FALSE(i.is_unit());
  // x ↦ 1 followed by reduction mod 2 kills i, so 1 ∉ i.
  for (const LaurentPoly& p : small_polys()) {
    bool killed = eval(p, 1).get_num() % 2 == 0;
    EXPECT_EQ(i.member(p), killed) << p.to_string();
  }
  // With y = x + 1 the quotient is ℤ/4 ⊕ (ℤ/2)y with y² = 2, so 2 ∉ I.
  EXPECT_EQ(ideal(z, {"4", "2x + 2", "x^2 + 1"}).contract(), RingIdeal(z, 4));
  EXPECT_EQ(ideal(z, {"3x - 1", "x + 1"}).contract(), RingIdeal(z, 4));
}

TEST(LaurentIdeal, GradedExamples) {
  RingSpec z = RingSpec::integers();
  LaurentIdeal xm1 = ideal(z, {"x - 1"});
  EXPECT_TRUE(xm1.contract().is_zero());
  EXPECT_FALSE(xm1.is_zero());
  EXPECT_FALSE(xm1.is_graded());
  for (long c = -20; c <= 20; ++c) EXPECT_EQ(xm1.member(LaurentPoly(c)), c == 0);

  RingSpec f2 = RingSpec::prime_field(2);
  LaurentIdeal xp1 = ideal(f2, {"x + 1"});
  EXPECT_FALSE(xp1.is_graded());
  EXPECT_FALSE(xp1.member(LaurentPoly(1)));

  for (const RingSpec& r : all_rings()) {
    for (const RingIdeal& j : {RingIdeal::zero(r), RingIdeal::unit(r), RingIdeal(r, 2), RingIdeal(r, 3)}) {
      LaurentIdeal e = LaurentIdeal::extend(j);
      EXPECT_TRUE(e.is_graded());
      EXPECT_EQ(e.contract(), j);
      EXPECT_EQ(e.coefficient_ideal(), j);
    }
  }
  EXPECT_EQ(ideal(z, {"2x + 4", "6"}).coefficient_ideal(), RingIdeal(z, 2));
  EXPECT_FALSE(ideal(z, {"2x + 4", "6"}).is_graded());
  EXPECT_TRUE(ideal(z, {"2x", "6"}).is_graded());
}

TEST(LaurentIdeal, ModularExamples) {
  RingSpec z4 = RingSpec::integers_mod(4);
  LaurentIdeal i = ideal(z4, {"x - 1"});
  EXPECT_TRUE(i.contract().is_zero());
  EXPECT_FALSE(i.is_graded());
  LaurentIdeal j = ideal(z4, {"x + 1", "x - 1"});
  EXPECT_TRUE(j.member(P("2")));
  EXPECT_EQ(j.contract(), RingIdeal(z4, 2));
  EXPECT_TRUE(ideal(z4, {"2x - 2", "x^2 + 1"}).contract().is_zero());
  EXPECT_TRUE(ideal(z4, {"4"}).is_zero());
  EXPECT_EQ(ideal(z4, {"4"}), LaurentIdeal::zero(z4));
  EXPECT_EQ(ideal(z4, {"2x + 1"}), LaurentIdeal::unit(z4));
  EXPECT_EQ(ideal(z4, {"x - 1"}).to_string(), "<x + 3>");
  EXPECT_THROW(ideal(RingSpec::integers(), {"1/2"}), DomainError);
}

TEST(LaurentIdeal, ExtensionContractionIdentities) {
  std::mt19937 rng(5);
  for (const RingSpec& r : all_rings()) {
    for (int trial = 0; trial < 25; ++trial) {
      RingIdeal j(r, static_cast<long>(rng() % 13));
      EXPECT_EQ(LaurentIdeal::extend(j).contract(), j);
      LaurentIdeal i = random_ideal(rng, r, 2);
      EXPECT_TRUE(i.contains(LaurentIdeal::extend(i.contract())));
      EXPECT_TRUE(LaurentIdeal::extend(i.coefficient_ideal()).contains(i));
      EXPECT_TRUE(i.coefficient_ideal().contains(i.contract()));
    }
  }
}

TEST(LaurentIdeal, CanonicalFormMatchesMutualMembership) {
  std::mt19937 rng(7);
  for (const RingSpec& r : all_rings()) {
    for (int trial = 0; trial < 25; ++trial) {
      LaurentIdeal a = random_ideal(rng, r, 2);
      LaurentIdeal b = random_ideal(rng, r, 2);
      bool mutual = a.contains(b) && b.contains(a);
      EXPECT_EQ(a == b, mutual);
      // A different presentation of a.
      std::vector<LaurentPoly> gens = a.generators();
      if (!gens.empty()) gens.push_back(gens.front() * random_poly(rng, -1, 1, 3));
      std::reverse(gens.begin(), gens.end());
      EXPECT_EQ(LaurentIdeal::generated(r, gens), a);
      EXPECT_EQ(a + a, a);
    }
  }
}

TEST(LaurentIdeal, OperationLaws) {
  std::mt19937 rng(11);
  for (const RingSpec& r : all_rings()) {
    for (int trial = 0; trial < 12; ++trial) {
      LaurentIdeal a = random_ideal(rng, r, 2);
      LaurentIdeal b = random_ideal(rng, r, 1);
      LaurentIdeal c = random_ideal(rng, r, 1);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a & b, b & a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ((a & b) & c, a & (b & c));
      EXPECT_TRUE((a & b).contains(a * b));
      EXPECT_TRUE(a.contains(a & b));
      EXPECT_TRUE((a + b).contains(a));
      if (r.is_field()) {
        EXPECT_EQ(a & (b + c), (a & b) + (a & c));
      }
      for (const LaurentPoly& p : a.generators()) {
        for (const LaurentPoly& q : b.generators()) EXPECT_TRUE((a * b).member(p * q));
      }
    }
  }
}

TEST(LaurentIdeal, IntersectionMembershipOracle) {
  std::mt19937 rng(13);
  RingSpec z = RingSpec::integers();
  auto polys = small_polys();
  for (int trial = 0; trial < 6; ++trial) {
    LaurentIdeal a = random_ideal(rng, z, 2);
    LaurentIdeal b = random_ideal(rng, z, 1);
    LaurentIdeal both = a & b;
    for (std::size_t k = 0; k < polys.size(); k += 7) {
      EXPECT_EQ(both.member(polys[k]), a.member(polys[k]) && b.member(polys[k])) << polys[k].to_string();
    }
  }
}

TEST(LaurentIdeal, IntegerLatticeIsNotDistributive) {
  // Evaluation at x = 1 into ℤ/4 separates 2 from ⟨2x − 2, 2x + 2⟩.
  RingSpec z = RingSpec::integers();
  LaurentIdeal two = ideal(z, {"2"}), a = ideal(z, {"x - 1"}), b = ideal(z, {"x + 1"});
  LaurentIdeal lhs = two & (a + b);
  LaurentIdeal rhs = (two & a) + (two & b);
  EXPECT_EQ(lhs, two);
  EXPECT_TRUE(lhs.contains(rhs));
  EXPECT_FALSE(rhs.member(P("2")));
}

TEST(MembershipOracle, KnownVerdicts) {
  using lpa::testing::laurent_membership;
  using lpa::testing::Verdict;
  EXPECT_EQ(laurent_membership(P("1"), {P("4"), P("2x - 1")}), Verdict::Member);
  EXPECT_EQ(laurent_membership(P("x"), {P("2")}), Verdict::NonMember);
  EXPECT_EQ(laurent_membership(P("2"), {P("2x - 2"), P("2x + 2")}), Verdict::NonMember);
  EXPECT_EQ(laurent_membership(P("x^-3 - x^2"), {P("x - 1")}), Verdict::Member);
  EXPECT_EQ(laurent_membership(P("5"), {}), Verdict::NonMember);
}

TEST(MembershipOracle, AgreesWithGroebnerBases) {
  std::mt19937 rng(3);
  const RingSpec z = RingSpec::integers();
  std::size_t decided = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<LaurentPoly> gens{random_poly(rng, 0, 2, 6), random_poly(rng, -1, 1, 6)};
    LaurentIdeal i = LaurentIdeal::generated(z, gens);
    for (int k = 0; k < 10; ++k) {
      LaurentPoly p = k % 2 == 0 ? random_poly(rng, -1, 3, 8) : gens[0] * random_poly(rng, 0, 1, 3) + gens[1];
      auto v = lpa::testing::laurent_membership(p, gens);
      if (v == lpa::testing::Verdict::Unknown) continue;
      ++decided;
      EXPECT_EQ(v == lpa::testing::Verdict::Member, i.member(p)) << p.to_string() << " in " << i.to_string();
    }
  }
  EXPECT_GT(decided, 400u);
}

TEST(LaurentIdeal, RingMismatch) {
  EXPECT_THROW(LaurentIdeal::unit(RingSpec::integers()) + LaurentIdeal::unit(RingSpec::rationals()), DomainError);
}
