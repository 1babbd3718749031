#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lpa/generators.hpp"
#include "lpa/io/literals.hpp"
#include "lpa/oracle/finite_lpa.hpp"

namespace lpa::oracle {

/// Image of a generator in the finite algebra.
inline Element generator_image(const FiniteLPA& alg, const Generator& gen) {
  auto scalar = [&](const Scalar& r) {
    if (r.get_den() != 1) throw DomainError("bad-scalar", "non-integral scalar over a finite ring");
    return mod(mpz_class(r.get_num() % alg.modulus()).get_si(), alg.modulus());
  };
  if (const auto* sv = std::get_if<ScaledVertex>(&gen)) return alg.scale(alg.vertex(sv->v), scalar(sv->r));
  if (const auto* sb = std::get_if<ScaledBreaking>(&gen)) {
    // w^H = w − Σ ee* over edges e from w with r(e) ∉ H.
    Element x = alg.vertex(sb->w);
    for (std::size_t e : alg.edges_from(sb->w)) {
      if (sb->H.contains(alg.edges()[e].target)) continue;
      x = alg.add(x, alg.scale(alg.multiply(alg.edge(e), alg.ghost(e)), -1));
    }
    return alg.scale(x, scalar(sb->r));
  }
  throw DomainError("out-of-scope", "cycle generators have no image in a finite algebra");
}

inline ConcreteIdeal concrete_image(const FiniteLPA& alg, const DPair& p) {
  std::vector<Element> xs;
  for (const Generator& gen : to_generators(p)) xs.push_back(generator_image(alg, gen));
  return alg.ideal(xs);
}

struct CrosscheckReport {
  std::size_t concrete_count = 0;
  std::size_t classified_count = 0;
  std::size_t comparisons = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Matches the ideals of the finite algebra with the classified pairs and
/// compares order, sum, intersection and product on every pair of ideals.
inline CrosscheckReport crosscheck(const Graph& g, const RingSpec& r) {
  FiniteLPA alg(g, r);
  auto ctx = LatticeContext::make(g, r);
  std::vector<ConcreteIdeal> concrete = enumerate_concrete_ideals(alg);
  std::vector<DPair> pairs;
  for (FunctionTable& f : graded_lattice(*ctx)) pairs.push_back(DPair::graded(ctx, std::move(f)));

  CrosscheckReport report;
  report.concrete_count = concrete.size();
  report.classified_count = pairs.size();
  auto describe = [&](const DPair& p) {
    std::string out;
    for (const Generator& gen : to_generators(p)) out += (out.empty() ? "" : ", ") + io::generator_to_string(g, gen);
    return "<" + out + ">";
  };
  auto show = [&](const ConcreteIdeal& i) {
    std::string out;
    for (const Element& x : i.generators()) out += (out.empty() ? "" : ", ") + alg.element_to_string(x);
    return "span{" + out + "}";
  };

  std::map<std::vector<std::int64_t>, std::size_t> by_key;
  for (std::size_t i = 0; i < concrete.size(); ++i) by_key.emplace(concrete[i].key(), i);
  std::vector<std::size_t> image(pairs.size());
  std::vector<int> hit(concrete.size(), -1);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ConcreteIdeal c = concrete_image(alg, pairs[i]);
    auto it = by_key.find(c.key());
    if (it == by_key.end()) {
      report.mismatches.push_back("pair " + describe(pairs[i]) + " maps to " + show(c) + ", which is not an enumerated ideal");
      return report;
    }
    image[i] = it->second;
    if (hit[it->second] >= 0) {
      report.mismatches.push_back("pairs " + describe(pairs[static_cast<std::size_t>(hit[it->second])]) + " and " +
                                  describe(pairs[i]) + " map to the same ideal " + show(c));
    }
    hit[it->second] = static_cast<int>(i);
  }
  for (std::size_t k = 0; k < concrete.size(); ++k) {
    if (hit[k] < 0) report.mismatches.push_back("ideal " + show(concrete[k]) + " is not the image of any pair");
  }
  if (!report.ok()) return report;

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const ConcreteIdeal& ci = concrete[image[i]];
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const ConcreteIdeal& cj = concrete[image[j]];
      auto names = [&] { return describe(pairs[i]) + " and " + describe(pairs[j]); };
      ++report.comparisons;
      if (d_leq(pairs[i], pairs[j]) != ci.subset_of(cj)) report.mismatches.push_back("order differs for " + names());
      if (j < i) continue;
      auto compare = [&](const DPair& classified, const ConcreteIdeal& expected, const std::string& what) {
        auto it = std::find(pairs.begin(), pairs.end(), classified);
        if (it == pairs.end()) {
          report.mismatches.push_back(what + " of " + names() + " is not in the classified lattice");
        } else if (!(concrete[image[static_cast<std::size_t>(it - pairs.begin())]] == expected)) {
          report.mismatches.push_back(what + " of " + names() + " differs: concrete " + show(expected));
        }
      };
      compare(d_join(pairs[i], pairs[j]), ConcreteIdeal::sum(ci, cj), "join");
      compare(d_meet(pairs[i], pairs[j]), ConcreteIdeal::intersection(ci, cj), "meet");
      const ConcreteIdeal prod = alg.product(ci, cj);
      compare(d_product(pairs[i], pairs[j]), prod, "product");
      if (!(alg.product(cj, ci) == prod)) report.mismatches.push_back("concrete products do not commute for " + names());
    }
  }
  return report;
}

}  // namespace lpa::oracle
