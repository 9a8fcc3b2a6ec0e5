#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "envrad/envelope.hpp"
#include "envrad/errors.hpp"
#include "support.hpp"

namespace envrad {
namespace {

using testing::header;
using testing::ideal;
using testing::sub;

DecompositionOracle session_oracle(const Session& s) {
  DecompositionOracle oracle;
  for (auto& d : s.fixtures()) oracle.add_fixture(std::move(d));
  return oracle;
}

TEST(Envelope, ThreeIncomparablePrimes) {
  const auto s = testing::load("three_primes.ses");
  const auto t = envelope(s.decomposition_named("N"));
  EXPECT_EQ(t.result, sub(s, {"z*e1", "x*e3", "x*y*z*e2", "x*y^2*e1"}));
  ASSERT_EQ(t.summands.size(), 6u);
  const std::vector<std::pair<std::string, std::vector<std::string>>> expected{
      {"p1(Q2 ∩ Q3)", {"x*z*e1", "x*z*e3 - z*e1", "x^2*y^2*z*e2"}},
      {"p2(Q1 ∩ Q3)", {"x*y*z*e3 - y*z*e1", "x^2*y*e3", "x^2*y^2*e1 + x^2*y*z*e2"}},
      {"p3(Q1 ∩ Q2)", {"x*e3", "x*z*e1", "x*y^3*e1 + x*y^2*z*e2"}},
      {"(p1 ∩ p2)Q3", {"x*y*z*e1", "x*y*z*e3 - y*z*e1", "x^2*y*z*e2"}},
      {"(p1 ∩ p3)Q2", {"x*z*e1", "x*z*e3", "x*y^2*z*e2"}},
      {"(p2 ∩ p3)Q1", {"x*y*e3", "x*y*z*e1", "x*y^2*e1 + x*y*z*e2", "x*y*z^2*e2"}},
  };
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(t.summands[i].label, expected[i].first);
    EXPECT_EQ(t.summands[i].product, sub(s, expected[i].second)) << expected[i].first;
  }
  EXPECT_EQ(t.radical_term, sub(s, {"x*y*z*e1", "x*y*z*e2", "x*y*z*e3"}));
}

TEST(Envelope, SinglePrimaryComponent) {
  const auto s = testing::load("primary_envelope.ses");
  const auto t = envelope(s.decomposition_named("N"));
  EXPECT_TRUE(t.summands.empty());
  EXPECT_EQ(t.result, sub(s, {"x*e1", "x*e2", "y^3*e2"}));
  EXPECT_EQ(t.result, s.module_named("E"));
}

TEST(Envelope, PrimeSubmoduleIsFixed) {
  const auto s = testing::load("weakly_radical.ses");
  const auto& d = s.decomposition_named("W1");
  EXPECT_EQ(envelope(d).result, s.module_named("W1"));
}

TEST(Envelope, RejectsInvalidOrLargeDecompositions) {
  const auto s = testing::load("three_primes.ses");
  const auto& d = s.decomposition_named("N");
  Decomposition bad(d.target(), {d[1], d[2]});
  EXPECT_THROW(envelope(bad), PreconditionError);
  EnvelopeOptions small;
  small.max_components = 2;
  EXPECT_THROW(envelope(d, small), PreconditionError);
}

TEST(Envelope, DecompositionIndependence) {
  const auto s = header("x, y", 1);
  const auto n = sub(s, {"x^2", "x*y"});
  const PrimaryComponent isolated{sub(s, {"x"}), ideal(s, {"x"}), "", ""};
  Decomposition d1(n, {isolated, {sub(s, {"x^2", "y"}), ideal(s, {"x", "y"}), "", ""}});
  Decomposition d2(n, {isolated, {sub(s, {"x^2", "x*y", "y^2"}), ideal(s, {"x", "y"}), "", ""}});
  EXPECT_TRUE(verify_decomposition(d1).valid());
  EXPECT_TRUE(verify_decomposition(d2).valid());
  EXPECT_EQ(envelope(d1).result, envelope(d2).result);
}

TEST(Envelope, CorpusProperties) {
  std::mt19937 rng(2);
  for (const auto& entry : testing::monomial_corpus(40, 13)) {
    const auto d = monomial_primary_decomposition(entry.n);
    const auto t = envelope(d);
    EXPECT_TRUE(entry.n.is_subset_of(t.result));
    EXPECT_EQ(t.summands.size(), (std::size_t{1} << d.size()) - 2);
    for (const auto& summand : t.summands) {
      EXPECT_TRUE(summand.product.is_subset_of(t.result));
      for (const auto& f : summand.prime_part.reduced_gb()) {
        const auto sat = stable_quotient(entry.n, f).module;
        for (const auto& v : summand.module_part.reduced_gb()) EXPECT_TRUE(sat.contains(v));
      }
    }
    if (t.result == entry.n) {
      for (auto i : isolated_components(d)) {
        EXPECT_TRUE(ideal_module_product(d[i].prime, Submodule::whole(entry.n.context()))
                        .is_subset_of(d[i].primary));
      }
    }
    const auto colon_ideal = annihilator(entry.n);
    if (d.size() == 1 && colon_ideal == d[0].prime) {
      EXPECT_EQ(annihilator(t.result), d[0].prime);
    }
  }
}

TEST(IterateEnvelope, PrimeModuleIsFixedImmediately) {
  const auto s = testing::load("weakly_radical.ses");
  const auto r = iterate_envelope(s.module_named("W1"), session_oracle(s));
  EXPECT_EQ(r.steps, 1u);
  EXPECT_EQ(r.fixed_point, s.module_named("W1"));
  ASSERT_EQ(r.chain.size(), 2u);
  EXPECT_EQ(r.chain[0], r.chain[1]);
}

TEST(IterateEnvelope, OneProductiveStep) {
  const auto s = testing::load("weakly_radical.ses");
  const auto r = iterate_envelope(s.module_named("W2"), session_oracle(s));
  EXPECT_EQ(r.steps, 2u);
  EXPECT_EQ(r.fixed_point, sub(s, {"y*e2", "x*e1", "x*e2", "x*e3", "y^3*z*e1 + z^3*e3"}));
  ASSERT_EQ(r.chain.size(), 3u);
  EXPECT_FALSE(r.chain[0] == r.chain[1]);
}

TEST(IterateEnvelope, OracleMissAndLimit) {
  const auto s = testing::load("weakly_radical.ses");
  DecompositionOracle empty;
  EXPECT_THROW(iterate_envelope(s.module_named("W2"), empty), OracleMiss);
  EXPECT_THROW(iterate_envelope(s.module_named("W2"), session_oracle(s), 1), IterationLimit);
}

TEST(IterateEnvelope, ChainAscendsOnCorpus) {
  const DecompositionOracle oracle;
  for (const auto& entry : testing::monomial_corpus(40, 14)) {
    const auto r = iterate_envelope(entry.n, oracle);
    for (std::size_t i = 1; i < r.chain.size(); ++i) {
      EXPECT_TRUE(r.chain[i - 1].is_subset_of(r.chain[i]));
      if (i + 1 < r.chain.size()) EXPECT_FALSE(r.chain[i - 1] == r.chain[i]);
    }
    EXPECT_EQ(r.chain.back(), r.chain[r.chain.size() - 2]);
    EXPECT_EQ(r.steps + 1, r.chain.size());
  }
}

TEST(WeaklyClosure, Examples) {
  const auto s = testing::load("weakly_radical.ses");
  const auto oracle = session_oracle(s);
  const auto& n = s.module_named("N");
  EXPECT_EQ(weakly_closure(n, s.prime_named("pz"), oracle), s.module_named("W1"));
  EXPECT_EQ(weakly_closure(n, s.prime_named("px"), oracle), s.module_named("EW2"));
  EXPECT_EQ(weakly_closure(s.module_named("W1"), s.prime_named("pz"), oracle), s.module_named("W1"));
  EXPECT_THROW(weakly_closure(n, ideal(s, {"y"}), oracle), PreconditionError);
}

TEST(WeaklyRadical, Examples) {
  const auto s = testing::load("weakly_radical.ses");
  const auto oracle = session_oracle(s);
  const auto expected = sub(s, {"y*z*e2", "x*z*e1", "x*z*e2", "x*z*e3", "x^2*e1 + y^2*e2",
                                "y^3*z*e1 + z^3*e3"});
  const auto r = weakly_radical(s.module_named("N"), std::nullopt, oracle);
  EXPECT_EQ(r.result, expected);
  ASSERT_EQ(r.primes.size(), 2u);
  const std::vector<Ideal> given{s.prime_named("pz"), s.prime_named("px")};
  EXPECT_EQ(weakly_radical(s.module_named("N"), given, oracle).result, expected);
  const std::vector<Ideal> wrong{ideal(s, {"y"})};
  EXPECT_THROW(weakly_radical(s.module_named("N"), wrong, oracle), PreconditionError);
  EXPECT_EQ(weakly_radical(s.module_named("W1"), std::nullopt, oracle).result, s.module_named("W1"));
}

TEST(WeaklyRadical, RankOneMonomial) {
  const auto s = header("x", 1);
  const auto r = weakly_radical(sub(s, {"x^2"}), std::nullopt, DecompositionOracle{});
  EXPECT_EQ(r.result, sub(s, {"x"}));
}

TEST(WeaklyRadical, NonMonomialColonNeedsPrimes) {
  const auto s = header("x, y", 1);
  EXPECT_THROW(weakly_radical(sub(s, {"x^2 + y^3"}), std::nullopt, DecompositionOracle{}),
               PreconditionError);
}

TEST(WeaklyRadical, ClosureInsideWeaklyPrimeOverModules) {
  // any certified weakly prime P ⊇ N with isolated prime p contains wcl_p(N + pM)
  const auto s = testing::load("weakly_radical.ses");
  const auto oracle = session_oracle(s);
  const auto& n = s.module_named("N");
  const auto& w1 = s.decomposition_named("W1");
  ASSERT_EQ(certify_weakly_prime(w1).status, WeakStatus::CertifiedWeaklyPrime);
  EXPECT_TRUE(weakly_closure(n, s.prime_named("pz"), oracle).is_subset_of(w1.target()));
  // monotone in the prime
  const auto small = weakly_closure(n, s.prime_named("px"), oracle);
  const auto large = weakly_closure(n, s.prime_named("pxz"), oracle);
  EXPECT_TRUE(small.is_subset_of(large));
}

TEST(CertifyWeaklyPrime, Examples) {
  const auto s3 = testing::load("weakly_radical.ses");
  EXPECT_EQ(certify_weakly_prime(s3.decomposition_named("W1")).status,
            WeakStatus::CertifiedWeaklyPrime);
  const auto s1 = testing::load("three_primes.ses");
  EXPECT_EQ(certify_weakly_prime(s1.decomposition_named("N")).status, WeakStatus::Unknown);
  const auto s2 = testing::load("primary_envelope.ses");
  const auto d = monomial_primary_decomposition(s2.module_named("E"));
  const auto v = certify_weakly_prime(d);
  EXPECT_EQ(v.status, WeakStatus::Unknown);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(WeakCounterexample, PaperWitness) {
  const auto s = testing::load("primary_envelope.ses");
  const auto& e = s.module_named("E");
  const auto v = find_weak_counterexample(e, 3);
  ASSERT_EQ(v.status, WeakStatus::Counterexample);
  EXPECT_EQ(to_string(v.witness->a), "y");
  EXPECT_EQ(to_string(v.witness->b), "y");
  EXPECT_EQ(to_string(v.witness->m), "y*e2");
  EXPECT_TRUE(e.contains(v.witness->a * v.witness->b * v.witness->m));
  EXPECT_FALSE(e.contains(v.witness->a * v.witness->m));
  EXPECT_THROW(find_weak_counterexample(e, 0), PreconditionError);
}

TEST(WeakCounterexample, SmallCases) {
  const auto s = header("x", 1);
  const auto v = find_weak_counterexample(sub(s, {"x^2"}), 2);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(to_string(v.witness->a), "x");
  EXPECT_EQ(to_string(v.witness->b), "x");
  EXPECT_EQ(to_string(v.witness->m), "e1");
  const auto t = testing::load("weakly_radical.ses");
  EXPECT_EQ(find_weak_counterexample(t.module_named("W1"), 3).status, WeakStatus::Unknown);
  EXPECT_THROW(find_weak_counterexample(sub(s, {"x"}), 0), PreconditionError);
}

TEST(WeakCounterexample, EnumerationOrder) {
  const auto mons = monomials_up_to(3, 2);
  ASSERT_EQ(mons.size(), 10u);
  std::vector<std::string> names;
  const auto ring = make_ring({"x", "y", "z"});
  for (const auto& m : mons) names.push_back(to_string(m, *ring));
  EXPECT_EQ(names, (std::vector<std::string>{"1", "z", "y", "x", "z^2", "y*z", "x*z", "y^2",
                                             "x*y", "x^2"}));
}

TEST(SemiprimeSpotCheck, Examples) {
  const auto s = header("x", 1);
  const auto w = semiprime_spot_check(sub(s, {"x^2"}), 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(to_string(w->r), "x");
  EXPECT_EQ(to_string(w->m), "e1");
  EXPECT_EQ(w->k, 2u);
  EXPECT_FALSE(semiprime_spot_check(sub(s, {"x"}), 3).has_value());
  EXPECT_THROW(semiprime_spot_check(Submodule::whole(s.module()), 2), PreconditionError);
}

TEST(SemiprimeSpotCheck, EnvelopeOfIncomparablePrimes) {
  // The envelope here is not semiprime: y^2 * x*e1 lies in it, y * x*e1 does not.
  const auto s = testing::load("three_primes.ses");
  const auto e = envelope(s.decomposition_named("N")).result;
  const auto w = semiprime_spot_check(e, 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(to_string(w->r), "y");
  EXPECT_EQ(to_string(w->m), "x*e1");
  EXPECT_EQ(w->k, 2u);
  EXPECT_TRUE(e.contains(s.parse_vector("x*y^2*e1")));
  EXPECT_FALSE(e.contains(s.parse_vector("x*y*e1")));
}

TEST(SemiprimeSpotCheck, PrimeModulesHaveNoViolation) {
  const auto s = testing::load("weakly_radical.ses");
  EXPECT_FALSE(semiprime_spot_check(s.module_named("W1"), 3).has_value());
  EXPECT_FALSE(semiprime_spot_check(s.module_named("EW2"), 3).has_value());
}

}  // namespace
}  // namespace envrad
