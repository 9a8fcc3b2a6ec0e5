// Acceptance suite: one PASS/FAIL line per criterion.  All comparisons are
// exact (reduced Groebner basis equality or exact string output).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "envrad/commands.hpp"
#include "envrad/envelope.hpp"
#include "support.hpp"

namespace {

using namespace envrad;
using testing::sub;

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Submodule parse_output(const Session& s, const std::string& out) {
  std::vector<std::string> gens;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) gens.push_back(line);
  return sub(s, gens);
}

DecompositionOracle session_oracle(const Session& s) {
  DecompositionOracle oracle;
  for (auto& d : s.fixtures()) oracle.add_fixture(std::move(d));
  return oracle;
}

const std::vector<testing::CorpusEntry>& corpus() {
  static const auto c = testing::monomial_corpus(60);
  return c;
}

void envelope_three_primes(Check& c) {
  const auto s = testing::load("three_primes.ses");
  c.expect(s.module_named("N") == sub(s, {"x*z*e3 - z*e1", "x^2*e3", "x^2*y^3*e1 + x^2*y^2*z*e2"}),
           "N differs from the published generators");
  const auto& d = s.decomposition_named("N");
  c.expect(verify_decomposition(d).valid(), "certificate does not verify");
  const auto expected = sub(s, {"z*e1", "x*e3", "x*y*z*e2", "x*y^2*e1"});
  const auto r = run_command(s, "env", {"N"}, {});
  c.expect(r.exit_code == 0, "env failed: " + r.err);
  c.expect(parse_output(s, r.out) == expected, "env output differs");
  const auto t = envelope(d);
  c.expect(t.result == expected, "envelope differs");
  const std::vector<std::vector<std::string>> products{
      {"x*z*e1", "x*z*e3 - z*e1", "x^2*y^2*z*e2"},
      {"x*y*z*e3 - y*z*e1", "x^2*y*e3", "x^2*y^2*e1 + x^2*y*z*e2"},
      {"x*e3", "x*z*e1", "x*y^3*e1 + x*y^2*z*e2"},
      {"x*y*z*e1", "x*y*z*e3 - y*z*e1", "x^2*y*z*e2"},
      {"x*z*e1", "x*z*e3", "x*y^2*z*e2"},
      {"x*y*e3", "x*y*z*e1", "x*y^2*e1 + x*y*z*e2", "x*y*z^2*e2"},
  };
  c.expect(t.summands.size() == products.size(), "wrong number of subset products");
  for (std::size_t i = 0; i < products.size() && i < t.summands.size(); ++i) {
    c.expect(t.summands[i].product == sub(s, products[i]), "product " + t.summands[i].label + " differs");
  }
  c.expect(t.radical_term == sub(s, {"x*y*z*e1", "x*y*z*e2", "x*y*z*e3"}), "radical term differs");
}

void primary_not_weakly_prime(Check& c) {
  const auto s = testing::load("primary_envelope.ses");
  const auto& n = s.module_named("N");
  c.expect(n == sub(s, {"x*e1 + y^3*e2", "x^2*e1", "x*e2"}), "N differs from the published generators");
  c.expect(annihilator(n) == testing::ideal(s, {"x^2"}), "(N : M) differs");
  const auto e = envelope(s.decomposition_named("N")).result;
  c.expect(e == sub(s, {"x*e1", "x*e2", "y^3*e2"}), "envelope differs");
  c.expect(e == s.module_named("E"), "session envelope differs");
  CommandOptions o;
  o.bound = 3;
  const auto r = run_command(s, "weakcheck", {"E"}, o);
  c.expect(r.out == "a=y b=y m=y*e2\n", "weakcheck printed '" + r.out + "'");
  c.expect(e.contains(s.parse_vector("[0, y^3]")), "(0, y^3) not in the envelope");
  c.expect(!e.contains(s.parse_vector("[0, y^2]")), "(0, y^2) in the envelope");
}

void weakly_radical_example(Check& c) {
  const auto s = testing::load("weakly_radical.ses");
  const auto& n = s.module_named("N");
  c.expect(n == sub(s, {"x^2*e1 + y^2*e2", "x^2*z*e2", "y^3*z*e1 + z^3*e3"}),
           "N differs from the published generators");
  const auto whole = Submodule::whole(s.module());
  const auto w1 = sum(n, ideal_module_product(testing::ideal(s, {"z"}), whole));
  const auto w2 = sum(n, ideal_module_product(testing::ideal(s, {"x"}), whole));
  c.expect(w1 == sub(s, {"z*e1", "z*e2", "z*e3", "x^2*e1 + y^2*e2"}), "W1 differs");
  c.expect(w2 == sub(s, {"x*e1", "x*e2", "x*e3", "y^2*e2", "y^3*z*e1 + z^3*e3"}), "W2 differs");
  const Decomposition cert(w2, {{sub(s, {"e2", "x*e1", "x*e3", "y^3*e1 + z^2*e3"}),
                                 testing::ideal(s, {"x"}), "Q1", "p1"},
                                {sub(s, {"e2", "z*e1", "z*e3", "x*e1", "x*e3"}),
                                 testing::ideal(s, {"x", "z"}), "Q2", "p2"},
                                {sub(s, {"e3", "x*e1", "x*e2", "y^2*e1", "y^2*e2"}),
                                 testing::ideal(s, {"x", "y"}), "Q3", "p3"}});
  c.expect(verify_decomposition(cert).valid(), "W2 certificate does not verify");
  const auto ew2 = sub(s, {"y*e2", "x*e1", "x*e2", "x*e3", "y^3*z*e1 + z^3*e3"});
  c.expect(envelope(cert).result == ew2, "envelope of W2 differs");
  const auto oracle = session_oracle(s);
  const auto it = iterate_envelope(w2, oracle);
  c.expect(it.steps <= 2 && it.fixed_point == ew2, "iteration from W2 did not stop at the envelope");
  c.expect(iterate_envelope(w1, oracle).steps == 1, "W1 is not fixed immediately");
  const auto expected = sub(s, {"y*z*e2", "x*z*e1", "x*z*e2", "x*z*e3", "x^2*e1 + y^2*e2",
                                "y^3*z*e1 + z^3*e3"});
  c.expect(weakly_radical(n, std::nullopt, oracle).result == expected, "wrad differs");
  const auto r = run_command(s, "wrad", {"N"}, {});
  c.expect(r.exit_code == 0 && parse_output(s, r.out) == expected, "wrad command differs");
}

void stable_quotients(Check& c) {
  std::mt19937 rng(40);
  std::size_t instances = 0;
  for (const auto& entry : corpus()) {
    const auto d = monomial_primary_decomposition(entry.n);
    auto kept_intersection = [&](auto outside) {
      std::vector<Submodule> kept;
      for (const auto& comp : d.components()) {
        if (outside(comp.prime)) kept.push_back(comp.primary);
      }
      return intersect_all(entry.n.context(), kept);
    };
    std::vector<Polynomial> fs;
    for (int k = 0; k < 5; ++k) {
      const auto f = testing::random_polynomial(rng);
      fs.push_back(f);
      const auto lhs = stable_quotient(entry.n, f).module;
      const auto rhs = kept_intersection([&](const Ideal& p) { return !p.contains(f); });
      c.expect(lhs == rhs, "N : <f>^inf differs for f = " + to_string(f) + " on " + to_string(entry.n));
    }
    const Ideal i(entry.n.context()->ring(), {fs[0], fs[1]});
    const auto lhs = stable_quotient(entry.n, i).module;
    const auto rhs = kept_intersection([&](const Ideal& p) { return !i.is_subset_of(p); });
    c.expect(lhs == rhs, "N : I^inf differs on " + to_string(entry.n));
    ++instances;
  }
  c.expect(instances >= 50, "corpus too small");
}

void envelope_sandwich(Check& c) {
  for (const auto& entry : corpus()) {
    const auto d = monomial_primary_decomposition(entry.n);
    const auto t = envelope(d);
    c.expect(entry.n.is_subset_of(t.result), "N not inside its envelope");
    for (const auto& summand : t.summands) {
      c.expect(summand.product.is_subset_of(t.result), "subset product outside the envelope");
      for (const auto& f : summand.prime_part.reduced_gb()) {
        const auto sat = stable_quotient(entry.n, f).module;
        for (const auto& v : summand.module_part.reduced_gb()) {
          c.expect(sat.contains(v), "summand term f*v with v outside N : <f>^inf");
        }
      }
    }
  }
}

void closures(Check& c) {
  std::mt19937 rng(41);
  for (const auto& entry : corpus()) {
    const auto d = monomial_primary_decomposition(entry.n);
    const auto colon_ideal = annihilator(entry.n);
    const auto primes = testing::covering_primes(colon_ideal, 3, rng);
    // fewer than 3 monomial primes contain (N : M) only when it is nearly maximal
    c.expect(!primes.empty(), "no monomial prime over (N : M)");
    for (const auto& p : primes) {
      c.expect(closure(d, p) == testing::closure_via_colon(d, p), "cl_p differs from N : r0");
      const auto w = sum(entry.n, ideal_module_product(p, Submodule::whole(entry.n.context())));
      c.expect(annihilator(w) == p, "(N + pM : M) differs from p");
    }
  }
}

void monomial_decompositions(Check& c) {
  for (const auto& entry : corpus()) {
    c.expect(verify_decomposition(monomial_primary_decomposition(entry.n)).valid(),
             "automatic decomposition does not verify: " + to_string(entry.n));
  }
  const auto ring = make_ring({"x", "y"});
  std::size_t ideals = 0;
  for (const auto& gens : oracle::staircase_ideals(3)) {
    const auto msg = testing::compare_with_oracle(ring, gens, 3);
    c.expect(msg.empty(), msg);
    ++ideals;
  }
  c.expect(ideals == 70, "expected 70 ideals");
}

void decomposition_independence(Check& c) {
  const auto s = testing::header("x, y", 1);
  const auto n = sub(s, {"x^2", "x*y"});
  const PrimaryComponent isolated{sub(s, {"x"}), testing::ideal(s, {"x"}), "", ""};
  const Decomposition d1(n, {isolated, {sub(s, {"x^2", "y"}), testing::ideal(s, {"x", "y"}), "", ""}});
  const Decomposition d2(
      n, {isolated, {sub(s, {"x^2", "x*y", "y^2"}), testing::ideal(s, {"x", "y"}), "", ""}});
  c.expect(verify_decomposition(d1).valid(), "first decomposition does not verify");
  c.expect(verify_decomposition(d2).valid(), "second decomposition does not verify");
  c.expect(envelope(d1).result == envelope(d2).result, "envelopes differ");
}

bool chain_primes(const Decomposition& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (!d[i].prime.is_subset_of(d[j].prime) && !d[j].prime.is_subset_of(d[i].prime)) return false;
    }
  }
  return true;
}

void certifier_coherence(Check& c) {
  const auto s = testing::load("weakly_radical.ses");
  c.expect(certify_weakly_prime(s.decomposition_named("W1")).status == WeakStatus::CertifiedWeaklyPrime,
           "W1 not certified");
  std::vector<Decomposition> fixtures = s.fixtures();
  for (const auto& entry : corpus()) fixtures.push_back(monomial_primary_decomposition(entry.n));
  std::size_t certified = 0;
  for (const auto& d : fixtures) {
    const bool expected = chain_primes(d) && envelope(d).result == d.target();
    const auto v = certify_weakly_prime(d);
    c.expect((v.status == WeakStatus::CertifiedWeaklyPrime) == expected,
             "certifier disagrees on " + to_string(d.target()));
    if (v.status != WeakStatus::CertifiedWeaklyPrime) continue;
    ++certified;
    c.expect(!find_weak_counterexample(d.target(), 3).witness.has_value(),
             "witness found for a certified module " + to_string(d.target()));
  }
  c.expect(certified >= 5, "too few certified fixtures to be meaningful");
}

struct Criterion {
  int number;
  const char* title;
  double seconds_limit;  // 0 means none
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "envelope of a three-component certificate and its six subset products", 5,
       envelope_three_primes},
      {2, "primary module whose envelope has a weak-primality witness", 2, primary_not_weakly_prime},
      {3, "weakly closures, iterated envelope and weakly radical in rank 3", 10,
       weakly_radical_example},
      {4, "stable quotients equal intersections of surviving components", 60, stable_quotients},
      {5, "envelope sandwich, subset products and summand soundness", 0, envelope_sandwich},
      {6, "closure formula against the colon construction; (N + pM : M) = p", 0, closures},
      {7, "automatic monomial decompositions against brute force", 0, monomial_decompositions},
      {8, "envelope independent of the embedded component", 0, decomposition_independence},
      {9, "certifier coherence with the bounded witness search", 0, certifier_coherence},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.seconds_limit > 0 && secs > cr.seconds_limit) {
      check.failures.push_back("took " + std::to_string(secs) + " s");
    }
    const bool ok = check.failures.empty();
    if (!ok) ++failed;
    std::printf("criterion %d: %s  %s (%.2f s)\n", cr.number, ok ? "PASS" : "FAIL", cr.title, secs);
    for (std::size_t i = 0; i < check.failures.size() && i < 5; ++i) {
      std::printf("    %s\n", check.failures[i].c_str());
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
