// Acceptance checks 1-9. Prints one PASS/FAIL line per criterion and exits
// nonzero if any failed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "oracles.hpp"

#include "affsemi/dioph.hpp"
#include "affsemi/fsing.hpp"
#include "affsemi/semigroup.hpp"

using namespace affsemi;
using oracle::vec;

namespace {

// Collects failed conditions of one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

AffineSemigroup monoid(std::size_t n, std::vector<IntVec> gens) { return minimalize(n, std::move(gens)); }

bool in(const AffineSemigroup& A, const IntVec& v) { return membership(A, v).has_value(); }

std::vector<AffineSemigroup> fixtures() {
  return {oracle::M_semigroup(),     oracle::M_prime_semigroup(), oracle::pinched_veronese(),
          oracle::numerical({2, 3}), oracle::numerical({3, 5}),   oracle::numerical({4, 6, 9}),
          oracle::free_semigroup(2)};
}

std::string show(const AffineSemigroup& A) {
  std::string s = "<";
  for (const IntVec& g : A.generators()) s += to_string(g);
  return s + ">";
}

void criterion1(Check& c) {
  const AffineSemigroup M = oracle::M_semigroup();
  struct Case {
    long p;
    AffineSemigroup expected;
    unsigned n0;
  };
  const std::vector<Case> cases = {
      {2, monoid(3, {vec({0, 0, 3}), vec({0, 1, 0}), vec({1, 0, 0}), vec({0, 1, 2}), vec({0, 1, 1})}), 2},
      {3, monoid(3, {vec({2, 0, 0}), vec({0, 0, 1}), vec({0, 1, 0}), vec({1, 1, 0})}), 1},
      {5, oracle::M_prime_semigroup(), 2},
  };
  for (const Case& k : cases) {
    WkpResult r = wkp(M, k.p);
    c.expect(same_monoid(r.semigroup, k.expected), "wkp p=" + std::to_string(k.p) + " gave " + show(r.semigroup));
    c.expect(r.n0 == k.n0, "n0 p=" + std::to_string(k.p) + " is " + std::to_string(r.n0));
  }
}

void criterion2(Check& c) {
  const AffineSemigroup A = oracle::M_semigroup();
  const AffineSemigroup plus = seminormalization(A);
  const AffineSemigroup w2 = wkp(A, 2).semigroup, w3 = wkp(A, 3).semigroup;
  c.expect(same_monoid(plus, oracle::M_prime_semigroup()), "seminormalization is " + show(plus));
  c.expect(in(plus, vec({1, 1, 1})) && !in(A, vec({1, 1, 1})), "(1,1,1)");
  c.expect(in(w2, vec({1, 0, 0})) && !in(plus, vec({1, 0, 0})), "(1,0,0)");
  c.expect(in(w3, vec({0, 0, 1})) && !in(plus, vec({0, 0, 1})), "(0,0,1)");
}

void criterion3(Check& c) {
  const AffineSemigroup A = oracle::pinched_veronese();
  const AffineSemigroup Abar = normalization(A);
  std::vector<IntVec> expected = A.generators();
  expected.push_back(vec({0, 1, 1}));
  std::sort(expected.begin(), expected.end());
  c.expect(Abar.generators() == expected, "normalization is " + show(Abar));
  c.expect(same_monoid(wkp(A, Abar, 2).semigroup, Abar), "p=2 weak normalization");
  for (long p : {3, 5, 7}) c.expect(same_monoid(wkp(A, Abar, p).semigroup, A), "p=" + std::to_string(p));
  c.expect(bad_primes(A) == std::vector<Int>{2}, "bad primes");
  c.expect(classify(A, 2).f_nilpotent, "F-nilpotent at 2");
  for (long p : {3, 5, 7}) c.expect(classify(A, p).f_injective, "F-injective at " + std::to_string(p));
}

void criterion4(Check& c) {
  c.expect(fte_bound(oracle::M_semigroup(), 2) == 2, "p=2");
  c.expect(fte_bound(oracle::M_semigroup(), 3) == 1, "p=3");
}

void criterion5(Check& c) {
  const AffineSemigroup N1 = oracle::free_semigroup(1);
  for (const AffineSemigroup& S : {oracle::numerical({2, 3}), oracle::numerical({3, 5}), oracle::numerical({4, 6, 9})})
    for (long p : {2, 3, 5}) {
      const std::string tag = show(S) + " p=" + std::to_string(p);
      c.expect(same_monoid(wkp(S, p).semigroup, N1), tag + " weak normalization");
      c.expect(classify(S, p).f_nilpotent, tag + " F-nilpotent");
    }
}

void criterion6(Check& c) {
  std::vector<AffineSemigroup> cases = {oracle::M_semigroup(), oracle::pinched_veronese()};
  oracle::Rng rng(606);
  while (cases.size() < 27) cases.emplace_back(3, oracle::random_nonneg_gens(rng, 3, 5, 4, 2));
  for (const AffineSemigroup& A : cases) {
    const AffineSemigroup Abar = normalization(A);
    for (long p : {2, 3, 5}) {
      const WkpResult r = wkp(A, Abar, p);
      const AffineSemigroup geo = geometric_wkp_oracle(A, Abar, p, r.n0);
      c.expect(same_monoid(geo, r.semigroup), show(A) + " p=" + std::to_string(p));
    }
  }
}

void criterion7(Check& c) {
  oracle::Rng rng(707);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = rng.uniform(1, 3), cols = rng.uniform(2, 5);
    const IntMat N = oracle::random_matrix(rng, rows, cols, -3, 3);
    const std::vector<IntVec> H = hilbert_homogeneous(N);
    const std::string tag = "system " + std::to_string(trial);
    for (const IntVec& h : H) c.expect(is_zero(N * h) && is_nonneg(h) && !is_zero(h), tag + " non-solution");
    for (const IntVec& a : H)
      for (const IntVec& b : H)
        if (a != b && oracle::leq(a, b)) c.expect(false, tag + " not an antichain");
    if (H.empty()) {
      c.expect(oracle::box_solutions(N, 6).size() == 1, tag + " missing solutions");
      continue;
    }
    const IntMat basis = IntMat::from_columns(cols, H);
    for (const IntVec& x : oracle::box_solutions(N, 6))
      c.expect(oracle::nonneg_feasible(basis, x), tag + " does not cover " + to_string(x));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    const IntMat L = IntMat::from_columns(n, oracle::random_nonneg_gens(rng, n, 4, 3));
    IntVec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Int(rng.uniform(0, 8)));
    const auto x = nonneg_solve(L, v);
    c.expect(x.has_value() == oracle::nonneg_feasible(L, v), "nonneg_solve " + to_string(v));
    if (x) c.expect(is_nonneg(*x) && L * *x == v, "nonneg_solve witness " + to_string(v));
  }
}

void criterion8(Check& c) {
  for (const AffineSemigroup& A : fixtures()) {
    const AffineSemigroup Abar = normalization(A);
    const AffineSemigroup plus = seminormalization(A, Abar);
    const std::string tag = show(A);
    c.expect(same_monoid(quotient_in_group(A, Abar, 1), A), tag + " quotient by 1");
    c.expect(torsion_primes(group(A), group(A)).empty(), tag + " torsion");
    std::vector<AffineSemigroup> weak;
    for (long p : {2, 3, 5, 7}) {
      const WkpResult r = wkp(A, Abar, p);
      const std::string tp = tag + " p=" + std::to_string(p);
      c.expect(is_subsemigroup(A, plus) && is_subsemigroup(plus, r.semigroup) && is_subsemigroup(r.semigroup, Abar),
               tp + " chain");
      const WkpResult again = wkp(r.semigroup, Abar, p);
      c.expect(same_monoid(again.semigroup, r.semigroup) && again.n0 == 0, tp + " idempotence");
      weak.push_back(r.semigroup);
    }
    // one prime with *pA equal to the normalization: the others are uniformly +A or uniformly the normalization
    for (std::size_t i = 0; i < weak.size(); ++i) {
      if (!same_monoid(weak[i], Abar)) continue;
      bool all_plus = true, all_bar = true;
      for (std::size_t j = 0; j < weak.size(); ++j) {
        if (j == i) continue;
        all_plus = all_plus && same_monoid(weak[j], plus);
        all_bar = all_bar && same_monoid(weak[j], Abar);
      }
      c.expect(all_plus || all_bar, tag + " dichotomy");
    }
  }
}

// The first `count` elements of A in coordinate-sum order.
std::vector<IntVec> sweep(const AffineSemigroup& A, std::size_t count) {
  for (Int bound = 4;; bound *= 2) {
    std::vector<IntVec> elems = semigroup_elements_up_to(A, bound);
    if (elems.size() < count) continue;
    std::stable_sort(elems.begin(), elems.end(),
                     [](const IntVec& a, const IntVec& b) { return coordinate_sum(a) < coordinate_sum(b); });
    elems.resize(count);
    return elems;
  }
}

void criterion9(Check& c) {
  for (const AffineSemigroup& A : fixtures()) {
    oracle::SmallMember in_A(A.generators());
    std::vector<IntVec> elems = sweep(A, 200);
    // ideal generated by the 3rd and 6th smallest nonzero elements
    const MonomialIdeal I(A, {elems[3], elems[6]});
    for (long p : {2, 3, 5}) {
      const std::string tag = show(A) + " p=" + std::to_string(p);
      const CharacteristicData data = CharacteristicData::compute(A, p);
      const Int scale = ipow(Int(p), data.weak.n0);
      const FrobeniusClosure fc = frobenius_closure_gens(I, data);
      for (const IntVec& v : fc.closure.exponents()) {
        bool sound = false;
        for (const IntVec& a : I.exponents()) sound = sound || in_A(scale * (v - a));
        c.expect(sound, tag + " unsound generator " + to_string(v));
      }
      for (const IntVec& v : elems) {
        bool by_weak = false;
        for (const IntVec& a : I.exponents()) by_weak = by_weak || in(data.weak.semigroup, v - a);
        bool by_loop = false;
        Int q = 1;
        for (unsigned e = 0; e <= data.weak.n0 && !by_loop; ++e, q *= p)
          for (const IntVec& a : I.exponents()) by_loop = by_loop || in_A(q * (v - a));
        c.expect(by_weak == by_loop, tag + " criteria disagree at " + to_string(v));
        c.expect(frobenius_closure_member(I, v, data).has_value() == by_loop, tag + " member at " + to_string(v));
      }
    }
  }
  const MonomialIdeal I(oracle::pinched_veronese(), {vec({1, 1, 0})});
  c.expect(frobenius_closure_member(I, vec({1, 2, 1}), 2) == std::optional<unsigned>(1), "char 2 witness");
  c.expect(!frobenius_closure_member(I, vec({1, 2, 1}), 3).has_value(), "char 3 absence");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"worked example: p-weak normalizations of M for p = 2, 3, 5", criterion1},
      {"seminormalization of M and separating elements", criterion2},
      {"pinched Veronese", criterion3},
      {"Frobenius test exponent bounds for M", criterion4},
      {"numerical semigroups", criterion5},
      {"geometric oracle agrees with wkp (2 fixed + 25 random semigroups)", criterion6},
      {"Hilbert bases and nonneg_solve against brute force", criterion7},
      {"structural properties across fixtures, p <= 7", criterion8},
      {"Frobenius closure soundness and criteria agreement", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("criterion %zu: %s  %s (%.2fs)\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first.c_str(), secs);
    for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k) std::printf("    %s\n", c.failures[k].c_str());
    std::fflush(stdout);
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
