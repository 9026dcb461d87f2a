#include "affsemi/fsing.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "affsemi/error.hpp"

namespace affsemi {

namespace {

void require_in_semigroup(const AffineSemigroup& A, const IntVec& v, const char* what) {
  if (!membership(A, v))
    throw PreconditionError(std::string(what) + ": " + to_string(v) + " is not in the semigroup");
}

// Keeps only exponents not divisible (in A) by another one.
std::vector<IntVec> minimal_exponents(const AffineSemigroup& A, std::vector<IntVec> exps) {
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::stable_sort(exps.begin(), exps.end(), [](const IntVec& a, const IntVec& b) {
    return coordinate_sum(a) < coordinate_sum(b);
  });
  std::vector<IntVec> kept;
  for (const IntVec& v : exps) {
    bool divisible = std::any_of(kept.begin(), kept.end(), [&](const IntVec& u) {
      return membership(A, v - u).has_value();
    });
    if (!divisible) kept.push_back(v);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool in_translates(const AffineSemigroup& S, const std::vector<IntVec>& shifts, const IntVec& v,
                   const Int& scale) {
  return std::any_of(shifts.begin(), shifts.end(), [&](const IntVec& a) {
    return membership(S, scale * (v - a)).has_value();
  });
}

}  // namespace

MonomialIdeal::MonomialIdeal(AffineSemigroup A, std::vector<IntVec> exponents)
    : semigroup_(std::move(A)) {
  for (const IntVec& e : exponents) require_in_semigroup(semigroup_, e, "monomial ideal");
  exponents_ = minimal_exponents(semigroup_, std::move(exponents));
}

Classification classify(const AffineSemigroup& A, const Int& p) {
  if (!is_prime(p)) throw PreconditionError("classify: " + p.get_str() + " is not prime");
  const AffineSemigroup Abar = normalization(A);
  const WkpResult weak = wkp(A, Abar, p);

  Classification c;
  c.prime = p;
  c.bad_primes = bad_primes(A);
  Int q = 2;
  while (!is_prime(q) || std::find(c.bad_primes.begin(), c.bad_primes.end(), q) != c.bad_primes.end())
    ++q;
  const AffineSemigroup seminormal = q == p ? weak.semigroup : wkp(A, Abar, q).semigroup;

  c.normal = same_monoid(A, Abar);
  c.seminormal = same_monoid(A, seminormal);
  c.p_weakly_normal = same_monoid(A, weak.semigroup);
  c.f_injective = c.p_weakly_normal;
  c.f_nilpotent = same_monoid(weak.semigroup, Abar);
  c.fte_upper_bound = weak.n0;
  return c;
}

unsigned fte_bound(const AffineSemigroup& A, const Int& p) { return wkp(A, p).n0; }

CharacteristicData CharacteristicData::compute(const AffineSemigroup& A, const Int& p) {
  if (!is_prime(p)) throw PreconditionError(p.get_str() + " is not prime");
  AffineSemigroup Abar = affsemi::normalization(A);
  WkpResult weak = wkp(A, Abar, p);
  return {p, std::move(Abar), std::move(weak)};
}

bool ideal_member(const MonomialIdeal& I, const IntVec& v) {
  require_in_semigroup(I.semigroup(), v, "ideal_member");
  return in_translates(I.semigroup(), I.exponents(), v, Int(1));
}

// Monomials of k[*A] are Frobenius closed, so the closure of I is
// I k[*A] ∩ k[A]: x^v is in it iff v - a_i ∈ *A for some i. The exponent
// search below is the definition, bounded by N0.
std::optional<unsigned> frobenius_closure_member(const MonomialIdeal& I, const IntVec& v,
                                                 const CharacteristicData& data) {
  const AffineSemigroup& A = I.semigroup();
  require_in_semigroup(A, v, "frobenius_closure_member");
  const bool by_weak = in_translates(data.weak.semigroup, I.exponents(), v, Int(1));

  std::optional<unsigned> witness;
  for (unsigned e = 0; e <= data.weak.n0 && !witness; ++e)
    if (in_translates(A, I.exponents(), v, ipow(data.prime, e))) witness = e;

  if (by_weak != witness.has_value())
    throw std::logic_error("frobenius_closure_member: criteria disagree at " + to_string(v));
  return witness;
}

std::optional<unsigned> frobenius_closure_member(const MonomialIdeal& I, const IntVec& v,
                                                 const Int& p) {
  return frobenius_closure_member(I, v, CharacteristicData::compute(I.semigroup(), p));
}

std::vector<IntVec> semigroup_elements_up_to(const AffineSemigroup& A, const Int& bound) {
  const IntVec zero(A.ambient_dim(), Int(0));
  std::unordered_set<IntVec, IntVecHash> seen{zero};
  std::vector<IntVec> frontier{zero};
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& v : frontier)
      for (const IntVec& g : A.generators()) {
        IntVec w = v + g;
        if (coordinate_sum(w) > bound || seen.contains(w)) continue;
        seen.insert(w);
        next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  std::vector<IntVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

FrobeniusClosure frobenius_closure_gens(const MonomialIdeal& I, const CharacteristicData& data,
                                        std::optional<Int> degree_bound) {
  const AffineSemigroup& A = I.semigroup();
  const std::vector<IntVec> W =
      module_generators(A, data.weak.semigroup, data.prime, data.weak.n0);

  Int max_ideal = 0;
  for (const IntVec& a : I.exponents()) max_ideal = std::max(max_ideal, coordinate_sum(a));
  Int max_module = 0;
  for (const IntVec& w : W) max_module = std::max(max_module, coordinate_sum(w));
  const Int bound = degree_bound.value_or(2 * (max_ideal + max_module));
  if (bound < max_ideal)
    throw PreconditionError("frobenius_closure_gens: degree bound " + bound.get_str() +
                            " is below the ideal's own generators (" + max_ideal.get_str() + ")");

  std::vector<IntVec> candidates;
  for (const IntVec& a : I.exponents())
    for (const IntVec& w : W) {
      IntVec v = a + w;
      if (membership(A, v) && frobenius_closure_member(I, v, data)) candidates.push_back(std::move(v));
    }
  const std::vector<IntVec> from_candidates = minimal_exponents(A, candidates);

  std::vector<IntVec> all = candidates;
  for (const IntVec& v : semigroup_elements_up_to(A, bound))
    if (frobenius_closure_member(I, v, data)) all.push_back(v);
  MonomialIdeal closure(A, all);

  const Int scale = ipow(data.prime, data.weak.n0);
  for (const IntVec& v : closure.exponents())
    if (!in_translates(A, I.exponents(), v, scale))
      throw std::logic_error("frobenius_closure_gens: " + to_string(v) +
                             " fails the p^N0 containment");

  std::vector<IntVec> sweep_only;
  for (const IntVec& v : closure.exponents())
    if (!std::binary_search(from_candidates.begin(), from_candidates.end(), v))
      sweep_only.push_back(v);
  return {std::move(closure), bound, data.weak.n0, std::move(sweep_only)};
}

FrobeniusClosure frobenius_closure_gens(const MonomialIdeal& I, const Int& p,
                                        std::optional<Int> degree_bound) {
  return frobenius_closure_gens(I, CharacteristicData::compute(I.semigroup(), p),
                                std::move(degree_bound));
}

}  // namespace affsemi
