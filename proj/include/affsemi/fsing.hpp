#pragma once

// Characteristic-p consequences of the p-weak normalization for k[A]:
// F-injective / F-nilpotent classification, the uniform bound on Frobenius
// test exponents, and Frobenius closures of monomial ideals. None of this
// depends on the field beyond its characteristic.

#include <optional>
#include <vector>

#include "affsemi/semigroup.hpp"

namespace affsemi {

/// Monomial ideal of k[A], given by exponent vectors in A. The exponent
/// list is kept minimal under A-divisibility and sorted.
class MonomialIdeal {
 public:
  MonomialIdeal(AffineSemigroup A, std::vector<IntVec> exponents);

  const AffineSemigroup& semigroup() const { return semigroup_; }
  const std::vector<IntVec>& exponents() const { return exponents_; }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  AffineSemigroup semigroup_;
  std::vector<IntVec> exponents_;
};

struct Classification {
  Int prime;
  bool normal = false;
  bool seminormal = false;
  bool p_weakly_normal = false;
  bool f_injective = false;
  bool f_nilpotent = false;
  unsigned fte_upper_bound = 0;
  std::vector<Int> bad_primes;
};

Classification classify(const AffineSemigroup& A, const Int& p);
unsigned fte_bound(const AffineSemigroup& A, const Int& p);

/// The semigroup data a Frobenius-closure computation in characteristic p
/// needs, computed once.
struct CharacteristicData {
  Int prime;
  AffineSemigroup normalization;
  WkpResult weak;

  static CharacteristicData compute(const AffineSemigroup& A, const Int& p);
};

/// x^v ∈ I. Throws PreconditionError if v ∉ A.
bool ideal_member(const MonomialIdeal& I, const IntVec& v);

/// Least e with p^e v ∈ ∪_i (p^e a_i + A), if x^v lies in the Frobenius
/// closure of I; nullopt otherwise. Cross-checked against the criterion
/// v - a_i ∈ *A for some i. Throws PreconditionError if v ∉ A.
std::optional<unsigned> frobenius_closure_member(const MonomialIdeal& I, const IntVec& v,
                                                 const CharacteristicData& data);
std::optional<unsigned> frobenius_closure_member(const MonomialIdeal& I, const IntVec& v,
                                                 const Int& p);

struct FrobeniusClosure {
  MonomialIdeal closure;
  Int degree_bound;
  unsigned n0 = 0;
  /// Generators found by the degree sweep but not among the module candidates.
  std::vector<IntVec> sweep_only;
};

/// Generators of the Frobenius closure of I, from the candidates a_i + w
/// (w a module generator of *A over A) plus a sweep over all v ∈ A of
/// coordinate sum <= degree_bound. Every generator is certified against
/// the p^N0 containment. Default bound: 2 * (max coordinate sum of I's
/// exponents + max coordinate sum of the module generators).
FrobeniusClosure frobenius_closure_gens(const MonomialIdeal& I, const CharacteristicData& data,
                                        std::optional<Int> degree_bound = std::nullopt);
FrobeniusClosure frobenius_closure_gens(const MonomialIdeal& I, const Int& p,
                                        std::optional<Int> degree_bound = std::nullopt);

/// Every element of A with coordinate sum at most `bound`, sorted.
std::vector<IntVec> semigroup_elements_up_to(const AffineSemigroup& A, const Int& bound);

}  // namespace affsemi
