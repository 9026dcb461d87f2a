#pragma once

// Affine semigroups A ⊆ N^n and their closures inside the normalization:
// quotients {v ∈ Ā : m v ∈ A}, the p-weak normalization with its exponent
// N0, the seminormalization and the finite set of primes separating them.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "affsemi/exactlin.hpp"
#include "affsemi/polyhedral.hpp"

namespace affsemi {

/// Finitely generated submonoid of N^n. Generators are non-zero,
/// non-negative, deduplicated and sorted lexicographically.
class AffineSemigroup {
 public:
  AffineSemigroup(std::size_t ambient_dim, std::vector<IntVec> gens);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVec>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  /// Generators as the columns of an n x s matrix.
  IntMat matrix() const { return IntMat::from_columns(ambient_dim_, gens_); }

  bool operator==(const AffineSemigroup&) const = default;

 private:
  std::size_t ambient_dim_;
  std::vector<IntVec> gens_;
};

struct WkpResult {
  AffineSemigroup semigroup;
  unsigned n0 = 0;
};

/// Coefficients lambda with sum lambda_i a_i = v, or nullopt when v ∉ A.
std::optional<IntVec> membership(const AffineSemigroup& A, const IntVec& v);

/// Minimal generating set of the monoid generated by `gens`.
AffineSemigroup minimalize(std::size_t ambient_dim, std::vector<IntVec> gens);

bool is_subsemigroup(const AffineSemigroup& B, const AffineSemigroup& A);
/// Mutual containment.
bool same_monoid(const AffineSemigroup& A, const AffineSemigroup& B);

Lattice group(const AffineSemigroup& A);
Cone cone(const AffineSemigroup& A);
AffineSemigroup normalization(const AffineSemigroup& A);

enum class QuotientMethod {
  /// Hilbert basis of {lambda : L0 lambda = 0 mod m G(Abar)}, mapped by L0 / m
  kCongruence,
  /// Hilbert basis of (L0 | -m M0), last block mapped through M0
  kKernelProjection,
};

/// Minimal generators of {v ∈ Ā : m v ∈ A}, where `Abar` generates a normal
/// semigroup containing A (normally Ā itself). Both methods give the same
/// generators; the congruence one avoids the many solutions that differ
/// only in how v is written over Abar.
AffineSemigroup quotient_in_group(const AffineSemigroup& A, const AffineSemigroup& Abar,
                                  const Int& m, QuotientMethod method = QuotientMethod::kCongruence);

/// p-weak normalization and the least N0 with p^N0 * (result) ⊆ A.
WkpResult wkp(const AffineSemigroup& A, const AffineSemigroup& Abar, const Int& p);
WkpResult wkp(const AffineSemigroup& A, const Int& p);

/// Primes p for which the p-weak normalization differs from the
/// seminormalization, ascending.
std::vector<Int> bad_primes(const AffineSemigroup& A);

/// Generators of A lying on the face F of cone(A).
std::vector<IntVec> generators_on_face(const AffineSemigroup& A, const Face& F);

AffineSemigroup seminormalization(const AffineSemigroup& A, const AffineSemigroup& Abar);
AffineSemigroup seminormalization(const AffineSemigroup& A);

/// Face-by-face recomputation of the p-weak normalization: for each face F,
/// the elements v of Ā with p^n0 v ∈ A ∩ F that lie in the relative
/// interior of F. Used to cross-check wkp.
AffineSemigroup geometric_wkp_oracle(const AffineSemigroup& A, const AffineSemigroup& Abar,
                                     const Int& p, unsigned n0);
AffineSemigroup geometric_wkp_oracle(const AffineSemigroup& A, const Int& p);

/// Finite W with B = ∪_{w ∈ W} (w + A), each w irreducible (w - a ∉ B for
/// every generator a of A). Requires A ⊆ B ⊆ G(A) and p^n0 B ⊆ A. Sorted.
std::vector<IntVec> module_generators(const AffineSemigroup& A, const AffineSemigroup& B,
                                      const Int& p, unsigned n0);

Int ipow(const Int& base, unsigned exp);

}  // namespace affsemi
