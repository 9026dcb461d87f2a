#include "affsemi/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "affsemi/dioph.hpp"
#include "affsemi/error.hpp"

namespace affsemi {

AffineSemigroup::AffineSemigroup(std::size_t ambient_dim, std::vector<IntVec> gens)
    : ambient_dim_(ambient_dim), gens_(std::move(gens)) {
  if (ambient_dim_ == 0) throw PreconditionError("affine semigroup needs ambient dimension >= 1");
  for (const IntVec& g : gens_) {
    if (g.size() != ambient_dim_)
      throw DimensionError("generator " + to_string(g) + " does not live in N^" +
                           std::to_string(ambient_dim_));
    if (!is_nonneg(g)) throw PreconditionError("generator " + to_string(g) + " has a negative entry");
    if (is_zero(g)) throw PreconditionError("zero generator");
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

std::optional<IntVec> membership(const AffineSemigroup& A, const IntVec& v) {
  if (v.size() != A.ambient_dim())
    throw DimensionError("membership: " + to_string(v) + " is not in dimension " +
                         std::to_string(A.ambient_dim()));
  if (!is_nonneg(v)) return std::nullopt;
  return nonneg_solve(A.matrix(), v);
}

AffineSemigroup minimalize(std::size_t ambient_dim, std::vector<IntVec> gens) {
  for (const IntVec& g : gens)
    if (g.size() == ambient_dim && !is_nonneg(g))
      throw PreconditionError("minimalize: generator " + to_string(g) + " is not in N^n");
  return AffineSemigroup(ambient_dim, reduce_generators(ambient_dim, std::move(gens)));
}

bool is_subsemigroup(const AffineSemigroup& B, const AffineSemigroup& A) {
  if (A.ambient_dim() != B.ambient_dim()) throw DimensionError("is_subsemigroup: dimension mismatch");
  return std::all_of(B.generators().begin(), B.generators().end(),
                     [&](const IntVec& b) { return membership(A, b).has_value(); });
}

bool same_monoid(const AffineSemigroup& A, const AffineSemigroup& B) {
  return is_subsemigroup(A, B) && is_subsemigroup(B, A);
}

Lattice group(const AffineSemigroup& A) {
  return lattice_from_gens(A.ambient_dim(), A.generators());
}

Cone cone(const AffineSemigroup& A) {
  return Cone::from_generators(A.ambient_dim(), A.generators());
}

AffineSemigroup normalization(const AffineSemigroup& A) {
  return AffineSemigroup(A.ambient_dim(), hilbert_in_lattice_cone(group(A), cone(A)));
}

AffineSemigroup quotient_in_group(const AffineSemigroup& A, const AffineSemigroup& Abar,
                                  const Int& m, QuotientMethod method) {
  if (m < 1) throw PreconditionError("quotient_in_group: m must be positive");
  if (A.ambient_dim() != Abar.ambient_dim()) throw DimensionError("quotient_in_group: dimension mismatch");
  const std::size_t n = A.ambient_dim();
  const std::size_t s = A.size();
  const std::size_t t = Abar.size();
  if (t == 0) return AffineSemigroup(n, {});

  std::vector<IntVec> candidates;
  if (method == QuotientMethod::kKernelProjection) {
    // N = (L0 | -m M0); solutions (lambda, x) give L0 lambda = m M0 x
    IntMat N(n, s + t);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < s; ++j) N(i, j) = A.generators()[j][i];
      for (std::size_t j = 0; j < t; ++j) N(i, s + j) = -m * Abar.generators()[j][i];
    }
    const IntMat M0 = Abar.matrix();
    for (const IntVec& sol : hilbert_homogeneous(N)) {
      IntVec x(sol.begin() + static_cast<std::ptrdiff_t>(s), sol.end());
      IntVec v = M0 * x;
      if (!is_zero(v)) candidates.push_back(std::move(v));
    }
    return minimalize(n, std::move(candidates));
  }

  // v = L0 lambda / m lies in C(A), so v ∈ Ā iff v ∈ G(Abar) iff the
  // coordinates of L0 lambda in a basis of G(Abar) are divisible by m
  const Lattice G = group(Abar);
  IntMat C(G.rank(), s);
  for (std::size_t j = 0; j < s; ++j) {
    auto c = G.coordinates(A.generators()[j]);
    if (!c) throw PreconditionError("quotient_in_group: " + to_string(A.generators()[j]) + " is not in G(Abar)");
    for (std::size_t i = 0; i < G.rank(); ++i) C(i, j) = (*c)[i];
  }
  const IntMat L0 = A.matrix();
  for (const IntVec& lambda : hilbert_congruence(C, m)) {
    IntVec v = L0 * lambda;
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    candidates.push_back(std::move(v));
  }
  return minimalize(n, std::move(candidates));
}

// With Q_N = {v ∈ Ā : p^N v ∈ A} the iteration L_{s+1} = q(L_s, Ā, p)
// yields L_s = Q_s. The chain Q_0 ⊆ Q_1 ⊆ ... is monotone, and once
// Q_{N+1} = Q_N we get Q_{N+2} = {v : p v ∈ Q_{N+1}} = Q_{N+1}, so it is
// stable from then on and Q_N is the p-weak normalization. p^N' (*A) ⊆ A
// means Q_N' is already stable, so the first stable index is also the
// least exponent pushing the p-weak normalization into A.
// q(L_s, Ā, p) is taken as q(A, Ā, p^{s+1}): the same monoid, but A has
// few generators while L_s can have many.
WkpResult wkp(const AffineSemigroup& A, const AffineSemigroup& Abar, const Int& p) {
  if (!is_prime(p)) throw PreconditionError("wkp: " + p.get_str() + " is not prime");
  AffineSemigroup current = A;
  unsigned steps = 0;
  Int scale = p;
  for (;; scale *= p) {
    AffineSemigroup next = quotient_in_group(A, Abar, scale);
    if (is_subsemigroup(next, current)) return {std::move(current), steps};
    if (!is_subsemigroup(current, next))
      throw std::logic_error("wkp: quotient chain is not monotone at step " + std::to_string(steps));
    current = std::move(next);
    ++steps;
  }
}

WkpResult wkp(const AffineSemigroup& A, const Int& p) {
  if (!is_prime(p)) throw PreconditionError("wkp: " + p.get_str() + " is not prime");
  return wkp(A, normalization(A), p);
}

std::vector<IntVec> generators_on_face(const AffineSemigroup& A, const Face& F) {
  std::vector<IntVec> out;
  for (const IntVec& g : A.generators())
    if (std::all_of(F.active_normals.begin(), F.active_normals.end(),
                    [&](std::size_t i) { return dot(F.cone.facets()[i], g) == 0; }))
      out.push_back(g);
  return out;
}

std::vector<Int> bad_primes(const AffineSemigroup& A) {
  const std::size_t n = A.ambient_dim();
  const Lattice G = group(A);
  std::set<Int> primes;
  for (const Face& F : enumerate_faces(cone(A))) {
    std::vector<IntVec> on_face = generators_on_face(A, F);
    if (on_face.empty()) continue;
    Lattice sub = lattice_from_gens(n, on_face);
    Lattice sup = lattice_intersect_subspace(G, on_face);
    for (Int& q : torsion_primes(sub, sup)) primes.insert(std::move(q));
  }
  return {primes.begin(), primes.end()};
}

namespace {

Int smallest_prime_outside(const std::vector<Int>& excluded) {
  Int q = 2;
  while (std::find(excluded.begin(), excluded.end(), q) != excluded.end() || !is_prime(q)) ++q;
  return q;
}

}  // namespace

AffineSemigroup seminormalization(const AffineSemigroup& A, const AffineSemigroup& Abar) {
  return wkp(A, Abar, smallest_prime_outside(bad_primes(A))).semigroup;
}

AffineSemigroup seminormalization(const AffineSemigroup& A) {
  return seminormalization(A, normalization(A));
}

AffineSemigroup geometric_wkp_oracle(const AffineSemigroup& A, const AffineSemigroup& Abar,
                                     const Int& p, unsigned n0) {
  if (!is_prime(p)) throw PreconditionError("geometric_wkp_oracle: " + p.get_str() + " is not prime");
  const std::size_t n = A.ambient_dim();
  const Int scale = ipow(p, n0);
  std::vector<IntVec> gens;
  for (const Face& F : enumerate_faces(cone(A))) {
    std::vector<IntVec> on_face = generators_on_face(A, F);
    if (on_face.empty()) continue;
    // v ∈ Ā with scale*v on F lies on F, hence in the monoid of Ā ∩ F,
    // which is generated by the generators of Ā on F
    AffineSemigroup A_F(n, on_face);
    AffineSemigroup Abar_F(n, generators_on_face(Abar, F));
    const AffineSemigroup Q = quotient_in_group(A_F, Abar_F, scale);
    for (const IntVec& v : Q.generators())
      if (relint_member(F, v)) gens.push_back(v);
  }
  return minimalize(n, std::move(gens));
}

AffineSemigroup geometric_wkp_oracle(const AffineSemigroup& A, const Int& p) {
  AffineSemigroup Abar = normalization(A);
  return geometric_wkp_oracle(A, Abar, p, wkp(A, Abar, p).n0);
}

std::vector<IntVec> module_generators(const AffineSemigroup& A, const AffineSemigroup& B,
                                      const Int& p, unsigned n0) {
  if (A.ambient_dim() != B.ambient_dim()) throw DimensionError("module_generators: dimension mismatch");
  if (!is_subsemigroup(A, B)) throw PreconditionError("module_generators: A is not contained in B");
  const Lattice G = group(A);
  const Int scale = ipow(p, n0);
  for (const IntVec& b : B.generators()) {
    if (!lattice_member(G, b))
      throw PreconditionError("module_generators: " + to_string(b) + " is outside G(A)");
    if (!membership(A, scale * b))
      throw PreconditionError("module_generators: p^n0 * " + to_string(b) + " is not in A");
  }

  auto irreducible = [&](const IntVec& w) {
    return std::none_of(A.generators().begin(), A.generators().end(), [&](const IntVec& a) {
      return membership(B, w - a).has_value();
    });
  };
  // If w + b is irreducible so is w, so a search that only extends
  // irreducible elements reaches all of them. Every coefficient stays below
  // p^n0 because p^n0 b ∈ A can always be split off.
  const IntVec zero(A.ambient_dim(), Int(0));
  std::unordered_set<IntVec, IntVecHash> seen{zero};
  std::deque<IntVec> queue{zero};
  std::vector<IntVec> out;
  while (!queue.empty()) {
    IntVec w = std::move(queue.front());
    queue.pop_front();
    out.push_back(w);
    for (const IntVec& b : B.generators()) {
      IntVec next = w + b;
      if (seen.contains(next)) continue;
      seen.insert(next);
      if (irreducible(next)) queue.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int ipow(const Int& base, unsigned exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace affsemi
