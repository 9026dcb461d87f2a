#pragma once

// Non-negative integer solutions of linear systems: Hilbert bases of
// homogeneous systems, feasibility of inhomogeneous systems, and Hilbert
// bases of lattice/cone intersections.

#include <optional>
#include <span>
#include <vector>

#include "affsemi/exactlin.hpp"
#include "affsemi/polyhedral.hpp"

namespace affsemi {

enum class HilbertMethod {
  kRowCompletion,    ///< one equation at a time, pair sums with sign-compatible reduction
  kContejeanDevie,   ///< unit steps e_j taken only when <Nx, Ne_j> < 0
};

/// Hilbert basis of {x in N^cols : N x = 0}, sorted lexicographically.
/// Empty when 0 is the only solution. Both methods return the same set.
std::vector<IntVec> hilbert_homogeneous(const IntMat& N,
                                        HilbertMethod method = HilbertMethod::kRowCompletion);

/// Hilbert basis of {x in N^cols : C x = 0 mod m}, sorted. Every element
/// is either m e_i or lies in [0, m-1]^cols.
std::vector<IntVec> hilbert_congruence(const IntMat& C, const Int& m);

/// Some lambda in N^cols with L lambda = v, or nullopt. Complete for every
/// L; when all entries of L are non-negative a memoised depth-first search
/// over residuals is used instead of the completion procedure.
std::optional<IntVec> nonneg_solve(const IntMat& L, const IntVec& v);

/// Hilbert basis of the monoid L ∩ C in ambient coordinates, sorted.
/// Requires rank(L) = dim(C), L inside the span of C, and C pointed.
std::vector<IntVec> hilbert_in_lattice_cone(const Lattice& L, const Cone& C);

/// Drops zero vectors, duplicates, and every vector lying in the monoid
/// generated by the remaining ones. Generators must span a positive monoid
/// (true for subsets of N^n). Result sorted lexicographically.
std::vector<IntVec> reduce_generators(std::size_t ambient_dim, std::vector<IntVec> gens);

}  // namespace affsemi
