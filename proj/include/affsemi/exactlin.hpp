#pragma once

// Exact integer linear algebra over arbitrary-precision integers: Hermite
// and Smith normal forms, sublattices of Z^n and their torsion.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace affsemi {

using Int = mpz_class;
using IntVec = std::vector<Int>;

IntVec make_vec(std::initializer_list<long> entries);

Int dot(const IntVec& a, const IntVec& b);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator*(const Int& c, const IntVec& a);

bool is_zero(const IntVec& v);
bool is_nonneg(const IntVec& v);
/// gcd of all entries (0 for the zero vector).
Int content(const IntVec& v);
/// v divided by its content; the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);
Int coordinate_sum(const IntVec& v);
std::string to_string(const IntVec& v);

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

/// Dense row-major integer matrix.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);

  static IntMat identity(std::size_t n);
  /// Matrix whose columns are `cols`; every column must have length `rows`.
  static IntMat from_columns(std::size_t rows, std::span<const IntVec> cols);
  static IntMat from_rows(std::size_t cols, std::span<const IntVec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVec column(std::size_t c) const;
  IntVec row(std::size_t r) const;
  std::vector<IntVec> columns() const;

  IntMat transpose() const;
  IntMat operator*(const IntMat& rhs) const;
  IntVec operator*(const IntVec& x) const;

  void swap_columns(std::size_t a, std::size_t b);
  void negate_column(std::size_t c);
  /// col[dst] += factor * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Int& factor);

  bool operator==(const IntMat&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct HermiteForm {
  IntMat H;  ///< canonical column HNF of M, zero columns trailing
  IntMat U;  ///< unimodular, H = M * U
};

/// Column Hermite normal form. Pivots are positive and every entry to the
/// left of a pivot in its row lies in [0, pivot).
HermiteForm hnf(const IntMat& M);

/// Elementary divisors d1 | d2 | ... of M (zeros omitted).
std::vector<Int> snf(const IntMat& M);

/// Basis of the integer kernel {x in Z^cols : M x = 0}.
std::vector<IntVec> integer_kernel(const IntMat& M);

int rank(const IntMat& M);

/// A subgroup of Z^n stored by its canonical HNF basis, so equal lattices
/// compare equal bitwise.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_dim = 0);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntMat& basis() const { return basis_; }
  std::vector<IntVec> basis_vectors() const { return basis_.columns(); }

  /// Coefficients of v in the basis, or nullopt if v is not in the lattice.
  std::optional<IntVec> coordinates(const IntVec& v) const;

  bool operator==(const Lattice& other) const {
    return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
  }

 private:
  friend Lattice lattice_from_gens(std::size_t, std::span<const IntVec>);

  std::size_t ambient_dim_;
  IntMat basis_;
  std::vector<std::size_t> pivot_rows_;
};

/// Smallest subgroup of Z^ambient_dim containing all vectors.
Lattice lattice_from_gens(std::size_t ambient_dim, std::span<const IntVec> vectors);

bool lattice_member(const Lattice& L, const IntVec& v);

/// Elements of L lying in the rational span of `span_vectors`.
Lattice lattice_intersect_subspace(const Lattice& L,
                                   std::span<const IntVec> span_vectors);

/// Primes dividing the order of sup/sub. Requires sub to be a full-rank
/// sublattice of sup.
std::vector<Int> torsion_primes(const Lattice& sub, const Lattice& sup);

bool is_prime(const Int& p);
/// Distinct prime factors in ascending order; n must be positive.
std::vector<Int> prime_factors(Int n);

}  // namespace affsemi
