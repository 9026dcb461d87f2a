#include "affsemi/exactlin.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "affsemi/error.hpp"

namespace affsemi {

IntVec make_vec(std::initializer_list<long> entries) {
  IntVec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

namespace {

void require_same_dim(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size())
    throw DimensionError("vector dimension mismatch: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
}

}  // namespace

Int dot(const IntVec& a, const IntVec& b) {
  require_same_dim(a, b);
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  require_same_dim(a, b);
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  require_same_dim(a, b);
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec operator*(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_nonneg(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVec primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0 || g == 1) return v;
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

Int coordinate_sum(const IntVec& v) {
  Int s = 0;
  for (const Int& x : v) s += x;
  return s;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Int& x : v) {
    // low limb and sign suffice for hashing
    std::size_t limb = mpz_size(x.get_mpz_t()) ? mpz_getlimbn(x.get_mpz_t(), 0) : 0;
    h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(mpz_sgn(x.get_mpz_t()) + 1);
  }
  return h;
}

// ---------------------------------------------------------------------------
// IntMat

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(std::size_t rows, std::span<const IntVec> cols) {
  IntMat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw DimensionError("column " + std::to_string(c) + " has length " +
                           std::to_string(cols[c].size()) + ", expected " +
                           std::to_string(rows));
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntMat IntMat::from_rows(std::size_t cols, std::span<const IntVec> rows) {
  IntMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw DimensionError("row " + std::to_string(r) + " has length " +
                           std::to_string(rows[r].size()) + ", expected " +
                           std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVec IntMat::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVec IntMat::row(std::size_t r) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<IntVec> IntMat::columns() const {
  std::vector<IntVec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product dimension mismatch");
  IntMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntVec IntMat::operator*(const IntVec& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * x[k];
  return out;
}

void IntMat::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMat::negate_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

void IntMat::add_column_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

// (col_a, col_b) <- (s col_a + t col_b, u col_a + v col_b)
void combine_columns(IntMat& m, std::size_t a, std::size_t b, const Int& s,
                     const Int& t, const Int& u, const Int& v) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int x = m(r, a);
    Int y = m(r, b);
    m(r, a) = s * x + t * y;
    m(r, b) = u * x + v * y;
  }
}

}  // namespace

HermiteForm hnf(const IntMat& M) {
  IntMat H = M;
  IntMat U = IntMat::identity(M.cols());
  std::size_t c = 0;
  for (std::size_t i = 0; i < H.rows() && c < H.cols(); ++i) {
    for (std::size_t k = c + 1; k < H.cols(); ++k) {
      if (H(i, k) == 0) continue;
      if (H(i, c) == 0) {
        H.swap_columns(c, k);
        U.swap_columns(c, k);
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), H(i, c).get_mpz_t(),
                 H(i, k).get_mpz_t());
      Int a = H(i, c) / g;
      Int b = H(i, k) / g;
      // determinant s*a + t*b = 1
      combine_columns(H, c, k, s, t, -b, a);
      combine_columns(U, c, k, s, t, -b, a);
    }
    if (H(i, c) == 0) continue;
    if (H(i, c) < 0) {
      H.negate_column(c);
      U.negate_column(c);
    }
    for (std::size_t k = 0; k < c; ++k) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, k).get_mpz_t(), H(i, c).get_mpz_t());
      if (q == 0) continue;
      H.add_column_multiple(k, c, -q);
      U.add_column_multiple(k, c, -q);
    }
    ++c;
  }
  return {std::move(H), std::move(U)};
}

namespace {

std::size_t nonzero_column_count(const IntMat& H) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols(); ++c) {
    bool nz = false;
    for (std::size_t i = 0; i < H.rows() && !nz; ++i) nz = H(i, c) != 0;
    if (nz) r = c + 1;
  }
  return r;
}

}  // namespace

int rank(const IntMat& M) { return static_cast<int>(nonzero_column_count(hnf(M).H)); }

std::vector<IntVec> integer_kernel(const IntMat& M) {
  auto [H, U] = hnf(M);
  std::size_t r = nonzero_column_count(H);
  std::vector<IntVec> kernel;
  for (std::size_t c = r; c < U.cols(); ++c) kernel.push_back(U.column(c));
  return kernel;
}

std::vector<Int> snf(const IntMat& M) {
  IntMat A = M;
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  std::vector<Int> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool found_any = false;
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (A(i, j) == 0) continue;
          if (!found || abs(A(i, j)) < abs(A(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) break;
      found_any = true;
      if (pi != t)
        for (std::size_t j = 0; j < n; ++j) std::swap(A(pi, j), A(t, j));
      A.swap_columns(pj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        Int q = A(i, t) / A(t, t);
        for (std::size_t j = t; j < n; ++j) A(i, j) -= q * A(t, j);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        Int q = A(t, j) / A(t, t);
        for (std::size_t i = t; i < m; ++i) A(i, j) -= q * A(i, t);
        if (A(t, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found_any) break;
    diag.push_back(abs(A(t, t)));
  }
  // diag(a, b) ~ diag(gcd, lcm) turns the diagonal into a divisor chain
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Int g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

// ---------------------------------------------------------------------------
// Lattices

Lattice::Lattice(std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), basis_(ambient_dim, 0) {}

std::optional<IntVec> Lattice::coordinates(const IntVec& v) const {
  if (v.size() != ambient_dim_)
    throw DimensionError("lattice membership: vector of dimension " +
                         std::to_string(v.size()) + " in Z^" +
                         std::to_string(ambient_dim_));
  IntVec w = v;
  IntVec coeffs(rank());
  std::size_t j = 0;
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    if (j < rank() && pivot_rows_[j] == i) {
      const Int& pivot = basis_(i, j);
      if (!mpz_divisible_p(w[i].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
      Int c = w[i] / pivot;
      if (c != 0)
        for (std::size_t r = i; r < ambient_dim_; ++r) w[r] -= c * basis_(r, j);
      coeffs[j] = std::move(c);
      ++j;
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return coeffs;
}

Lattice lattice_from_gens(std::size_t ambient_dim, std::span<const IntVec> vectors) {
  Lattice L(ambient_dim);
  if (vectors.empty()) return L;
  IntMat H = hnf(IntMat::from_columns(ambient_dim, vectors)).H;
  std::size_t r = nonzero_column_count(H);
  L.basis_ = IntMat(ambient_dim, r);
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t i = 0; i < ambient_dim; ++i) L.basis_(i, c) = H(i, c);
    std::size_t p = 0;
    while (H(p, c) == 0) ++p;
    L.pivot_rows_.push_back(p);
  }
  return L;
}

bool lattice_member(const Lattice& L, const IntVec& v) {
  return L.coordinates(v).has_value();
}

Lattice lattice_intersect_subspace(const Lattice& L,
                                   std::span<const IntVec> span_vectors) {
  const std::size_t n = L.ambient_dim();
  for (const IntVec& s : span_vectors)
    if (s.size() != n) throw DimensionError("span vector dimension mismatch");
  // integer normals of the span; x lies in the span iff E x = 0
  std::vector<IntVec> normals = integer_kernel(IntMat::from_rows(n, span_vectors));
  if (normals.empty()) return L;
  const IntMat& B = L.basis();
  IntMat EB = IntMat::from_rows(n, normals) * B;
  std::vector<IntVec> gens;
  for (const IntVec& y : integer_kernel(EB)) gens.push_back(B * y);
  return lattice_from_gens(n, gens);
}

std::vector<Int> torsion_primes(const Lattice& sub, const Lattice& sup) {
  if (sub.ambient_dim() != sup.ambient_dim())
    throw DimensionError("torsion_primes: ambient dimension mismatch");
  if (sub.rank() != sup.rank())
    throw PreconditionError("torsion_primes: rank " + std::to_string(sub.rank()) +
                            " sublattice of rank " + std::to_string(sup.rank()) +
                            " lattice has infinite quotient");
  std::vector<IntVec> coords;
  for (const IntVec& b : sub.basis_vectors()) {
    auto c = sup.coordinates(b);
    if (!c) throw PreconditionError("torsion_primes: " + to_string(b) +
                                    " is not in the super-lattice");
    coords.push_back(std::move(*c));
  }
  std::vector<Int> primes;
  for (const Int& d : snf(IntMat::from_columns(sup.rank(), coords)))
    for (Int& p : prime_factors(d)) primes.push_back(std::move(p));
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

bool is_prime(const Int& p) {
  // BPSW is deterministic below 2^64
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

std::vector<Int> prime_factors(Int n) {
  if (n <= 0) throw PreconditionError("prime_factors: n must be positive");
  std::vector<Int> out;
  for (Int d = 2; d * d <= n; ++d) {
    if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) continue;
    out.push_back(d);
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace affsemi
