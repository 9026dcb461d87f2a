#include "affsemi/dioph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_set>

#include "affsemi/error.hpp"

namespace affsemi {

namespace {

// The search kernels run on int64_t with overflow checks and are re-run on
// mpz_class when an intermediate value leaves the machine range.
struct Overflow {};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Int checked_add(const Int& a, const Int& b) { return a + b; }
inline Int checked_mul(const Int& a, const Int& b) { return a * b; }

inline bool is_zero_t(std::int64_t x) { return x == 0; }
inline bool is_zero_t(const Int& x) { return x == 0; }
inline int sign_t(std::int64_t x) { return (x > 0) - (x < 0); }
inline int sign_t(const Int& x) { return sgn(x); }

template <class T>
T convert(const Int& x);
template <>
std::int64_t convert<std::int64_t>(const Int& x) {
  if (!x.fits_slong_p()) throw Overflow{};
  return x.get_si();
}
template <>
Int convert<Int>(const Int& x) {
  return x;
}

struct I64VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

template <class T>
using HashFor = std::conditional_t<std::is_same_v<T, Int>, IntVecHash, I64VecHash>;

template <class T>
std::vector<std::vector<T>> columns_as(const IntMat& M) {
  std::vector<std::vector<T>> cols(M.cols(), std::vector<T>(M.rows()));
  for (std::size_t c = 0; c < M.cols(); ++c)
    for (std::size_t r = 0; r < M.rows(); ++r) cols[c][r] = convert<T>(M(r, c));
  return cols;
}

template <class T>
T dot_t(const std::vector<T>& a, const std::vector<T>& b) {
  T s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

template <class T>
bool all_zero(const std::vector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return is_zero_t(x); });
}

using Counts = std::vector<std::int64_t>;

bool dominated(const Counts& y, const std::vector<Counts>& basis) {
  for (const Counts& b : basis) {
    bool le = true;
    for (std::size_t i = 0; i < y.size() && le; ++i) le = b[i] <= y[i];
    if (le) return true;
  }
  return false;
}

struct CompletionLimits {
  std::optional<std::size_t> capped;  ///< variable restricted to {0, 1}
  bool stop_at_capped = false;        ///< return the first solution using it
};

template <class T>
struct Node {
  Counts x;
  std::vector<T> residual;
};

// Contejean-Devie completion: grow x one unit at a time, adding e_j only
// when <N x, N e_j> < 0, and discard anything dominating a known solution.
template <class T>
std::vector<Counts> contejean_devie(const std::vector<std::vector<T>>& cols,
                                    const CompletionLimits& limits) {
  const std::size_t k = cols.size();
  std::vector<Counts> basis;
  std::vector<Node<T>> frontier;
  for (std::size_t j = 0; j < k; ++j) {
    Counts x(k, 0);
    x[j] = 1;
    frontier.push_back({std::move(x), cols[j]});
  }
  while (!frontier.empty()) {
    for (const Node<T>& node : frontier) {
      if (!all_zero(node.residual)) continue;
      basis.push_back(node.x);
      if (limits.stop_at_capped && node.x[*limits.capped] == 1) return {node.x};
    }
    std::unordered_set<Counts, I64VecHash> seen;
    std::vector<Node<T>> next;
    for (const Node<T>& node : frontier) {
      if (all_zero(node.residual)) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (limits.capped && *limits.capped == j && node.x[j] >= 1) continue;
        if (sign_t(dot_t(node.residual, cols[j])) >= 0) continue;
        Counts y = node.x;
        ++y[j];
        if (dominated(y, basis) || !seen.insert(y).second) continue;
        std::vector<T> r(node.residual.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(node.residual[i], cols[j][i]);
        next.push_back({std::move(y), std::move(r)});
      }
    }
    frontier = std::move(next);
  }
  if (limits.stop_at_capped) return {};
  return basis;
}

IntVec to_intvec(const Counts& c) {
  IntVec v;
  v.reserve(c.size());
  for (auto x : c) v.emplace_back(static_cast<long>(x));
  return v;
}

// Row-by-row completion. Before row i the set G is the Hilbert basis of
// C = {x in N^k : rows < i vanish}. Sums x + y of elements on opposite
// sides of row i are added unless a smaller element of G splits them
// sign-compatibly; processed by increasing degree, so every reducer of a
// candidate is already present. The elements with row i equal to zero are
// then the Hilbert basis of the next C.
template <class T>
std::vector<Counts> row_completion(const IntMat& N) {
  const std::size_t k = N.cols();
  const std::vector<std::vector<T>> cols = columns_as<T>(N);
  struct Elem {
    Counts x;
    std::vector<T> r;
    std::int64_t deg;
    std::uint64_t support;
  };
  auto support_of = [](const Counts& x) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] != 0) m |= std::uint64_t{1} << (j % 64);
    return m;
  };
  std::vector<Elem> G;
  for (std::size_t j = 0; j < k; ++j) {
    Counts x(k, 0);
    x[j] = 1;
    G.push_back({x, cols[j], 1, support_of(x)});
  }

  for (std::size_t row = 0; row < N.rows(); ++row) {
    auto side = [&](const Elem& e) { return sign_t(e.r[row]); };
    // candidates on each side by degree; reducers on each side (0, +, -)
    std::map<std::int64_t, std::vector<std::size_t>> pos, neg;
    std::vector<std::size_t> reducers[3];
    std::unordered_set<Counts, I64VecHash> seen;
    auto slot = [](int sg) { return sg == 0 ? 0 : (sg > 0 ? 1 : 2); };
    for (std::size_t i = 0; i < G.size(); ++i) {
      seen.insert(G[i].x);
      const int sg = side(G[i]);
      reducers[slot(sg)].push_back(i);
      if (sg > 0) pos[G[i].deg].push_back(i);
      if (sg < 0) neg[G[i].deg].push_back(i);
    }
    for (auto& list : reducers)
      std::stable_sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) { return G[a].deg < G[b].deg; });
    auto below = [&](const Elem& u, const Elem& z) {
      if (u.deg >= z.deg || (u.support & ~z.support) != 0) return false;
      for (std::size_t j = 0; j < k; ++j)
        if (u.x[j] > z.x[j]) return false;
      return true;
    };
    // z splits as u + (z - u) with both parts on z's side of the row
    auto reducible = [&](const Elem& z) {
      const int sz = side(z);
      for (std::size_t i : reducers[0]) {
        if (G[i].deg >= z.deg) break;
        if (below(G[i], z)) return true;
      }
      if (sz == 0) return false;
      for (std::size_t i : reducers[slot(sz)]) {
        const Elem& u = G[i];
        if (u.deg >= z.deg) break;
        if (sz > 0 ? u.r[row] > z.r[row] : u.r[row] < z.r[row]) continue;
        if (below(u, z)) return true;
      }
      return false;
    };
    if (!pos.empty() && !neg.empty()) {
      for (std::int64_t D = pos.begin()->first + neg.begin()->first;
           D <= pos.rbegin()->first + neg.rbegin()->first; ++D) {
        std::vector<Elem> fresh;
        for (const auto& [dp, plist] : pos) {
          if (dp >= D) break;
          auto it = neg.find(D - dp);
          if (it == neg.end()) continue;
          for (std::size_t a : plist)
            for (std::size_t b : it->second) {
              Elem z;
              z.x.resize(k);
              for (std::size_t j = 0; j < k; ++j) z.x[j] = G[a].x[j] + G[b].x[j];
              if (seen.contains(z.x)) continue;
              z.r.resize(G[a].r.size());
              for (std::size_t i = 0; i < z.r.size(); ++i) z.r[i] = checked_add(G[a].r[i], G[b].r[i]);
              z.deg = D;
              z.support = G[a].support | G[b].support;
              if (reducible(z)) continue;
              seen.insert(z.x);
              fresh.push_back(std::move(z));
            }
        }
        for (Elem& z : fresh) {
          const std::size_t idx = G.size();
          const int sz = side(z);
          G.push_back(std::move(z));
          reducers[slot(sz)].push_back(idx);
          if (sz > 0) pos[D].push_back(idx);
          if (sz < 0) neg[D].push_back(idx);
        }
      }
    }
    std::erase_if(G, [&](const Elem& e) { return side(e) != 0; });
  }
  std::vector<Counts> out;
  for (Elem& e : G) out.push_back(std::move(e.x));
  return out;
}

template <class T>
std::vector<Counts> hilbert_kernel(const IntMat& N, HilbertMethod method) {
  if (method == HilbertMethod::kContejeanDevie) return contejean_devie<T>(columns_as<T>(N), {});
  return row_completion<T>(N);
}

// Memoised DFS over residuals for L >= 0, v >= 0. Every reachable residual
// is expanded at most once, so the search is exhaustive and finite.
template <class T>
std::optional<Counts> residual_search(const IntMat& L, const IntVec& v) {
  std::vector<std::vector<T>> cols = columns_as<T>(L);
  std::vector<T> target(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) target[i] = convert<T>(v[i]);

  // larger columns first: witnesses tend to be found sooner
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (!all_zero(cols[j])) order.push_back(j);
  auto weight = [&](std::size_t j) {
    T s = 0;
    for (const T& x : cols[j]) s = checked_add(s, x);
    return s;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weight(a) > weight(b); });

  struct Frame {
    std::vector<T> residual;
    std::size_t next = 0;
  };
  std::unordered_set<std::vector<T>, HashFor<T>> failed;
  std::vector<Frame> stack{{target, 0}};
  std::vector<std::size_t> path;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (all_zero(f.residual)) {
      Counts lambda(cols.size(), 0);
      for (std::size_t j : path) ++lambda[j];
      return lambda;
    }
    bool descended = false;
    while (f.next < order.size()) {
      std::size_t j = order[f.next++];
      std::vector<T> r(f.residual.size());
      bool fits = true;
      for (std::size_t i = 0; i < r.size() && fits; ++i) {
        r[i] = f.residual[i] - cols[j][i];
        fits = sign_t(r[i]) >= 0;
      }
      if (!fits || failed.contains(r)) continue;
      path.push_back(j);
      stack.push_back({std::move(r), 0});
      descended = true;
      break;
    }
    if (descended) continue;
    failed.insert(std::move(stack.back().residual));
    stack.pop_back();
    if (!path.empty()) path.pop_back();
  }
  return std::nullopt;
}

template <class T>
std::optional<Counts> homogenised_search(const IntMat& L, const IntVec& v) {
  std::vector<std::vector<T>> cols = columns_as<T>(L);
  std::vector<T> aux(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) aux[i] = convert<T>(-v[i]);
  cols.push_back(std::move(aux));
  CompletionLimits limits{cols.size() - 1, true};
  std::vector<Counts> hit = contejean_devie<T>(cols, limits);
  if (hit.empty()) return std::nullopt;
  Counts lambda = hit.front();
  lambda.pop_back();
  return lambda;
}

bool all_nonneg(const IntMat& M) {
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c)
      if (M(r, c) < 0) return false;
  return true;
}

bool leq(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

std::vector<IntVec> hilbert_homogeneous(const IntMat& N, HilbertMethod method) {
  if (N.rows() == 0 || N.cols() == 0)
    throw PreconditionError("hilbert_homogeneous: empty system");
  std::vector<Counts> raw;
  try {
    raw = hilbert_kernel<std::int64_t>(N, method);
  } catch (const Overflow&) {
    raw = hilbert_kernel<Int>(N, method);
  }
  std::vector<IntVec> out;
  out.reserve(raw.size());
  for (const Counts& c : raw) out.push_back(to_intvec(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<IntVec> nonneg_solve(const IntMat& L, const IntVec& v) {
  if (L.rows() != v.size())
    throw DimensionError("nonneg_solve: matrix has " + std::to_string(L.rows()) +
                         " rows, right-hand side has dimension " + std::to_string(v.size()));
  if (is_zero(v)) return IntVec(L.cols(), Int(0));
  if (L.cols() == 0) return std::nullopt;
  std::optional<Counts> lambda;
  if (all_nonneg(L)) {
    if (!is_nonneg(v)) return std::nullopt;
    try {
      lambda = residual_search<std::int64_t>(L, v);
    } catch (const Overflow&) {
      lambda = residual_search<Int>(L, v);
    }
  } else {
    try {
      lambda = homogenised_search<std::int64_t>(L, v);
    } catch (const Overflow&) {
      lambda = homogenised_search<Int>(L, v);
    }
  }
  if (!lambda) return std::nullopt;
  return to_intvec(*lambda);
}

std::vector<IntVec> reduce_generators(std::size_t ambient_dim, std::vector<IntVec> gens) {
  for (const IntVec& g : gens)
    if (g.size() != ambient_dim) throw DimensionError("reduce_generators: dimension mismatch");
  std::erase_if(gens, [](const IntVec& g) { return is_zero(g); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  const bool positive = std::all_of(gens.begin(), gens.end(),
                                    [](const IntVec& g) { return is_nonneg(g); });
  // test the heaviest candidates first; they are the likeliest to be redundant
  std::vector<IntVec> order = gens;
  std::stable_sort(order.begin(), order.end(), [](const IntVec& a, const IntVec& b) {
    return coordinate_sum(a) > coordinate_sum(b);
  });
  std::vector<IntVec> kept = gens;
  for (const IntVec& g : order) {
    std::vector<IntVec> others;
    for (const IntVec& h : kept)
      if (h != g && (!positive || leq(h, g))) others.push_back(h);
    if (others.empty()) continue;
    if (nonneg_solve(IntMat::from_columns(ambient_dim, others), g))
      std::erase(kept, g);
  }
  return kept;
}

std::vector<IntVec> hilbert_in_lattice_cone(const Lattice& L, const Cone& C) {
  const std::size_t n = L.ambient_dim();
  if (C.ambient_dim() != n) throw DimensionError("hilbert_in_lattice_cone: ambient dimension mismatch");
  if (static_cast<int>(L.rank()) != C.dim())
    throw DimensionError("hilbert_in_lattice_cone: lattice rank " + std::to_string(L.rank()) +
                         " differs from cone dimension " + std::to_string(C.dim()));
  std::vector<IntVec> all_normals = C.facets();
  for (const IntVec& e : C.equations()) all_normals.push_back(e);
  if (static_cast<std::size_t>(rank(IntMat::from_rows(n, all_normals))) != n)
    throw PreconditionError("hilbert_in_lattice_cone: cone is not pointed");
  if (L.rank() == 0) return {};

  const IntMat& B = L.basis();
  const std::size_t r = L.rank();
  if (!C.equations().empty()) {
    IntMat EB = IntMat::from_rows(n, C.equations()) * B;
    for (std::size_t i = 0; i < EB.rows(); ++i)
      for (std::size_t j = 0; j < EB.cols(); ++j)
        if (EB(i, j) != 0)
          throw PreconditionError("hilbert_in_lattice_cone: lattice leaves the span of the cone");
  }

  // facet inequalities in lattice coordinates
  std::vector<IntVec> ineqs;
  for (const IntVec& h : C.facets()) {
    IntVec row(r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < n; ++i) row[j] += h[i] * B(i, j);
    if (!is_zero(row)) ineqs.push_back(std::move(row));
  }
  const std::size_t k = ineqs.size();

  // variables (y+, y-, slack): H B (y+ - y-) - slack = 0
  IntMat N(k, 2 * r + k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      N(i, j) = ineqs[i][j];
      N(i, r + j) = -ineqs[i][j];
    }
    N(i, 2 * r + i) = -1;
  }
  std::vector<IntVec> gens;
  for (const IntVec& sol : hilbert_homogeneous(N)) {
    IntVec y(r);
    for (std::size_t j = 0; j < r; ++j) y[j] = sol[j] - sol[r + j];
    IntVec v = B * y;
    if (!is_zero(v)) gens.push_back(std::move(v));
  }
  return reduce_generators(n, std::move(gens));
}

// {x : C x = 0 mod m} contains m Z^s, so it has a basis b_0..b_{s-1} with
// b_j zero above row j and a positive pivot d_j on row j. Points of the box
// [0, m-1]^s are enumerated through that basis: x_i runs over the residue
// class fixed by the earlier coefficients.
std::vector<IntVec> hilbert_congruence(const IntMat& C, const Int& m) {
  if (m < 1) throw PreconditionError("hilbert_congruence: modulus must be positive");
  if (!m.fits_slong_p()) throw PreconditionError("hilbert_congruence: modulus too large");
  const std::size_t s = C.cols(), r = C.rows();
  if (s == 0) return {};
  const std::int64_t mod = m.get_si();

  IntMat CM(r, s + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      Int c = C(i, j) % m;
      CM(i, j) = c < 0 ? Int(c + m) : c;
    }
    CM(i, s + i) = m;
  }
  std::vector<IntVec> gens;
  for (const IntVec& k : integer_kernel(CM)) gens.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(s));
  for (std::size_t i = 0; i < s; ++i) {
    IntVec e(s, Int(0));
    e[i] = m;
    gens.push_back(std::move(e));
  }
  const IntMat H = hnf(IntMat::from_columns(s, gens)).H;
  std::vector<std::vector<std::int64_t>> b(s, std::vector<std::int64_t>(s));
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < s; ++i) b[j][i] = H(i, j).get_si();

  std::vector<Counts> points;
  Counts x(s, 0), partial(s, 0);
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == s) {
      if (!all_zero(x)) points.push_back(x);
      return;
    }
    const std::int64_t d = b[i][i];
    for (std::int64_t v = ((partial[i] % d) + d) % d; v < mod; v += d) {
      const std::int64_t c = (v - partial[i]) / d;
      for (std::size_t k = i + 1; k < s; ++k) partial[k] = checked_add(partial[k], checked_mul(c, b[i][k]));
      x[i] = v;
      self(self, i + 1);
      for (std::size_t k = i + 1; k < s; ++k) partial[k] -= c * b[i][k];
    }
    x[i] = 0;
  };
  rec(rec, 0);
  for (std::size_t i = 0; i < s; ++i) {
    Counts e(s, 0);
    e[i] = mod;
    points.push_back(std::move(e));
  }

  // a nonzero point is reducible iff a smaller nonzero point lies below it
  auto degree = [](const Counts& v) {
    std::int64_t t = 0;
    for (std::int64_t a : v) t += a;
    return t;
  };
  std::stable_sort(points.begin(), points.end(),
                   [&](const Counts& u, const Counts& v) { return degree(u) < degree(v); });
  std::vector<Counts> basis;
  for (const Counts& v : points) {
    const bool reducible = std::any_of(basis.begin(), basis.end(), [&](const Counts& u) {
      for (std::size_t j = 0; j < s; ++j)
        if (u[j] > v[j]) return false;
      return true;
    });
    if (!reducible) basis.push_back(v);
  }
  std::vector<IntVec> out;
  for (const Counts& v : basis) {
    IntVec w;
    for (std::int64_t a : v) w.push_back(Int(a));
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace affsemi
