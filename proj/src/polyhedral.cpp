#include "affsemi/polyhedral.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "affsemi/error.hpp"

namespace affsemi {

namespace {

std::vector<IntVec> primitive_unique(std::span<const IntVec> gens) {
  std::vector<IntVec> out;
  for (const IntVec& g : gens)
    if (!is_zero(g)) out.push_back(primitive(g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct DdRay {
  IntVec coords;
  Bits zeros;
};

// Extreme rays of the pointed cone {c : A c >= 0}, A of full column rank,
// by incremental constraint insertion.
std::vector<IntVec> double_description(const std::vector<IntVec>& A, std::size_t d) {
  const std::size_t s = A.size();

  // initial simplex cone from d independent constraints
  std::vector<std::size_t> basis_rows;
  std::vector<IntVec> chosen;
  for (std::size_t i = 0; i < s && basis_rows.size() < d; ++i) {
    chosen.push_back(A[i]);
    if (static_cast<std::size_t>(rank(IntMat::from_rows(d, chosen))) == chosen.size())
      basis_rows.push_back(i);
    else
      chosen.pop_back();
  }

  // columns of chosen^{-1}, via rational Gauss-Jordan on [chosen | I]
  std::vector<std::vector<mpq_class>> aug(d, std::vector<mpq_class>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = chosen[i][j];
    aug[i][d + i] = 1;
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (aug[piv][col] == 0) ++piv;
    std::swap(aug[piv], aug[col]);
    mpq_class inv = 1 / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      mpq_class f = aug[r][col];
      for (std::size_t j = 0; j < 2 * d; ++j) aug[r][j] -= f * aug[col][j];
    }
  }

  std::vector<DdRay> rays;
  for (std::size_t j = 0; j < d; ++j) {
    Int den = 1;
    for (std::size_t i = 0; i < d; ++i)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), aug[i][d + j].get_den_mpz_t());
    IntVec c(d);
    for (std::size_t i = 0; i < d; ++i) {
      mpq_class scaled = aug[i][d + j] * den;
      c[i] = scaled.get_num();
    }
    Bits z(s);
    for (std::size_t k = 0; k < d; ++k)
      if (k != j) z.set(basis_rows[k]);
    rays.push_back({primitive(c), std::move(z)});
  }

  std::vector<bool> processed(s, false);
  for (std::size_t r : basis_rows) processed[r] = true;

  for (std::size_t i = 0; i < s; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<Int> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<DdRay> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(A[i], rays[k].coords);
      if (val[k] > 0) pos.push_back(k);
      if (val[k] < 0) neg.push_back(k);
    }
    if (neg.empty()) {
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (val[k] == 0) rays[k].zeros.set(i);
      continue;
    }
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (d >= 2 && common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != p && k != q && common.subset_of(rays[k].zeros)) adjacent = false;
        if (!adjacent) continue;
        IntVec c = primitive(val[p] * rays[q].coords - val[q] * rays[p].coords);
        common.set(i);
        next.push_back({std::move(c), std::move(common)});
      }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] < 0) continue;
      if (val[k] == 0) rays[k].zeros.set(i);
      next.push_back(std::move(rays[k]));
    }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  for (auto& r : rays) out.push_back(std::move(r.coords));
  return out;
}

// Canonical basis of the span's orthogonal complement.
std::vector<IntVec> span_equations(std::size_t n, const std::vector<IntVec>& rays) {
  std::vector<IntVec> kernel = integer_kernel(IntMat::from_rows(n, rays));
  return lattice_from_gens(n, kernel).basis_vectors();
}

std::vector<IntVec> proper_facets(std::size_t n, const std::vector<IntVec>& rays) {
  Lattice span_lattice = lattice_from_gens(n, rays);
  const std::size_t d = span_lattice.rank();
  const IntMat& W = span_lattice.basis();
  IntMat A = IntMat::from_rows(n, rays) * W;
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < A.rows(); ++i) rows.push_back(A.row(i));
  std::vector<IntVec> facets;
  for (const IntVec& c : double_description(rows, d)) facets.push_back(primitive(W * c));
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return facets;
}

}  // namespace

std::vector<IntVec> dual_description(std::span<const IntVec> rays) {
  if (rays.empty()) throw PreconditionError("dual_description: no rays");
  const std::size_t n = rays.front().size();
  for (const IntVec& r : rays) {
    if (r.size() != n) throw DimensionError("dual_description: ragged rays");
    if (!is_nonneg(r)) throw PreconditionError("dual_description: ray outside N^n");
  }
  std::vector<IntVec> prim = primitive_unique(rays);
  if (prim.empty()) throw PreconditionError("dual_description: all rays are zero");
  std::vector<IntVec> out = proper_facets(n, prim);
  for (const IntVec& e : span_equations(n, prim)) {
    out.push_back(e);
    out.push_back(Int(-1) * e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cone

Cone Cone::from_generators(std::size_t ambient_dim, std::span<const IntVec> gens) {
  auto d = std::make_shared<Data>();
  d->ambient_dim = ambient_dim;
  for (const IntVec& g : gens) {
    if (g.size() != ambient_dim) throw DimensionError("cone generator dimension mismatch");
    if (!is_nonneg(g)) throw PreconditionError("cone generator outside N^n");
  }
  d->rays = primitive_unique(gens);
  if (d->rays.empty()) {
    d->equations = IntMat::identity(ambient_dim).columns();
    return Cone(std::move(d));
  }
  d->dim = rank(IntMat::from_columns(ambient_dim, d->rays));
  d->facets = proper_facets(ambient_dim, d->rays);
  d->equations = span_equations(ambient_dim, d->rays);
  return Cone(std::move(d));
}

std::vector<IntVec> Cone::facet_normals() const {
  std::vector<IntVec> out = facets();
  for (const IntVec& e : equations()) {
    out.push_back(e);
    out.push_back(Int(-1) * e);
  }
  return out;
}

bool Cone::contains(const IntVec& v) const {
  if (v.size() != ambient_dim()) throw DimensionError("cone membership: dimension mismatch");
  for (const IntVec& e : equations())
    if (dot(e, v) != 0) return false;
  for (const IntVec& h : facets())
    if (dot(h, v) < 0) return false;
  return true;
}

std::vector<std::size_t> Cone::vanishing_facets(const IntVec& v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets().size(); ++i)
    if (dot(facets()[i], v) == 0) out.push_back(i);
  return out;
}

bool Cone::operator==(const Cone& other) const {
  return ambient_dim() == other.ambient_dim() && rays() == other.rays() &&
         facets() == other.facets() && equations() == other.equations();
}

// ---------------------------------------------------------------------------
// Faces

std::vector<IntVec> Face::rays() const {
  std::vector<IntVec> out;
  for (std::size_t i : ray_indices) out.push_back(cone.rays()[i]);
  return out;
}

namespace {

Face make_face(const Cone& C, std::vector<std::size_t> active) {
  Face F{C, std::move(active), {}, 0};
  for (std::size_t r = 0; r < C.rays().size(); ++r) {
    bool on = std::all_of(F.active_normals.begin(), F.active_normals.end(),
                          [&](std::size_t i) { return dot(C.facets()[i], C.rays()[r]) == 0; });
    if (on) F.ray_indices.push_back(r);
  }
  std::vector<IntVec> rays = F.rays();
  F.dim = rays.empty() ? 0 : rank(IntMat::from_columns(C.ambient_dim(), rays));
  return F;
}

// Facets vanishing on every ray that satisfies all of `seed`.
std::vector<std::size_t> closure(const Cone& C, const std::vector<std::size_t>& seed) {
  std::vector<std::size_t> on_rays;
  for (std::size_t r = 0; r < C.rays().size(); ++r)
    if (std::all_of(seed.begin(), seed.end(),
                    [&](std::size_t i) { return dot(C.facets()[i], C.rays()[r]) == 0; }))
      on_rays.push_back(r);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < C.facets().size(); ++i)
    if (std::all_of(on_rays.begin(), on_rays.end(),
                    [&](std::size_t r) { return dot(C.facets()[i], C.rays()[r]) == 0; }))
      out.push_back(i);
  return out;
}

}  // namespace

std::vector<Face> enumerate_faces(const Cone& C) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue{closure(C, {})};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<std::size_t> current = queue[head];
    for (std::size_t i = 0; i < C.facets().size(); ++i) {
      if (std::binary_search(current.begin(), current.end(), i)) continue;
      std::vector<std::size_t> seed = current;
      seed.insert(std::upper_bound(seed.begin(), seed.end(), i), i);
      std::vector<std::size_t> next = closure(C, seed);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Face> faces;
  for (auto& active : queue) faces.push_back(make_face(C, std::move(active)));
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.ray_indices < b.ray_indices;
  });
  return faces;
}

Face face_of(const Cone& C, const IntVec& v) {
  if (!C.contains(v)) throw PreconditionError("face_of: " + to_string(v) + " is not in the cone");
  return make_face(C, C.vanishing_facets(v));
}

bool relint_member(const Face& F, const IntVec& v) {
  if (v.size() != F.cone.ambient_dim()) throw DimensionError("relint_member: dimension mismatch");
  return F.cone.contains(v) && F.cone.vanishing_facets(v) == F.active_normals;
}

}  // namespace affsemi
