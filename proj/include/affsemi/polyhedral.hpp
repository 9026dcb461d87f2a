#pragma once

// Rational polyhedral cones generated by vectors of N^n: facet description,
// face lattice and relative-interior tests. All vectors stay in ambient
// coordinates; a lower-dimensional cone carries the equations of its span.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "affsemi/exactlin.hpp"

namespace affsemi {

/// Inward facet normals of the cone spanned by `rays`, sorted, followed by
/// each equation of the span as a pair (e, -e) with e's first nonzero entry
/// positive. Throws PreconditionError on empty input.
std::vector<IntVec> dual_description(std::span<const IntVec> rays);

class Cone {
 public:
  /// Cone over the given generators. Generators are made primitive and
  /// deduplicated; an empty list (or only zero vectors) gives the cone {0}.
  static Cone from_generators(std::size_t ambient_dim, std::span<const IntVec> gens);

  std::size_t ambient_dim() const { return data_->ambient_dim; }
  int dim() const { return data_->dim; }
  /// Primitive generators, sorted.
  const std::vector<IntVec>& rays() const { return data_->rays; }
  /// Proper facet normals (inequalities), sorted.
  const std::vector<IntVec>& facets() const { return data_->facets; }
  /// Basis of the span's orthogonal complement.
  const std::vector<IntVec>& equations() const { return data_->equations; }
  /// facets() followed by the (e, -e) pairs of equations().
  std::vector<IntVec> facet_normals() const;

  bool contains(const IntVec& v) const;
  /// Indices of facets vanishing on v.
  std::vector<std::size_t> vanishing_facets(const IntVec& v) const;

  bool operator==(const Cone& other) const;

 private:
  struct Data {
    std::size_t ambient_dim = 0;
    int dim = 0;
    std::vector<IntVec> rays;
    std::vector<IntVec> facets;
    std::vector<IntVec> equations;
  };
  explicit Cone(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

struct Face {
  Cone cone;
  std::vector<std::size_t> active_normals;  ///< indices into cone.facets()
  std::vector<std::size_t> ray_indices;     ///< indices into cone.rays()
  int dim = 0;

  std::vector<IntVec> rays() const;
};

/// Every face exactly once, ordered by (dim, ray_indices).
std::vector<Face> enumerate_faces(const Cone& C);

/// The unique face whose relative interior contains v. Throws
/// PreconditionError when v is outside the cone.
Face face_of(const Cone& C, const IntVec& v);

bool relint_member(const Face& F, const IntVec& v);

}  // namespace affsemi
