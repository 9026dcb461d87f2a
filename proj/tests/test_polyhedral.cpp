#include "doctest.h"
#include "oracles.hpp"

#include "affsemi/error.hpp"
#include "affsemi/polyhedral.hpp"

using namespace affsemi;
using oracle::vec;

namespace {

Cone octant(std::size_t n) { return Cone::from_generators(n, oracle::free_semigroup(n).generators()); }

std::vector<IntVec> sorted(std::vector<IntVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("dual_description examples") {
  std::vector<IntVec> e = oracle::free_semigroup(3).generators();
  CHECK(sorted(dual_description(e)) == sorted(e));
  CHECK(sorted(dual_description(oracle::M_semigroup().generators())) == sorted(e));
  CHECK(sorted(dual_description(std::vector<IntVec>{vec({1, 0}), vec({1, 2})})) ==
        sorted({vec({0, 1}), vec({2, -1})}));
  CHECK_THROWS(dual_description(std::vector<IntVec>{}));
}

TEST_CASE("lower-dimensional cones carry their span equations") {
  Cone C = Cone::from_generators(3, std::vector<IntVec>{vec({1, 0, 0}), vec({1, 1, 0})});
  CHECK(C.dim() == 2);
  CHECK(C.equations().size() == 1);
  CHECK(C.contains(vec({2, 1, 0})));
  CHECK_FALSE(C.contains(vec({2, 1, 1})));
  CHECK_FALSE(C.contains(vec({0, 1, 0})));
  std::vector<IntVec> normals = C.facet_normals();
  CHECK(normals.size() == C.facets().size() + 2);
}

TEST_CASE("facet normals are consistent with a rational cone oracle") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<IntVec> gens = oracle::random_nonneg_gens(rng, 3, 5, 3);
    Cone C = Cone::from_generators(3, gens);
    for (const IntVec& h : C.facet_normals())
      for (const IntVec& r : C.rays()) CHECK(dot(h, r) >= 0);
    for (const IntVec& h : C.facets()) CHECK(content(h) == 1);
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= 3; ++b)
        for (long c = 0; c <= 3; ++c) {
          IntVec v = vec({a, b, c});
          CHECK(C.contains(v) == oracle::in_cone(gens, v));
        }
    CHECK(Cone::from_generators(3, C.rays()) == C);
  }
}

TEST_CASE("octant face counts are 2^n") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(enumerate_faces(octant(n)).size() == (1u << n));
  std::vector<Face> f3 = enumerate_faces(octant(3));
  std::vector<int> dims;
  for (const Face& F : f3) dims.push_back(F.dim);
  CHECK(dims == std::vector<int>{0, 1, 1, 1, 2, 2, 2, 3});
  CHECK(f3.front().active_normals.size() == 3);
  CHECK(f3.back().active_normals.empty());
}

TEST_CASE("2-d cone and square pyramid face counts") {
  Cone C2 = Cone::from_generators(2, std::vector<IntVec>{vec({1, 0}), vec({1, 2})});
  CHECK(enumerate_faces(C2).size() == 4);
  Cone P = Cone::from_generators(
      3, std::vector<IntVec>{vec({1, 0, 0}), vec({1, 1, 0}), vec({1, 1, 1}), vec({1, 0, 1})});
  std::vector<Face> faces = enumerate_faces(P);
  CHECK(faces.size() == 10);
  std::vector<int> counts(4, 0);
  for (const Face& F : faces) counts[F.dim]++;
  CHECK(counts == std::vector<int>{1, 4, 4, 1});
}

TEST_CASE("face_of and relint_member on the octant") {
  Cone C = octant(3);
  CHECK(face_of(C, vec({1, 1, 1})).dim == 3);
  Face F = face_of(C, vec({0, 1, 1}));
  CHECK(F.dim == 2);
  CHECK(sorted(F.rays()) == sorted({vec({0, 1, 0}), vec({0, 0, 1})}));
  CHECK(face_of(C, vec({0, 0, 0})).dim == 0);
  CHECK_THROWS_AS(face_of(C, vec({-1, 0, 0})), PreconditionError);

  std::vector<Face> faces = enumerate_faces(C);
  CHECK(relint_member(faces.back(), vec({1, 2, 3})));
  Face edge = face_of(C, vec({0, 1, 0}));
  CHECK_FALSE(relint_member(edge, vec({0, 1, 1})));
  CHECK(relint_member(F, vec({0, 1, 1})));
}

TEST_CASE("positive combinations of a face's rays lie in its relative interior") {
  oracle::Rng rng(22);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<IntVec> gens = oracle::random_nonneg_gens(rng, 3, 5, 4);
    Cone C = Cone::from_generators(3, gens);
    for (const Face& F : enumerate_faces(C)) {
      std::vector<IntVec> rays = F.rays();
      for (const IntVec& r : rays)
        for (const std::size_t i : F.active_normals) CHECK(dot(C.facets()[i], r) == 0);
      for (int sample = 0; sample < 4; ++sample) {
        IntVec v(3, Int(0));
        for (const IntVec& r : rays) v = v + Int(rng.uniform(1, 3)) * r;
        CHECK(relint_member(F, v));
        Face G = face_of(C, v);
        CHECK(G.active_normals == F.active_normals);
        CHECK(G.ray_indices == F.ray_indices);
      }
    }
  }
}
