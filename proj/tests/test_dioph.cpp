#include "doctest.h"
#include "oracles.hpp"

#include "affsemi/dioph.hpp"
#include "affsemi/error.hpp"
#include "affsemi/polyhedral.hpp"
#include "affsemi/semigroup.hpp"

using namespace affsemi;
using oracle::vec;

namespace {

IntMat row_matrix(std::initializer_list<long> row) {
  return IntMat::from_rows(row.size(), std::vector<IntVec>{vec(row)});
}

}  // namespace

TEST_CASE("hilbert_homogeneous small systems") {
  CHECK(hilbert_homogeneous(row_matrix({1, -2})) == std::vector<IntVec>{vec({2, 1})});
  CHECK(hilbert_homogeneous(row_matrix({1, 1, -1})) == std::vector<IntVec>{vec({0, 1, 1}), vec({1, 0, 1})});
  CHECK(hilbert_homogeneous(row_matrix({1, 1})).empty());
}

TEST_CASE("hilbert_homogeneous (2 3 -5) matches the box oracle") {
  IntMat N = row_matrix({2, 3, -5});
  std::vector<IntVec> expected = oracle::minimal_nonzero(oracle::box_solutions(N, 12));
  CHECK(expected == std::vector<IntVec>{vec({0, 5, 3}), vec({1, 1, 1}), vec({5, 0, 2})});
  CHECK(hilbert_homogeneous(N) == expected);
}

TEST_CASE("hilbert_homogeneous agrees with the box oracle on random systems") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = rng.uniform(1, 2), c = rng.uniform(2, 4);
    IntMat N = oracle::random_matrix(rng, r, c, -3, 3);
    std::vector<IntVec> H = hilbert_homogeneous(N);
    CHECK(std::is_sorted(H.begin(), H.end()));
    for (const IntVec& h : H) {
      CHECK(is_zero(N * h));
      CHECK(is_nonneg(h));
    }
    for (const IntVec& a : H)
      for (const IntVec& b : H)
        if (a != b) CHECK_FALSE(oracle::leq(a, b));
    const long box = 6;
    std::vector<IntVec> brute = oracle::minimal_nonzero(oracle::box_solutions(N, box));
    std::vector<IntVec> inside;
    for (const IntVec& h : H)
      if (std::all_of(h.begin(), h.end(), [&](const Int& x) { return x <= box; })) inside.push_back(h);
    CHECK(inside == brute);
  }
}

TEST_CASE("nonneg_solve agrees with enumeration") {
  oracle::Rng rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<IntVec> cols = oracle::random_nonneg_gens(rng, 3, 4, 3);
    IntMat L = IntMat::from_columns(3, cols);
    IntVec v = vec({rng.uniform(0, 6), rng.uniform(0, 6), rng.uniform(0, 6)});
    auto x = nonneg_solve(L, v);
    CHECK(x.has_value() == oracle::nonneg_feasible(L, v));
    if (x) {
      CHECK(is_nonneg(*x));
      CHECK(L * *x == v);
    }
  }
}

TEST_CASE("nonneg_solve with signed columns and edge cases") {
  IntMat L = IntMat::from_rows(2, std::vector<IntVec>{vec({1, -1})});
  auto x = nonneg_solve(L, vec({-3}));
  REQUIRE(x);
  CHECK(L * *x == vec({-3}));
  IntMat Z = IntMat::from_columns(3, oracle::M_semigroup().generators());
  auto zero = nonneg_solve(Z, vec({0, 0, 0}));
  REQUIRE(zero);
  CHECK(is_zero(*zero));
  CHECK_FALSE(nonneg_solve(Z, vec({1, 1, 1})));
  CHECK(nonneg_solve(Z, vec({2, 2, 2})));
  CHECK_FALSE(nonneg_solve(Z, vec({-1, 0, 0})));
  CHECK_THROWS_AS(nonneg_solve(Z, vec({1, 1})), PreconditionError);
  IntMat even = IntMat::from_rows(2, std::vector<IntVec>{vec({2, -4})});
  CHECK_FALSE(nonneg_solve(even, vec({3})));
}

TEST_CASE("hilbert_in_lattice_cone examples") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<IntVec> e = oracle::free_semigroup(n).generators();
    Lattice Z = lattice_from_gens(n, e);
    Cone C = Cone::from_generators(n, e);
    std::vector<IntVec> H = hilbert_in_lattice_cone(Z, C);
    std::sort(e.begin(), e.end());
    CHECK(H == e);
  }
  Lattice even = lattice_from_gens(3, oracle::pinched_veronese().generators());
  Cone oct = Cone::from_generators(3, oracle::free_semigroup(3).generators());
  CHECK(hilbert_in_lattice_cone(even, oct) ==
        std::vector<IntVec>{vec({0, 0, 2}), vec({0, 1, 1}), vec({0, 2, 0}), vec({1, 0, 1}), vec({1, 1, 0}),
                            vec({2, 0, 0})});
  Lattice odd_line = lattice_from_gens(2, std::vector<IntVec>{vec({2, 0})});
  CHECK_THROWS_AS(hilbert_in_lattice_cone(odd_line, oct), PreconditionError);
}

TEST_CASE("hilbert_in_lattice_cone matches minimal lattice points of the cone") {
  oracle::Rng rng(33);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<IntVec> gens = oracle::random_nonneg_gens(rng, 3, 4, 3);
    Lattice L = lattice_from_gens(3, gens);
    Cone C = Cone::from_generators(3, gens);
    std::vector<IntVec> H = hilbert_in_lattice_cone(L, C);
    // lattice points of the cone in a box; irreducible ones must be in H
    std::vector<IntVec> pts;
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 4; ++b)
        for (long c = 0; c <= 4; ++c) {
          IntVec v = vec({a, b, c});
          if (lattice_member(L, v) && oracle::in_cone(gens, v)) pts.push_back(v);
        }
    std::set<IntVec> ptset(pts.begin(), pts.end());
    for (const IntVec& v : pts) {
      if (is_zero(v)) continue;
      bool reducible = false;
      for (const IntVec& u : pts)
        if (!is_zero(u) && u != v && ptset.contains(v - u)) reducible = true;
      bool listed = std::find(H.begin(), H.end(), v) != H.end();
      CHECK(listed == !reducible);
    }
    for (const IntVec& h : H) {
      CHECK(lattice_member(L, h));
      CHECK(C.contains(h));
    }
  }
}

TEST_CASE("reduce_generators") {
  std::vector<IntVec> g = reduce_generators(2, {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({0, 0}), vec({1, 0})});
  CHECK(g == std::vector<IntVec>{vec({0, 1}), vec({1, 0})});
  CHECK(reduce_generators(1, {vec({2}), vec({3}), vec({5})}) == std::vector<IntVec>{vec({2}), vec({3})});
  CHECK(reduce_generators(1, {vec({0})}).empty());
}

TEST_CASE("row completion and Contejean-Devie agree") {
  oracle::Rng rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = rng.uniform(1, 3), c = rng.uniform(2, 5);
    IntMat N = oracle::random_matrix(rng, r, c, -3, 3);
    CHECK(hilbert_homogeneous(N, HilbertMethod::kRowCompletion) ==
          hilbert_homogeneous(N, HilbertMethod::kContejeanDevie));
  }
  AffineSemigroup Mp = oracle::M_prime_semigroup();
  AffineSemigroup Abar = normalization(Mp);
  IntMat N(3, Mp.size() + Abar.size());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < Mp.size(); ++j) N(i, j) = Mp.generators()[j][i];
    for (std::size_t j = 0; j < Abar.size(); ++j) N(i, Mp.size() + j) = -3 * Abar.generators()[j][i];
  }
  CHECK(hilbert_homogeneous(N, HilbertMethod::kRowCompletion) ==
        hilbert_homogeneous(N, HilbertMethod::kContejeanDevie));
}

TEST_CASE("hilbert_congruence matches minimal box solutions") {
  oracle::Rng rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = rng.uniform(1, 3), c = rng.uniform(1, 4);
    const long m = rng.uniform(1, 6);
    IntMat C = oracle::random_matrix(rng, r, c, -4, 4);
    std::vector<IntVec> H = hilbert_congruence(C, m);
    // all solutions in [0, m]^c; the basis lives there
    std::vector<IntVec> sols;
    for (const IntVec& x : oracle::box_points(c, m)) {
      IntVec y = C * x;
      if (std::all_of(y.begin(), y.end(), [&](const Int& t) { return t % m == 0; })) sols.push_back(x);
    }
    CHECK(H == oracle::minimal_nonzero(sols));
  }
  CHECK(hilbert_congruence(IntMat::from_rows(2, std::vector<IntVec>{vec({1, 1})}), 2) ==
        std::vector<IntVec>{vec({0, 2}), vec({1, 1}), vec({2, 0})});
  CHECK_THROWS_AS(hilbert_congruence(IntMat(1, 1), 0), PreconditionError);
}
