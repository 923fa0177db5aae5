#include <random>

#include "diagram/klein.hpp"
#include "helpers.hpp"

using namespace diagram;
using namespace diagram::klein;
using testing_support::vec;

TEST_CASE("point types") {
  auto l = diagonal_lattice({1, -1});
  CHECK(point_type(vec(l, {1, 0})) == PointType::Finite);
  CHECK(point_type(vec(l, {1, 1})) == PointType::Infinite);
  CHECK(point_type(vec(l, {0, 1})) == PointType::Outside);
  CHECK_ERRC(point_type(vec(l, {0, 0})), Errc::ZeroVector);
}

TEST_CASE("distance between points") {
  auto l = diagonal_lattice({1, -1});
  CHECK(cosh_sq_distance(vec(l, {1, 0}), vec(l, {1, 0})) == 1);
  CHECK(cosh_sq_distance(vec(l, {1, 0}), vec(l, {2, 0})) == 1);
  CHECK(cosh_sq_distance(vec(l, {1, 0}), vec(l, {5, 3})) == Rational(25) / 16);
  CHECK_ERRC(cosh_sq_distance(vec(l, {1, 0}), vec(l, {-1, 0})), Errc::OppositeCones);
  CHECK_ERRC(cosh_sq_distance(vec(l, {1, 1}), vec(l, {1, 0})), Errc::NotFinitePoint);
}

TEST_CASE("plane pair relations") {
  auto l = diagonal_lattice({1, -1, -1});
  auto r = plane_pair_relation(vec(l, {0, 1, 0}), vec(l, {0, 0, 1}));
  CHECK(r.kind == PlanePairRelation::Kind::Angle);
  CHECK(r.value == 0);

  auto g = make_lattice({{-2, 2, 3}, {2, -2, 0}, {3, 0, -2}});
  auto par = plane_pair_relation(LatticeVector::basis(g, 0), LatticeVector::basis(g, 1));
  CHECK(par.kind == PlanePairRelation::Kind::Parallel);
  auto hyp = plane_pair_relation(LatticeVector::basis(g, 0), LatticeVector::basis(g, 2));
  CHECK(hyp.kind == PlanePairRelation::Kind::Hyperparallel);
  CHECK(hyp.value == Rational(9) / 4);
  CHECK(hyp.sign == 1);
  CHECK_ERRC(plane_pair_relation(vec(l, {1, 0, 0}), vec(l, {0, 1, 0})), Errc::NotNegativeSquare);
}

TEST_CASE("plane pair trichotomy follows sign(t - 1)") {
  std::mt19937_64 rng(23);
  auto l = diagonal_lattice({1, -1, -1, -1});
  std::uniform_int_distribution<int> c(-5, 5);
  int pairs = 0;
  while (pairs < 200) {
    LatticeVector a(l, {c(rng), c(rng), c(rng), c(rng)});
    LatticeVector b(l, {c(rng), c(rng), c(rng), c(rng)});
    if (a.square() >= 0 || b.square() >= 0) continue;
    const Rational ab = inner(a, b);
    const Rational t = ab * ab / (a.square() * b.square());
    const auto rel = plane_pair_relation(a, b);
    const int s = sgn(t - 1);
    CHECK(rel.kind == (s < 0 ? PlanePairRelation::Kind::Angle
                             : s == 0 ? PlanePairRelation::Kind::Parallel : PlanePairRelation::Kind::Hyperparallel));
    if (s != 0) CHECK(rel.value == t);
    CHECK(rel.sign == sgn(ab));
    ++pairs;
  }
}

TEST_CASE("half spaces") {
  auto l = diagonal_lattice({1, -1});
  const auto delta = vec(l, {0, 1});
  CHECK(half_space_contains(delta, vec(l, {1, 0})));
  CHECK_FALSE(half_space_contains(delta, LatticeVector(l, {1, Rational(1) / 2})));
  CHECK(half_space_contains(delta, LatticeVector(l, {1, Rational(-1) / 2})));
  CHECK_ERRC(half_space_contains(vec(l, {1, 0}), vec(l, {1, 0})), Errc::NotNegativeSquare);
}

TEST_CASE("horospheres") {
  auto l = diagonal_lattice({1, -1});
  const auto c = vec(l, {1, 1});
  CHECK(horosphere_member(c, 1, vec(l, {1, 0})));
  CHECK_FALSE(horosphere_member(c, 2, vec(l, {1, 0})));
  CHECK(horosphere_member(c, 1, vec(l, {3, 0})));
  CHECK_ERRC(horosphere_member(vec(l, {1, 0}), 1, vec(l, {1, 0})), Errc::NotIsotropicCenter);
  CHECK_ERRC(horosphere_member(c, 0, vec(l, {1, 0})), Errc::NonPositiveRadius);
}

TEST_CASE("distance to a subspace") {
  auto l = diagonal_lattice({1, -1, -1});
  std::vector<LatticeVector> normals{vec(l, {0, 0, 1})};
  CHECK(cosh_sq_distance_to_subspace(vec(l, {1, 0, 0}), normals) == 1);
  const LatticeVector x(l, {1, 0, Rational(1) / 2});
  CHECK(cosh_sq_distance_to_subspace(x, normals) == Rational(4) / 3);
  CHECK(cosh_sq_distance_to_subspace(Rational(7) * x, normals) == Rational(4) / 3);
  std::vector<LatticeVector> bad{vec(l, {1, 0, 0})};
  CHECK_ERRC(cosh_sq_distance_to_subspace(x, bad), Errc::NormalsNotNegativeDefinite);
}

TEST_CASE("distances are scale invariant and at least one") {
  std::mt19937_64 rng(29);
  auto l = diagonal_lattice({1, -1, -1});
  std::uniform_int_distribution<int> c(-3, 3), k(1, 9);
  int done = 0;
  while (done < 100) {
    LatticeVector x(l, {c(rng) + 6, c(rng), c(rng)});
    LatticeVector y(l, {c(rng) + 6, c(rng), c(rng)});
    if (x.square() <= 0 || y.square() <= 0) continue;
    const Rational d = cosh_sq_distance(x, y);
    CHECK(d >= 1);
    CHECK(cosh_sq_distance(Rational(k(rng)) * x, Rational(k(rng)) / 2 * y) == d);
    CHECK((d == 1) == positively_proportional(x, y));
    ++done;
  }
}
