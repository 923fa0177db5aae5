#include <random>

#include "diagram/linalg.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace diagram;
using testing_support::mat;
using testing_support::vec;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(parse_rational("6/4") == Rational(3) / 2);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK_ERRC(parse_rational("-2/-4"), Errc::ParseError);
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_ERRC(parse_rational("1/0"), Errc::ParseError);
  CHECK_ERRC(parse_rational("abc"), Errc::ParseError);
  CHECK_ERRC(parse_rational("0.5"), Errc::ParseError);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
}

TEST_CASE("inner products") {
  auto l = diagonal_lattice({1, -1});
  CHECK(inner(vec(l, {1, 0}), vec(l, {1, 0})) == 1);
  CHECK(inner(vec(l, {1, 0}), vec(l, {0, 1})) == 0);
  CHECK(inner(vec(l, {3, -1}), vec(l, {0, 1})) == 1);
  auto other = diagonal_lattice({1, -1, -1});
  CHECK_ERRC(inner(vec(l, {1, 0}), vec(other, {1, 0, 0})), Errc::MismatchedLattice);
}

TEST_CASE("lattice construction validates the Gram matrix") {
  CHECK_ERRC(make_lattice(mat({{1, 2}, {3, 1}})), Errc::NotSymmetric);
  CHECK_ERRC(make_lattice(mat({{1, 2}})), Errc::NotSquare);
  CHECK_ERRC(LatticeVector(diagonal_lattice({1, -1}), {1}), Errc::DimensionMismatch);
}

TEST_CASE("signature examples") {
  CHECK(signature(mat({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}})) == InertiaSignature{1, 2, 0});
  CHECK(signature(mat({{-2, 1}, {1, -2}})) == InertiaSignature{0, 2, 0});
  CHECK(signature(mat({{-2, 2}, {2, -2}})) == InertiaSignature{0, 1, 1});
  // zero leading block, forces the u±v substitution
  CHECK(signature(mat({{0, 1}, {1, 0}})) == InertiaSignature{1, 1, 0});
  CHECK(signature(mat({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}})) == InertiaSignature{1, 1, 1});
  CHECK_ERRC(signature(mat({{0, 1}, {2, 0}})), Errc::NotSymmetric);
}

TEST_CASE("definiteness classes") {
  CHECK(definiteness_class(mat({{-2, 1}, {1, -2}})) == DefinitenessClass::NegativeDefinite);
  CHECK(definiteness_class(mat({{-2, 2}, {2, -2}})) == DefinitenessClass::NegativeSemiDefinite);
  CHECK(definiteness_class(mat({{-2, 2, 2}, {2, -2, 2}, {2, 2, -2}})) == DefinitenessClass::HyperbolicSign);
  CHECK(definiteness_class(mat({{1, 0}, {0, 1}})) == DefinitenessClass::Other);
}

TEST_CASE("reflections") {
  auto l = diagonal_lattice({1, -1});
  CHECK(reflection(vec(l, {0, 1}), vec(l, {0, 1})) == vec(l, {0, -1}));
  CHECK(reflection(vec(l, {0, 1}), vec(l, {1, 0})) == vec(l, {1, 0}));
  auto l3 = diagonal_lattice({1, -1, -1});
  CHECK(reflection(vec(l3, {0, 1, -1}), vec(l3, {0, 1, 0})) == vec(l3, {0, 0, 1}));
  CHECK_ERRC(reflection(vec(l, {1, 1}), vec(l, {1, 0})), Errc::IsotropicMirror);
}

TEST_CASE("hyperbolic lattices") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(is_hyperbolic(*standard_hyperbolic_lattice(n)));
  CHECK_FALSE(is_hyperbolic(*diagonal_lattice({1, 1, -1})));
  CHECK_FALSE(is_hyperbolic(*diagonal_lattice({1, 0, -1})));
}

namespace {

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  Matrix g(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = entry(rng);
  }
  return g;
}

Matrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  Matrix t(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) t[i][i] = 1;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < 8; ++step) {
    const auto i = idx(rng);
    const auto j = idx(rng);
    if (i == j) continue;
    const int c = coef(rng);
    for (std::size_t r = 0; r < n; ++r) t[r][i] += c * t[r][j];
  }
  return t;
}

Matrix congruent(const Matrix& g, const Matrix& t) {
  const std::size_t n = g.size();
  Matrix out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) s += t[a][i] * g[a][b] * t[b][j];
      }
      out[i][j] = s;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("signature is a congruence invariant and matches the eigenvalue oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Matrix g = random_symmetric(rng, n);
    const auto sig = signature(g);
    CHECK(sig.size() == n);
    CHECK(signature(congruent(g, random_unimodular(rng, n))) == sig);
    if (n <= 5) CHECK(sig == oracle::signature(g));
  }
}

TEST_CASE("reflection preserves the form") {
  std::mt19937_64 rng(5);
  auto l = make_lattice(mat({{2, 1, 0, 0}, {1, -2, 1, 0}, {0, 1, -2, 1}, {0, 0, 1, -3}}));
  std::uniform_int_distribution<int> c(-4, 4);
  int done = 0;
  while (done < 50) {
    auto rv = [&] { return LatticeVector(l, {c(rng), c(rng), c(rng), c(rng)}); };
    auto delta = rv();
    if (delta.square() == 0) continue;
    auto x = rv();
    auto y = rv();
    CHECK(inner(reflection(delta, x), reflection(delta, y)) == inner(x, y));
    CHECK(reflection(delta, reflection(delta, x)) == x);
    ++done;
  }
}

TEST_CASE("linear algebra helpers") {
  const Matrix a = mat({{2, 1}, {1, 3}});
  CHECK(linalg::determinant(a) == 5);
  CHECK(linalg::rank(mat({{1, 2}, {2, 4}})) == 1);
  auto x = linalg::solve(a, {3, 4});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(linalg::solve(mat({{1, 2}, {2, 4}}), {1, 0}));
  CHECK(linalg::nullspace(mat({{1, 2}, {2, 4}})).size() == 1);
}
