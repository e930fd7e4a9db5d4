#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace hocoh;
using hocoh::test::random_matrix;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

template <class S>
Matrix<S> from_rows(const FieldSpec& field, std::initializer_list<std::initializer_list<long long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Matrix<S> m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long x : row) m(i, j++) = from_int<S>(field, x);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("field parsing and arithmetic", "[scalar]") {
  CHECK(FieldSpec::parse("Q") == Q);
  CHECK(FieldSpec::parse("F5") == FieldSpec::prime(5));
  CHECK_THROWS_AS(FieldSpec::parse("F4"), InputError);
  CHECK_THROWS_AS(FieldSpec::parse("R"), InputError);

  const Rational half = parse_scalar<Rational>(Q, "1/2");
  CHECK(half + half == Rational(1));
  CHECK(to_string(parse_scalar<Rational>(Q, "-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_scalar<Rational>(Q, "0.5"), InputError);
  CHECK_THROWS_AS(parse_scalar<Rational>(Q, "1/0"), InputError);

  const FieldSpec f7 = FieldSpec::prime(7);
  const Fp three = parse_scalar<Fp>(f7, "3");
  CHECK(to_string(f7, three * three.inverse()) == "1");
  CHECK(to_string(f7, parse_scalar<Fp>(f7, "-1")) == "6");
  CHECK(to_string(f7, parse_scalar<Fp>(f7, "1/2")) == "4");
  CHECK(parse_scalar<Fp>(f7, "14").is_zero());
  // literals (Eigen's Scalar(0)/Scalar(1)) mix with residues
  CHECK(three + Fp(1) == parse_scalar<Fp>(f7, "4"));
  CHECK(Fp(8) == parse_scalar<Fp>(f7, "1"));
}

TEST_CASE("rref examples", "[linalg]") {
  SECTION("empty matrix") {
    CHECK(rref(Matrix<Rational>(0, 0)).rank == 0);
  }
  SECTION("identity over Q") {
    const Matrix<Rational> id = Matrix<Rational>::Identity(3, 3);
    const auto r = rref(id);
    CHECK(r.rank == 3);
    CHECK(r.reduced == id);
  }
  SECTION("repeated row over F2") {
    const auto r = rref(from_rows<Fp>(F2, {{1, 1}, {1, 1}}));
    CHECK(r.rank == 1);
    CHECK(r.reduced == from_rows<Fp>(F2, {{1, 1}}));
    CHECK(r.pivots == std::vector<Index>{0});
  }
  SECTION("pivot normalization and ordering") {
    const auto r = rref(from_rows<Rational>(Q, {{0, 2, 4}, {3, 0, 3}, {3, 2, 7}}));
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<Index>{0, 1});
    CHECK(r.reduced == from_rows<Rational>(Q, {{1, 0, 1}, {0, 1, 2}}));
  }
}

TEST_CASE("subspace examples", "[linalg]") {
  SECTION("whole space absorbs intersection") {
    const Subspace<Rational> b = Subspace<Rational>::span(from_rows<Rational>(Q, {{1, 2, 3}, {0, 1, 1}}));
    CHECK(intersection(Subspace<Rational>::whole(3), b) == b);
    CHECK(intersection(b, Subspace<Rational>::whole(3)) == b);
  }
  SECTION("orthogonal subspaces of Q^4") {
    const auto a = Subspace<Rational>::span(from_rows<Rational>(Q, {{1, 0, 0, 0}}));
    const auto b = Subspace<Rational>::span(from_rows<Rational>(Q, {{0, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK(sum(a, b).dim() == 3);
    CHECK(intersection(a, b).dim() == 0);
  }
  SECTION("kernel of (1 1) over F2") {
    const auto k = kernel(from_rows<Fp>(F2, {{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.basis() == from_rows<Fp>(F2, {{1, 1}}));
  }
  SECTION("image, preimage and solve") {
    const Matrix<Rational> m = from_rows<Rational>(Q, {{1, 1, 0}, {0, 1, 1}, {1, 2, 1}});
    const auto im = image(m);
    CHECK(im.dim() == 2);
    const auto pre = preimage(m, im);
    CHECK(pre == Subspace<Rational>::whole(3));
    Vector<Rational> b(3);
    b << 1, 1, 2;
    const auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(Vector<Rational>(m * *x) == b);
    b(2) = 5;
    CHECK_FALSE(solve(m, b).has_value());
    CHECK_THROWS_AS(solve_columns(m, Matrix<Rational>(b)), CertificationFailure);
  }
  SECTION("quotient coordinates") {
    const auto sup = Subspace<Rational>::whole(3);
    const auto sub = Subspace<Rational>::span(from_rows<Rational>(Q, {{1, 1, 0}}));
    const Quotient<Rational> qt(sup, sub);
    CHECK(qt.dim() == 2);
    CHECK(is_zero_matrix(Matrix<Rational>(qt.projection() * sub.basis().transpose())));
    CHECK(Matrix<Rational>(qt.projection() * qt.lift()) == Matrix<Rational>::Identity(2, 2));
    CHECK_THROWS_AS(Quotient<Rational>(sub, sup), OutOfRange);
  }
  SECTION("ambient mismatch") {
    CHECK_THROWS_AS(sum(Subspace<Rational>(2), Subspace<Rational>(3)), DimensionMismatch);
  }
}

template <class S>
void linear_algebra_properties(const FieldSpec& field, unsigned seed) {
  std::mt19937 rng(seed);
  for (int trial = 0; trial < 40; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 6), cols = 1 + static_cast<Index>(rng() % 6);
    const Matrix<S> m = random_matrix<S>(rng, field, rows, cols);
    const auto r = rref(m);
    // idempotence
    CHECK(rref(r.reduced).reduced == r.reduced);
    // rank–nullity
    CHECK(r.rank + kernel(m).dim() == cols);
    CHECK(rank(m) == r.rank);
    // kernel really is annihilated
    CHECK(is_zero_matrix(Matrix<S>(m * kernel(m).basis().transpose())));
    // modular law on a random pair
    const auto a = Subspace<S>::span(m);
    const auto b = Subspace<S>::span(random_matrix<S>(rng, field, 1 + static_cast<Index>(rng() % 5), cols));
    const auto s = sum(a, b), i = intersection(a, b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    // the annihilator cuts out exactly the subspace
    CHECK(kernel(a.annihilator_matrix()) == a);
  }
}

TEST_CASE("linear algebra properties over Q, F2, F3", "[linalg][property]") {
  linear_algebra_properties<Rational>(Q, 1);
  linear_algebra_properties<Fp>(F2, 2);
  linear_algebra_properties<Fp>(F3, 3);
}

TEST_CASE("rref is deterministic", "[linalg]") {
  std::mt19937 rng(7);
  const Matrix<Rational> m = random_matrix<Rational>(rng, Q, 5, 7);
  CHECK(rref(m).reduced == rref(Matrix<Rational>(m)).reduced);
  CHECK(Subspace<Rational>::span(m) == Subspace<Rational>::span(Matrix<Rational>(m.colwise().reverse())));
}
