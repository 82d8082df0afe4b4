#include "doctest.h"

#include "bas/errors.hpp"
#include "bas/liealg.hpp"
#include "bas/linalg.hpp"
#include "bas/polynomial.hpp"

using namespace bas;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/4") == rat(3, 4));
  CHECK(parse_rational("-5") == rat(-5));
  CHECK(to_string(rat(6, -4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("rref, rank, inverse, det") {
  Mat A(3, 3);
  A(0, 0) = 2; A(0, 1) = 1; A(0, 2) = 1;
  A(1, 0) = 1; A(1, 1) = 3; A(1, 2) = 2;
  A(2, 0) = 1; A(2, 1) = 0; A(2, 2) = 0;
  CHECK(A.rank() == 3);
  CHECK(A.det() == rat(-1));
  auto inv = A.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv * A == Mat::identity(3));

  Mat B(2, 3);
  B(0, 0) = 1; B(0, 1) = 2; B(0, 2) = 3;
  B(1, 0) = 2; B(1, 1) = 4; B(1, 2) = 6;
  CHECK(B.rank() == 1);
  Mat K = kernel_basis(B);
  CHECK(K.rows() == 2);
  for (int i = 0; i < K.rows(); ++i) CHECK(is_zero(B.apply(K.row(i))));
}

TEST_CASE("linear_solve consistency") {
  Mat A(2, 2);
  A(0, 0) = 1; A(0, 1) = 1;
  A(1, 0) = 2; A(1, 1) = 2;
  auto r = linear_solve(A, Vec{rat(3), rat(6)});
  REQUIRE(r.particular.has_value());
  CHECK(r.kernel.rows() == 1);
  auto bad = linear_solve(A, Vec{rat(3), rat(5)});
  CHECK(!bad.particular.has_value());
}

TEST_CASE("subspace operations") {
  Subspace u(3, {Vec{rat(1), rat(0), rat(0)}, Vec{rat(0), rat(1), rat(0)}});
  Subspace v(3, {Vec{rat(0), rat(1), rat(1)}});
  CHECK(u.dim() == 2);
  CHECK(u.sum(v).dim() == 3);
  CHECK(u.intersect(v).dim() == 0);
  CHECK(u.contains(Vec{rat(2), rat(-5), rat(0)}));
  CHECK(!u.contains(Vec{rat(0), rat(0), rat(1)}));
  auto c = u.coordinates(Vec{rat(2), rat(-5), rat(0)});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == rat(2));
  CHECK((*c)[1] == rat(-5));
}

TEST_CASE("sturm real root count") {
  // (t^2 - 2)(t^2 + 1): two real roots
  Polynomial p(Vec{rat(-2), rat(0), rat(-1), rat(0), rat(1)});
  CHECK(count_real_roots(p) == 2);
  Polynomial q(Vec{rat(1), rat(0), rat(1)});  // t^2 + 1
  CHECK(count_real_roots(q) == 0);
}

TEST_CASE("minimal polynomial and semisimplicity") {
  Mat R(2, 2);
  R(0, 1) = -1;
  R(1, 0) = 1;
  Polynomial mp = minimal_polynomial(R);
  CHECK(mp == Polynomial(Vec{rat(1), rat(0), rat(1)}));  // t^2 + 1
  auto cert = real_semisimple_test(R);
  CHECK(!cert.verdict);
  CHECK(cert.squarefree);
  CHECK(!cert.all_roots_real);

  Mat N(2, 2);
  N(0, 1) = 1;  // nilpotent
  auto cn = real_semisimple_test(N);
  CHECK(!cn.verdict);
  CHECK(!cn.squarefree);

  Mat D(2, 2);
  D(0, 0) = 2;
  D(1, 1) = rat(-1, 3);
  auto cd = real_semisimple_test(D);
  CHECK(cd.verdict);
  CHECK(cd.real_root_count == 2);
}

TEST_CASE("rational roots") {
  // (t - 1/2)(t + 3) = t^2 + 5/2 t - 3/2
  Polynomial p(Vec{rat(-3, 2), rat(5, 2), rat(1)});
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK((roots[0] == rat(1, 2) || roots[1] == rat(1, 2)));
  CHECK((roots[0] == rat(-3) || roots[1] == rat(-3)));
}

namespace {

LieAlgebra heisenberg3() {
  std::vector<std::vector<Vec>> c(3, std::vector<Vec>(3, Vec(3)));
  c[0][1][2] = 1;
  c[1][0][2] = -1;
  return LieAlgebra({"x", "y", "z"}, c);
}

}  // namespace

TEST_CASE("lie algebra validation rejects bad tables") {
  std::vector<std::vector<Vec>> c(3, std::vector<Vec>(3, Vec(3)));
  c[0][1][2] = 1;  // missing antisymmetric partner
  CHECK_THROWS_AS(LieAlgebra({"x", "y", "z"}, c), NotALieAlgebraError);

  // [x,y] = z together with [x,z] = x fails Jacobi on (x,y,z)
  std::vector<std::vector<Vec>> d(3, std::vector<Vec>(3, Vec(3)));
  d[0][1][2] = 1; d[1][0][2] = -1;
  d[0][2][0] = 1; d[2][0][0] = -1;
  CHECK_THROWS_AS(LieAlgebra({"x", "y", "z"}, d), NotALieAlgebraError);
}

TEST_CASE("analysis of the heisenberg algebra") {
  LieAlgebra h = heisenberg3();
  auto an = analyze_algebra(h);
  CHECK(an.centre.dim() == 1);
  CHECK(an.derived.dim() == 1);
  REQUIRE(an.nilpotency_class.has_value());
  CHECK(*an.nilpotency_class == 2);
  CHECK(an.killing.is_zero());
}

TEST_CASE("realification interleaves and squares to minus one") {
  // complex heisenberg [x,y] = z
  ComplexBrackets cb;
  cb.dim = 3;
  cb.re.assign(3, std::vector<Vec>(3, Vec(3)));
  cb.im.assign(3, std::vector<Vec>(3, Vec(3)));
  cb.re[0][1][2] = 1;
  cb.re[1][0][2] = -1;
  Realification r = realify(cb, {"x", "y", "z"});
  CHECK(r.algebra.dim() == 6);
  CHECK(r.J_mult * r.J_mult == Mat::identity(6) * rat(-1));
  // [x, y] = z and [ix, y] = iz
  CHECK(r.algebra.bracket_basis(0, 2) == basis_vec(6, 4));
  CHECK(r.algebra.bracket_basis(1, 2) == basis_vec(6, 5));
  // J is a derivation of the bracket here ([ix, iy] = -z)
  Vec v = r.algebra.bracket_basis(1, 3);
  CHECK(v == scale(basis_vec(6, 4), rat(-1)));
}

TEST_CASE("normalizer and maximal ideal") {
  LieAlgebra h = heisenberg3();
  Subspace z(3, {basis_vec(3, 2)});
  CHECK(relative_normalizer(h, z).dim() == 3);  // centre is an ideal
  Subspace xz(3, {basis_vec(3, 0), basis_vec(3, 2)});
  CHECK(is_subalgebra(h, xz));
  Subspace xy(3, {basis_vec(3, 0), basis_vec(3, 1)});
  CHECK(!is_subalgebra(h, xy));
  CHECK_THROWS_AS(relative_normalizer(h, xy), NotASubalgebraError);
  // [h, xz] ⊂ span{z} ⊂ xz, so xz is itself an ideal
  CHECK(maximal_ideal_in(h, xz).dim() == 2);
  CHECK(maximal_ideal_in(h, xz).contains(basis_vec(3, 2)));
  // xy contains no nonzero ideal: an ideal meeting x or y must contain z
  CHECK(maximal_ideal_in(h, xy).dim() == 0);
}
