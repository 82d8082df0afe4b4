#include "doctest.h"

#include "bas/catalog.hpp"
#include "bas/connections.hpp"
#include "bas/errors.hpp"
#include "bas/hermitian.hpp"

using namespace bas;

// kodaira4 basis order: z, w, e, Je
namespace {
const CatalogEntry& kodaira() {
  static const CatalogEntry e = catalog_build("kodaira4");
  return e;
}
}  // namespace

TEST_CASE("hermitian constructors validate") {
  Mat g(2, 2);
  g(0, 0) = 1;
  g(1, 1) = -1;
  CHECK_THROWS_AS(Metric{g}, InvalidHermitianError);
  CHECK_THROWS_AS(ComplexStructureOp{Mat::identity(2)}, InvalidHermitianError);
  Mat J(2, 2);
  J(0, 1) = -1;
  J(1, 0) = 1;
  CHECK_NOTHROW(ComplexStructureOp{J});
  Mat g2 = Mat::identity(2);
  g2(0, 0) = 2;
  // J not orthogonal for diag(2,1)
  CHECK_THROWS_AS(
      HermitianData(Carrier::from_algebra(LieAlgebra::abelian(2)), Metric(g2), ComplexStructureOp(J)),
      InvalidHermitianError);
}

TEST_CASE("kodaira4 integrability and fundamental form") {
  const HermitianData& h = kodaira().data;
  auto an = analyze_hermitian(h);
  CHECK(an.orthogonal);
  CHECK(an.integrable);
  CHECK(an.abelian_J);
  Tensor w = fundamental_form(h);
  CHECK(w.is_alternating());
  // omega(z, w) = g(Jz, w) = g(w, w) = 1
  CHECK(w.at({0, 1}) == rat(1));
  CHECK(w.at({2, 3}) == rat(1));
  Tensor dw = ce_differential(w, h.carrier);
  // d omega(e, Je, w) = -omega([e,Je], w) = -omega(z, w) = -1
  CHECK(dw.at({2, 3, 1}) == rat(-1));
  CHECK(dw.at({2, 3, 0}) == rat(0));
}

TEST_CASE("kodaira4 bismut torsion and connection") {
  const HermitianData& h = kodaira().data;
  BismutData bd = bismut(h);
  CHECK(bd.T3.is_alternating());
  CHECK(lower(bd.T, h.g.g) == bd.T3);
  // T(e, Je) = -z
  CHECK(bd.T.value({2, 3}) == scale(basis_vec(4, 0), rat(-1)));
  // Lambda(z): e -> -Je, Je -> e
  Mat Lz = bd.map.lambda[0];
  CHECK(Lz.apply(basis_vec(4, 2)) == scale(basis_vec(4, 3), rat(-1)));
  CHECK(Lz.apply(basis_vec(4, 3)) == basis_vec(4, 2));
  // metric and J are parallel
  CHECK(covariant_derivative(bd.map, Tensor::from_bilinear(h.g.g)).is_zero());
  CHECK(covariant_derivative(bd.map, Tensor::from_matrix(h.J.J)).is_zero());
}

TEST_CASE("kodaira4 chern torsion and lee form") {
  const HermitianData& h = kodaira().data;
  ChernLee cl = chern_lee(h);
  // T_ch(e, w) = (1/2) e
  CHECK(cl.T_ch.value({2, 1}) == scale(basis_vec(4, 2), rat(1, 2)));
  // theta_sharp spans w
  CHECK(cl.theta_sharp[0] == rat(0));
  CHECK(cl.theta_sharp[1] != rat(0));
  CHECK(cl.theta_sharp[2] == rat(0));
  CHECK(cl.theta_sharp[3] == rat(0));
  // g(theta_sharp, x) = theta(x)
  for (int i = 0; i < 4; ++i)
    CHECK(dot(h.g.g.apply(cl.theta_sharp), basis_vec(4, i)) == cl.theta.at({i}));
}

TEST_CASE("levi-civita is metric and torsion free") {
  const HermitianData& h = kodaira().data;
  ConnectionMap lc = levi_civita(h);
  CHECK(covariant_derivative(lc, Tensor::from_bilinear(h.g.g)).is_zero());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Vec t = sub(lc.lambda[i].apply(basis_vec(4, j)), lc.lambda[j].apply(basis_vec(4, i)));
      CHECK(t == h.carrier.bracket_m(i, j));
    }
}

TEST_CASE("kodaira4 verdict suite") {
  Verdict v = verdict_suite(kodaira().data);
  CHECK(v.checks.at("bas").pass);
  CHECK(v.checks.at("bas_crosscheck").pass);
  CHECK(v.checks.at("parallel_torsion").pass);
  CHECK(v.checks.at("parallel_curvature").pass);
  CHECK(v.checks.at("pluriclosed").pass);
  CHECK(!v.checks.at("balanced").pass);
  CHECK(!v.checks.at("kahler").pass);
  CHECK(!v.checks.at("balanced").witness.first_nonzero({"z", "w", "e", "Je"}).empty());
}

TEST_CASE("lie derivative along the centre vanishes") {
  const HermitianData& h = kodaira().data;
  CHECK(lie_derivative_bilinear(h.carrier, basis_vec(4, 0), h.g.g).is_zero());
  CHECK(lie_derivative_endo(h.carrier, basis_vec(4, 0), h.J.J).is_zero());
}

TEST_CASE("non-integrable structure is reported") {
  // on the kodaira4 algebra: J swaps (z,e) and (w,Je); N(z,w) = [e,Je] = z != 0
  std::vector<std::vector<Vec>> c(4, std::vector<Vec>(4, Vec(4)));
  c[2][3][0] = 1;
  c[3][2][0] = -1;
  LieAlgebra n({"z", "w", "e", "Je"}, c);
  Mat J(4, 4);
  J(2, 0) = 1; J(0, 2) = -1;
  J(3, 1) = 1; J(1, 3) = -1;
  HermitianData h(Carrier::from_algebra(n), Metric(Mat::identity(4)), ComplexStructureOp(J));
  auto an = analyze_hermitian(h);
  CHECK(!an.integrable);
  CHECK(!an.nijenhuis.is_zero());
  CHECK_THROWS_AS(bismut(h), NotIntegrableError);
}
