#include "doctest.h"

#include "bas/catalog.hpp"
#include "bas/connections.hpp"
#include "bas/constructions.hpp"
#include "bas/errors.hpp"

using namespace bas;

namespace {

Mat rot(int n, int a, int b, const Rational& w) {
  Mat M(n, n);
  M(a, b) = -w;
  M(b, a) = w;
  return M;
}

// quaternion left/right multiplication on coordinates (1, i, j, k)
Mat quat_left(int axis) {  // axis 0 = i, 1 = j, 2 = k
  Mat M(4, 4);
  auto set = [&](int r, int c, long v) { M(r, c) = v; };
  if (axis == 0) { set(1, 0, 1); set(0, 1, -1); set(3, 2, 1); set(2, 3, -1); }
  if (axis == 1) { set(2, 0, 1); set(0, 2, -1); set(1, 3, 1); set(3, 1, -1); }
  if (axis == 2) { set(3, 0, 1); set(0, 3, -1); set(2, 1, 1); set(1, 2, -1); }
  return M;
}

Mat quat_right_i() {
  Mat M(4, 4);
  M(1, 0) = 1; M(0, 1) = -1;
  M(2, 3) = 1; M(3, 2) = -1;
  return M;
}

LieAlgebra sl2r() {
  // basis (H, E, F)
  std::vector<std::vector<Vec>> c(3, std::vector<Vec>(3, Vec(3)));
  c[0][1][1] = 2; c[1][0][1] = -2;
  c[0][2][2] = -2; c[2][0][2] = 2;
  c[1][2][0] = 1; c[2][1][0] = -1;
  return LieAlgebra({"H", "E", "F"}, c);
}

}  // namespace

TEST_CASE("build and verify a k-nilpotent triple") {
  KNilpotentSpec spec;
  spec.k_dim = 2;
  spec.k_metric = Mat::identity(2);
  spec.V_dim_complex = 2;
  spec.I = rot(4, 0, 1, 1) + rot(4, 2, 3, 1);
  spec.reps = {rot(4, 0, 1, 1), rot(4, 2, 3, 1)};  // h3 + h3
  KNilpotentData d = build_k_nilpotent(spec);
  CHECK(d.n.dim() == 6);
  CHECK(d.k.dim() == 2);
  CHECK(verify_k_nilpotent(d).all_pass());
  // [e1, e2] pairs through the first rep only
  Vec br = d.n.bracket(basis_vec(6, 2), basis_vec(6, 3));
  CHECK(br[0] != rat(0));
  CHECK(br[1] == rat(0));
}

TEST_CASE("trivial submodules are rejected") {
  KNilpotentSpec spec;
  spec.k_dim = 1;
  spec.k_metric = Mat::identity(1);
  spec.V_dim_complex = 2;
  spec.I = rot(4, 0, 1, 1) + rot(4, 2, 3, 1);
  spec.reps = {rot(4, 0, 1, 1)};  // second complex line is killed
  CHECK_THROWS_AS(build_k_nilpotent(spec), TrivialSubmoduleError);
}

TEST_CASE("nilpotent decision: structural rejections") {
  auto heis3 = [] {
    std::vector<std::vector<Vec>> c(3, std::vector<Vec>(3, Vec(3)));
    c[0][1][2] = 1;
    c[1][0][2] = -1;
    return LieAlgebra({"x", "y", "z"}, c);
  };
  auto d1 = decide_nilpotent_bas(heis3());
  CHECK(d1.verdict == NilpotentDecision::Outcome::no);
  CHECK(d1.reason == "odd-dimensional algebra");

  // solvable but not nilpotent: two affine lines
  std::vector<std::vector<Vec>> aff(4, std::vector<Vec>(4, Vec(4)));
  aff[0][1][1] = 1; aff[1][0][1] = -1;
  aff[2][3][3] = 1; aff[3][2][3] = -1;
  auto d2 = decide_nilpotent_bas(LieAlgebra({"a1", "x1", "a2", "x2"}, aff));
  CHECK(d2.verdict == NilpotentDecision::Outcome::no);
  CHECK(d2.reason == "algebra is not nilpotent");

  // filiform of class 3
  std::vector<std::vector<Vec>> fil(4, std::vector<Vec>(4, Vec(4)));
  fil[0][1][2] = 1; fil[1][0][2] = -1;
  fil[0][2][3] = 1; fil[2][0][3] = -1;
  auto d3 = decide_nilpotent_bas(LieAlgebra({"x1", "x2", "x3", "x4"}, fil));
  CHECK(d3.verdict == NilpotentDecision::Outcome::no);
  CHECK(d3.reason == "nilpotency class 3 exceeds 2");

  // free two-step algebra on three generators: centre of odd dimension 3
  std::vector<std::vector<Vec>> fr(6, std::vector<Vec>(6, Vec(6)));
  fr[0][1][3] = 1; fr[1][0][3] = -1;
  fr[0][2][4] = 1; fr[2][0][4] = -1;
  fr[1][2][5] = 1; fr[2][1][5] = -1;
  auto d4 = decide_nilpotent_bas(LieAlgebra({"x1", "x2", "x3", "z12", "z13", "z23"}, fr));
  CHECK(d4.verdict == NilpotentDecision::Outcome::no);
  CHECK(d4.reason == "centre has odd dimension 3");

  auto d5 = decide_nilpotent_bas(LieAlgebra::abelian(4));
  CHECK(d5.verdict == NilpotentDecision::Outcome::yes);
}

TEST_CASE("nilpotent decision: catalog entries are normal forms") {
  for (const char* name : {"R_h3", "h3_h3", "n8_11"}) {
    CatalogEntry e = catalog_build(name);
    REQUIRE(e.k_nilpotent.has_value());
    auto dec = decide_nilpotent_bas(e.k_nilpotent->n);
    CHECK(dec.verdict == NilpotentDecision::Outcome::yes);
    CHECK(dec.witness_exact);
    // the witness basis carries the standard bas structure
    HermitianData h = standard_structure_for_witness(e.k_nilpotent->n, dec.witness);
    CHECK(verdict_suite(h).checks.at("bas").pass);
  }
}

TEST_CASE("nilpotent decision: complex heisenberg is obstructed") {
  ComplexBrackets cb;
  cb.dim = 3;
  cb.re.assign(3, std::vector<Vec>(3, Vec(3)));
  cb.im.assign(3, std::vector<Vec>(3, Vec(3)));
  cb.re[0][1][2] = 1;
  cb.re[1][0][2] = -1;
  Realification r = realify(cb, {"x", "y", "z"});
  auto dec = decide_nilpotent_bas(r.algebra);
  CHECK(dec.verdict == NilpotentDecision::Outcome::no);
  REQUIRE(dec.obstruction_min_poly.has_value());
  // the pencil operator squares to -1: the obstruction is t^2 + 1
  CHECK(*dec.obstruction_min_poly == Polynomial(Vec{rat(1), rat(0), rat(1)}));
}

TEST_CASE("canonical connection of a nilpotent triple") {
  CatalogEntry e = catalog_build("h3_h3");
  REQUIRE(e.k_nilpotent.has_value());
  CanonicalConnection cc = canonical_as_connection(*e.k_nilpotent);
  CHECK(cc.T3.is_alternating());
  // T3(e_a, e_b, z_s) = -g([e_a, e_b], z_s) on (V, V, k) slots
  const KNilpotentData& d = *e.k_nilpotent;
  int N = d.n.dim();
  for (int a = 2; a < N; ++a)
    for (int b = 2; b < N; ++b) {
      Vec br = d.n.bracket_basis(a, b);
      for (int s = 0; s < 2; ++s) CHECK(cc.T3.at({a, b, s}) == -br[s]);
    }
}

TEST_CASE("nonabelian centre block is rejected by the canonical connection") {
  KNilpotentSpec spec;
  spec.k_dim = 3;
  // su(2)-type k bracket: [z1, z2] = 2 z3 cyclic
  spec.k_bracket.assign(3, std::vector<Vec>(3, Vec(3)));
  spec.k_bracket[0][1][2] = 2; spec.k_bracket[1][0][2] = -2;
  spec.k_bracket[1][2][0] = 2; spec.k_bracket[2][1][0] = -2;
  spec.k_bracket[2][0][1] = 2; spec.k_bracket[0][2][1] = -2;
  spec.k_metric = Mat::identity(3);
  spec.V_dim_complex = 2;
  spec.I = quat_right_i();
  spec.reps = {quat_left(0), quat_left(1), quat_left(2)};
  KNilpotentData d = build_k_nilpotent(spec);
  CHECK(verify_k_nilpotent(d).all_pass());
  CHECK_THROWS_AS(canonical_as_connection(d), UnsupportedHypothesisError);
}

TEST_CASE("torus bundle connection on the hopf fibration") {
  LieAlgebra su2 = [] {
    std::vector<std::vector<Vec>> c(3, std::vector<Vec>(3, Vec(3)));
    c[0][1][2] = 1; c[1][0][2] = -1;
    c[1][2][0] = 1; c[2][1][0] = -1;
    c[2][0][1] = 1; c[0][2][1] = -1;
    return LieAlgebra({"X1", "X2", "X3"}, c);
  }();
  ReductivePair p(su2, Subspace(3), Subspace::full(3));
  Subspace t(3, {basis_vec(3, 0)});
  CanonicalConnection cc = canonical_as_connection(p, t, Metric(Mat::identity(3)));
  CHECK(cc.T3.is_alternating());
  // F(X1, X2, X3) = g([X2,X3], X1) - 2 g([X1,X2], X3) = 1 - 2 = -1
  CHECK(cc.T3.at({0, 1, 2}) == rat(-1));

  // a fibre that does not act skewly is refused
  Mat bad = Mat::identity(3);
  bad(1, 1) = 2;
  CHECK_THROWS_AS(canonical_as_connection(p, t, Metric(bad)), UnsupportedHypothesisError);
}

TEST_CASE("complex semisimple witness for sl(2,C)") {
  ComplexBrackets cb;
  cb.dim = 3;
  cb.re.assign(3, std::vector<Vec>(3, Vec(3)));
  cb.im.assign(3, std::vector<Vec>(3, Vec(3)));
  cb.re[0][1][1] = 2; cb.re[1][0][1] = -2;
  cb.re[0][2][2] = -2; cb.re[2][0][2] = 2;
  cb.re[1][2][0] = 1; cb.re[2][1][0] = -1;
  Realification r = realify(cb, {"H", "E", "F"});
  ComplexSemisimpleData d{r.algebra, r.J_mult,
                          Subspace(6, {basis_vec(6, 1), sub(basis_vec(6, 2), basis_vec(6, 4)),
                                       add(basis_vec(6, 3), basis_vec(6, 5))})};
  NatredWitness w = natred_witness(d);
  CHECK(w.pair.l().dim() == 9);
  CHECK(w.pair.u().dim() == 3);
  CHECK(w.pair.dim_m() == 6);
  CHECK(w.m1.dim() == 3);
  CHECK(w.m2.dim() == 3);
  CHECK(w.m1.intersect(w.m2).dim() == 0);
}

TEST_CASE("compact torus bundle witnesses for the calabi-eckmann family") {
  for (const char* name : {"calabi_eckmann", "calabi_eckmann_t2", "calabi_eckmann_t4"}) {
    TorusBundleData d = calabi_eckmann_bundle(name);
    NatredWitness w = natred_witness(WitnessKind::compact_torus_bundle, d);
    CHECK(w.pair.dim_m() >= 4);
    Mat Gm(w.pair.dim_m(), w.pair.dim_m());
    for (int i = 0; i < w.pair.dim_m(); ++i)
      for (int j = 0; j < w.pair.dim_m(); ++j)
        Gm(i, j) = dot(w.pair.m().basis_vector(i), w.Qhat.apply(w.pair.m().basis_vector(j)));
    CHECK(natred_test(w.pair, Metric(Gm)).all_pass());
  }
}

TEST_CASE("noncompact torus bundle witness for sl(2,R)") {
  LieAlgebra g = sl2r();
  TorusBundleData d{g, Subspace(3), Subspace(3), Subspace(3), Mat(3, 3), Mat(1, 1)};
  d.t_tilde = Subspace(3, {sub(basis_vec(3, 1), basis_vec(3, 2))});       // E - F
  d.b = Subspace(3, {basis_vec(3, 0), add(basis_vec(3, 1), basis_vec(3, 2))});
  // (1/8) Killing: Q(H,H) = 1, Q(E,F) = 1/2
  d.Q(0, 0) = 1;
  d.Q(1, 2) = rat(1, 2);
  d.Q(2, 1) = rat(1, 2);
  d.S = Mat::identity(1);
  NatredWitness w = natred_witness(WitnessKind::noncompact_torus_bundle, d);
  CHECK(w.pair.l().dim() == 4);
  CHECK(w.pair.u().dim() == 1);
  CHECK(w.pair.dim_m() == 3);
}

TEST_CASE("bas products and admissibility") {
  CatalogEntry e = catalog_build("R_h3");
  REQUIRE(e.k_nilpotent.has_value());
  const KNilpotentData& d = *e.k_nilpotent;
  ProductFactor f{d.n, d.g, Subspace(4, {basis_vec(4, 0), basis_vec(4, 1)}), Mat(4, 4)};
  f.I = rot(4, 0, 1, 0) + rot(4, 2, 3, 1);  // I on the V block only
  Mat J(8, 8);
  auto setpair = [&](int a, int b) { J(b, a) = 1; J(a, b) = -1; };
  setpair(0, 1);  // z-block of factor 1
  setpair(2, 3);  // V-block of factor 1
  setpair(4, 5);  // z-block of factor 2
  setpair(6, 7);  // V-block of factor 2
  HermitianData h = product_bas({f, f}, J);
  CHECK(verdict_suite(h).checks.at("bas").pass);

  Mat Jbad(8, 8);
  auto setbad = [&](int a, int b) { Jbad(b, a) = 1; Jbad(a, b) = -1; };
  setbad(0, 2);  // mixes the distinguished block with V
  setbad(1, 3);
  setbad(4, 6);
  setbad(5, 7);
  CHECK_THROWS_AS(product_bas({f, f}, Jbad), AdmissibilityError);
}
