#include "bas/catalog.hpp"

#include <functional>

#include "bas/connections.hpp"
#include "bas/errors.hpp"
#include "bas/liealg.hpp"

namespace bas {

namespace {

Mat rot2() {
  Mat r(2, 2);
  r(0, 1) = -1;
  r(1, 0) = 1;
  return r;
}

// pairs (x_1,x_2), (x_3,x_4), ... into a complex structure
Mat pairing_J(int n) {
  Mat J(n, n);
  for (int i = 0; i < n; i += 2) {
    J(i + 1, i) = 1;
    J(i, i + 1) = -1;
  }
  return J;
}

Mat block(const std::vector<Mat>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.rows();
  Mat M(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) M(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return M;
}

CatalogEntry kodaira4() {
  // [e, Je] = z; basis (z, w, e, Je), J z = w, J e = Je
  std::vector<std::vector<Vec>> c(4, std::vector<Vec>(4, Vec(4)));
  c[2][3][0] = 1;
  c[3][2][0] = -1;
  LieAlgebra n({"z", "w", "e", "Je"}, c);
  Mat J(4, 4);
  J(1, 0) = 1;
  J(0, 1) = -1;
  J(3, 2) = 1;
  J(2, 3) = -1;
  HermitianData h(Carrier::from_algebra(n), Metric(Mat::identity(4)), ComplexStructureOp(J));
  return CatalogEntry{"kodaira4",
                      "Kodaira-Thurston type nilpotent structure in dimension 4",
                      std::move(h),
                      {{"bas", true},
                       {"bas_crosscheck", true},
                       {"parallel_torsion", true},
                       {"parallel_curvature", true},
                       {"pluriclosed", true},
                       {"balanced", false},
                       {"kahler", false}},
                      std::nullopt};
}

// sl(2,C): basis (H, E, F), [H,E] = 2E, [H,F] = -2F, [E,F] = H
Realification sl2c_realified() {
  ComplexBrackets cb;
  cb.dim = 3;
  cb.re.assign(3, std::vector<Vec>(3, Vec(3)));
  cb.im.assign(3, std::vector<Vec>(3, Vec(3)));
  cb.re[0][1][1] = 2;
  cb.re[1][0][1] = -2;
  cb.re[0][2][2] = -2;
  cb.re[2][0][2] = 2;
  cb.re[1][2][0] = 1;
  cb.re[2][1][0] = -1;
  return realify(cb, {"H", "E", "F"});
}

CatalogEntry sl2c_canonical() {
  Realification r = sl2c_realified();
  const LieAlgebra& s = r.algebra;  // basis (H, iH, E, iE, F, iF)
  // compact form su(2): iH, E - F, i(E + F)
  Vec x1 = basis_vec(6, 1);
  Vec x2 = sub(basis_vec(6, 2), basis_vec(6, 4));
  Vec x3 = add(basis_vec(6, 3), basis_vec(6, 5));
  std::vector<Vec> krows{x1, x2, x3};
  std::vector<Vec> prows;
  for (const Vec& k : krows) prows.push_back(r.J_mult.apply(k));
  Mat B = analyze_algebra(s).killing;
  // g = -B on k, +B on ik, blocks orthogonal
  Mat P(6, 6);
  for (int i = 0; i < 3; ++i) P.set_row(i, krows[i]);
  for (int i = 0; i < 3; ++i) P.set_row(3 + i, prows[i]);
  Mat Gad(6, 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Gad(i, j) = -dot(krows[i], B.apply(krows[j]));
      Gad(3 + i, 3 + j) = dot(prows[i], B.apply(prows[j]));
    }
  Mat Pi = *P.inverse();
  // rows of P are the adapted basis, so coords(x) = (P^T)^{-1} x
  Mat g = Pi * Gad * Pi.transpose();
  HermitianData h(Carrier::from_algebra(s), Metric(g), ComplexStructureOp(r.J_mult));
  return CatalogEntry{"sl2c_canonical",
                      "canonical Hermitian structure on realified sl(2,C)",
                      std::move(h),
                      {{"bas", true}, {"kahler", false}},
                      std::nullopt};
}

CatalogEntry h3C_natural() {
  // complex Heisenberg [x, y] = z, realified; natural (J, g) = (i-multiplication, Id)
  ComplexBrackets cb;
  cb.dim = 3;
  cb.re.assign(3, std::vector<Vec>(3, Vec(3)));
  cb.im.assign(3, std::vector<Vec>(3, Vec(3)));
  cb.re[0][1][2] = 1;
  cb.re[1][0][2] = -1;
  Realification r = realify(cb, {"x", "y", "z"});
  HermitianData h(Carrier::from_algebra(r.algebra), Metric(Mat::identity(6)),
                  ComplexStructureOp(r.J_mult));
  return CatalogEntry{"h3C_natural",
                      "realified complex Heisenberg with its natural structure",
                      std::move(h),
                      {{"bas", false}},
                      std::nullopt};
}

LieAlgebra su2su2() {
  // two su(2) factors, basis (X1, X2, X3, Y1, Y2, Y3), cyclic brackets
  std::vector<std::vector<Vec>> c(6, std::vector<Vec>(6, Vec(6)));
  auto cyc = [&](int a, int b, int z) {
    c[a][b][z] = 1;
    c[b][a][z] = -1;
  };
  cyc(0, 1, 2);
  cyc(1, 2, 0);
  cyc(2, 0, 1);
  cyc(3, 4, 5);
  cyc(4, 5, 3);
  cyc(5, 3, 4);
  return LieAlgebra({"X1", "X2", "X3", "Y1", "Y2", "Y3"}, c);
}

struct CEParams {
  Mat gt;   // metric on the torus block (X1, Y1)
  Mat Jt;   // complex structure on the torus block
};

std::optional<CEParams> ce_params(const std::string& name) {
  auto m22 = [](long a, long b, long c, long d, long den = 1) {
    Mat m(2, 2);
    m(0, 0) = rat(a, den);
    m(0, 1) = rat(b, den);
    m(1, 0) = rat(c, den);
    m(1, 1) = rat(d, den);
    return m;
  };
  if (name == "calabi_eckmann") return CEParams{Mat::identity(2), m22(0, -1, 1, 0)};
  if (name == "calabi_eckmann_t2") return CEParams{m22(2, 0, 0, 2), m22(0, -1, 1, 0)};
  if (name == "calabi_eckmann_t3") {
    Mat J(2, 2);
    J(0, 1) = -2;
    J(1, 0) = rat(1, 2);
    return CEParams{m22(1, 0, 0, 4), J};
  }
  if (name == "calabi_eckmann_t4") return CEParams{m22(5, 2, 2, 1), m22(-2, -1, 5, 2)};
  return std::nullopt;
}

CatalogEntry calabi_eckmann(const std::string& name, const CEParams& p) {
  LieAlgebra g = su2su2();
  // torus block (X1, Y1) at indices 0, 3; horizontal block X2, X3, Y2, Y3
  Mat J(6, 6);
  J(0, 0) = p.Jt(0, 0);
  J(3, 0) = p.Jt(1, 0);
  J(0, 3) = p.Jt(0, 1);
  J(3, 3) = p.Jt(1, 1);
  J(2, 1) = 1;
  J(1, 2) = -1;
  J(5, 4) = 1;
  J(4, 5) = -1;
  Mat gm = Mat::identity(6);
  gm(0, 0) = p.gt(0, 0);
  gm(0, 3) = p.gt(0, 1);
  gm(3, 0) = p.gt(1, 0);
  gm(3, 3) = p.gt(1, 1);
  HermitianData h(Carrier::from_algebra(g), Metric(gm), ComplexStructureOp(J));
  // dT(X2,X3,Y2,Y3) = -2 p kappa with p = Jt(0,0) and kappa = omega(X1,Y1),
  // so the structure is pluriclosed exactly when Jt is off-diagonal.
  bool pluriclosed = p.Jt(0, 0) == 0;
  return CatalogEntry{name,
                      "Calabi-Eckmann structure on su(2) + su(2), torus metric variant",
                      std::move(h),
                      {{"bas", true}, {"pluriclosed", pluriclosed}, {"kahler", false}},
                      std::nullopt};
}

struct NilSpec {
  std::string name;
  std::string description;
  int k_dim;
  int V_dim_complex;
  std::function<std::vector<Mat>()> reps;
};

// diag of i-rotations with integer weights, one weight per complex line
Mat weighted_rot(const std::vector<long>& weights) {
  int n = 2 * int(weights.size());
  Mat A(n, n);
  for (int t = 0; t < int(weights.size()); ++t) {
    A(2 * t, 2 * t + 1) = -weights[t];
    A(2 * t + 1, 2 * t) = weights[t];
  }
  return A;
}

const std::vector<NilSpec>& nil_specs() {
  static const std::vector<NilSpec> specs = {
      {"R_h3", "R + h3(R) with the standard structure", 2, 1,
       [] { return std::vector<Mat>{weighted_rot({1}), weighted_rot({0})}; }},
      {"R3_h3", "R^3 + h3(R)", 4, 1,
       [] {
         return std::vector<Mat>{weighted_rot({1}), weighted_rot({0}), weighted_rot({0}),
                                 weighted_rot({0})};
       }},
      {"R_h5", "R + h5(R)", 2, 2,
       [] { return std::vector<Mat>{weighted_rot({1, 1}), weighted_rot({0, 0})}; }},
      {"h3_h3", "h3(R) + h3(R)", 2, 2,
       [] { return std::vector<Mat>{weighted_rot({1, 0}), weighted_rot({0, 1})}; }},
      {"R5_h3", "R^5 + h3(R)", 6, 1,
       [] {
         return std::vector<Mat>{weighted_rot({1}), weighted_rot({0}), weighted_rot({0}),
                                 weighted_rot({0}), weighted_rot({0}), weighted_rot({0})};
       }},
      {"R3_h5", "R^3 + h5(R)", 4, 2,
       [] {
         return std::vector<Mat>{weighted_rot({1, 1}), weighted_rot({0, 0}),
                                 weighted_rot({0, 0}), weighted_rot({0, 0})};
       }},
      {"R2_h3_h3", "R^2 + h3(R) + h3(R)", 4, 2,
       [] {
         return std::vector<Mat>{weighted_rot({1, 0}), weighted_rot({0, 1}),
                                 weighted_rot({0, 0}), weighted_rot({0, 0})};
       }},
      {"R_h7", "R + h7(R)", 2, 3,
       [] { return std::vector<Mat>{weighted_rot({1, 1, 1}), weighted_rot({0, 0, 0})}; }},
      {"h3_h5", "h3(R) + h5(R)", 2, 3,
       [] { return std::vector<Mat>{weighted_rot({1, 0, 0}), weighted_rot({0, 1, 1})}; }},
      {"n8_11", "n^8_{1,1}: phi(t,s) = diag(it, is, i(t+s))", 2, 3,
       [] { return std::vector<Mat>{weighted_rot({1, 0, 1}), weighted_rot({0, 1, 1})}; }},
  };
  return specs;
}

CatalogEntry nilpotent_entry(const NilSpec& ns) {
  KNilpotentSpec spec;
  spec.k_dim = ns.k_dim;
  spec.k_metric = Mat::identity(ns.k_dim);
  spec.V_dim_complex = ns.V_dim_complex;
  spec.I = pairing_J(2 * ns.V_dim_complex);
  spec.reps = ns.reps();
  KNilpotentData d = build_k_nilpotent(spec);
  int N = d.n.dim();
  Mat J = block({pairing_J(ns.k_dim), pairing_J(2 * ns.V_dim_complex)});
  HermitianData h(Carrier::from_algebra(d.n), Metric(Mat::identity(N)), ComplexStructureOp(J));
  return CatalogEntry{ns.name,
                      ns.description,
                      std::move(h),
                      {{"bas", true}, {"kahler", false}},
                      std::move(d)};
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"kodaira4",          "sl2c_canonical",    "h3C_natural",
                               "calabi_eckmann",    "calabi_eckmann_t2", "calabi_eckmann_t3",
                               "calabi_eckmann_t4"};
    for (const auto& ns : nil_specs()) v.push_back(ns.name);
    return v;
  }();
  return names;
}

CatalogEntry catalog_build(const std::string& name) {
  if (name == "kodaira4") return kodaira4();
  if (name == "sl2c_canonical") return sl2c_canonical();
  if (name == "h3C_natural") return h3C_natural();
  if (auto p = ce_params(name)) return calabi_eckmann(name, *p);
  for (const auto& ns : nil_specs())
    if (ns.name == name) return nilpotent_entry(ns);
  throw UnknownEntryError("no catalog entry named '" + name + "'");
}

TorusBundleData calabi_eckmann_bundle(const std::string& name) {
  auto p = ce_params(name);
  if (!p) throw UnknownEntryError("'" + name + "' is not a calabi_eckmann entry");
  TorusBundleData d{su2su2(), Subspace(6), Subspace(6), Subspace(6), Mat::identity(6), Mat(2, 2)};
  d.t_tilde = Subspace(6, {basis_vec(6, 0), basis_vec(6, 3)});
  d.b = Subspace(6, {basis_vec(6, 1), basis_vec(6, 2), basis_vec(6, 4), basis_vec(6, 5)});
  // Q = Id is ad-invariant (product of Killing multiples) with Q|b = g|b,
  // so S on the torus block is just the torus metric
  d.S = p->gt;
  return d;
}

std::vector<std::string> catalog_verify(const CatalogEntry& entry) {
  Verdict v = verdict_suite(entry.data);
  std::vector<std::string> bad;
  for (const auto& [name, want] : entry.expected) {
    auto it = v.checks.find(name);
    if (it == v.checks.end() || it->second.pass != want) bad.push_back(name);
  }
  return bad;
}

}  // namespace bas
