#include "bas/homogeneous.hpp"

#include <sstream>

#include "bas/errors.hpp"

namespace bas {

bool Verdict::all_pass() const {
  for (const auto& [name, c] : checks)
    if (!c.pass) return false;
  return true;
}

ReductivePair::ReductivePair(LieAlgebra l, Subspace u, Subspace m, bool check_effectivity)
    : l_(std::move(l)), u_(std::move(u)), m_(std::move(m)) {
  int n = l_.dim();
  if (u_.ambient_dim() != n || m_.ambient_dim() != n)
    throw InputShapeError("reductive pair: ambient dimension mismatch");
  if (u_.dim() + m_.dim() != n || u_.intersect(m_).dim() != 0)
    throw InputShapeError("reductive pair: l is not u + m");
  if (!is_subalgebra(l_, u_)) throw NotASubalgebraError("u is not a subalgebra");
  for (int a = 0; a < u_.dim(); ++a)
    for (int i = 0; i < m_.dim(); ++i)
      if (!m_.contains(l_.bracket(u_.basis_vector(a), m_.basis_vector(i))))
        throw NotASubalgebraError("[u,m] is not contained in m");
  if (check_effectivity && maximal_ideal_in(l_, u_).dim() != 0)
    throw NotInvariantError("pair is not almost-effective: u contains a nonzero ideal");
  // adapted basis: rows u then rows m
  Mat P(n, n);
  for (int i = 0; i < u_.dim(); ++i) P.set_row(i, u_.basis_vector(i));
  for (int i = 0; i < m_.dim(); ++i) P.set_row(u_.dim() + i, m_.basis_vector(i));
  auto inv = P.transpose().inverse();
  if (!inv) throw InternalInconsistencyError("adapted basis not invertible");
  adapted_inv_ = *inv;
}

std::pair<Vec, Vec> ReductivePair::split(const Vec& x) const {
  Vec a = adapted_inv_.apply(x);
  Vec up(u_.dim()), mp(m_.dim());
  for (int i = 0; i < u_.dim(); ++i) up[i] = a[i];
  for (int i = 0; i < m_.dim(); ++i) mp[i] = a[u_.dim() + i];
  return {up, mp};
}

Vec ReductivePair::project_m(const Vec& x) const { return from_m_coordinates(split(x).second); }

Vec ReductivePair::m_coordinates(const Vec& x_m) const { return split(x_m).second; }

Vec ReductivePair::from_m_coordinates(const Vec& c) const {
  Vec x(l_.dim());
  for (int i = 0; i < m_.dim(); ++i)
    if (c[i] != 0) x = add(x, scale(m_.basis_vector(i), c[i]));
  return x;
}

Vec ReductivePair::bracket_m(int i, int j) const {
  return split(l_.bracket(m_.basis_vector(i), m_.basis_vector(j))).second;
}

Mat ReductivePair::isotropy_action(int i, int j) const {
  Vec up = split(l_.bracket(m_.basis_vector(i), m_.basis_vector(j))).first;
  Vec y(l_.dim());
  for (int a = 0; a < u_.dim(); ++a)
    if (up[a] != 0) y = add(y, scale(u_.basis_vector(a), up[a]));
  return ad_on_m(y);
}

Mat ReductivePair::ad_on_m(const Vec& y) const {
  int n = m_.dim();
  Mat out(n, n);
  for (int s = 0; s < n; ++s) {
    auto [up, mp] = split(l_.bracket(y, m_.basis_vector(s)));
    if (!is_zero(up))
      throw InternalInconsistencyError("ad_on_m: bracket leaves m");
    for (int a = 0; a < n; ++a) out(a, s) = mp[a];
  }
  return out;
}

Verdict natred_test(const ReductivePair& p, const Metric& g) {
  int n = p.dim_m();
  if (g.g.rows() != n) throw InputShapeError("natred_test: metric dimension mismatch");
  for (int a = 0; a < p.u().dim(); ++a) {
    Mat ady = p.ad_on_m(p.u().basis_vector(a));
    if (!(ady.transpose() * g.g + g.g * ady == Mat(n, n)))
      throw NotInvariantError("metric is not ad(u)-invariant");
  }
  Tensor defect = Tensor::from_fn(0, 3, n, [&](const std::vector<int>& idx) {
    // g([X,Y]_m, Z) + g(Y, [X,Z]_m)
    Rational v = dot(g.g.apply(p.bracket_m(idx[0], idx[1])), basis_vec(n, idx[2]));
    v += dot(g.g.apply(p.bracket_m(idx[0], idx[2])), basis_vec(n, idx[1]));
    return v;
  });
  Verdict out;
  out.checks["naturally_reductive"] = {defect.is_zero(), defect};
  return out;
}

KostantForm kostant_form(const ReductivePair& p, const Metric& g) {
  if (!natred_test(p, g).all_pass())
    throw NotInvariantError("kostant_form requires a naturally reductive pair");
  const LieAlgebra& l = p.l();
  int n = l.dim(), du = p.u().dim(), dm = p.dim_m();
  // adapted basis vectors
  std::vector<Vec> ab;
  for (int i = 0; i < du; ++i) ab.push_back(p.u().basis_vector(i));
  for (int i = 0; i < dm; ++i) ab.push_back(p.m().basis_vector(i));
  auto adapted_coords = [&](const Vec& x) {
    auto [up, mp] = p.split(x);
    Vec c(n);
    for (int i = 0; i < du; ++i) c[i] = up[i];
    for (int i = 0; i < dm; ++i) c[du + i] = mp[i];
    return c;
  };
  int unknowns = du * (du + 1) / 2;
  auto uidx = [&](int a, int b) {  // a <= b
    return a * du - a * (a - 1) / 2 + (b - a);
  };
  // Q(v, w) with v, w in adapted coords: unknown part + known g part.
  auto known_part = [&](const Vec& v, const Vec& w) {
    Rational x = 0;
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dm; ++j)
        if (v[du + i] != 0 && w[du + j] != 0) x += v[du + i] * w[du + j] * g.g(i, j);
    return x;
  };
  auto unknown_coeffs = [&](const Vec& v, const Vec& w, Vec& acc, const Rational& sign) {
    for (int a = 0; a < du; ++a)
      for (int b = 0; b < du; ++b) {
        Rational f = v[a] * w[b];
        if (f == 0) continue;
        int lo = std::min(a, b), hi = std::max(a, b);
        acc[uidx(lo, hi)] += sign * f;
      }
  };
  std::vector<Vec> rows;
  Vec rhs_list;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        // Q([x_i,x_j], x_k) + Q(x_j, [x_i,x_k]) = 0 over the adapted basis
        Vec bij = adapted_coords(l.bracket(ab[i], ab[j]));
        Vec bik = adapted_coords(l.bracket(ab[i], ab[k]));
        Vec ek(n), ej(n);
        ek[k] = 1;
        ej[j] = 1;
        Vec coeffs(unknowns);
        unknown_coeffs(bij, ek, coeffs, 1);
        unknown_coeffs(ej, bik, coeffs, 1);
        Rational rhs = -(known_part(bij, ek) + known_part(ej, bik));
        if (is_zero(coeffs) && rhs == 0) continue;
        rows.push_back(std::move(coeffs));
        rhs_list.push_back(rhs);
      }
  Vec qu(unknowns);
  if (!rows.empty()) {
    auto res = linear_solve(Mat::from_rows(rows), rhs_list);
    if (!res.particular)
      throw NoKostantFormError("no ad-invariant extension of g exists");
    if (res.kernel.rows() > 0) {
      std::ostringstream os;
      os << "Kostant form is not unique: solution space has dimension "
         << res.kernel.rows();
      throw NoKostantFormError(os.str());
    }
    qu = *res.particular;
  }
  Mat Qu(du, du);
  for (int a = 0; a < du; ++a)
    for (int b = a; b < du; ++b) Qu(a, b) = Qu(b, a) = qu[uidx(a, b)];
  if (du > 0 && Qu.det() == 0)
    throw NoKostantFormError("Kostant form degenerates on u");
  Mat Qad(n, n);
  for (int a = 0; a < du; ++a)
    for (int b = 0; b < du; ++b) Qad(a, b) = Qu(a, b);
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dm; ++j) Qad(du + i, du + j) = g.g(i, j);
  // ambient coordinates: Q(x,y) = a(x)^T Qad a(y), a(x) = A x
  Mat P(n, n);
  for (int i = 0; i < n; ++i) P.set_row(i, ab[i]);
  Mat A = *P.transpose().inverse();
  KostantForm out{A.transpose() * Qad * A};
  // ad-invariance double-check on the ambient form
  for (int i = 0; i < n; ++i) {
    Mat adi = l.ad_basis(i);
    if (!(adi.transpose() * out.Q + out.Q * adi == Mat(n, n)))
      throw InternalInconsistencyError("assembled Kostant form is not ad-invariant");
  }
  return out;
}

/// J-adapted g-orthogonal frame of m-coordinates: pairs (e_i, J e_i), no normalization.
static std::vector<Vec> j_adapted_frame(int n, const Mat& g, const Mat& J) {
  std::vector<Vec> pairs;  // only the e_i, not the J e_i
  std::vector<Vec> span;   // all chosen vectors
  auto in_span = [&](const Vec& v) {
    std::vector<Vec> test = span;
    test.push_back(v);
    return int(row_space(test, n).rows()) == int(row_space(span, n).rows());
  };
  while (int(span.size()) < n) {
    Vec cand;
    for (int i = 0; i < n; ++i) {
      Vec e = basis_vec(n, i);
      if (!in_span(e)) {
        cand = e;
        break;
      }
    }
    // g-orthogonalize against the chosen span
    for (const auto& w : span) {
      Rational c = dot(g.apply(cand), w) / dot(g.apply(w), w);
      cand = sub(cand, scale(w, c));
    }
    pairs.push_back(cand);
    span.push_back(cand);
    span.push_back(J.apply(cand));
  }
  return pairs;
}

CanonicalTensors canonical_tensors(const ReductivePair& p, const Metric& g,
                                   const ComplexStructureOp& J) {
  int n = p.dim_m();
  if (!natred_test(p, g).all_pass())
    throw NotInvariantError("canonical_tensors requires a naturally reductive pair");
  for (int a = 0; a < p.u().dim(); ++a) {
    Mat ady = p.ad_on_m(p.u().basis_vector(a));
    if (!commutator(ady, J.J).is_zero())
      throw NotInvariantError("J is not ad(u)-invariant");
  }
  CanonicalTensors out;
  out.T = Tensor(1, 2, n);
  out.R = Tensor(1, 3, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec b = p.bracket_m(i, j);
      for (int a = 0; a < n; ++a) out.T.at({a, i, j}) = -b[a];
      Mat rz = p.isotropy_action(i, j);
      for (int a = 0; a < n; ++a)
        for (int z = 0; z < n; ++z) out.R.at({a, i, j, z}) = rz(a, z);
    }
  out.T_ch = Tensor::from_fn(1, 2, n, [&](const std::vector<int>& idx) {
    Vec JxJy(n);
    Vec Jx = J.J.col(idx[1]), Jy = J.J.col(idx[2]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (Jx[i] != 0 && Jy[j] != 0) JxJy = add(JxJy, scale(p.bracket_m(i, j), Jx[i] * Jy[j]));
    Vec v = scale(sub(JxJy, p.bracket_m(idx[1], idx[2])), rat(-1, 2));
    return v[idx[0]];
  });
  out.theta_sharp = Vec(n);
  for (const auto& e : j_adapted_frame(n, g.g, J.J)) {
    Vec Je = J.J.apply(e);
    Vec br(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (e[i] != 0 && Je[j] != 0) br = add(br, scale(p.bracket_m(i, j), e[i] * Je[j]));
    Rational norm2 = dot(g.g.apply(e), e);
    out.theta_sharp = sub(out.theta_sharp, scale(J.J.apply(br), 1 / norm2));
  }
  return out;
}

ReductionData canonical_reduction(const ReductivePair& p, const Metric& g,
                                  const ComplexStructureOp& J, const KostantForm& Q) {
  const LieAlgebra& l = p.l();
  int n = l.dim(), dm = p.dim_m();
  // f = {X in m : [u, X] = 0}, computed in m-coordinates
  std::vector<Vec> cond;
  for (int a = 0; a < p.u().dim(); ++a) {
    Mat ady = p.ad_on_m(p.u().basis_vector(a));
    for (int r = 0; r < dm; ++r) cond.push_back(ady.row(r));
  }
  Subspace f_m = cond.empty() ? Subspace::full(dm)
                              : Subspace(dm, rows_of(kernel_basis(Mat::from_rows(cond))));
  std::vector<Vec> f_amb;
  for (int i = 0; i < f_m.dim(); ++i) f_amb.push_back(p.from_m_coordinates(f_m.basis_vector(i)));
  ReductionData out{Subspace(n, f_amb),
                    Subspace(n),
                    ReductivePair(l, p.u(), p.m(), false),  // placeholder, rebuilt below
                    Mat(),
                    Mat(),
                    LieAlgebra()};

  // b = Q-orthocomplement of f in m; Q restricted to m is g, so use g in m-coords.
  std::vector<Vec> bcond;
  for (int i = 0; i < f_m.dim(); ++i) bcond.push_back(g.g.apply(f_m.basis_vector(i)));
  Subspace b_m = bcond.empty() ? Subspace::full(dm)
                               : Subspace(dm, rows_of(kernel_basis(Mat::from_rows(bcond))));
  std::vector<Vec> b_amb;
  for (int i = 0; i < b_m.dim(); ++i) b_amb.push_back(p.from_m_coordinates(b_m.basis_vector(i)));
  out.b = Subspace(n, b_amb);

  // invariants of f
  for (int i = 0; i < out.f.dim(); ++i)
    for (int j = 0; j < out.f.dim(); ++j)
      if (!is_zero(l.bracket(out.f.basis_vector(i), out.f.basis_vector(j))))
        // Happens for honest inputs: a flat Bismut connection gives trivial
        // isotropy, so f is the whole (possibly non-abelian) algebra and the
        // abelian-bundle reduction does not apply.
        throw TrivialSubmoduleError("trivial submodule is not abelian; the canonical reduction does not apply");
  for (int i = 0; i < f_m.dim(); ++i)
    if (!f_m.contains(J.J.apply(f_m.basis_vector(i))))
      throw InternalInconsistencyError("trivial submodule is not J-invariant");
  if (!(relative_normalizer(l, p.u()) == p.u().sum(out.f)))
    throw InternalInconsistencyError("N_l(u) != u + f");
  // theta_sharp lies in f
  CanonicalTensors ct = canonical_tensors(p, g, J);
  if (!f_m.contains(ct.theta_sharp))
    throw InternalInconsistencyError("Lee vector does not lie in the trivial submodule");
  // Q positive definite on f (Gram matrix minors)
  if (f_m.dim() > 0) {
    Mat gram(f_m.dim(), f_m.dim());
    for (int i = 0; i < f_m.dim(); ++i)
      for (int j = 0; j < f_m.dim(); ++j)
        gram(i, j) = dot(Q.Q.apply(out.f.basis_vector(i)), out.f.basis_vector(j));
    Metric check_pd(gram);  // throws if not positive definite
    (void)check_pd;
  }
  // centre containment
  AlgebraAnalysis an = analyze_algebra(l);
  if (an.centre.intersect(p.u()).dim() != 0)
    throw InternalInconsistencyError("centre of l meets u");
  {
    // z(u) = {x in u : [x,u] = 0}
    std::vector<Vec> zc;
    for (int a = 0; a < p.u().dim(); ++a) {
      Mat ada = l.ad(p.u().basis_vector(a));
      for (int r = 0; r < n; ++r) zc.push_back(ada.row(r));
    }
    Subspace zu = zc.empty() ? p.u()
                             : p.u().intersect(Subspace(
                                   n, rows_of(kernel_basis(Mat::from_rows(zc)))));
    if (!zu.sum(out.f).contains(an.centre))
      throw InternalInconsistencyError("z(l) not contained in z(u) + f");
  }

  out.base = ReductivePair(l, p.u().sum(out.f), out.b, false);
  // base has no trivial submodule
  {
    const Subspace& ubase = out.base.u();
    std::vector<Vec> bc;
    for (int a = 0; a < ubase.dim(); ++a) {
      Mat ady = out.base.ad_on_m(ubase.basis_vector(a));
      for (int r = 0; r < out.b.dim(); ++r) bc.push_back(ady.row(r));
    }
    int triv = bc.empty() ? out.b.dim() : kernel_basis(Mat::from_rows(bc)).rows();
    if (out.b.dim() > 0 && triv != 0)
      throw InternalInconsistencyError("reduced base still has a trivial submodule");
  }

  int db = b_m.dim();
  out.induced_g = Mat(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      out.induced_g(i, j) = dot(g.g.apply(b_m.basis_vector(i)), b_m.basis_vector(j));
  out.induced_J = Mat(db, db);
  for (int i = 0; i < db; ++i) {
    auto coords = b_m.coordinates(J.J.apply(b_m.basis_vector(i)));
    if (!coords) throw InternalInconsistencyError("J does not preserve the base complement");
    for (int a = 0; a < db; ++a) out.induced_J(a, i) = (*coords)[a];
  }
  out.fibre = LieAlgebra::abelian(out.f.dim(), "f");
  return out;
}

}  // namespace bas
