#include "bas/connections.hpp"

#include "bas/errors.hpp"

namespace bas {

Mat ConnectionMap::of(const Vec& x) const {
  int n = dim();
  Mat m(lambda.empty() ? 0 : lambda[0].rows(), lambda.empty() ? 0 : lambda[0].cols());
  for (int i = 0; i < n; ++i)
    if (x[i] != 0) m = m + lambda[i] * x[i];
  return m;
}

ConnectionMap levi_civita(const Carrier& carrier, const Metric& gm) {
  int n = carrier.dim();
  const Mat& g = gm.g;
  Mat ginv = gm.inverse();
  ConnectionMap cm;
  cm.lambda.assign(n, Mat(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // 2 g(Λ(x_i)x_j, x_z) = g([x_i,x_j]_m, x_z) + g([x_z,x_i]_m, x_j) + g(x_i, [x_z,x_j]_m)
      Vec rhs(n);
      for (int z = 0; z < n; ++z) {
        Rational v = dot(g.apply(carrier.bracket_m(i, j)), basis_vec(n, z));
        v += dot(g.apply(carrier.bracket_m(z, i)), basis_vec(n, j));
        v += dot(g.apply(carrier.bracket_m(z, j)), basis_vec(n, i));
        rhs[z] = v;
      }
      Vec col = ginv.apply(scale(rhs, rat(1, 2)));
      for (int a = 0; a < n; ++a) cm.lambda[i](a, j) = col[a];
    }
  }
  // torsion-free and metric assertions
  Tensor gt = Tensor::from_bilinear(g);
  for (int i = 0; i < n; ++i) {
    if (!gl_action(cm.lambda[i], gt).is_zero())
      throw InternalInconsistencyError("Levi-Civita map is not metric");
    for (int j = 0; j < n; ++j) {
      Vec t = sub(sub(cm.lambda[i].col(j), cm.lambda[j].col(i)), carrier.bracket_m(i, j));
      if (!is_zero(t)) throw InternalInconsistencyError("Levi-Civita map has torsion");
    }
  }
  return cm;
}

ConnectionMap levi_civita(const HermitianData& h) { return levi_civita(h.carrier, h.g); }

BismutData bismut(const HermitianData& h) {
  auto an = analyze_hermitian(h);
  if (!an.integrable)
    throw NotIntegrableError("J is not integrable; nonzero Nijenhuis " +
                             an.nijenhuis.first_nonzero(h.carrier.names()));
  int n = h.carrier.dim();
  const Mat& J = h.J.J;
  Tensor omega = fundamental_form(h);
  Tensor dw = ce_differential(omega, h.carrier);
  BismutData out;
  out.T3 = Tensor::from_fn(0, 3, n, [&](const std::vector<int>& idx) {
    Rational v = 0;
    for (int a = 0; a < n; ++a) {
      if (J(a, idx[0]) == 0) continue;
      for (int b = 0; b < n; ++b) {
        if (J(b, idx[1]) == 0) continue;
        for (int c = 0; c < n; ++c) {
          if (J(c, idx[2]) == 0) continue;
          v += J(a, idx[0]) * J(b, idx[1]) * J(c, idx[2]) * dw.at({a, b, c});
        }
      }
    }
    return v;
  });
  if (!out.T3.is_alternating())
    throw InternalInconsistencyError("Bismut torsion 3-form is not alternating");
  out.T = raise_last(out.T3, h.g.inverse());
  ConnectionMap D = levi_civita(h);
  out.map.lambda.resize(n);
  for (int i = 0; i < n; ++i)
    out.map.lambda[i] = D.lambda[i] + contract_to_matrix(out.T, basis_vec(n, i)) * rat(1, 2);
  Tensor gt = Tensor::from_bilinear(h.g.g);
  Tensor Jt = Tensor::from_matrix(J);
  for (int i = 0; i < n; ++i) {
    if (!gl_action(out.map.lambda[i], gt).is_zero())
      throw InternalInconsistencyError("Bismut map does not preserve g");
    if (!gl_action(out.map.lambda[i], Jt).is_zero())
      throw InternalInconsistencyError("Bismut map does not preserve J");
  }
  return out;
}

ChernLee chern_lee(const HermitianData& h) {
  auto an = analyze_hermitian(h);
  if (!an.integrable)
    throw NotIntegrableError("J is not integrable; nonzero Nijenhuis " +
                             an.nijenhuis.first_nonzero(h.carrier.names()));
  int n = h.carrier.dim();
  const Mat& J = h.J.J;
  Tensor dw = ce_differential(fundamental_form(h), h.carrier);
  // -2 g(T_ch(X,Y),Z) = dω(JX,Y,Z) + dω(X,JY,Z)
  Tensor tch3 = Tensor::from_fn(0, 3, n, [&](const std::vector<int>& idx) {
    Rational v = 0;
    for (int a = 0; a < n; ++a) {
      if (J(a, idx[0]) != 0) v += J(a, idx[0]) * dw.at({a, idx[1], idx[2]});
      if (J(a, idx[1]) != 0) v += J(a, idx[1]) * dw.at({idx[0], a, idx[2]});
    }
    return Rational(v * rat(-1, 2));
  });
  ChernLee out;
  out.T_ch = raise_last(tch3, h.g.inverse());
  // type (1,1): J T_ch(X,Y) = T_ch(JX,Y) = T_ch(X,JY)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vec v = out.T_ch.value({x, y});
      Vec jv = J.apply(v);
      Vec tJx(n), txJ(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (J(b, x) != 0) tJx[a] += J(b, x) * out.T_ch.at({a, b, y});
          if (J(b, y) != 0) txJ[a] += J(b, y) * out.T_ch.at({a, x, b});
        }
      if (!is_zero(sub(jv, tJx)) || !is_zero(sub(jv, txJ)))
        throw InternalInconsistencyError("Chern torsion is not of type (1,1)");
    }
  out.theta = Tensor::from_fn(0, 1, n, [&](const std::vector<int>& idx) {
    Rational v = 0;
    for (int a = 0; a < n; ++a) v += out.T_ch.at({a, idx[0], a});
    return v;
  });
  Vec theta_vec(n);
  for (int i = 0; i < n; ++i) theta_vec[i] = out.theta.at({i});
  out.theta_sharp = h.g.inverse().apply(theta_vec);
  return out;
}

Tensor curvature_of(const ConnectionMap& cm, const Carrier& carrier) {
  int n = carrier.dim();
  Tensor R(1, 3, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Mat m = cm.of(carrier.bracket_m(x, y)) + carrier.isotropy_action(x, y) -
              commutator(cm.lambda[x], cm.lambda[y]);
      for (int a = 0; a < n; ++a)
        for (int z = 0; z < n; ++z) R.at({a, x, y, z}) = m(a, z);
    }
  return R;
}

Tensor covariant_derivative(const ConnectionMap& cm, const Tensor& tau) {
  int n = tau.n();
  Tensor out(tau.r(), tau.s() + 1, n);
  for (int x = 0; x < n; ++x) {
    Tensor dx = gl_action(cm.lambda[x], tau);
    dx.for_each_covariant([&](const std::vector<int>& cov) {
      std::vector<int> src(tau.r() + tau.s()), dst(tau.r() + tau.s() + 1);
      for (int k = 0; k < tau.r(); ++k) src[k] = dst[k] = 0;  // filled below
      if (tau.r() == 1) {
        for (int a = 0; a < n; ++a) {
          src[0] = a;
          dst[0] = a;
          for (int k = 0; k < tau.s(); ++k) {
            src[1 + k] = cov[k];
            dst[2 + k] = cov[k];
          }
          dst[1] = x;
          out.at(dst) = dx.at(src);
        }
      } else {
        for (int k = 0; k < tau.s(); ++k) {
          src[k] = cov[k];
          dst[1 + k] = cov[k];
        }
        dst[0] = x;
        out.at(dst) = dx.at(src);
      }
    });
  }
  return out;
}

Mat lie_derivative_bilinear(const Carrier& c, const Vec& V, const Mat& g) {
  int n = c.dim();
  Mat out(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vec vx = c.bracket_m(V, basis_vec(n, x));
      Vec vy = c.bracket_m(V, basis_vec(n, y));
      out(x, y) = -dot(g.apply(vx), basis_vec(n, y)) - dot(g.apply(vy), basis_vec(n, x));
    }
  return out;
}

Mat lie_derivative_endo(const Carrier& c, const Vec& V, const Mat& J) {
  int n = c.dim();
  Mat out(n, n);
  for (int x = 0; x < n; ++x) {
    Vec col = sub(c.bracket_m(V, J.col(x)), J.apply(c.bracket_m(V, basis_vec(n, x))));
    for (int a = 0; a < n; ++a) out(a, x) = col[a];
  }
  return out;
}

Verdict verdict_suite(const HermitianData& h) {
  int n = h.carrier.dim();
  BismutData bd = bismut(h);
  Tensor R = curvature_of(bd.map, h.carrier);
  Tensor nablaT = covariant_derivative(bd.map, bd.T);
  Tensor nablaR = covariant_derivative(bd.map, R);
  Verdict v;
  v.checks["parallel_torsion"] = {nablaT.is_zero(), nablaT};
  v.checks["parallel_curvature"] = {nablaR.is_zero(), nablaR};
  bool bas = nablaT.is_zero() && nablaR.is_zero();
  v.checks["bas"] = {bas, bas ? Tensor(1, 3, n) : (nablaT.is_zero() ? nablaR : nablaT)};

  ConnectionMap D = levi_civita(h);
  Tensor DJ = covariant_derivative(D, Tensor::from_matrix(h.J.J));
  Tensor nDJ = covariant_derivative(bd.map, DJ);
  Tensor Rm = curvature_of(D, h.carrier);
  Tensor nRm = covariant_derivative(bd.map, Rm);
  bool cross = nDJ.is_zero() && nRm.is_zero();
  v.checks["bas_crosscheck"] = {cross, cross ? Tensor(1, 3, n)
                                             : (nDJ.is_zero() ? nRm : nDJ)};
  if (bas != cross)
    throw InternalInconsistencyError("bas and bas_crosscheck disagree");

  Tensor dT = ce_differential(bd.T3, h.carrier);
  v.checks["pluriclosed"] = {dT.is_zero(), dT};
  ChernLee cl = chern_lee(h);
  v.checks["balanced"] = {cl.theta.is_zero(), cl.theta};
  v.checks["kahler"] = {bd.T.is_zero(), bd.T};
  return v;
}

}  // namespace bas
