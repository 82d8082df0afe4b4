#include "bas/hermitian.hpp"

#include "bas/errors.hpp"
#include "bas/homogeneous.hpp"

namespace bas {

Carrier Carrier::from_algebra(const LieAlgebra& g) {
  Carrier c;
  c.dim_ = g.dim();
  c.names_ = g.names();
  c.bm_.assign(c.dim_, std::vector<Vec>(c.dim_));
  c.adu_.assign(c.dim_, std::vector<Mat>(c.dim_, Mat(c.dim_, c.dim_)));
  for (int i = 0; i < c.dim_; ++i)
    for (int j = 0; j < c.dim_; ++j) c.bm_[i][j] = g.bracket_basis(i, j);
  return c;
}

Carrier Carrier::from_pair(const ReductivePair& p) {
  Carrier c;
  c.dim_ = p.dim_m();
  c.has_isotropy_ = true;
  for (int i = 0; i < c.dim_; ++i) c.names_.push_back("m" + std::to_string(i + 1));
  c.bm_.assign(c.dim_, std::vector<Vec>(c.dim_));
  c.adu_.assign(c.dim_, std::vector<Mat>(c.dim_));
  for (int i = 0; i < c.dim_; ++i)
    for (int j = 0; j < c.dim_; ++j) {
      c.bm_[i][j] = p.bracket_m(i, j);
      c.adu_[i][j] = p.isotropy_action(i, j);
    }
  return c;
}

Vec Carrier::bracket_m(const Vec& x, const Vec& y) const {
  Vec r(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational f = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) r[k] += f * bm_[i][j][k];
    }
  }
  return r;
}

Metric::Metric(Mat m) : g(std::move(m)) {
  if (g.rows() != g.cols()) throw InvalidHermitianError("metric must be square");
  if (!(g == g.transpose())) throw InvalidHermitianError("metric must be symmetric");
  for (int k = 1; k <= g.rows(); ++k) {
    Mat minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = g(i, j);
    if (!(minor.det() > 0))
      throw InvalidHermitianError("metric not positive definite (leading minor " +
                                  std::to_string(k) + ")");
  }
}

Mat Metric::inverse() const {
  auto inv = g.inverse();
  if (!inv) throw InternalInconsistencyError("positive definite metric not invertible");
  return *inv;
}

ComplexStructureOp::ComplexStructureOp(Mat m) : J(std::move(m)) {
  if (J.rows() != J.cols()) throw InvalidHermitianError("J must be square");
  if (!(J * J == -Mat::identity(J.rows())))
    throw InvalidHermitianError("J*J != -Id");
}

HermitianData::HermitianData(Carrier c, Metric metric, ComplexStructureOp j)
    : carrier(std::move(c)), g(std::move(metric)), J(std::move(j)) {
  int n = carrier.dim();
  if (g.g.rows() != n || J.J.rows() != n)
    throw InputShapeError("hermitian data dimension mismatch");
  if (!(J.J.transpose() * g.g * J.J == g.g))
    throw InvalidHermitianError("J is not g-orthogonal");
}

HermitianAnalysis analyze_hermitian(const HermitianData& h) {
  int n = h.carrier.dim();
  const Mat& J = h.J.J;
  HermitianAnalysis out;
  out.orthogonal = true;  // enforced at construction
  out.abelian_J = true;
  out.nijenhuis = Tensor(1, 2, n);
  for (int i = 0; i < n; ++i) {
    Vec Jx = J.col(i);
    for (int j = 0; j < n; ++j) {
      Vec Jy = J.col(j);
      Vec xy = h.carrier.bracket_m(i, j);
      Vec JxJy = h.carrier.bracket_m(Jx, Jy);
      Vec Jx_y = h.carrier.bracket_m(Jx, basis_vec(n, j));
      Vec x_Jy = h.carrier.bracket_m(basis_vec(n, i), Jy);
      Vec nij = sub(sub(JxJy, xy), add(J.apply(Jx_y), J.apply(x_Jy)));
      for (int a = 0; a < n; ++a) out.nijenhuis.at({a, i, j}) = nij[a];
      if (!is_zero(sub(JxJy, xy))) out.abelian_J = false;
    }
  }
  out.integrable = out.nijenhuis.is_zero();
  return out;
}

Tensor fundamental_form(const HermitianData& h) {
  return Tensor::from_bilinear(h.J.J.transpose() * h.g.g);
}

Tensor ce_differential(const Tensor& alpha, const Carrier& carrier) {
  if (alpha.r() != 0) throw InputShapeError("ce_differential needs a (0,k) form");
  if (!alpha.is_alternating()) throw InputShapeError("ce_differential needs an alternating form");
  int n = carrier.dim();
  int k = alpha.s();
  return Tensor::from_fn(0, k + 1, n, [&](const std::vector<int>& idx) {
    Rational v = 0;
    for (int i = 0; i < k + 1; ++i)
      for (int j = i + 1; j < k + 1; ++j) {
        const Vec& br = carrier.bracket_m(idx[i], idx[j]);
        if (is_zero(br)) continue;
        // alpha([X_i,X_j], ..hat i..hat j..)
        std::vector<int> rest;
        rest.reserve(k);
        for (int t = 0; t < k + 1; ++t)
          if (t != i && t != j) rest.push_back(idx[t]);
        Rational term = 0;
        std::vector<int> full(k);
        for (int t = 0; t < k - 1; ++t) full[1 + t] = rest[t];
        for (int a = 0; a < n; ++a) {
          if (br[a] == 0) continue;
          full[0] = a;
          term += br[a] * alpha.at(full);
        }
        if ((i + j) % 2 == 0)
          v += term;
        else
          v -= term;
      }
    return v;  // sum_{i<j} (-1)^{i+j} alpha([X_i,X_j], ...)
  });
}

}  // namespace bas
