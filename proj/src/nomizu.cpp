#include "bas/nomizu.hpp"

#include "bas/errors.hpp"

namespace bas {

namespace {

Vec flatten(const Mat& m) {
  Vec v(std::size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

Mat unflatten(const Vec& v, int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

}  // namespace

std::vector<Mat> stabilizer(const HermitianData& h) {
  Verdict verdict = verdict_suite(h);
  if (!verdict.checks.at("bas").pass)
    throw NotBASError("stabilizer requires a BAS input; " +
                      verdict.checks.at("bas").witness.first_nonzero(h.carrier.names()));
  int n = h.carrier.dim();
  BismutData bd = bismut(h);
  Tensor R = curvature_of(bd.map, h.carrier);
  Tensor gt = Tensor::from_bilinear(h.g.g);
  Tensor Jt = Tensor::from_matrix(h.J.J);

  auto stack_action = [&](const Mat& A) {
    Vec out;
    for (const Tensor* t : {&gt, &Jt, &bd.T, &R}) {
      Tensor img = gl_action(A, *t);
      std::vector<int> idx(t->r() + t->s(), 0);
      std::size_t total = 1;
      for (int k = 0; k < t->r() + t->s(); ++k) total *= n;
      for (std::size_t f = 0; f < total; ++f) {
        std::size_t rem = f;
        for (int k = t->r() + t->s() - 1; k >= 0; --k) {
          idx[k] = int(rem % n);
          rem /= n;
        }
        out.push_back(img.at(idx));
      }
    }
    return out;
  };
  std::size_t rows = stack_action(Mat(n, n)).size();
  Mat sys(int(rows), n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mat E(n, n);
      E(a, b) = 1;
      Vec col = stack_action(E);
      for (std::size_t r = 0; r < rows; ++r) sys(int(r), a * n + b) = col[r];
    }
  Mat ker = kernel_basis(sys);
  std::vector<Mat> stab;
  for (int r = 0; r < ker.rows(); ++r) stab.push_back(unflatten(ker.row(r), n));
  // closure under commutator
  Subspace span(n * n, rows_of(ker));
  for (std::size_t i = 0; i < stab.size(); ++i)
    for (std::size_t j = i + 1; j < stab.size(); ++j)
      if (!span.contains(flatten(commutator(stab[i], stab[j]))))
        throw InternalInconsistencyError("stabilizer is not closed under commutator");
  return stab;
}

NomizuAlgebra build_nomizu(const HermitianData& h) {
  std::vector<Mat> stab = stabilizer(h);
  int n = h.carrier.dim(), s = int(stab.size()), N = s + n;
  BismutData bd = bismut(h);
  Tensor R = curvature_of(bd.map, h.carrier);

  std::vector<Vec> flat_stab;
  for (const auto& A : stab) flat_stab.push_back(flatten(A));
  Subspace stab_span(n * n, flat_stab);
  auto stab_coords = [&](const Mat& A) {
    auto c = stab_span.coordinates(flatten(A));
    if (!c) throw InternalInconsistencyError("endomorphism escapes the stabilizer");
    // coordinates are in the RREF basis, which equals the stab list order here
    return *c;
  };

  std::vector<std::string> names;
  for (int i = 0; i < s; ++i) names.push_back("A" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) names.push_back(h.carrier.names()[i]);

  std::vector<std::vector<Vec>> c(N, std::vector<Vec>(N, Vec(N)));
  auto put = [&](int i, int j, const Vec& stab_part, const Vec& m_part) {
    for (int k = 0; k < s; ++k) {
      c[i][j][k] = stab_part[k];
      c[j][i][k] = -stab_part[k];
    }
    for (int k = 0; k < n; ++k) {
      c[i][j][s + k] = m_part[k];
      c[j][i][s + k] = -m_part[k];
    }
  };
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      put(i, j, stab_coords(commutator(stab[i], stab[j])), Vec(n));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < n; ++j)
      put(i, s + j, Vec(s), stab[i].col(j));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat rij(n, n);
      for (int a = 0; a < n; ++a)
        for (int z = 0; z < n; ++z) rij(a, z) = R.at({a, i, j, z});
      put(s + i, s + j, stab_coords(rij), bd.T.value({i, j}));
    }
  NomizuAlgebra out{h, std::move(stab), bd.T, R, LieAlgebra()};
  try {
    out.algebra = LieAlgebra(std::move(names), std::move(c));
  } catch (const NotALieAlgebraError& e) {
    throw InternalInconsistencyError(std::string("Nomizu bracket fails Jacobi: ") + e.what());
  }
  return out;
}

Presentation canonical_presentation(const NomizuAlgebra& nom) {
  int n = nom.carrier.carrier.dim(), s = nom.stab_dim(), N = s + n;
  // l = [m,m] + m inside N
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i) gens.push_back(basis_vec(N, s + i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      gens.push_back(nom.algebra.bracket_basis(s + i, s + j));
  Subspace l_span(N, gens);
  Subspace stab_block(N);
  {
    std::vector<Vec> sb;
    for (int i = 0; i < s; ++i) sb.push_back(basis_vec(N, i));
    stab_block = Subspace(N, sb);
  }
  Subspace u_span = l_span.intersect(stab_block);
  int du = u_span.dim(), dl = du + n;

  // basis of l: u vectors then the m unit vectors.  The m block is taken with
  // a sign: the tangent space is identified with m through fundamental vector
  // fields, which reverse the bracket, so [v,w]_m = -T(v,w) in this basis and
  // the canonical tensors of the pair reproduce the original Bismut data.
  std::vector<Vec> lbasis;
  for (int i = 0; i < du; ++i) lbasis.push_back(u_span.basis_vector(i));
  for (int i = 0; i < n; ++i) lbasis.push_back(scale(basis_vec(N, s + i), rat(-1)));
  Subspace l_check(N, lbasis);
  if (l_check.dim() != dl || !(l_check == l_span))
    throw InternalInconsistencyError("canonical presentation basis mismatch");

  std::vector<std::string> names;
  for (int i = 0; i < du; ++i) names.push_back("u" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) names.push_back(nom.carrier.carrier.names()[i]);
  std::vector<std::vector<Vec>> c(dl, std::vector<Vec>(dl, Vec(dl)));
  // coordinates against the chosen (non-RREF) basis of l
  Mat B(dl, N);
  for (int i = 0; i < dl; ++i) B.set_row(i, lbasis[i]);
  Mat Bt = B.transpose();
  for (int i = 0; i < dl; ++i)
    for (int j = 0; j < dl; ++j) {
      auto res = linear_solve(Bt, nom.algebra.bracket(lbasis[i], lbasis[j]));
      if (!res.particular) throw InternalInconsistencyError("l is not closed under the bracket");
      c[i][j] = *res.particular;
    }
  LieAlgebra l_alg(std::move(names), std::move(c));
  std::vector<Vec> uvecs, mvecs;
  for (int i = 0; i < du; ++i) uvecs.push_back(basis_vec(dl, i));
  for (int i = 0; i < n; ++i) mvecs.push_back(basis_vec(dl, du + i));
  ReductivePair pair(std::move(l_alg), Subspace(dl, uvecs), Subspace(dl, mvecs));
  Presentation out{std::move(pair), nom.carrier.g, nom.carrier.J};
  if (!natred_test(out.pair, out.g).all_pass())
    throw InternalInconsistencyError("canonical presentation is not naturally reductive");
  return out;
}

std::pair<Mat, Vec> generator_map(const NomizuAlgebra& nom, const Mat& A, const Vec& v) {
  const HermitianData& h = nom.carrier;
  int n = h.carrier.dim();
  auto phi = [&](const Mat& B, const Vec& w) {
    return std::pair<Mat, Vec>(B + contract_to_matrix(nom.T, w) * rat(1, 2), w);
  };
  ConnectionMap D = levi_civita(h);
  Tensor Rm = curvature_of(D, h.carrier);
  auto bracket_N = [&](const std::pair<Mat, Vec>& x, const std::pair<Mat, Vec>& y) {
    Mat Rvw(n, n);
    for (int a = 0; a < n; ++a)
      for (int z = 0; z < n; ++z) {
        Rational val = 0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (x.second[i] != 0 && y.second[j] != 0)
              val += x.second[i] * y.second[j] * nom.R.at({a, i, j, z});
        Rvw(a, z) = val;
      }
    Vec Tvw(n);
    for (int a = 0; a < n; ++a) {
      Rational val = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (x.second[i] != 0 && y.second[j] != 0)
            val += x.second[i] * y.second[j] * nom.T.at({a, i, j});
      Tvw[a] = val;
    }
    return std::pair<Mat, Vec>(
        commutator(x.first, y.first) + Rvw,
        add(sub(x.first.apply(y.second), y.first.apply(x.second)), Tvw));
  };
  auto bracket_target = [&](const std::pair<Mat, Vec>& x, const std::pair<Mat, Vec>& y) {
    Mat Rmvw(n, n);
    for (int a = 0; a < n; ++a)
      for (int z = 0; z < n; ++z) {
        Rational val = 0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (x.second[i] != 0 && y.second[j] != 0)
              val += x.second[i] * y.second[j] * Rm.at({a, i, j, z});
        Rmvw(a, z) = val;
      }
    return std::pair<Mat, Vec>(
        commutator(x.first, y.first) + Rmvw,
        sub(x.first.apply(y.second), y.first.apply(x.second)));
  };
  std::pair<Mat, Vec> xi{A, v};
  // check preservation against every basis element of N
  std::vector<std::pair<Mat, Vec>> basis;
  for (const auto& S : nom.stab) basis.emplace_back(S, Vec(n));
  for (int i = 0; i < n; ++i) basis.emplace_back(Mat(n, n), basis_vec(n, i));
  for (const auto& eta : basis) {
    auto lhs = phi(bracket_N(xi, eta).first, bracket_N(xi, eta).second);
    auto rhs = bracket_target(phi(A, v), phi(eta.first, eta.second));
    if (!(lhs.first == rhs.first) || !is_zero(sub(lhs.second, rhs.second)))
      throw InternalInconsistencyError("generator map does not preserve brackets");
  }
  return phi(A, v);
}

}  // namespace bas
