#include "bas/liealg.hpp"

#include <algorithm>
#include <sstream>

#include "bas/errors.hpp"

namespace bas {

LieAlgebra::LieAlgebra(std::vector<std::string> names, std::vector<std::vector<Vec>> brackets)
    : dim_(int(names.size())), names_(std::move(names)), c_(std::move(brackets)) {
  if (int(c_.size()) != dim_) throw InputShapeError("bracket table has wrong row count");
  for (const auto& row : c_) {
    if (int(row.size()) != dim_) throw InputShapeError("bracket table has wrong column count");
    for (const auto& v : row)
      if (int(v.size()) != dim_) throw InputShapeError("bracket vector has wrong length");
  }
  validate();
}

LieAlgebra LieAlgebra::abelian(int dim, const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i + 1));
  std::vector<std::vector<Vec>> c(dim, std::vector<Vec>(dim, Vec(dim)));
  return LieAlgebra(std::move(names), std::move(c));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (int(x.size()) != dim_ || int(y.size()) != dim_)
    throw InputShapeError("bracket: vector length mismatch");
  Vec r(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational f = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) r[k] += f * c_[i][j][k];
    }
  }
  return r;
}

Mat LieAlgebra::ad(const Vec& x) const {
  Mat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec col(dim_);
    for (int i = 0; i < dim_; ++i)
      if (x[i] != 0)
        for (int k = 0; k < dim_; ++k) col[k] += x[i] * c_[i][j][k];
    for (int k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

Mat LieAlgebra::ad_basis(int i) const {
  Vec x(dim_);
  x[i] = 1;
  return ad(x);
}

void LieAlgebra::validate() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c_[i][j][k] != -c_[j][i][k]) {
          std::ostringstream os;
          os << "antisymmetry fails at [" << names_[i] << "," << names_[j] << "]";
          throw NotALieAlgebraError(os.str());
        }
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        Vec s = bracket(c_[i][j], basis_vec(dim_, k));
        // Jacobi: [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] = 0
        Vec s2 = bracket(c_[j][k], basis_vec(dim_, i));
        Vec s3 = bracket(c_[k][i], basis_vec(dim_, j));
        Vec total = add(add(s, s2), s3);
        if (!is_zero(total)) {
          std::ostringstream os;
          os << "Jacobi identity fails on (" << names_[i] << "," << names_[j] << ","
             << names_[k] << ")";
          throw NotALieAlgebraError(os.str());
        }
      }
}

AlgebraAnalysis analyze_algebra(const LieAlgebra& g) {
  int n = g.dim();
  AlgebraAnalysis out;

  // Centre: kernel of the stacked ad-matrices.
  Mat stacked(n * n, n);
  for (int i = 0; i < n; ++i) {
    Mat adi = g.ad_basis(i);
    for (int r = 0; r < n; ++r)
      for (int cc = 0; cc < n; ++cc) stacked(i * n + r, cc) = adi(r, cc);
  }
  out.centre = Subspace(n, rows_of(kernel_basis(stacked)));

  auto bracket_span = [&](const Subspace& a, const Subspace& b) {
    std::vector<Vec> gens;
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j)
        gens.push_back(g.bracket(a.basis_vector(i), b.basis_vector(j)));
    return Subspace(n, gens);
  };

  Subspace whole = Subspace::full(n);
  out.derived = bracket_span(whole, whole);

  out.lower_central.push_back(whole);
  while (true) {
    Subspace next = bracket_span(whole, out.lower_central.back());
    if (next == out.lower_central.back()) break;
    out.lower_central.push_back(next);
    if (next.dim() == 0) break;
  }
  if (out.lower_central.back().dim() == 0)
    out.nilpotency_class = int(out.lower_central.size()) - 1;

  out.killing = Mat(n, n);
  for (int i = 0; i < n; ++i) {
    Mat adi = g.ad_basis(i);
    for (int j = 0; j <= i; ++j) {
      Rational t = trace(adi * g.ad_basis(j));
      out.killing(i, j) = t;
      out.killing(j, i) = t;
    }
  }
  return out;
}

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  int n1 = g1.dim(), n2 = g2.dim(), n = n1 + n2;
  std::vector<std::string> names = g1.names();
  for (const auto& nm : g2.names()) {
    std::string candidate = nm;
    while (std::find(names.begin(), names.end(), candidate) != names.end()) candidate += "'";
    names.push_back(candidate);
  }
  std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, Vec(n)));
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      for (int k = 0; k < n1; ++k) c[i][j][k] = g1.bracket_basis(i, j)[k];
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j)
      for (int k = 0; k < n2; ++k) c[n1 + i][n1 + j][n1 + k] = g2.bracket_basis(i, j)[k];
  return LieAlgebra(std::move(names), std::move(c));
}

Realification realify(const ComplexBrackets& cb, const std::vector<std::string>& names) {
  int n = cb.dim, N = 2 * n;
  if (int(cb.re.size()) != n || int(cb.im.size()) != n)
    throw InputShapeError("realify: bracket table size mismatch");
  std::vector<std::string> rnames;
  for (int i = 0; i < n; ++i) {
    std::string base = i < int(names.size()) ? names[i] : "z" + std::to_string(i + 1);
    rnames.push_back(base);
    rnames.push_back("i" + base);
  }
  // Real basis u_k = z_k at index 2k, v_k = i z_k at index 2k+1.
  auto emit = [&](Vec& out, const Vec& re, const Vec& im, bool flip_to_i) {
    for (int k = 0; k < n; ++k) {
      if (!flip_to_i) {
        out[2 * k] += re[k];
        out[2 * k + 1] += im[k];
      } else {  // multiply the bracket value by i
        out[2 * k] += -im[k];
        out[2 * k + 1] += re[k];
      }
    }
  };
  std::vector<std::vector<Vec>> c(N, std::vector<Vec>(N, Vec(N)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec& re = cb.re[i][j];
      const Vec& im = cb.im[i][j];
      emit(c[2 * i][2 * j], re, im, false);        // [u_i, u_j]
      emit(c[2 * i][2 * j + 1], re, im, true);     // [u_i, v_j] = i [z_i, z_j]
      emit(c[2 * i + 1][2 * j], re, im, true);     // [v_i, u_j]
      // [v_i, v_j] = i*i [z_i,z_j] = -[z_i,z_j]
      for (int k = 0; k < n; ++k) {
        c[2 * i + 1][2 * j + 1][2 * k] += -re[k];
        c[2 * i + 1][2 * j + 1][2 * k + 1] += -im[k];
      }
    }
  Realification out{LieAlgebra(std::move(rnames), std::move(c)), Mat(N, N)};
  for (int k = 0; k < n; ++k) {
    out.J_mult(2 * k + 1, 2 * k) = 1;
    out.J_mult(2 * k, 2 * k + 1) = -1;
  }
  return out;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& u) {
  for (int a = 0; a < u.dim(); ++a)
    for (int b = a + 1; b < u.dim(); ++b)
      if (!u.contains(g.bracket(u.basis_vector(a), u.basis_vector(b)))) return false;
  return true;
}

Subspace relative_normalizer(const LieAlgebra& g, const Subspace& u) {
  if (u.ambient_dim() != g.dim()) throw InputShapeError("normalizer: ambient mismatch");
  if (!is_subalgebra(g, u)) throw NotASubalgebraError("relative_normalizer: u is not a subalgebra");
  int n = g.dim();
  // v in span(u) iff Ann v = 0, where the rows of Ann span the dot-annihilator.
  Mat ann = kernel_basis(u.basis());
  std::vector<Vec> cond_rows;
  for (int a = 0; a < u.dim(); ++a) {
    Mat ad_ua = g.ad(u.basis_vector(a));
    Mat block = ann * ad_ua;  // condition: block * x = 0 means [u_a, x] in u... sign-free
    // We need [x, u_a] in u, i.e. -ad(u_a) x in u; same kernel.
    for (int r = 0; r < block.rows(); ++r) cond_rows.push_back(block.row(r));
  }
  if (cond_rows.empty()) return Subspace::full(n);
  return Subspace(n, rows_of(kernel_basis(Mat::from_rows(cond_rows))));
}

Subspace maximal_ideal_in(const LieAlgebra& g, const Subspace& u) {
  int n = g.dim();
  Subspace v = u;
  while (true) {
    // Shrink to {x in v : [g, x] subset v}.
    Mat ann = kernel_basis(v.basis());
    std::vector<Vec> cond_rows;
    if (ann.rows() > 0)
      for (int i = 0; i < n; ++i) {
        Mat block = ann * g.ad_basis(i);
        for (int r = 0; r < block.rows(); ++r) cond_rows.push_back(block.row(r));
      }
    Subspace stable =
        cond_rows.empty() ? Subspace::full(n)
                          : Subspace(n, rows_of(kernel_basis(Mat::from_rows(cond_rows))));
    Subspace next = v.intersect(stable);
    if (next == v) return v;
    v = next;
  }
}

}  // namespace bas
