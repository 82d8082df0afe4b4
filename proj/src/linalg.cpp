#include "bas/linalg.hpp"

#include <sstream>

#include "bas/errors.hpp"

namespace bas {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (int(rows[i].size()) != m.cols()) throw InputShapeError("ragged row list");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vec Mat::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_row(int i, const Vec& v) {
  if (int(v.size()) != cols_) throw InputShapeError("row size mismatch");
  for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputShapeError("matrix add shape");
  Mat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputShapeError("matrix sub shape");
  Mat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw InputShapeError("matrix mul shape");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

Mat Mat::operator*(const Rational& c) const {
  Mat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
  return r;
}

Mat Mat::operator-() const { return (*this) * Rational(-1); }

Vec Mat::apply(const Vec& v) const {
  if (int(v.size()) != cols_) throw InputShapeError("matrix apply shape");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

int Mat::rref() {
  int lead = 0;
  int r = 0;
  for (; r < rows_ && lead < cols_; ++r) {
    int pivot = -1;
    while (lead < cols_) {
      for (int i = r; i < rows_; ++i)
        if ((*this)(i, lead) != 0) {
          pivot = i;
          break;
        }
      if (pivot >= 0) break;
      ++lead;
    }
    if (pivot < 0) return r;
    if (pivot != r)
      for (int j = 0; j < cols_; ++j) std::swap((*this)(pivot, j), (*this)(r, j));
    Rational inv = 1 / (*this)(r, lead);
    for (int j = 0; j < cols_; ++j) (*this)(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Rational f = (*this)(i, lead);
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
    }
    ++lead;
  }
  return r;
}

int Mat::rank() const {
  Mat c = *this;
  return c.rref();
}

Rational Mat::det() const {
  if (rows_ != cols_) throw InputShapeError("det of non-square matrix");
  Mat m = *this;
  Rational d = 1;
  for (int r = 0; r < rows_; ++r) {
    int pivot = -1;
    for (int i = r; i < rows_; ++i)
      if (m(i, r) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != r) {
      for (int j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(r, j));
      d = -d;
    }
    d *= m(r, r);
    Rational inv = 1 / m(r, r);
    for (int i = r + 1; i < rows_; ++i) {
      Rational f = m(i, r) * inv;
      if (f == 0) continue;
      for (int j = r; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
  }
  return d;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) throw InputShapeError("inverse of non-square matrix");
  Mat aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = 1;
  }
  if (aug.rref() < rows_) return std::nullopt;
  for (int i = 0; i < rows_; ++i)
    if (aug(i, i) != 1) return std::nullopt;
  Mat inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
  return inv;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Vec basis_vec(int n, int k) {
  Vec v(n);
  v[k] = 1;
  return v;
}

std::vector<Vec> rows_of(const Mat& m) {
  std::vector<Vec> rows;
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

Rational trace(const Mat& a) {
  Rational t = 0;
  for (int i = 0; i < a.rows() && i < a.cols(); ++i) t += a(i, i);
  return t;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputShapeError("dot shape");
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * b[i];
  return t;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputShapeError("vec add shape");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputShapeError("vec sub shape");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& c) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

Mat kernel_basis(const Mat& A) {
  Mat m = A;
  int rank = m.rref();
  std::vector<int> pivot_col(rank);
  std::vector<bool> is_pivot(A.cols(), false);
  for (int r = 0; r < rank; ++r) {
    int c = 0;
    while (c < A.cols() && m(r, c) == 0) ++c;
    pivot_col[r] = c;
    if (c < A.cols()) is_pivot[c] = true;
  }
  std::vector<Vec> gens;
  for (int c = 0; c < A.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(A.cols());
    v[c] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m(r, c);
    gens.push_back(std::move(v));
  }
  return row_space(gens, A.cols());
}

LinearSolveResult linear_solve(const Mat& A, const Vec& b) {
  if (int(b.size()) != A.rows()) throw InputShapeError("linear_solve: rhs size mismatch");
  Mat aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  int rank = aug.rref();
  LinearSolveResult res;
  res.kernel = kernel_basis(A);
  Vec particular(A.cols());
  for (int r = 0; r < rank; ++r) {
    int c = 0;
    while (c <= A.cols() && aug(r, c) == 0) ++c;
    if (c == A.cols()) return res;  // 0 = nonzero: inconsistent
    if (c < A.cols()) particular[c] = aug(r, A.cols());
  }
  res.particular = std::move(particular);
  return res;
}

Mat row_space(const std::vector<Vec>& vectors, int ambient_dim) {
  Mat m(int(vectors.size()), ambient_dim);
  for (int i = 0; i < m.rows(); ++i) {
    if (int(vectors[i].size()) != ambient_dim) throw InputShapeError("row_space shape");
    m.set_row(i, vectors[i]);
  }
  int rank = m.rref();
  Mat out(rank, ambient_dim);
  for (int i = 0; i < rank; ++i) out.set_row(i, m.row(i));
  return out;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Mat::identity(ambient_dim);
  return s;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (int(v.size()) != ambient_) throw InputShapeError("subspace coordinates shape");
  auto res = linear_solve(basis_.transpose(), v);
  return res.particular;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw InputShapeError("subspace sum ambient mismatch");
  std::vector<Vec> gens;
  for (int i = 0; i < dim(); ++i) gens.push_back(basis_vector(i));
  for (int i = 0; i < other.dim(); ++i) gens.push_back(other.basis_vector(i));
  Subspace s(ambient_);
  s.basis_ = row_space(gens, ambient_);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw InputShapeError("subspace intersect ambient mismatch");
  // Null space of [B1^T | -B2^T] gives coefficient pairs with equal combinations.
  Mat sys(ambient_, dim() + other.dim());
  for (int i = 0; i < ambient_; ++i) {
    for (int j = 0; j < dim(); ++j) sys(i, j) = basis_(j, i);
    for (int j = 0; j < other.dim(); ++j) sys(i, dim() + j) = -other.basis_(j, i);
  }
  Mat ker = kernel_basis(sys);
  std::vector<Vec> gens;
  for (int r = 0; r < ker.rows(); ++r) {
    Vec v(ambient_);
    for (int j = 0; j < dim(); ++j)
      if (ker(r, j) != 0) v = add(v, scale(basis_vector(j), ker(r, j)));
    gens.push_back(std::move(v));
  }
  Subspace s(ambient_);
  s.basis_ = row_space(gens, ambient_);
  return s;
}

}  // namespace bas
