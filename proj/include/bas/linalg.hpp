#ifndef BAS_LINALG_HPP
#define BAS_LINALG_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "bas/rational.hpp"

namespace bas {

/// Dense matrix over exact rationals, row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  static Mat from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Rational& c) const;
  Mat operator-() const;
  bool operator==(const Mat& o) const = default;

  Vec apply(const Vec& v) const;  // matrix * column vector
  Mat transpose() const;
  bool is_zero() const;

  /// In-place reduction to reduced row echelon form; returns the rank.
  int rref();
  int rank() const;
  Rational det() const;
  std::optional<Mat> inverse() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

Mat commutator(const Mat& a, const Mat& b);
/// k-th standard basis vector of length n.
Vec basis_vec(int n, int k);
/// The rows of m as a vector list.
std::vector<Vec> rows_of(const Mat& m);
Rational trace(const Mat& a);
Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& c);

struct LinearSolveResult {
  std::optional<Vec> particular;  // none iff inconsistent
  Mat kernel;                     // rows form an RREF basis of the null space
};

/// Exact solution set of A x = b.
LinearSolveResult linear_solve(const Mat& A, const Vec& b);

/// RREF basis of the null space of A.
Mat kernel_basis(const Mat& A);

/// Row space of the given vectors, as an RREF basis matrix (zero rows dropped).
Mat row_space(const std::vector<Vec>& vectors, int ambient_dim);

/// Subspace of a fixed ambient coordinate space, stored as an RREF basis.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  Subspace(int ambient_dim, const std::vector<Vec>& span)
      : ambient_(ambient_dim), basis_(row_space(span, ambient_dim)) {}

  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the stored basis; empty optional if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool operator==(const Subspace& o) const = default;

 private:
  int ambient_;
  Mat basis_;
};

}  // namespace bas

#endif
