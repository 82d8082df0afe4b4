#ifndef BAS_TENSOR_HPP
#define BAS_TENSOR_HPP

#include <functional>
#include <string>
#include <vector>

#include "bas/linalg.hpp"

namespace bas {

/// Invariant tensor of valence (r,s) with r in {0,1} on an n-dimensional space.
/// Components indexed (a, i_1, ..., i_s) row-major; the contravariant slot a is
/// absent when r = 0.
class Tensor {
 public:
  Tensor() : r_(0), s_(0), n_(0) {}
  Tensor(int r, int s, int n);

  static Tensor from_fn(int r, int s, int n,
                        const std::function<Rational(const std::vector<int>&)>& fn);
  static Tensor from_matrix(const Mat& A);  // valence (1,1)
  static Tensor from_bilinear(const Mat& B);  // valence (0,2)

  int r() const { return r_; }
  int s() const { return s_; }
  int n() const { return n_; }

  /// idx = (a, i_1..i_s) for r = 1, (i_1..i_s) for r = 0.
  Rational& at(const std::vector<int>& idx);
  const Rational& at(const std::vector<int>& idx) const;

  /// For r = 1: the value tensor(X_{i_1},...,X_{i_s}) as a vector.
  Vec value(const std::vector<int>& covariant_idx) const;

  bool is_zero() const;
  bool operator==(const Tensor& o) const = default;
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator*(const Rational& c) const;

  bool is_alternating() const;  // over the covariant slots
  bool is_symmetric() const;

  /// Human-readable location/value of the first nonzero component ("" when zero).
  std::string first_nonzero(const std::vector<std::string>& names) const;

  /// Full multi-index iteration helper: calls fn with each covariant index tuple.
  void for_each_covariant(const std::function<void(const std::vector<int>&)>& fn) const;

 private:
  std::size_t flat(const std::vector<int>& idx) const;
  int r_, s_, n_;
  std::vector<Rational> comp_;
};

/// Derivation action of A in gl(n): (A.tau)(Y_1..) = [A o tau] - sum tau(..AY_i..).
Tensor gl_action(const Mat& A, const Tensor& tau);

/// Interior product: for a (1,2) tensor T, x_contract(T, v) is the endomorphism
/// w -> T(v,w); for (0,s), the (0,s-1) tensor tau(v, ...).
Mat contract_to_matrix(const Tensor& T, const Vec& v);
Tensor contract(const Tensor& tau, const Vec& v);

/// Lower the contravariant slot of a (1,s) tensor with metric g -> (0,s+1),
/// components g(tau(...), Z) with Z appended last.
Tensor lower(const Tensor& tau, const Mat& g);
/// Raise the last covariant slot of a (0,s) tensor -> (1,s-1).
Tensor raise_last(const Tensor& tau, const Mat& g_inv);

}  // namespace bas

#endif
