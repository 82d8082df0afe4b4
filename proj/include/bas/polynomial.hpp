#ifndef BAS_POLYNOMIAL_HPP
#define BAS_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "bas/linalg.hpp"
#include "bas/rational.hpp"

namespace bas {

/// Univariate polynomial over exact rationals, coefficients in increasing degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rational& a) { return Polynomial(Vec{a}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero polynomial
  const Vec& coeffs() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coeff(int k) const { return k < int(c_.size()) ? c_[k] : Rational(0); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const = default;

  Polynomial derivative() const;
  Rational eval(const Rational& x) const;
  /// Normalizes to leading coefficient 1.
  Polynomial monic() const;
  /// Divides out the gcd of numerators and lcm structure; primitive with positive lead.
  Polynomial primitive() const;

  /// Euclidean remainder.
  static Polynomial rem(const Polynomial& a, const Polynomial& b);
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic gcd

  std::string str() const;  // human-readable, variable "t"

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  Vec c_;
};

/// Number of distinct real roots via a Sturm chain over (-inf, +inf).
int count_real_roots(const Polynomial& p);

/// Minimal polynomial of a square rational matrix (monic).
Polynomial minimal_polynomial(const Mat& M);

/// Rational roots of p (exact, via the rational root theorem on the primitive part).
std::vector<Rational> rational_roots(const Polynomial& p);

struct SemisimpleCertificate {
  bool verdict = false;
  Polynomial min_poly;
  bool squarefree = false;
  bool all_roots_real = false;
  int real_root_count = 0;
};

/// Yes iff the minimal polynomial is squarefree with all roots real.
SemisimpleCertificate real_semisimple_test(const Mat& M);

}  // namespace bas

#endif
