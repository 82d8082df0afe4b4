#ifndef BAS_LIEALG_HPP
#define BAS_LIEALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "bas/linalg.hpp"

namespace bas {

/// Finite-dimensional real Lie algebra given by exact structure constants.
/// bracket_table[i][j] is the coordinate vector of [x_i, x_j].
class LieAlgebra {
 public:
  LieAlgebra() : dim_(0) {}
  LieAlgebra(std::vector<std::string> names, std::vector<std::vector<Vec>> brackets);

  static LieAlgebra abelian(int dim, const std::string& prefix = "x");

  int dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }

  const Vec& bracket_basis(int i, int j) const { return c_[i][j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad(x): y -> [x,y].
  Mat ad(const Vec& x) const;
  Mat ad_basis(int i) const;

  /// Throws NotALieAlgebraError naming the failing triple/pair.
  void validate() const;

 private:
  int dim_;
  std::vector<std::string> names_;
  std::vector<std::vector<Vec>> c_;
};

struct AlgebraAnalysis {
  Subspace centre;
  Subspace derived;
  std::vector<Subspace> lower_central;  // g = C^1 ⊇ C^2 = [g,g] ⊇ ..., until stable
  std::optional<int> nilpotency_class;  // none if the series does not reach 0
  Mat killing;
};

AlgebraAnalysis analyze_algebra(const LieAlgebra& g);

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

/// Structure constants of a complex Lie algebra: [z_i, z_j] = sum_k (re + i*im) z_k.
struct ComplexBrackets {
  int dim = 0;  // complex dimension
  std::vector<std::vector<Vec>> re, im;
};

struct Realification {
  LieAlgebra algebra;  // dim 2n, basis interleaved (x_1, ix_1, x_2, ix_2, ...)
  Mat J_mult;          // multiplication by the imaginary unit
};

Realification realify(const ComplexBrackets& cb,
                      const std::vector<std::string>& names = {});

/// {x in g : [x, u] subset u}; throws NotASubalgebraError if u is not a subalgebra.
Subspace relative_normalizer(const LieAlgebra& g, const Subspace& u);

/// Subalgebra test, independent of normalizer computation.
bool is_subalgebra(const LieAlgebra& g, const Subspace& u);

/// Largest ideal of g contained in the subspace u (iterated ad-stable shrinking).
Subspace maximal_ideal_in(const LieAlgebra& g, const Subspace& u);

}  // namespace bas

#endif
