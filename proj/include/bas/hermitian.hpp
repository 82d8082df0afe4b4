#ifndef BAS_HERMITIAN_HPP
#define BAS_HERMITIAN_HPP

#include <string>
#include <vector>

#include "bas/liealg.hpp"
#include "bas/tensor.hpp"

namespace bas {

class ReductivePair;

/// The algebraic substrate on which invariant tensors live: the coordinates of
/// 𝔪 together with the 𝔪-projected bracket and the isotropy part of brackets
/// (as endomorphisms ad([x_i,x_j]_u)|_m, identically zero for a plain algebra).
class Carrier {
 public:
  Carrier() : dim_(0) {}
  static Carrier from_algebra(const LieAlgebra& g);
  static Carrier from_pair(const ReductivePair& p);

  int dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  const Vec& bracket_m(int i, int j) const { return bm_[i][j]; }
  Vec bracket_m(const Vec& x, const Vec& y) const;
  /// ad of the isotropy part of [x_i,x_j], acting on m.
  const Mat& isotropy_action(int i, int j) const { return adu_[i][j]; }
  bool has_isotropy() const { return has_isotropy_; }

 private:
  int dim_;
  bool has_isotropy_ = false;
  std::vector<std::string> names_;
  std::vector<std::vector<Vec>> bm_;
  std::vector<std::vector<Mat>> adu_;
};

/// Positive-definite symmetric form; positivity certified by leading principal minors.
struct Metric {
  Mat g;
  explicit Metric(Mat m);
  Mat inverse() const;
};

struct ComplexStructureOp {
  Mat J;
  explicit ComplexStructureOp(Mat m);  // checks J*J = -Id
};

struct HermitianData {
  Carrier carrier;
  Metric g;
  ComplexStructureOp J;
  HermitianData(Carrier c, Metric metric, ComplexStructureOp j);  // checks orthogonality
};

struct HermitianAnalysis {
  bool orthogonal = false;
  bool integrable = false;
  Tensor nijenhuis;  // (1,2)
  bool abelian_J = false;
};

HermitianAnalysis analyze_hermitian(const HermitianData& h);

/// omega(X,Y) = g(JX,Y), alternating (0,2).
Tensor fundamental_form(const HermitianData& h);

/// Chevalley--Eilenberg differential of an alternating (0,k) form, with respect
/// to the m-projected bracket of the carrier.
Tensor ce_differential(const Tensor& alpha, const Carrier& carrier);

}  // namespace bas

#endif
