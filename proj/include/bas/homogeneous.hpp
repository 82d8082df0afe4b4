#ifndef BAS_HOMOGENEOUS_HPP
#define BAS_HOMOGENEOUS_HPP

#include <map>
#include <optional>
#include <string>

#include "bas/hermitian.hpp"
#include "bas/liealg.hpp"
#include "bas/tensor.hpp"

namespace bas {

struct Check {
  bool pass = false;
  Tensor witness;  // zero tensor iff pass
};

struct Verdict {
  std::map<std::string, Check> checks;
  bool all_pass() const;
};

/// Reductive decomposition l = u + m with [u,u] ⊆ u and [u,m] ⊆ m.
/// Effectivity (no nonzero ideal of l inside u) is checked by default; the base
/// pair of a canonical reduction legitimately violates it and opts out.
class ReductivePair {
 public:
  ReductivePair(LieAlgebra l, Subspace u, Subspace m, bool check_effectivity = true);

  const LieAlgebra& l() const { return l_; }
  const Subspace& u() const { return u_; }
  const Subspace& m() const { return m_; }
  int dim_m() const { return m_.dim(); }

  /// Splits x into (u-part coords in u-basis, m-part coords in m-basis).
  std::pair<Vec, Vec> split(const Vec& x) const;
  Vec project_m(const Vec& x) const;          // ambient coords
  Vec m_coordinates(const Vec& x_m) const;    // m-part in the m basis
  Vec from_m_coordinates(const Vec& c) const; // back to ambient

  /// Bracket of m-basis vectors, m-part in m-coordinates.
  Vec bracket_m(int i, int j) const;
  /// ad of the u-part of [m_i, m_j], as an endomorphism of m (m-coordinates).
  Mat isotropy_action(int i, int j) const;
  /// ad(y)|_m in m-coordinates for y in u (ambient coords).
  Mat ad_on_m(const Vec& y) const;

 private:
  LieAlgebra l_;
  Subspace u_, m_;
  Mat adapted_inv_;  // inverse of [u basis; m basis] stacked (columns = coords map)
};

Verdict natred_test(const ReductivePair& p, const Metric& g);

struct KostantForm {
  Mat Q;  // symmetric bilinear form on l, ambient coordinates
};

/// Unique ad-invariant Q with Q(u,m)=0, Q|m=g. Throws NoKostantFormError when no
/// solution exists or the solution space is positive-dimensional (message carries
/// the ambiguity dimension).
KostantForm kostant_form(const ReductivePair& p, const Metric& g);

struct CanonicalTensors {
  Tensor T;       // (1,2): T(X,Y) = -[X,Y]_m
  Tensor R;       // (1,3): R(X,Y).Z = [[X,Y]_u, Z]
  Tensor T_ch;    // (1,2)
  Vec theta_sharp;
};

CanonicalTensors canonical_tensors(const ReductivePair& p, const Metric& g,
                                   const ComplexStructureOp& J);

struct ReductionData {
  Subspace f;  // trivial submodule, m-ambient (of l)
  Subspace b;  // Q-orthocomplement of f in m
  ReductivePair base;  // (l, u + f, b), effectivity not enforced
  Mat induced_g;       // on b, in the b basis
  Mat induced_J;
  LieAlgebra fibre;    // abelian algebra on f
};

ReductionData canonical_reduction(const ReductivePair& p, const Metric& g,
                                  const ComplexStructureOp& J, const KostantForm& Q);

}  // namespace bas

#endif
