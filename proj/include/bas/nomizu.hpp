#ifndef BAS_NOMIZU_HPP
#define BAS_NOMIZU_HPP

#include "bas/connections.hpp"
#include "bas/hermitian.hpp"
#include "bas/homogeneous.hpp"

namespace bas {

/// The Nomizu Lie algebra N = N0 ⊕ m of a BAS Hermitian algebra, with bracket
/// [(A,v),(B,w)] = ([A,B] + R(v,w), A.w − B.v + T(v,w)).
struct NomizuAlgebra {
  HermitianData carrier;
  std::vector<Mat> stab;   // basis of N0 (endomorphisms of m)
  Tensor T;                // Bismut (1,2)
  Tensor R;                // Bismut (1,3), paper sign
  LieAlgebra algebra;      // on dim(stab) + dim(m), stab coordinates first
  int stab_dim() const { return int(stab.size()); }
};

/// Kernel of A -> (A·g, A·J, A·T, A·R); requires verdict_suite(h).bas.
std::vector<Mat> stabilizer(const HermitianData& h);

NomizuAlgebra build_nomizu(const HermitianData& h);

struct Presentation {
  ReductivePair pair;  // l = [m,m]+m inside N, u = l ∩ N0
  Metric g;            // transported to the m block
  ComplexStructureOp J;
};

Presentation canonical_presentation(const NomizuAlgebra& nom);

/// φ(A,v) = (A + ½ v⌟T, v); asserts bracket preservation against the target
/// bracket ([Ã,B̃] + Rm(v,w), Ã.w − B̃.v) for pairs involving the argument.
std::pair<Mat, Vec> generator_map(const NomizuAlgebra& nom, const Mat& A, const Vec& v);

}  // namespace bas

#endif
