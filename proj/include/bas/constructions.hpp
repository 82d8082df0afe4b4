#ifndef BAS_CONSTRUCTIONS_HPP
#define BAS_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bas/connections.hpp"
#include "bas/hermitian.hpp"
#include "bas/homogeneous.hpp"
#include "bas/polynomial.hpp"

namespace bas {

/// A k-nilpotent triple datum: 2-step algebra n = k + V from a unitary rep.
struct KNilpotentSpec {
  int k_dim = 0;
  std::vector<std::vector<Vec>> k_bracket;  // empty means abelian
  Mat k_metric;
  int V_dim_complex = 0;
  Mat I;                  // on V (real 2n x 2n)
  Mat V_metric;           // defaults to identity when empty
  std::vector<Mat> reps;  // A_i = φ(z_i) on V, skew-unitary
};

struct KNilpotentData {
  LieAlgebra n;      // basis: z_1..z_k then e_1..e_{2m}
  Subspace k;        // the centre summand
  Subspace V;
  Mat I;             // transverse structure, on the V block (full-size, zero on k)
  Mat g;             // k_metric ⊕ V_metric
  std::vector<Mat> reps;
  Mat k_metric;
  std::vector<std::vector<Vec>> k_bracket;
};

KNilpotentData build_k_nilpotent(const KNilpotentSpec& spec);

Verdict verify_k_nilpotent(const KNilpotentData& d);

struct NilpotentDecision {
  enum class Outcome { yes, no, indeterminate };
  Outcome verdict = Outcome::indeterminate;
  std::string reason;  // obstruction for no/indeterminate, summary for yes
  std::optional<Polynomial> obstruction_min_poly;
  bool schwartz_zippel_flag = false;  // no decided probabilistically (degenerate pencil)
  bool witness_exact = false;
  // witness basis rows (z-basis then e_1, Je_1, e_2, Je_2, ...), original coords
  std::vector<Vec> witness;                   // exact path
  std::vector<std::vector<double>> witness_num;  // numeric path
};

NilpotentDecision decide_nilpotent_bas(const LieAlgebra& n, unsigned seed = 20240817);

/// Standard Hermitian structure on a normal-form witness basis: g makes the
/// witness orthonormal, J pairs consecutive witness vectors. Returned in the
/// witness coordinates (i.e., on the abstract normal-form algebra).
HermitianData standard_structure_for_witness(const LieAlgebra& n,
                                             const std::vector<Vec>& witness);

struct CanonicalConnection {
  ConnectionMap map;
  Tensor T3;  // (0,3)
  Tensor T;   // (1,2)
};

/// §8 canonical Ambrose-Singer connection of a nilpotent group (k abelian).
CanonicalConnection canonical_as_connection(const KNilpotentData& d);
/// §8 canonical connection of a homogeneous torus bundle: p = (g, h, t+b) with
/// the fibre directions t given inside m.
CanonicalConnection canonical_as_connection(const ReductivePair& p, const Subspace& t_in_m,
                                            const Metric& g);

enum class WitnessKind { complex_semisimple, compact_torus_bundle, noncompact_torus_bundle };

struct ComplexSemisimpleData {
  LieAlgebra s_real;        // realified complex semisimple algebra
  Mat J_mult;               // multiplication by i
  Subspace compact_form;    // compact real form k inside s_real
};

struct TorusBundleData {
  LieAlgebra g_tilde;   // t' ⊕ g
  Subspace h;           // isotropy inside g_tilde
  Subspace t_tilde;     // torus block
  Subspace b;           // horizontal block
  Mat Q;                // ad-invariant form on g_tilde with Q|b = g|b
  Mat S;                // on t_tilde (in the t_tilde basis): g = Q(S·,·) resp. −Q(S·,·)
};

struct NatredWitness {
  ReductivePair pair;  // enlarged (ĝ, ĥ, m)
  Mat Qhat;            // ad-invariant form on ĝ
  Subspace m1, m2;     // the two summands of m
};

NatredWitness natred_witness(const ComplexSemisimpleData& d);
NatredWitness natred_witness(WitnessKind kind, const TorusBundleData& d);

/// §8 product of BAS factors: block HermitianData whose J must preserve the
/// distinguished subspace and restrict to the factor structures off it.
struct ProductFactor {
  LieAlgebra algebra;
  Mat g;
  Subspace distinguished;  // z(n) / t block inside the factor
  Mat I;                   // transverse structure on the complement (zero on distinguished)
};

HermitianData product_bas(const std::vector<ProductFactor>& factors, const Mat& J);

}  // namespace bas

#endif
