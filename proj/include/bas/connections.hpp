#ifndef BAS_CONNECTIONS_HPP
#define BAS_CONNECTIONS_HPP

#include "bas/hermitian.hpp"
#include "bas/homogeneous.hpp"
#include "bas/tensor.hpp"

namespace bas {

/// Nomizu map of an invariant connection: lambda[i] = Λ(x_i) acting on m.
struct ConnectionMap {
  std::vector<Mat> lambda;
  int dim() const { return int(lambda.size()); }
  Mat of(const Vec& x) const;  // Λ(x), linear in x
};

/// Levi-Civita connection (Koszul, with the m-projected bracket).
ConnectionMap levi_civita(const Carrier& carrier, const Metric& g);
ConnectionMap levi_civita(const HermitianData& h);

struct BismutData {
  Tensor T3;         // (0,3) totally alternating
  Tensor T;          // (1,2)
  ConnectionMap map; // ∇ = D + ½T
};

BismutData bismut(const HermitianData& h);

struct ChernLee {
  Tensor T_ch;  // (1,2), type (1,1)
  Tensor theta; // (0,1)
  Vec theta_sharp;
};

ChernLee chern_lee(const HermitianData& h);

/// Curvature in the paper's sign: R(X,Y) = Λ([X,Y]_m) + ad([X,Y]_u)|_m − [Λ(X),Λ(Y)].
Tensor curvature_of(const ConnectionMap& cm, const Carrier& carrier);

/// (∇τ)(X; Y...) = (Λ(X)·τ)(Y...), direction slot first.
Tensor covariant_derivative(const ConnectionMap& cm, const Tensor& tau);

Verdict verdict_suite(const HermitianData& h);

/// Algebraic Lie derivative of a (0,2) tensor along V: (L_V g)(X,Y) =
/// −g([V,X]_m,Y) − g(X,[V,Y]_m); and of J: (L_V J)X = [V,JX]_m − J[V,X]_m.
Mat lie_derivative_bilinear(const Carrier& c, const Vec& V, const Mat& g);
Mat lie_derivative_endo(const Carrier& c, const Vec& V, const Mat& J);

}  // namespace bas

#endif
