#ifndef BAS_DOCUMENT_HPP
#define BAS_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "bas/constructions.hpp"
#include "bas/hermitian.hpp"
#include "bas/homogeneous.hpp"
#include "bas/liealg.hpp"

namespace bas {

/// Parsed algebra file. The top-level dim/basis/brackets describe the algebra;
/// when an isotropy block is present they describe the ambient algebra 𝔩 and
/// metric/J live on the 𝔪 block (in the order of its span rows).
struct AlgebraDocument {
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<std::vector<Vec>> brackets;
  bool metric_identity = true;
  Mat metric;  // always expanded
  Mat J;
  struct Isotropy {
    std::vector<Vec> u, m;  // span rows, ambient coordinates
    bool operator==(const Isotropy&) const = default;
  };
  std::optional<Isotropy> isotropy;
  struct KNil {
    int k_dim = 0;
    std::vector<std::vector<Vec>> k_bracket;  // empty = abelian
    bool k_metric_identity = true;
    Mat k_metric;
    int V_dim_complex = 0;
    Mat I;
    bool V_metric_identity = true;
    Mat V_metric;
    std::vector<Mat> reps;
    bool operator==(const KNil&) const = default;
  };
  std::optional<KNil> k_nilpotent;
  bool operator==(const AlgebraDocument&) const = default;
};

/// Throws ParseError with field diagnostics on malformed input.
AlgebraDocument parse_document(const std::string& json_text);
AlgebraDocument load_document(const std::string& path);
std::string serialize_document(const AlgebraDocument& doc);

/// Validating constructions from a parsed document.
LieAlgebra document_algebra(const AlgebraDocument& doc);
std::optional<ReductivePair> document_pair(const AlgebraDocument& doc);
HermitianData document_hermitian(const AlgebraDocument& doc);
std::optional<KNilpotentSpec> document_k_nilpotent(const AlgebraDocument& doc);

}  // namespace bas

#endif
