#ifndef BAS_ERRORS_HPP
#define BAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bas {

struct InputShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotALieAlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotASubalgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidHermitianError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotIntegrableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoKostantFormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotBASError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalInconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};
struct TrivialSubmoduleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidRepresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedHypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WitnessFailureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AdmissibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownEntryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bas

#endif
