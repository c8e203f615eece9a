#ifndef LIECHECK_ERRORS_HPP
#define LIECHECK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liecheck {

/// Base class for all semantic errors raised by the library.  `kind()`
/// is a stable machine-readable name; `what()` carries the details.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

#define LIECHECK_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                           \
  public:                                                               \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}        \
  }

LIECHECK_DEFINE_ERROR(DimensionMismatch);
LIECHECK_DEFINE_ERROR(JacobiViolation);
LIECHECK_DEFINE_ERROR(PfaffianOnOddDim);
LIECHECK_DEFINE_ERROR(PfaffianOnNonAntisymmetric);
LIECHECK_DEFINE_ERROR(RepresentationInvalid);
LIECHECK_DEFINE_ERROR(MissingParameter);
LIECHECK_DEFINE_ERROR(NotAnIsomorphism);
LIECHECK_DEFINE_ERROR(SingularMap);
LIECHECK_DEFINE_ERROR(NotADerivation);
LIECHECK_DEFINE_ERROR(NotCompatible);
LIECHECK_DEFINE_ERROR(Degenerate);
LIECHECK_DEFINE_ERROR(NotACotangent);
LIECHECK_DEFINE_ERROR(MetricNotAdInvariant);
LIECHECK_DEFINE_ERROR(NotTotallyReal);
LIECHECK_DEFINE_ERROR(NotIntegrable);
LIECHECK_DEFINE_ERROR(NotASubalgebra);
LIECHECK_DEFINE_ERROR(OddDimension);
LIECHECK_DEFINE_ERROR(DegenerateMetric);
LIECHECK_DEFINE_ERROR(InvalidStructure);
LIECHECK_DEFINE_ERROR(ParseError);

#undef LIECHECK_DEFINE_ERROR

} // namespace liecheck

#endif
