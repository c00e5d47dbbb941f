#pragma once

#include <stdexcept>
#include <string>

namespace stretchmat {

/// Broad classes of failure. The CLI maps these onto its exit codes.
enum class ErrorKind {
  validation,   // bad input, unreachable target, schema problems
  domain,       // stretch outside a material's validity domain
  convergence,  // Newton or eigen solver gave up
  verification  // an oracle check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define STRETCHMAT_ERROR(Name, Kind)                                          \
  class Name : public Error {                                                 \
   public:                                                                    \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {}  \
  };

STRETCHMAT_ERROR(InvalidParameter, validation)
STRETCHMAT_ERROR(RestInstability, validation)
STRETCHMAT_ERROR(UnreachableTarget, validation)
STRETCHMAT_ERROR(DegenerateDenominator, validation)
STRETCHMAT_ERROR(IncompressibleLimit, validation)
STRETCHMAT_ERROR(NonSeparableFamily, validation)
STRETCHMAT_ERROR(SchemaError, validation)
STRETCHMAT_ERROR(MeshFormatError, validation)
STRETCHMAT_ERROR(DomainViolation, domain)
STRETCHMAT_ERROR(EigenSolverFailure, convergence)

#undef STRETCHMAT_ERROR

}  // namespace stretchmat
