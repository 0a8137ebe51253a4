#pragma once

#include <stdexcept>
#include <string>

namespace endcohom {

/// Base class for every error that reflects bad mathematical input rather
/// than an I/O or programming failure. The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ENDCOHOM_DOMAIN_ERROR(Name)                          \
  class Name : public DomainError {                          \
   public:                                                   \
    explicit Name(const std::string& what)                   \
        : DomainError(std::string(#Name ": ") + what) {}     \
  }

ENDCOHOM_DOMAIN_ERROR(UnsupportedTailCombination);
ENDCOHOM_DOMAIN_ERROR(ValuationUndecidable);
ENDCOHOM_DOMAIN_ERROR(InvalidParameter);
ENDCOHOM_DOMAIN_ERROR(DimensionMismatch);
ENDCOHOM_DOMAIN_ERROR(DegreeOverflow);
ENDCOHOM_DOMAIN_ERROR(AmbientMismatch);
ENDCOHOM_DOMAIN_ERROR(ProcedureUnsupported);
ENDCOHOM_DOMAIN_ERROR(AlgebraMismatch);

#undef ENDCOHOM_DOMAIN_ERROR

}  // namespace endcohom
