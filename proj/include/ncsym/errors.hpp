#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ncsym {

// Base for every error the library raises on bad input. The name is stable
// and machine-readable; the CLI prints it on stderr and exits with code 3.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define NCSYM_ERROR_TYPE(TYPE)                          \
  struct TYPE : DomainError {                           \
    explicit TYPE(const std::string& message)           \
        : DomainError(#TYPE, message) {}                \
  }

NCSYM_ERROR_TYPE(OverlapError);           // blocks share an element
NCSYM_ERROR_TYPE(GapError);               // ground set is not {1..n}
NCSYM_ERROR_TYPE(SizeMismatchError);      // operands live on different ground sets
NCSYM_ERROR_TYPE(RangeError);             // numeric argument out of range
NCSYM_ERROR_TYPE(IndexError);             // block index out of range
NCSYM_ERROR_TYPE(SyntaxError);            // unparsable text or JSON
NCSYM_ERROR_TYPE(NotComparableError);     // partitions not related by refinement
NCSYM_ERROR_TYPE(BasisMismatchError);     // element bases disagree
NCSYM_ERROR_TYPE(TagMismatchError);       // algebra products disagree
NCSYM_ERROR_TYPE(NotInvariantError);      // polynomial is not symmetric
NCSYM_ERROR_TYPE(AlphabetTooSmallError);  // too few variables to expand
NCSYM_ERROR_TYPE(UnknownSuiteError);      // no such verification suite
NCSYM_ERROR_TYPE(BoundTooLargeError);     // verification bound over the cap

#undef NCSYM_ERROR_TYPE

}  // namespace ncsym
