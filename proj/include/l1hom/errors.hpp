#pragma once

#include <stdexcept>
#include <string>

namespace l1hom {

// Base class for all domain errors. `code()` is the stable machine name
// reported by the CLI (exit status 1); what() carries the details.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define L1HOM_ERROR(Name)                                    \
  class Name : public DomainError {                          \
   public:                                                   \
    explicit Name(const std::string& msg)                    \
        : DomainError(#Name, msg) {}                         \
  }

L1HOM_ERROR(InvalidFacet);
L1HOM_ERROR(DegreeError);
L1HOM_ERROR(NotACycle);
L1HOM_ERROR(NotOrientable);
L1HOM_ERROR(NotClosed);
L1HOM_ERROR(MalformedProgram);
L1HOM_ERROR(NotACocycle);
L1HOM_ERROR(PairingNotOne);
L1HOM_ERROR(DegreeMismatch);
L1HOM_ERROR(NotACovering);
L1HOM_ERROR(BadBasepoint);

#undef L1HOM_ERROR

// Input that fails to parse or does not match a documented JSON schema.
// The CLI maps this to exit status 2.
class MalformedInput : public std::runtime_error {
 public:
  explicit MalformedInput(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace l1hom
