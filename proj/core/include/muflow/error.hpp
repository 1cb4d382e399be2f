#pragma once

#include <stdexcept>
#include <string>

namespace muflow {

enum class InputErrorCode {
  kMalformedDocument,
  kDanglingReference,
  kNegativeCapacity,
  kNegativeLength,
  kDisconnectedSubtree,
  kNotATree,
  kUnknownVertex,
  kUnknownTerminal,
  kUnknownArc,
  kDuplicateId,
  kInvalidCut,
  kInvalidArgument,
  kOverflow,
  kNotEulerian,
};

const char* to_string(InputErrorCode code);

// Bad input: the caller handed us something that violates a documented
// precondition. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  InputError(InputErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  InputErrorCode code() const { return code_; }

 private:
  InputErrorCode code_;
};

// An internal invariant failed. Always a bug, never bad input. Maps to CLI
// exit code 3.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] void throw_contract_violation(const std::string& what);

#define MUFLOW_ENSURE(cond, msg)                                        \
  do {                                                                  \
    if (!(cond))                                                        \
      ::muflow::throw_contract_violation(std::string(__func__) + ": " + \
                                         (msg));                        \
  } while (false)

}  // namespace muflow
