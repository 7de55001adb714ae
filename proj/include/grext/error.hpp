#pragma once

#include <stdexcept>
#include <string>

namespace grext {

enum class ErrorKind {
  kInvalidInput,       // malformed tables, documents, or arguments
  kPrecondition,       // an operation's hypotheses are not met
  kTagMismatch,        // elements from different algebras were combined
  kIsotropyObstruction,
  kInternal,           // a certified identity failed to hold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace grext
