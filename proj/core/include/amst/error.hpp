#pragma once

#include <stdexcept>
#include <string>

namespace amst {

enum class ErrorKind {
  Argument,      // index/shape out of range
  Precondition,  // operation-specific hypothesis violated by the caller
  Capacity,      // a documented size cap exceeded
  Construction,  // a construction came out structurally empty/invalid
  Subbase,       // family fails to cover the ground set
  Base,          // family fails the base intersection axiom
  Validation,    // structure fails its axioms (adapters)
  Parse,         // formula / file syntax
  Io,            // file or JSON problems
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace amst
