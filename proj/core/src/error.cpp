#include "amst/error.hpp"

#include "amst/check.hpp"

namespace amst {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Argument: return "argument error";
    case ErrorKind::Precondition: return "precondition error";
    case ErrorKind::Capacity: return "capacity error";
    case ErrorKind::Construction: return "construction error";
    case ErrorKind::Subbase: return "subbase error";
    case ErrorKind::Base: return "base error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Io: return "io error";
  }
  return "error";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Vacuous: return "vacuous";
    case Status::Violated: return "violated";
  }
  return "?";
}

}  // namespace amst
