#pragma once

#include <string>

namespace amst {

// Outcome of a theorem-instance check. `Vacuous` means the theorem's
// hypotheses failed for the given instance, so the conclusion was not
// asserted; the note records which hypothesis failed.
enum class Status { Verified, Vacuous, Violated };

const char* to_string(Status s);

struct Check {
  Status status = Status::Verified;
  std::string note;  // vacuous reason or violation witness

  bool ok() const { return status != Status::Violated; }
};

}  // namespace amst
