#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amst/check.hpp"

namespace amst {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int count = 40;  // random instances per theorem
  int max_sentences = 5;
  int max_models = 5;
  std::vector<std::string> theorems;  // empty = every registered checker
};

struct Verdict {
  std::string theorem;
  Status status = Status::Verified;
  std::string witness;  // present iff violated (or vacuous note)
  std::string digest;   // instance digest, when instance-backed
  std::uint64_t seed = 0;
};

std::vector<std::string> registered_theorems();

// Runs every requested checker over seeded instances. Unknown ids throw
// Error(Argument).
std::vector<Verdict> run_suite(const SuiteConfig& config);

bool any_violation(const std::vector<Verdict>& verdicts);

}  // namespace amst
