#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "amst/consequence.hpp"
#include "amst/structure.hpp"

namespace amst {

// splitmix64: same seed, same stream, on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // true with the given probability (16-bit resolution)
  bool chance(double p) { return static_cast<double>(next() & 0xFFFF) < p * 65536.0; }

 private:
  std::uint64_t state_;
};

struct GenParams {
  std::uint64_t seed = 1;
  int max_models = 4;
  int max_sentences = 4;
  FiniteAmst::Kind kind = FiniteAmst::Kind::Normal;
  double density = 0.5;  // probability of a positive satisfaction entry
};

// Deterministic for a fixed seed. Model/sentence counts are drawn uniformly
// in [1, max]; labels are m0..,s0...
FiniteAmst random_amst(const GenParams& p);

// induced_consequence of a random normal amst: Tarski-type by construction.
LogicalStructure random_tarski(const GenParams& p);

// Greedy 1-minimization: drop models, then sentences, while the predicate
// keeps failing. Throws Error(Precondition) if the predicate passes on the
// input. The result still fails, and every single-element removal passes.
FiniteAmst shrink(const FiniteAmst& instance,
                  const std::function<bool(const FiniteAmst&)>& failing_predicate);

// FNV-1a over the serialized structure; stable across runs.
std::string instance_digest(const FiniteAmst& a);

}  // namespace amst
