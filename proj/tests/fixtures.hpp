#pragma once

#include "amst/consequence.hpp"
#include "amst/structure.hpp"

// Shared handcrafted instances.
//
// A1: L={a,b}, M={m0,m1,m2}; m0 satisfies a, m1 satisfies b, m2 both.
// A2: L={a,b}, M={m0,m1}; m0 satisfies only a, m1 only b ({a,b} unsatisfiable).
// T0: L={p,q}; Γ ⊢ α iff α ∈ Γ or Γ = {p,q}.
namespace fixtures {

inline amst::FiniteAmst a1() {
  return amst::FiniteAmst::normal_matrix({"a", "b"}, {"m0", "m1", "m2"},
                                         {0b01, 0b10, 0b11});
}

inline amst::FiniteAmst a2() {
  return amst::FiniteAmst::normal_matrix({"a", "b"}, {"m0", "m1"}, {0b01, 0b10});
}

inline amst::LogicalStructure t0() {
  // closure rows indexed by subset bitmask over {p,q}
  return amst::LogicalStructure({"p", "q"}, {0b00, 0b01, 0b10, 0b11});
}

}  // namespace fixtures
