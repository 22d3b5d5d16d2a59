#pragma once

#include "core/laurent.hpp"

namespace twobridge {

// Formal Seiberg-Witten invariant: a symmetrized Laurent polynomial.
struct FormalSW {
  LaurentPoly poly;

  friend bool operator==(const FormalSW&, const FormalSW&) = default;
};

// Invariant of the base manifold before any surgery; K3 has the constant 1.
inline LaurentPoly default_sw_base() { return LaurentPoly::constant(1); }

// Knot surgery multiplies by the Alexander polynomial.
FormalSW sw_knot_surgery(const LaurentPoly& sw_base, const LaurentPoly& alex);

// Delta(tau) * Delta(-tau), symmetrized. Throws HalfExponentPresent.
FormalSW sw_covering_base(const LaurentPoly& alex);

bool sw_equal(const FormalSW& a, const FormalSW& b);

}  // namespace twobridge
