#pragma once

#include "bms/verma.hpp"

#include <optional>

namespace bms {

// phi(p) = 2 hM + (p^2-1)/12 cM, the reducibility obstruction.
Scalar phi(int p, const HighestWeight& w);

struct IrreducibilityVerdict {
  std::optional<int> firstVanishingP;  // least p <= maxChecked with phi(p) = 0
  int maxChecked = 0;

  bool irreducibleUpToMax() const { return !firstVanishingP.has_value(); }
};

IrreducibilityVerdict isIrreducible(const HighestWeight& w, int maxP);

enum class SingularOp { S, R };

// The level-p singular vector S 1 = M_{-p} 1 + sum s_mu M_{-mu} 1.
// Requires module.p() and a symbolically nonzero cM.
ModuleVector buildS(const VermaModule& module);

// The level-p/2 singular vector R 1 (p odd):
// Q_{-p/2} 1 + sum f_i(M) Q_{-p/2+i} 1 with f_i from the c_i recursion.
ModuleVector buildR(const VermaModule& module);

// (S^k) 1 or (R^k) 1 by repeated left multiplication.
ModuleVector powerVector(SingularOp op, int k, const VermaModule& module);

struct SingularReport {
  int level2 = 0;
  SubspaceBasis space;
  bool matchesClosedForm = false;
};

// Joint kernel of {L_1, L_2, Q_{1/2}, M_0 - hM} on the full level basis
// (M_1, M_2 replace Q_{1/2} in W22 mode), compared against the closed-form
// classification.
SingularReport singularSpace(int level2, const VermaModule& module);

}  // namespace bms
