#pragma once

#include "bms/subsingular.hpp"

#include <map>
#include <optional>

namespace bms {

// Truncated q-series with a symbolic q^h prefactor; keys are doubled levels,
// truncation inclusive of the cutoff.
struct QSeries {
  Scalar offset;
  int cutoff2 = 0;
  std::map<int, long long> coeffs;

  long long coeff(int level2) const;
  void set(int level2, long long c);
  bool sameCoeffs(const QSeries& o, int upToLevel2) const;
};

// Product of two series truncated at cutoff2 (offsets add).
QSeries mulSeries(const QSeries& a, const QSeries& b, int cutoff2);

// char V = q^{hL} prod_k (1+q^{k-1/2}) / (1-q^k)^2, truncated.
QSeries vermaCharacter(int cutoff2, Scalar offset = Scalar::variable(Var::hL));

// char L per the typical/atypical closed formulas; r engaged iff atypical.
QSeries irreducibleCharacter(int p, std::optional<int> r, int cutoff2,
                             Scalar offset = Scalar::variable(Var::hL));

// Brute-force graded dimensions dim V_n - dim J_n of the irreducible quotient,
// with J generated by S 1 / R 1 (typical) or T_{p,r} 1 (atypical, r present).
// The module weights must be specialized to rationals with cM != 0.
QSeries computedGradedDims(const VermaModule& module, std::optional<int> r, int cutoff2);

long long partitionCount(int n);

}  // namespace bms
