#include "bms/characters.hpp"

#include <stdexcept>

namespace bms {

long long QSeries::coeff(int level2) const {
  auto it = coeffs.find(level2);
  return it == coeffs.end() ? 0 : it->second;
}

void QSeries::set(int level2, long long c) {
  if (c == 0)
    coeffs.erase(level2);
  else
    coeffs[level2] = c;
}

bool QSeries::sameCoeffs(const QSeries& o, int upToLevel2) const {
  for (int l2 = 0; l2 <= upToLevel2; ++l2)
    if (coeff(l2) != o.coeff(l2)) return false;
  return true;
}

QSeries mulSeries(const QSeries& a, const QSeries& b, int cutoff2) {
  QSeries out;
  out.offset = a.offset + b.offset;
  out.cutoff2 = cutoff2;
  for (const auto& [i, x] : a.coeffs)
    for (const auto& [j, y] : b.coeffs) {
      if (i + j > cutoff2) break;
      out.coeffs[i + j] += x * y;
    }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = (it->second == 0) ? out.coeffs.erase(it) : std::next(it);
  return out;
}

QSeries vermaCharacter(int cutoff2, Scalar offset) {
  QSeries out;
  out.offset = std::move(offset);
  out.cutoff2 = cutoff2;
  out.coeffs[0] = 1;
  for (int k = 1; 2 * k <= cutoff2 + 1; ++k) {
    if (2 * k - 1 <= cutoff2) {
      QSeries f;
      f.cutoff2 = cutoff2;
      f.coeffs[0] = 1;
      f.coeffs[2 * k - 1] = 1;
      out = mulSeries(out, f, cutoff2);
    }
    if (2 * k <= cutoff2) {
      QSeries f;
      f.cutoff2 = cutoff2;
      for (int m = 0; 2 * k * m <= cutoff2; ++m) f.coeffs[2 * k * m] = m + 1;
      out = mulSeries(out, f, cutoff2);
    }
  }
  return out;
}

QSeries irreducibleCharacter(int p, std::optional<int> r, int cutoff2, Scalar offset) {
  if (p < 1) throw std::invalid_argument("irreducibleCharacter: p must be >= 1");
  QSeries out = vermaCharacter(cutoff2, std::move(offset));
  // (1 - q^{p/2}) (1 + (1+(-1)^p)/2 q^{p/2}): collapses to (1 - q^p) for even p
  QSeries f1;
  f1.cutoff2 = cutoff2;
  f1.coeffs[0] = 1;
  if (p % 2 == 0) {
    f1.set(2 * p, -1);
  } else {
    f1.set(p, -1);
  }
  out = mulSeries(out, f1, cutoff2);
  if (r) {
    QSeries f2;
    f2.cutoff2 = cutoff2;
    f2.coeffs[0] = 1;
    f2.set(2 * (*r) * p, -1);
    out = mulSeries(out, f2, cutoff2);
  }
  return out;
}

QSeries computedGradedDims(const VermaModule& module, std::optional<int> r, int cutoff2) {
  if (!module.p()) throw std::invalid_argument("computedGradedDims: module needs p");
  const HighestWeight& w = module.weight();
  if (!w.cM.isRational() || !w.cL.isRational() || !w.hL.isRational())
    throw std::invalid_argument("computedGradedDims: weights must be specialized to rationals");
  if (w.cM.isZero()) throw std::domain_error("computedGradedDims: cM = 0");

  bool useS = (*module.p() % 2 == 0) || module.mode() == AlgebraMode::W22;
  ModuleVector gen =
      r ? buildTpr(*r, module) : (useS ? buildS(module) : buildR(module));
  SubmoduleComponents components(module, gen);
  QSeries out;
  out.offset = w.hL;
  out.cutoff2 = cutoff2;
  for (int l2 = 0; l2 <= cutoff2; ++l2) {
    long long dimV = static_cast<long long>(levelBasis(l2, module.mode()).size());
    long long dimJ = static_cast<long long>(components.component(l2).dim());
    out.set(l2, dimV - dimJ);
  }
  return out;
}

long long partitionCount(int n) {
  if (n < 0) return 0;
  std::vector<long long> dp(static_cast<size_t>(n) + 1, 0);
  dp[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int v = part; v <= n; ++v) dp[v] += dp[v - part];
  return dp[n];
}

}  // namespace bms
