#pragma once

#include "bms/singular.hpp"
#include "bms/verma.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace bms {

// Atypical locus h_{p,r} (full algebra) as a polynomial in the symbolic cL,
// and the W(2,2) counterpart h'_{p,r}.
Scalar hPr(int p, int r);
Scalar hPrW22(int p, int r);
// Same, with a caller-supplied cL scalar substituted.
Scalar hPrAt(int p, int r, const Scalar& cL);
Scalar hPrW22At(int p, int r, const Scalar& cL);
Scalar hPrFor(int p, int r, AlgebraMode mode, const Scalar& cL);

struct NecessityCoefficients {
  std::vector<Scalar> l;  // l_1 .. l_{p-1}
  std::vector<Scalar> n;  // n_1 .. n_{floor(p/2)}
};

// Coefficient families forced on the leading part of a subsingular vector,
// after substituting hM = -(p^2-1)/24 cM:
// l_k = 12 r / (k (p-k) cM), n_k = -6 r / ((p-2k+1) cM).
NecessityCoefficients necessityCoefficients(int p, int r);

// Level components of the submodule generated by one vector. The generator
// need not be singular: its span is first closed under the raising set and
// M_0, so that PBW words of g_- over the closure sweep out the submodule.
class SubmoduleComponents {
 public:
  SubmoduleComponents(const VermaModule& module, ModuleVector generator);

  const ModuleVector& generator() const { return gen_; }
  const SubspaceBasis& component(int level2) const;
  ModuleVector reduceMod(const ModuleVector& v) const;
  LevelComponents componentsUpTo(int maxLevel2) const;

 private:
  const VermaModule* module_;
  ModuleVector gen_;
  LevelComponents seeds_;  // finite U(g_0 + g_+)-closure of the generator
  mutable std::mutex mutex_;
  mutable LevelComponents cache_;
};

// J' = submodule generated by all singular vectors: <S 1> for even p (and in
// W22 mode), <R 1> for odd p.
class QuotientContext : public SubmoduleComponents {
 public:
  explicit QuotientContext(const VermaModule& module);

  // Lemma-4.1-style quotient basis monomials at a level: the level basis with
  // M_{-p} (and Q_{-p/2} for odd p in the full algebra) excluded.
  std::vector<PBWMonomial> quotientBasis(int level2) const;

 private:
  const VermaModule* module_;
};

// The level-p subsingular generator T: leading part from the k_i recursion,
// remaining coefficients solved from singularity modulo J'. Requires
// hL = h_{p,1} (resp. h'_{p,1} in W22 mode) in the module weight.
ModuleVector buildT(const VermaModule& module);

// The level-rp subsingular vector T_{p,r} 1 = (T^r + v_1 T^{r-1} + ... + v_r) 1
// with v_i in U(M_-)_{ip} not involving M_{-p}. Requires hL = h_{p,r}.
ModuleVector buildTpr(int r, const VermaModule& module);

// Kernel of the singular-vector conditions on the quotient basis at a level,
// computed modulo J'.
SubspaceBasis subsingularSpace(int level2, const VermaModule& module,
                               const QuotientContext& ctx);

struct CompositionReport {
  struct Item {
    std::string name;
    bool passed;
  };
  std::vector<Item> items;
  bool allPassed() const;
};

// Exact verification of the operator identities tying T_{p,r} to S and R and
// the L_p pairing, per the composition-series analysis.
CompositionReport compositionChecks(int p, int r, AlgebraMode mode);

}  // namespace bms
