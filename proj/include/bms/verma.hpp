#pragma once

#include "bms/exactla.hpp"
#include "bms/liealg.hpp"
#include "bms/pbw.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace bms {

struct HighestWeight {
  Scalar cL, cM, hL, hM;

  // all four indeterminates left symbolic
  static HighestWeight symbolic();
};

struct VectorStats {
  int ellL = 0, ellQ = 0, ellM = 0;
  int level2 = 0;
};

// Level components of a submodule, keyed by doubled level.
using LevelComponents = std::map<int, SubspaceBasis>;

// Verma module configuration plus the straightening action. When p is set the
// weight satisfies phi(p) = 2 hM + (p^2-1)/12 cM = 0 identically.
class VermaModule {
 public:
  VermaModule(HighestWeight w, AlgebraMode mode, std::optional<int> p = std::nullopt);

  // hM is forced to -(p^2-1)/24 * cM; other entries of `base` are kept.
  static VermaModule atLevelP(int p, AlgebraMode mode,
                              HighestWeight base = HighestWeight::symbolic());

  const HighestWeight& weight() const { return weight_; }
  AlgebraMode mode() const { return mode_; }
  std::optional<int> p() const { return p_; }

  ModuleVector vacuum() const;

  // Left action of a generator, re-expressed in PBW normal form.
  ModuleVector act(const Generator& g, const ModuleVector& v) const;
  // Composition of act, rightmost generator first.
  ModuleVector actWord(std::span<const Generator> gs, const ModuleVector& v) const;
  // Applies an element of U(g_-) given in PBW coordinates.
  ModuleVector applyOperator(const ModuleVector& op, const ModuleVector& v) const;

  VectorStats stats(const ModuleVector& v) const;

  // Annihilation by the generating set of g_+ plus the M_0-eigenvalue
  // condition, optionally modulo given submodule level components.
  bool isSingular(const ModuleVector& v, const LevelComponents* modulo = nullptr) const;
  std::vector<Generator> singularTestOps() const;

  VermaModule specialized(const std::map<Var, mpq_class>& assignment) const;

 private:
  ModuleVector mulGen(const Generator& g, const ModuleVector& v) const;
  ModuleVector actRaise(const Generator& g, const PBWMonomial& m) const;
  const std::map<PBWMonomial, mpq_class, SuccGreater>& normalWord(
      const std::vector<Generator>& word) const;

  HighestWeight weight_;
  AlgebraMode mode_;
  std::optional<int> p_;

  struct ActKey {
    int kind;
    int mode2;
    PBWMonomial mono;
  };
  struct ActKeyLess {
    bool operator()(const ActKey& a, const ActKey& b) const {
      if (a.kind != b.kind) return a.kind < b.kind;
      if (a.mode2 != b.mode2) return a.mode2 < b.mode2;
      return monomialCompare(a.mono, b.mono) < 0;
    }
  };

  mutable std::mutex cacheMutex_;
  mutable std::map<std::vector<int>, std::map<PBWMonomial, mpq_class, SuccGreater>> wordCache_;
  mutable std::map<ActKey, std::shared_ptr<const ModuleVector>, ActKeyLess> actCache_;
};

}  // namespace bms
