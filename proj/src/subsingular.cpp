#include "bms/subsingular.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bms {

Scalar hPr(int p, int r) { return hPrAt(p, r, Scalar::variable(Var::cL)); }
Scalar hPrW22(int p, int r) { return hPrW22At(p, r, Scalar::variable(Var::cL)); }

Scalar hPrAt(int p, int r, const Scalar& cL) {
  long pl = p;
  Scalar out = cL * Scalar(mpq_class(1 - pl * pl, 24));
  out += Scalar(mpq_class((41 * pl + 5) * (pl - 1), 48));
  out += Scalar(mpq_class((1 - static_cast<long>(r)) * pl, 2));
  if (p % 2 == 0) out -= Scalar(mpq_class(pl, 4));
  return out;
}

Scalar hPrW22At(int p, int r, const Scalar& cL) {
  long pl = p;
  Scalar out = cL * Scalar(mpq_class(1 - pl * pl, 24));
  out += Scalar(mpq_class((13 * pl + 1) * (pl - 1), 12));
  out += Scalar(mpq_class((1 - static_cast<long>(r)) * pl, 2));
  return out;
}

Scalar hPrFor(int p, int r, AlgebraMode mode, const Scalar& cL) {
  return mode == AlgebraMode::W22 ? hPrW22At(p, r, cL) : hPrAt(p, r, cL);
}

NecessityCoefficients necessityCoefficients(int p, int r) {
  NecessityCoefficients out;
  if (p < 2) return out;
  Scalar cM = Scalar::variable(Var::cM);
  for (int k = 1; k <= p - 1; ++k)
    out.l.push_back(Scalar(static_cast<long>(12) * r) /
                    (Scalar(static_cast<long>(k) * (p - k)) * cM));
  for (int k = 1; k <= p / 2; ++k)
    out.n.push_back(Scalar(static_cast<long>(-6) * r) /
                    (Scalar(static_cast<long>(p - 2 * k + 1)) * cM));
  return out;
}

SubmoduleComponents::SubmoduleComponents(const VermaModule& module, ModuleVector generator)
    : module_(&module), gen_(std::move(generator)) {
  // Close the generator under M_0 and the g_+ generating set. For a singular
  // generator this stops at once; for T_{p,r} 1 it picks up S 1 and R 1.
  std::vector<Generator> ops = module_->singularTestOps();
  ops.push_back(Generator::M(0));
  std::vector<ModuleVector> work = {gen_};
  while (!work.empty()) {
    ModuleVector v = std::move(work.back());
    work.pop_back();
    if (v.isZero()) continue;
    SubspaceBasis& basis = seeds_[v.level2()];
    basis.level2 = v.level2();
    if (!echelonInsert(basis, v)) continue;
    for (const auto& g : ops) work.push_back(module_->act(g, v));
  }
}

const SubspaceBasis& SubmoduleComponents::component(int level2) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(level2);
  if (it != cache_.end()) return it->second;
  SubspaceBasis basis;
  basis.level2 = level2;
  std::vector<ModuleVector> vs;
  for (const auto& [seedLevel2, seedBasis] : seeds_) {
    if (seedLevel2 > level2) continue;
    for (const auto& word : levelBasis(level2 - seedLevel2, module_->mode()))
      for (const auto& seed : seedBasis.vectors)
        vs.push_back(module_->applyOperator(ModuleVector::monomial(word), seed));
  }
  if (!vs.empty()) {
    basis = echelonize(vs);
    basis.level2 = level2;
  }
  auto [pos, inserted] = cache_.emplace(level2, std::move(basis));
  return pos->second;
}

ModuleVector SubmoduleComponents::reduceMod(const ModuleVector& v) const {
  if (v.isZero()) return v;
  return reduce(v, component(v.level2()));
}

LevelComponents SubmoduleComponents::componentsUpTo(int maxLevel2) const {
  LevelComponents out;
  int from = seeds_.empty() ? gen_.level2() : seeds_.begin()->first;
  for (int l2 = from; l2 <= maxLevel2; ++l2) out[l2] = component(l2);
  return out;
}

namespace {

int requireP(const VermaModule& module) {
  if (!module.p()) throw std::invalid_argument("module has no level parameter p configured");
  return *module.p();
}

ModuleVector singularGenerator(const VermaModule& module) {
  int p = requireP(module);
  bool useS = (p % 2 == 0) || module.mode() == AlgebraMode::W22;
  return useS ? buildS(module) : buildR(module);
}

bool containsPart(const Partition& part, int value) {
  return std::find(part.begin(), part.end(), value) != part.end();
}

}  // namespace

QuotientContext::QuotientContext(const VermaModule& module)
    : SubmoduleComponents(module, singularGenerator(module)), module_(&module) {}

std::vector<PBWMonomial> QuotientContext::quotientBasis(int level2) const {
  int p = requireP(*module_);
  bool dropHalfQ = (p % 2 == 1) && module_->mode() == AlgebraMode::Full;
  std::vector<PBWMonomial> out;
  for (const auto& m : levelBasis(level2, module_->mode())) {
    if (containsPart(m.mPart, p)) continue;
    if (dropHalfQ && containsPart(m.qPart, (p + 1) / 2)) continue;
    out.push_back(m);
  }
  return out;
}

namespace {

// Coefficients of the g_i(M) recursion multiplying the L block of T:
// g_1 = k_1 M_{-1}, g_i = k_i M_{-i} + k_i sum_j (1 - j/(2p-i)) g_j M_{-(i-j)}.
std::vector<std::map<Partition, Scalar>> leadingGPolys(int p, const Scalar& cM) {
  std::vector<std::map<Partition, Scalar>> g(p);
  for (int i = 1; i <= p - 1; ++i) {
    Scalar ki = Scalar(12L) / (Scalar(static_cast<long>(i) * (p - i)) * cM);
    g[i][{i}] = ki;
    for (int j = 1; j < i; ++j) {
      Scalar factor = ki * Scalar(mpq_class(2L * p - i - j, 2L * p - i));
      for (const auto& [mu, c] : g[j]) {
        Partition ext = mu;
        ext.push_back(i - j);
        std::sort(ext.rbegin(), ext.rend());
        auto [it, inserted] = g[i].try_emplace(ext, factor * c);
        if (!inserted) it->second += factor * c;
      }
    }
  }
  return g;
}

struct AnsatzSolve {
  ModuleVector known;
  std::vector<ModuleVector> unknowns;
};

// Solves for the unique vector known + sum c_k unknowns[k] that is singular
// modulo ctx; throws when the system is inconsistent or non-unique.
ModuleVector solveSingularAnsatz(const VermaModule& module, const QuotientContext& ctx,
                                 const AnsatzSolve& ansatz, const std::string& what) {
  std::vector<Generator> ops = module.singularTestOps();
  const Scalar& hM = module.weight().hM;

  std::vector<std::vector<ModuleVector>> images;
  auto imageOf = [&](const ModuleVector& v) {
    std::vector<ModuleVector> img;
    img.reserve(ops.size() + 1);
    for (const auto& g : ops) img.push_back(ctx.reduceMod(module.act(g, v)));
    img.push_back(ctx.reduceMod(module.act(Generator::M(0), v) - v * hM));
    return img;
  };
  images.push_back(imageOf(ansatz.known));
  for (const auto& u : ansatz.unknowns) images.push_back(imageOf(u));

  auto combos = kernelCombos(images);
  if (combos.size() != 1 || combos.front().front().isZero()) {
    std::ostringstream os;
    os << what << ": singular system has " << combos.size()
       << " solution(s); expected a unique one";
    throw std::domain_error(os.str());
  }
  std::vector<Scalar> combo = combos.front();
  Scalar inv = combo.front().inverse();
  ModuleVector out = ansatz.known;
  for (size_t k = 0; k < ansatz.unknowns.size(); ++k) {
    Scalar c = combo[k + 1] * inv;
    if (!c.isZero()) out.addScaled(ansatz.unknowns[k], c);
  }
  return out;
}

}  // namespace

ModuleVector buildT(const VermaModule& module) {
  int p = requireP(module);
  if (module.weight().cM.isZero()) throw std::domain_error("buildT: cM specialized to 0");
  Scalar expected = hPrFor(p, 1, module.mode(), module.weight().cL);
  if (module.weight().hL != expected)
    throw std::invalid_argument("buildT requires hL = h_{p,1}");

  const Scalar& cM = module.weight().cM;
  ModuleVector known(2 * p);
  known.add(PBWMonomial{{}, {}, {p}}, Scalar(1L));
  auto g = leadingGPolys(p, cM);
  for (int i = 1; i <= p - 1; ++i)
    for (const auto& [mu, c] : g[p - i]) known.add(PBWMonomial{mu, {}, {i}}, c);

  QuotientContext ctx(module);
  AnsatzSolve ansatz;
  ansatz.known = std::move(known);
  for (const auto& m : ctx.quotientBasis(2 * p)) {
    if (!m.lPart.empty()) continue;  // L block is pinned by the recursion
    ansatz.unknowns.push_back(ModuleVector::monomial(m));
  }
  return solveSingularAnsatz(module, ctx, ansatz, "buildT");
}

ModuleVector buildTpr(int r, const VermaModule& module) {
  if (r < 1) throw std::invalid_argument("buildTpr: r must be >= 1");
  int p = requireP(module);
  if (module.weight().cM.isZero()) throw std::domain_error("buildTpr: cM specialized to 0");
  Scalar expected = hPrFor(p, r, module.mode(), module.weight().cL);
  if (module.weight().hL != expected)
    throw std::invalid_argument("buildTpr requires hL = h_{p,r}");
  if (r == 1) return buildT(module);

  // T is solved at hL = h_{p,1} and then used as an element of U(g_-).
  HighestWeight base = module.weight();
  base.hL = hPrFor(p, 1, module.mode(), module.weight().cL);
  VermaModule sibling(std::move(base), module.mode(), p);
  ModuleVector tOp = buildT(sibling);

  // powers T^k 1
  std::vector<ModuleVector> tPow;
  tPow.push_back(module.vacuum());
  for (int k = 1; k <= r; ++k) tPow.push_back(module.applyOperator(tOp, tPow.back()));

  QuotientContext ctx(module);
  AnsatzSolve ansatz;
  ansatz.known = tPow[r];
  for (int i = 1; i <= r; ++i) {
    for (const auto& mu : partitionsOf(i * p)) {
      if (containsPart(mu, p)) continue;
      ansatz.unknowns.push_back(
          module.applyOperator(ModuleVector::monomial(PBWMonomial{mu, {}, {}}), tPow[r - i]));
    }
  }
  return solveSingularAnsatz(module, ctx, ansatz, "buildTpr");
}

SubspaceBasis subsingularSpace(int level2, const VermaModule& module,
                               const QuotientContext& ctx) {
  std::vector<Generator> ops = module.singularTestOps();
  const Scalar& hM = module.weight().hM;

  auto basis = ctx.quotientBasis(level2);
  std::vector<std::vector<ModuleVector>> images;
  images.reserve(basis.size());
  for (const auto& m : basis) {
    ModuleVector v = ModuleVector::monomial(m);
    std::vector<ModuleVector> img;
    img.reserve(ops.size() + 1);
    for (const auto& g : ops) img.push_back(ctx.reduceMod(module.act(g, v)));
    img.push_back(ctx.reduceMod(module.act(Generator::M(0), v) - v * hM));
    images.push_back(std::move(img));
  }
  auto combos = kernelCombos(images);
  std::vector<ModuleVector> kernelVectors;
  for (const auto& combo : combos) {
    ModuleVector v(level2);
    for (size_t i = 0; i < combo.size(); ++i)
      if (!combo[i].isZero()) v.addScaled(ModuleVector::monomial(basis[i]), combo[i]);
    kernelVectors.push_back(std::move(v));
  }
  SubspaceBasis out = echelonize(kernelVectors);
  out.level2 = level2;
  return out;
}

bool CompositionReport::allPassed() const {
  for (const auto& item : items)
    if (!item.passed) return false;
  return true;
}

CompositionReport compositionChecks(int p, int r, AlgebraMode mode) {
  CompositionReport report;
  auto push = [&report](std::string name, bool ok) {
    report.items.push_back({std::move(name), ok});
  };
  long factorial = 1;
  for (int i = 2; i <= r; ++i) factorial *= i;
  long pPowR = 1;
  for (int i = 0; i < r; ++i) pPowR *= p;

  HighestWeight atypicalWeight = HighestWeight::symbolic();
  atypicalWeight.hL = hPrFor(p, r, mode, atypicalWeight.cL);
  VermaModule atypical = VermaModule::atLevelP(p, mode, atypicalWeight);
  ModuleVector tpr = buildTpr(r, atypical);
  ModuleVector s1 = buildS(atypical);

  // M_{(r-1)p} T_{p,r} 1 = r! p^r S 1 (+ hM T 1 when r = 1), exact in V
  {
    ModuleVector lhs = atypical.act(Generator::M((r - 1) * p), tpr);
    ModuleVector rhs = s1 * Scalar(factorial * pPowR);
    if (r == 1) rhs = rhs + tpr * atypical.weight().hM;
    std::ostringstream name;
    name << "M[" << (r - 1) * p << "] T_{" << p << "," << r << "} 1 = " << factorial * pPowR
         << " S 1" << (r == 1 ? " + hM T 1" : "");
    push(name.str(), lhs == rhs);
  }

  // Q_{(r-1)p + p/2} T_{p,r} 1 = r! p^r R 1 for odd p in the full algebra
  if (p % 2 == 1 && mode == AlgebraMode::Full) {
    ModuleVector r1 = buildR(atypical);
    ModuleVector lhs = atypical.act(Generator::Q2(2 * (r - 1) * p + p), tpr);
    ModuleVector rhs = r1 * Scalar(factorial * pPowR);
    std::ostringstream name;
    name << "Q[" << 2 * (r - 1) * p + p << "/2] T_{" << p << "," << r << "} 1 = "
         << factorial * pPowR << " R 1";
    push(name.str(), lhs == rhs);
  }

  // symbolic-hL module for the pairing and commutator identities
  HighestWeight symb = HighestWeight::symbolic();
  VermaModule symbolic = VermaModule::atLevelP(p, mode, symb);
  QuotientContext ctx(symbolic);
  HighestWeight tw = HighestWeight::symbolic();
  tw.hL = hPrFor(p, 1, mode, tw.cL);
  VermaModule tModule = VermaModule::atLevelP(p, mode, tw);
  ModuleVector tOp = buildT(tModule);

  // L_p^k T^k 1 = (2p)^k k! prod_{i<=k} (hL - h_{p,i}) 1  modulo J'
  {
    std::vector<ModuleVector> tPow;
    tPow.push_back(symbolic.vacuum());
    for (int k = 1; k <= r; ++k) tPow.push_back(symbolic.applyOperator(tOp, tPow.back()));
    for (int k = 1; k <= r; ++k) {
      ModuleVector acc = tPow[k];
      for (int j = 0; j < k; ++j) acc = ctx.reduceMod(symbolic.act(Generator::L(p), acc));
      Scalar expected(1L);
      long kFactorial = 1;
      for (int i = 2; i <= k; ++i) kFactorial *= i;
      long twoPk = 1;
      for (int i = 0; i < k; ++i) twoPk *= 2 * p;
      expected = Scalar(twoPk * kFactorial);
      for (int i = 1; i <= k; ++i)
        expected *= symbolic.weight().hL - hPrFor(p, i, mode, symbolic.weight().cL);
      std::ostringstream name;
      name << "L[" << p << "]^" << k << " T^" << k << " 1 = (2p)^k k! prod(hL - h_{" << p
           << ",i}) 1 (mod J')";
      push(name.str(), acc == symbolic.vacuum() * expected);
    }
  }

  // [S,T] 1 = 0 and S T^i 1 = 0 modulo J' (R variant for odd p)
  {
    ModuleVector sOp = buildS(symbolic);
    ModuleVector t1 = symbolic.applyOperator(tOp, symbolic.vacuum());
    if (p % 2 == 0 || mode == AlgebraMode::W22) {
      ModuleVector st = symbolic.applyOperator(sOp, t1);
      ModuleVector ts = symbolic.applyOperator(tOp, symbolic.applyOperator(sOp, symbolic.vacuum()));
      push("[S,T] 1 = 0 (mod J')", ctx.reduceMod(st - ts).isZero());
    } else {
      ModuleVector rOp = buildR(symbolic);
      ModuleVector rt = symbolic.applyOperator(rOp, t1);
      ModuleVector tr = symbolic.applyOperator(tOp, symbolic.applyOperator(rOp, symbolic.vacuum()));
      push("[R,T] 1 = 0 (mod J')", ctx.reduceMod(rt - tr).isZero());
    }
    ModuleVector acc = symbolic.vacuum();
    for (int i = 1; i <= 2; ++i) {
      acc = symbolic.applyOperator(tOp, acc);
      std::ostringstream name;
      name << "S T^" << i << " 1 = 0 (mod J')";
      push(name.str(), ctx.reduceMod(symbolic.applyOperator(sOp, acc)).isZero());
    }
  }

  return report;
}

}  // namespace bms
