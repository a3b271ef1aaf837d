#include "bms/verma.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace bms {

HighestWeight HighestWeight::symbolic() {
  return HighestWeight{Scalar::variable(Var::cL), Scalar::variable(Var::cM),
                       Scalar::variable(Var::hL), Scalar::variable(Var::hM)};
}

VermaModule::VermaModule(HighestWeight w, AlgebraMode mode, std::optional<int> p)
    : weight_(std::move(w)), mode_(mode), p_(p) {}

VermaModule VermaModule::atLevelP(int p, AlgebraMode mode, HighestWeight base) {
  if (p < 1) throw std::invalid_argument("VermaModule: p must be positive");
  // phi(p) = 2 hM + (p^2-1)/12 cM = 0
  base.hM = base.cM * Scalar(mpq_class(1 - static_cast<long>(p) * p, 24));
  return VermaModule(std::move(base), mode, p);
}

ModuleVector VermaModule::vacuum() const { return ModuleVector::monomial(PBWMonomial{}); }

namespace {

int encodeGen(const Generator& g) { return g.mode2 * 8 + static_cast<int>(g.kind); }

// rank of a factor inside the PBW word: M block, then Q, then L
int blockRank(const Generator& g) {
  switch (g.kind) {
    case GenKind::M:
      return 0;
    case GenKind::Q:
      return 1;
    case GenKind::L:
      return 2;
    default:
      throw std::logic_error("blockRank: central generator inside a PBW word");
  }
}

PBWMonomial wordToMonomial(const std::vector<Generator>& word) {
  PBWMonomial m;
  for (const auto& g : word) {
    switch (g.kind) {
      case GenKind::M:
        m.mPart.push_back(-g.mode2 / 2);
        break;
      case GenKind::Q:
        m.qPart.push_back((-g.mode2 + 1) / 2);
        break;
      case GenKind::L:
        m.lPart.push_back(-g.mode2 / 2);
        break;
      default:
        throw std::logic_error("wordToMonomial: central generator");
    }
  }
  return m;
}

}  // namespace

// Straightens a word of negative-mode generators into PBW normal form by
// resolving the first out-of-order adjacent pair; terminates by the
// (length, inversions) measure.
const std::map<PBWMonomial, mpq_class, SuccGreater>& VermaModule::normalWord(
    const std::vector<Generator>& word) const {
  std::vector<int> key;
  key.reserve(word.size());
  for (const auto& g : word) key.push_back(encodeGen(g));
  {
    std::lock_guard<std::mutex> lock(cacheMutex_);
    auto it = wordCache_.find(key);
    if (it != wordCache_.end()) return it->second;
  }

  std::map<PBWMonomial, mpq_class, SuccGreater> result;
  std::deque<std::pair<mpq_class, std::vector<Generator>>> work;
  work.emplace_back(1, word);
  while (!work.empty()) {
    auto [coeff, w] = std::move(work.front());
    work.pop_front();
    bool rewritten = false;
    for (size_t i = 0; i + 1 < w.size() && !rewritten; ++i) {
      const Generator &x = w[i], &y = w[i + 1];
      int rx = blockRank(x), ry = blockRank(y);
      bool disorder = false;
      if (rx > ry) {
        disorder = true;
      } else if (rx == ry) {
        // within blocks parts must not increase; Q strictly decreases
        if (x.kind == GenKind::Q)
          disorder = x.mode2 >= y.mode2;  // Q_{-r}Q_{-s} needs r > s
        else
          disorder = x.mode2 > y.mode2;  // modes negative: -a then -b needs a >= b
      }
      if (!disorder) continue;
      rewritten = true;
      if (x.kind == GenKind::Q && y.kind == GenKind::Q && x.mode2 == y.mode2) {
        // Q_{-r} Q_{-r} = M_{-2r}
        std::vector<Generator> nw(w.begin(), w.begin() + i);
        nw.push_back(Generator::M(x.mode2));
        nw.insert(nw.end(), w.begin() + i + 2, w.end());
        work.emplace_back(coeff, std::move(nw));
        continue;
      }
      mpq_class sign = (x.isOdd() && y.isOdd()) ? -1 : 1;
      std::vector<Generator> swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      work.emplace_back(coeff * sign, std::move(swapped));
      for (const auto& t : bracketTerms(x, y)) {
        if (t.gen.isCentral()) continue;  // negative modes cannot sum to zero
        std::vector<Generator> nw(w.begin(), w.begin() + i);
        nw.push_back(t.gen);
        nw.insert(nw.end(), w.begin() + i + 2, w.end());
        work.emplace_back(coeff * t.coeff, std::move(nw));
      }
    }
    if (!rewritten) {
      PBWMonomial m = wordToMonomial(w);
      auto [it, inserted] = result.try_emplace(m, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second == 0) result.erase(it);
      }
    }
  }

  std::lock_guard<std::mutex> lock(cacheMutex_);
  auto [it, inserted] = wordCache_.try_emplace(std::move(key), std::move(result));
  return it->second;
}

ModuleVector VermaModule::mulGen(const Generator& g, const ModuleVector& v) const {
  ModuleVector out(v.level2() - g.mode2);
  for (const auto& [m, c] : v.coeffs()) {
    std::vector<Generator> word;
    word.reserve(m.length() + 1);
    word.push_back(g);
    auto fs = m.factors();
    word.insert(word.end(), fs.begin(), fs.end());
    for (const auto& [mono, q] : normalWord(word)) out.add(mono, c * Scalar(q));
  }
  return out;
}

ModuleVector VermaModule::actRaise(const Generator& g, const PBWMonomial& m) const {
  ActKey key{static_cast<int>(g.kind), g.mode2, m};
  {
    std::lock_guard<std::mutex> lock(cacheMutex_);
    auto it = actCache_.find(key);
    if (it != actCache_.end()) return *it->second;
  }

  ModuleVector out(m.level2() - g.degree2());
  if (m.empty()) {
    switch (g.kind) {
      case GenKind::CL:
        out.add(m, weight_.cL);
        break;
      case GenKind::CM:
        out.add(m, weight_.cM);
        break;
      case GenKind::L:
        if (g.mode2 == 0) out.add(m, weight_.hL);
        break;
      case GenKind::M:
        if (g.mode2 == 0) out.add(m, weight_.hM);
        break;
      case GenKind::Q:
        break;  // annihilates the highest weight vector
    }
  } else {
    auto fs = m.factors();
    Generator x = fs.front();
    PBWMonomial rest = wordToMonomial({fs.begin() + 1, fs.end()});
    for (const auto& t : bracketTerms(g, x)) {
      Scalar c{t.coeff};
      if (t.gen.isCentral()) {
        out.addScaled(ModuleVector::monomial(rest),
                      c * (t.gen.kind == GenKind::CL ? weight_.cL : weight_.cM));
      } else if (t.gen.degree2() < 0) {
        out.addScaled(mulGen(t.gen, ModuleVector::monomial(rest)), c);
      } else {
        out.addScaled(actRaise(t.gen, rest), c);
      }
    }
    ModuleVector inner = actRaise(g, rest);
    bool flip = g.isOdd() && x.isOdd();
    out.addScaled(mulGen(x, inner), flip ? Scalar(-1L) : Scalar(1L));
  }

  auto ptr = std::make_shared<const ModuleVector>(std::move(out));
  std::lock_guard<std::mutex> lock(cacheMutex_);
  auto [it, inserted] = actCache_.try_emplace(std::move(key), std::move(ptr));
  return *it->second;
}

ModuleVector VermaModule::act(const Generator& g, const ModuleVector& v) const {
  if (!inAlgebra(g, mode_))
    throw std::invalid_argument("act: generator not in the configured algebra");
  if (g.degree2() < 0) return mulGen(g, v);
  ModuleVector out(v.level2() - g.degree2());
  for (const auto& [m, c] : v.coeffs()) out.addScaled(actRaise(g, m), c);
  return out;
}

ModuleVector VermaModule::actWord(std::span<const Generator> gs, const ModuleVector& v) const {
  ModuleVector out = v;
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) out = act(*it, out);
  return out;
}

ModuleVector VermaModule::applyOperator(const ModuleVector& op, const ModuleVector& v) const {
  ModuleVector out(v.level2() + op.level2());
  for (const auto& [m, c] : op.coeffs()) {
    ModuleVector w = v;
    auto fs = m.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) w = mulGen(*it, w);
    out.addScaled(w, c);
  }
  return out;
}

VectorStats VermaModule::stats(const ModuleVector& v) const {
  if (v.isZero()) throw std::domain_error("stats of the zero vector");
  VectorStats s;
  s.level2 = v.level2();
  for (const auto& [m, c] : v.coeffs()) {
    s.ellM = std::max(s.ellM, static_cast<int>(m.mPart.size()));
    s.ellQ = std::max(s.ellQ, static_cast<int>(m.qPart.size()));
    s.ellL = std::max(s.ellL, static_cast<int>(m.lPart.size()));
  }
  return s;
}

std::vector<Generator> VermaModule::singularTestOps() const {
  // Q_{3/2} must be listed: [L_1, Q_{1/2}] = 0, so {L_1, L_2, Q_{1/2}} alone
  // does not generate g_+. With it the set generates everything
  // (M_1 = [Q_{1/2}, Q_{1/2}]/2, M_2 = [Q_{1/2}, Q_{3/2}]/2, Q_{n+1/2} and L_n
  // from L_1, L_2 brackets).
  if (mode_ == AlgebraMode::W22)
    return {Generator::L(1), Generator::L(2), Generator::M(1), Generator::M(2)};
  return {Generator::L(1), Generator::L(2), Generator::QRaise(1), Generator::QRaise(2)};
}

bool VermaModule::isSingular(const ModuleVector& v, const LevelComponents* modulo) const {
  if (v.isZero()) return false;
  auto checkZero = [&](const ModuleVector& image) {
    if (image.isZero()) return true;
    if (modulo) {
      auto it = modulo->find(image.level2());
      if (it != modulo->end()) return reduce(image, it->second).isZero();
    }
    return false;
  };
  for (const auto& g : singularTestOps())
    if (!checkZero(act(g, v))) return false;
  ModuleVector m0 = act(Generator::M(0), v) - v * weight_.hM;
  return checkZero(m0);
}

VermaModule VermaModule::specialized(const std::map<Var, mpq_class>& assignment) const {
  HighestWeight w{weight_.cL.specialize(assignment), weight_.cM.specialize(assignment),
                  weight_.hL.specialize(assignment), weight_.hM.specialize(assignment)};
  return VermaModule(std::move(w), mode_, p_);
}

}  // namespace bms
