#include "bms/verify.hpp"

#include "bms/characters.hpp"
#include "bms/io.hpp"
#include "bms/singular.hpp"
#include "bms/subsingular.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace bms {

namespace {

struct TermSpec {
  const char* coeff;
  Partition m, q, l;  // q holds the indices j of Q_{-j+1/2}
};

ModuleVector makeVector(int level2, std::initializer_list<TermSpec> terms) {
  ModuleVector v(level2);
  for (const auto& t : terms) v.add(PBWMonomial{t.m, t.q, t.l}, parseScalar(t.coeff));
  return v;
}

ModuleVector expectedS(int p, const VermaModule& m) {
  switch (p) {
    case 1:
      return makeVector(2, {{"1", {1}, {}, {}}});
    case 2:
      return makeVector(4, {{"1", {2}, {}, {}}, {"6/cM", {1, 1}, {}, {}}});
    case 3:
      return makeVector(6, {{"1", {3}, {}, {}},
                            {"6/cM", {2, 1}, {}, {}},
                            {"9/cM^2", {1, 1, 1}, {}, {}}});
    default:
      return buildS(m);
  }
}

ModuleVector expectedR(int p, const VermaModule& m) {
  switch (p) {
    case 1:
      return makeVector(1, {{"1", {}, {1}, {}}});
    case 3:
      return makeVector(3, {{"1", {}, {2}, {}}, {"3/cM", {1}, {1}, {}}});
    case 5:
      return makeVector(5, {{"1", {}, {3}, {}},
                            {"3/(2*cM)", {1}, {2}, {}},
                            {"1/cM", {2}, {1}, {}},
                            {"3/(2*cM^2)", {1, 1}, {1}, {}}});
    default:
      return buildR(m);
  }
}

ModuleVector expectedT2() {
  return makeVector(4, {{"1", {}, {}, {2}},
                        {"12/cM", {1}, {}, {1}},
                        {"(87 - 6*cL)/cM^2", {1, 1}, {}, {}},
                        {"-6/cM", {}, {2, 1}, {}}});
}

mpq_class randomRational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return mpq_class(num(rng), den(rng));
}

Scalar randomScalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> expDist(0, 2);
  Poly num;
  int terms = 1 + pick(rng) % 2;
  for (int t = 0; t < terms; ++t) {
    Expo e;
    e.e[pick(rng)] = expDist(rng);
    num.addTerm(e, randomRational(rng, 5));
  }
  static const char* dens[] = {"1", "cM", "cM^2", "2*hM + cM", "cL + 2", "hL"};
  Scalar den = parseScalar(dens[pick(rng) % 4 + (pick(rng) % 2) * 2]);
  if (num.isZero()) num = Poly(1L);
  return Scalar(num) / den;
}

Generator randomGenerator(std::mt19937_64& rng, int maxMode) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> mode(-maxMode, maxMode);
  switch (kind(rng)) {
    case 0:
      return Generator::L(mode(rng));
    case 1:
      return Generator::M(mode(rng));
    default: {
      int m2 = 2 * mode(rng) + 1;
      if (m2 > 2 * maxMode) m2 -= 2;
      return Generator::Q2(m2);
    }
  }
}

ModuleVector randomVector(std::mt19937_64& rng, const VermaModule& module, int maxLevel2) {
  std::uniform_int_distribution<int> levelDist(0, maxLevel2);
  int level2 = levelDist(rng);
  auto basis = levelBasis(level2, module.mode());
  ModuleVector v(level2);
  std::uniform_int_distribution<size_t> idx(0, basis.size() - 1);
  size_t picks = 1 + idx(rng) % 2;
  for (size_t i = 0; i < picks; ++i) v.add(basis[idx(rng)], Scalar(randomRational(rng, 4)));
  return v;
}

using Items = std::vector<VerifyItem>;

void push(Items& items, const std::string& name, bool ok, const std::string& detail = "") {
  items.push_back({name, ok, detail});
}

Items paperExamplesSuite() {
  Items items;
  for (int p : {1, 2, 3}) {
    VermaModule m = VermaModule::atLevelP(p, AlgebraMode::Full);
    bool ok = buildS(m) == expectedS(p, m);
    push(items, "S example p=" + std::to_string(p), ok);
  }
  for (int p : {1, 3, 5}) {
    VermaModule m = VermaModule::atLevelP(p, AlgebraMode::Full);
    bool ok = buildR(m) == expectedR(p, m);
    push(items, "R example p=" + std::to_string(p), ok);
  }
  for (int p : {1, 3}) {
    VermaModule m = VermaModule::atLevelP(p, AlgebraMode::Full);
    bool ok = powerVector(SingularOp::R, 2, m) == buildS(m);
    push(items, "R^2 = S at p=" + std::to_string(p), ok);
  }
  push(items, "h_{2,1} value", hPr(2, 1) == parseScalar("-cL/8 + 21/16"));
  push(items, "h_{2,2} value", hPr(2, 2) == parseScalar("-cL/8 + 5/16"));
  {
    bool ok = true;
    for (int r = 1; r <= 4; ++r)
      ok = ok && hPr(1, r) == Scalar(mpq_class(1 - r, 2));
    push(items, "h_{1,r} = (1-r)/2", ok);
  }
  {
    HighestWeight w = HighestWeight::symbolic();
    w.hL = hPr(2, 1);
    VermaModule m = VermaModule::atLevelP(2, AlgebraMode::Full, w);
    push(items, "T example p=2", buildT(m) == expectedT2());
  }
  {
    HighestWeight w = HighestWeight::symbolic();
    w.hL = hPr(1, 2);
    VermaModule m = VermaModule::atLevelP(1, AlgebraMode::Full, w);
    ModuleVector expected =
        makeVector(4, {{"1", {}, {}, {1, 1}}, {"6/cM", {2}, {}, {}}});
    push(items, "T_{1,2} example", buildTpr(2, m) == expected);
  }
  {
    HighestWeight w = HighestWeight::symbolic();
    w.hL = hPr(1, 3);
    VermaModule m = VermaModule::atLevelP(1, AlgebraMode::Full, w);
    ModuleVector expected = makeVector(6, {{"1", {}, {}, {1, 1, 1}},
                                           {"24/cM", {2}, {}, {1}},
                                           {"12/cM", {3}, {}, {}}});
    push(items, "T_{1,3} example", buildTpr(3, m) == expected);
  }
  {
    // Thm 2.3(1) sanity at p = 1
    VermaModule m = VermaModule::atLevelP(1, AlgebraMode::Full);
    bool ok = m.isSingular(makeVector(2, {{"1", {1}, {}, {}}})) &&
              m.isSingular(makeVector(1, {{"1", {}, {1}, {}}}));
    push(items, "M[-1] 1 and Q[-1/2] 1 singular at p=1", ok);
    HighestWeight w0 = HighestWeight::symbolic();
    w0.hL = Scalar(0L);
    VermaModule m0 = VermaModule::atLevelP(1, AlgebraMode::Full, w0);
    QuotientContext ctx(m0);
    LevelComponents mods = ctx.componentsUpTo(4);
    ModuleVector lVec = makeVector(2, {{"1", {}, {}, {1}}});
    bool sub = m0.isSingular(lVec, &mods) && !m0.isSingular(lVec);
    push(items, "L[-1] 1 subsingular at hL=0, p=1", sub);
  }
  return items;
}

Items propertiesSuite(int maxLevel2, uint64_t seed) {
  Items items;
  std::mt19937_64 rng(seed);

  {
    bool ok = true;
    for (int t = 0; t < 60 && ok; ++t) {
      Scalar a = randomScalar(rng), b = randomScalar(rng), c = randomScalar(rng);
      ok = ok && (a + b) + c == a + (b + c);
      ok = ok && a * (b + c) == a * b + a * c;
      ok = ok && (a * b) * c == a * (b * c);
      ok = ok && a + (-a) == Scalar();
      if (!b.isZero()) ok = ok && (a / b) * b == a;
    }
    push(items, "scalar field axioms (random)", ok);
  }
  {
    bool ok = true;
    for (int m2a = -12; m2a <= 12 && ok; ++m2a)
      for (int m2b = -12; m2b <= 12 && ok; ++m2b) {
        for (int ka = 0; ka < 3 && ok; ++ka)
          for (int kb = 0; kb < 3 && ok; ++kb) {
            bool aQ = ka == 2, bQ = kb == 2;
            if (aQ != (std::abs(m2a) % 2 == 1)) continue;
            if (bQ != (std::abs(m2b) % 2 == 1)) continue;
            Generator x{static_cast<GenKind>(ka), m2a};
            Generator y{static_cast<GenKind>(kb), m2b};
            AlgebraElement lhs = bracket(x, y);
            AlgebraElement rhs = bracket(y, x);
            mpq_class s = (x.isOdd() && y.isOdd()) ? 1 : -1;
            AlgebraElement scaled;
            for (const auto& [g, c] : rhs.terms) scaled.add(g, Scalar(s) * c);
            ok = ok && lhs.terms == scaled.terms;
            for (const auto& [g, c] : lhs.terms)
              if (!g.isCentral()) ok = ok && g.degree2() == x.degree2() + y.degree2();
          }
      }
    push(items, "bracket super-antisymmetry and grading", ok);
  }
  {
    VermaModule m = VermaModule::atLevelP(2, AlgebraMode::Full);
    bool ok = true;
    for (int t = 0; t < 60 && ok; ++t) {
      Generator x = randomGenerator(rng, 4), y = randomGenerator(rng, 4);
      ModuleVector v = randomVector(rng, m, std::min(maxLevel2, 4));
      ModuleVector lhs = m.act(x, m.act(y, v));
      Scalar sign = (x.isOdd() && y.isOdd()) ? Scalar(-1L) : Scalar(1L);
      lhs = lhs - m.act(y, m.act(x, v)) * sign;
      ModuleVector rhs(lhs.level2());
      for (const auto& bt : bracketTerms(x, y)) {
        if (bt.gen.isCentral()) {
          const Scalar& cw = bt.gen.kind == GenKind::CL ? m.weight().cL : m.weight().cM;
          rhs.addScaled(v, Scalar(bt.coeff) * cw);
        } else {
          rhs.addScaled(m.act(bt.gen, v), Scalar(bt.coeff));
        }
      }
      ok = ok && lhs == rhs;
    }
    push(items, "super-Jacobi via action (random)", ok);
  }
  {
    bool ok = true;
    for (int l2 = 1; l2 <= std::min(maxLevel2, 8); ++l2) {
      auto basis = levelBasis(l2, AlgebraMode::Full);
      for (size_t i = 0; i < basis.size() && ok; ++i)
        for (size_t j = 0; j < basis.size() && ok; ++j) {
          int cij = monomialCompare(basis[i], basis[j]);
          int cji = monomialCompare(basis[j], basis[i]);
          ok = ok && ((i == j) == (cij == 0)) && cij == -cji;
          for (size_t k = 0; k < basis.size() && ok; ++k) {
            if (cij > 0 && monomialCompare(basis[j], basis[k]) > 0)
              ok = ok && monomialCompare(basis[i], basis[k]) > 0;
          }
        }
    }
    push(items, "total order axioms on level bases", ok);
  }
  {
    // odd-derivation property of the formal Q-derivative on split monomials
    bool ok = true;
    for (int t = 0; t < 40 && ok; ++t) {
      auto basis = levelBasis(5, AlgebraMode::Full);
      std::uniform_int_distribution<size_t> idx(0, basis.size() - 1);
      PBWMonomial mono = basis[idx(rng)];
      auto fs = mono.factors();
      std::uniform_int_distribution<size_t> cutDist(0, fs.size());
      size_t cut = cutDist(rng);
      // only splits respecting the block structure produce PBW prefix/suffix
      PBWMonomial a = {{}, {}, {}}, b = {{}, {}, {}};
      for (size_t i = 0; i < fs.size(); ++i) {
        PBWMonomial& dst = i < cut ? a : b;
        switch (fs[i].kind) {
          case GenKind::M:
            dst.mPart.push_back(-fs[i].mode2 / 2);
            break;
          case GenKind::Q:
            dst.qPart.push_back((-fs[i].mode2 + 1) / 2);
            break;
          default:
            dst.lPart.push_back(-fs[i].mode2 / 2);
        }
      }
      if (!a.qPart.empty() && !b.mPart.empty()) continue;  // not a PBW split
      for (int i = 1; i <= 3; ++i) {
        ModuleVector whole = qDerivative(i, ModuleVector::monomial(mono));
        // (da) b
        ModuleVector da = qDerivative(i, ModuleVector::monomial(a));
        ModuleVector daB(whole.level2());
        for (const auto& [mm, cc] : da.coeffs()) {
          PBWMonomial joined = mm;
          joined.qPart.insert(joined.qPart.end(), b.qPart.begin(), b.qPart.end());
          joined.mPart.insert(joined.mPart.end(), b.mPart.begin(), b.mPart.end());
          std::sort(joined.mPart.rbegin(), joined.mPart.rend());
          joined.lPart.insert(joined.lPart.end(), b.lPart.begin(), b.lPart.end());
          daB.add(joined, cc);
        }
        ModuleVector db = qDerivative(i, ModuleVector::monomial(b));
        ModuleVector aDb(whole.level2());
        for (const auto& [mm, cc] : db.coeffs()) {
          PBWMonomial joined = a;
          joined.mPart.insert(joined.mPart.end(), mm.mPart.begin(), mm.mPart.end());
          std::sort(joined.mPart.rbegin(), joined.mPart.rend());
          joined.qPart.insert(joined.qPart.end(), mm.qPart.begin(), mm.qPart.end());
          joined.lPart.insert(joined.lPart.end(), mm.lPart.begin(), mm.lPart.end());
          aDb.add(joined, cc);
        }
        Scalar sgn = (a.parityOdd() == 1) ? Scalar(-1L) : Scalar(1L);
        ok = ok && whole == daB + aDb * sgn;
      }
    }
    push(items, "Q-derivative is an odd derivation", ok);
  }
  {
    bool ok = true;
    QSeries ch = vermaCharacter(std::min(maxLevel2, 12));
    for (int l2 = 0; l2 <= std::min(maxLevel2, 12); ++l2)
      ok = ok && ch.coeff(l2) ==
                     static_cast<long long>(levelBasis(l2, AlgebraMode::Full).size());
    push(items, "level basis counts match the character", ok);
  }
  {
    // declared-singular vectors are killed by additional raising operators
    bool ok = true;
    std::vector<Generator> extra = {Generator::L(3), Generator::M(1), Generator::M(2),
                                    Generator::QRaise(2), Generator::QRaise(3)};
    for (int p : {2, 3}) {
      VermaModule m = VermaModule::atLevelP(p, AlgebraMode::Full);
      ModuleVector v = (p % 2 == 0) ? buildS(m) : buildR(m);
      ok = ok && m.isSingular(v);
      for (const auto& g : extra) ok = ok && m.act(g, v).isZero();
    }
    push(items, "singular vectors killed by redundant raising set", ok);
  }
  return items;
}

Items charactersSuite(int maxLevel2, uint64_t seed) {
  Items items;
  std::mt19937_64 rng(seed);
  int cap = std::min(maxLevel2, 8);
  {
    QSeries ch = vermaCharacter(cap);
    bool ok = ch.coeff(0) == 1 && ch.coeff(1) == 1 && ch.coeff(2) == 2 && ch.coeff(3) == 3;
    push(items, "Verma character low coefficients", ok);
  }
  {
    bool ok = irreducibleCharacter(2, std::nullopt, 8).coeff(4) == 5 &&
              irreducibleCharacter(1, std::nullopt, 8).coeff(1) == 0 &&
              irreducibleCharacter(1, 1, 8).coeff(2) == 0;
    push(items, "irreducible character examples", ok);
  }
  for (int p : {1, 2}) {
    // typical: seeded generic hL, rejecting the atypical locus
    mpq_class cL(7), cM(2);
    mpq_class hL;
    while (true) {
      hL = randomRational(rng, 20);
      bool clash = false;
      for (int r = 1; r <= 8; ++r) {
        Scalar h = hPrAt(p, r, Scalar(cL));
        if (Scalar(hL) == h) clash = true;
      }
      if (!clash) break;
    }
    HighestWeight w{Scalar(cL), Scalar(cM), Scalar(hL), Scalar()};
    VermaModule m = VermaModule::atLevelP(p, AlgebraMode::Full, w);
    QSeries formula = irreducibleCharacter(p, std::nullopt, cap, Scalar(hL));
    QSeries dims = computedGradedDims(m, std::nullopt, cap);
    push(items, "typical graded dims match character, p=" + std::to_string(p),
         dims.sameCoeffs(formula, cap));
  }
  {
    mpq_class cL(7), cM(2);
    Scalar hL = hPrAt(1, 1, Scalar(cL));
    HighestWeight w{Scalar(cL), Scalar(cM), hL, Scalar()};
    VermaModule m = VermaModule::atLevelP(1, AlgebraMode::Full, w);
    QSeries formula = irreducibleCharacter(1, 1, 4, hL);
    QSeries dims = computedGradedDims(m, 1, 4);
    push(items, "atypical graded dims match character, (p,r)=(1,1)",
         dims.sameCoeffs(formula, 4));
  }
  return items;
}

Items compositionSuite() {
  Items items;
  for (auto [p, r] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
    CompositionReport rep = compositionChecks(p, r, AlgebraMode::Full);
    for (const auto& item : rep.items)
      push(items, "(p=" + std::to_string(p) + ",r=" + std::to_string(r) + ") " + item.name,
           item.passed);
  }
  return items;
}

}  // namespace

std::vector<std::string> verifySuiteNames() {
  return {"paper-examples", "properties", "characters", "composition"};
}

std::vector<VerifyItem> runVerifySuite(const std::string& suite, int maxLevel2, uint64_t seed) {
  if (suite == "paper-examples") return paperExamplesSuite();
  if (suite == "properties") return propertiesSuite(maxLevel2 > 0 ? maxLevel2 : 8, seed);
  if (suite == "characters") return charactersSuite(maxLevel2 > 0 ? maxLevel2 : 8, seed);
  if (suite == "composition") return compositionSuite();
  throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

}  // namespace bms
