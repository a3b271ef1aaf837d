#include "doctest.h"
#include "helpers.hpp"

#include "bms/subsingular.hpp"

using namespace bms;
using bmstest::sc;
using bmstest::vec;

namespace {

VermaModule atypicalModule(int p, int r, AlgebraMode mode = AlgebraMode::Full) {
  HighestWeight w = HighestWeight::symbolic();
  w.hL = hPrFor(p, r, mode, w.cL);
  return VermaModule::atLevelP(p, mode, w);
}

}  // namespace

TEST_CASE("atypical locus values") {
  CHECK(hPr(2, 1) == sc("-cL/8 + 21/16"));
  CHECK(hPr(2, 2) == sc("-cL/8 + 5/16"));
  for (int r = 1; r <= 5; ++r) CHECK(hPr(1, r) == Scalar(mpq_class(1 - r, 2)));
  CHECK(hPr(4, 1) == sc("-5*cL/8 + 153/16"));
  CHECK(hPr(5, 1) == sc("-cL + 35/2"));
  CHECK(hPrW22(1, 3) == Scalar(mpq_class(-1)));
  CHECK(hPrW22(2, 1) == sc("-cL/8 + 27/12"));
  CHECK(hPrW22(3, 2) == sc("-cL/3 + 80/12 - 3/2"));
}

TEST_CASE("necessity coefficient families") {
  NecessityCoefficients c21 = necessityCoefficients(2, 1);
  REQUIRE(c21.l.size() == 1);
  REQUIRE(c21.n.size() == 1);
  CHECK(c21.l[0] == sc("12/cM"));
  CHECK(c21.n[0] == sc("-6/cM"));
  NecessityCoefficients c41 = necessityCoefficients(4, 1);
  REQUIRE(c41.l.size() == 3);
  CHECK(c41.l[1] == sc("3/cM"));
  CHECK(c41.n[0] == sc("-2/cM"));
  CHECK(c41.n[1] == sc("-6/cM"));
  CHECK(necessityCoefficients(1, 1).l.empty());
}

TEST_CASE("quotient context components") {
  // p=1: Q_{-1/2} Q_{-1/2} 1 = M_{-1} 1 spans the level-1 component of <R 1>
  VermaModule m1 = VermaModule::atLevelP(1, AlgebraMode::Full);
  QuotientContext ctx1(m1);
  const SubspaceBasis& lvl1 = ctx1.component(2);
  REQUIRE(lvl1.dim() == 1);
  CHECK(lvl1.vectors[0] == vec(2, {{"1", {1}, {}, {}}}));
  CHECK(ctx1.component(1).dim() == 1);  // Q_{-1/2} 1 itself
  auto qb = ctx1.quotientBasis(2);
  REQUIRE(qb.size() == 1);
  CHECK(qb[0] == bmstest::mono({}, {}, {1}));

  // p=2: level-2 component of <S 1> is spanned by S 1; quotient dim 5
  VermaModule m2 = VermaModule::atLevelP(2, AlgebraMode::Full);
  QuotientContext ctx2(m2);
  CHECK(ctx2.component(4).dim() == 1);
  CHECK(ctx2.quotientBasis(4).size() == 5);
  CHECK(ctx2.reduceMod(buildS(m2)).isZero());
}

TEST_CASE("T for p=1 and p=2") {
  VermaModule m1 = atypicalModule(1, 1);
  CHECK(m1.weight().hL.isZero());  // h_{1,1} = 0
  CHECK(buildT(m1) == vec(2, {{"1", {}, {}, {1}}}));

  VermaModule m2 = atypicalModule(2, 1);
  ModuleVector expected = vec(4, {{"1", {}, {}, {2}},
                                  {"12/cM", {1}, {}, {1}},
                                  {"(87 - 6*cL)/cM^2", {1, 1}, {}, {}},
                                  {"-6/cM", {}, {2, 1}, {}}});
  CHECK(buildT(m2) == expected);
}

TEST_CASE("T leading part follows the k_i recursion (p=4 L-block)") {
  VermaModule m4 = atypicalModule(4, 1);
  ModuleVector t = buildT(m4);
  CHECK(t.coeff(bmstest::mono({1}, {}, {3})) == sc("4/cM"));
  CHECK(t.coeff(bmstest::mono({2}, {}, {2})) == sc("3/cM"));
  CHECK(t.coeff(bmstest::mono({1, 1}, {}, {2})) == sc("10/cM^2"));
  CHECK(t.coeff(bmstest::mono({3}, {}, {1})) == sc("4/cM"));
  CHECK(t.coeff(bmstest::mono({2, 1}, {}, {1})) == sc("20/cM^2"));
  CHECK(t.coeff(bmstest::mono({1, 1, 1}, {}, {1})) == sc("24/cM^3"));
}

TEST_CASE("[M_0, T] 1 = p S 1") {
  for (int p = 1; p <= 3; ++p) {
    VermaModule m = atypicalModule(p, 1);
    ModuleVector t = buildT(m);
    ModuleVector lhs = m.act(Generator::M(0), t) - t * m.weight().hM;
    CHECK(lhs == buildS(m) * Scalar(static_cast<long>(p)));
  }
}

TEST_CASE("T is singular in the quotient, not in the Verma module") {
  for (int p = 1; p <= 3; ++p) {
    VermaModule m = atypicalModule(p, 1);
    QuotientContext ctx(m);
    ModuleVector t = buildT(m);
    LevelComponents mods = ctx.componentsUpTo(2 * p);
    CHECK(m.isSingular(t, &mods));
    if (p > 1) CHECK_FALSE(m.isSingular(t));
  }
}

TEST_CASE("T_{1,r} examples") {
  CHECK(buildTpr(2, atypicalModule(1, 2)) ==
        vec(4, {{"1", {}, {}, {1, 1}}, {"6/cM", {2}, {}, {}}}));
  CHECK(buildTpr(3, atypicalModule(1, 3)) == vec(6, {{"1", {}, {}, {1, 1, 1}},
                                                     {"24/cM", {2}, {}, {1}},
                                                     {"12/cM", {3}, {}, {}}}));
  // the M_{-2}^2 coefficient is 324/cM^2: the L_2 condition modulo J' reads
  // 6 a hL + 6 c + d cM = 0 with a = 60/cM, c = 36/cM, hL = -3/2
  VermaModule m14 = atypicalModule(1, 4);
  ModuleVector t14 = buildTpr(4, m14);
  CHECK(t14 == vec(8, {{"1", {}, {}, {1, 1, 1, 1}},
                       {"60/cM", {2}, {}, {1, 1}},
                       {"60/cM", {3}, {}, {1}},
                       {"36/cM", {4}, {}, {}},
                       {"324/cM^2", {2, 2}, {}, {}}}));
  QuotientContext ctx14(m14);
  LevelComponents mods14 = ctx14.componentsUpTo(8);
  CHECK(m14.isSingular(t14, &mods14));
  // the variant with 108/cM^2 fails L_2-annihilation modulo J'
  ModuleVector variant = t14;
  variant.add(bmstest::mono({2, 2}, {}, {}), sc("-216/cM^2"));
  CHECK_FALSE(m14.isSingular(variant, &mods14));
}

TEST_CASE("hm of T_{p,r} is L_{-p}^r") {
  for (auto [p, r] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
    ModuleVector t = buildTpr(r, atypicalModule(p, r));
    Partition expected(static_cast<size_t>(r), p);
    CHECK(t.highestTerm() == bmstest::mono({}, {}, expected));
    CHECK(t.coeff(t.highestTerm()) == Scalar(1L));
  }
}

TEST_CASE("subsingular space: dimension 1 exactly on the locus") {
  // p=2, level 2
  VermaModule onLocus = atypicalModule(2, 1);
  QuotientContext ctxOn(onLocus);
  CHECK(subsingularSpace(4, onLocus, ctxOn).dim() == 1);

  HighestWeight off = HighestWeight::symbolic();
  off.hL = hPr(2, 1) + Scalar(1L);
  VermaModule offLocus = VermaModule::atLevelP(2, AlgebraMode::Full, off);
  QuotientContext ctxOff(offLocus);
  CHECK(subsingularSpace(4, offLocus, ctxOff).dim() == 0);

  // p=1: the only subsingular level for r=1 is 1; halves are empty
  VermaModule m1 = atypicalModule(1, 1);
  QuotientContext ctx1(m1);
  CHECK(subsingularSpace(1, m1, ctx1).dim() == 0);
  CHECK(subsingularSpace(2, m1, ctx1).dim() == 1);
  CHECK(subsingularSpace(3, m1, ctx1).dim() == 0);
}

TEST_CASE("build errors off the locus") {
  HighestWeight w = HighestWeight::symbolic();  // generic hL
  VermaModule m = VermaModule::atLevelP(2, AlgebraMode::Full, w);
  CHECK_THROWS_AS(buildT(m), std::invalid_argument);
  CHECK_THROWS_AS(buildTpr(2, m), std::invalid_argument);
}

TEST_CASE("W22 variants") {
  VermaModule m = atypicalModule(2, 1, AlgebraMode::W22);
  ModuleVector t = buildT(m);
  CHECK(m.stats(t).ellQ == 0);
  QuotientContext ctx(m);
  LevelComponents mods = ctx.componentsUpTo(4);
  CHECK(m.isSingular(t, &mods));
  // off-locus W22 fails the precondition
  HighestWeight w = HighestWeight::symbolic();
  w.hL = hPr(2, 1);  // full-algebra locus differs from the W22 one
  VermaModule bad = VermaModule::atLevelP(2, AlgebraMode::W22, w);
  CHECK_THROWS_AS(buildT(bad), std::invalid_argument);
}

TEST_CASE("composition checks for small (p, r)") {
  for (auto [p, r] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
    CompositionReport rep = compositionChecks(p, r, AlgebraMode::Full);
    for (const auto& item : rep.items) {
      INFO(item.name);
      CHECK(item.passed);
    }
  }
}
