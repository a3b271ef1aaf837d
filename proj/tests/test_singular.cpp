#include "doctest.h"
#include "helpers.hpp"

#include "bms/singular.hpp"

using namespace bms;
using bmstest::sc;
using bmstest::vec;

TEST_CASE("phi and the irreducibility test") {
  HighestWeight w = HighestWeight::symbolic();
  CHECK(phi(1, w) == sc("2*hM"));
  HighestWeight w2 = HighestWeight::symbolic();
  w2.hM = sc("-cM/8");
  CHECK(phi(2, w2).isZero());
  HighestWeight w3 = HighestWeight::symbolic();
  w3.hM = sc("-cM/3");
  CHECK(phi(3, w3).isZero());

  CHECK(isIrreducible(w2, 6).firstVanishingP == 2);
  HighestWeight degen = HighestWeight::symbolic();
  degen.hM = Scalar(1L);
  degen.cM = Scalar(0L);
  CHECK(isIrreducible(degen, 10).irreducibleUpToMax());
  HighestWeight zero = HighestWeight::symbolic();
  zero.hM = Scalar(0L);
  CHECK(isIrreducible(zero, 6).firstVanishingP == 1);
}

TEST_CASE("S examples coefficient-for-coefficient") {
  CHECK(buildS(VermaModule::atLevelP(1, AlgebraMode::Full)) == vec(2, {{"1", {1}, {}, {}}}));
  CHECK(buildS(VermaModule::atLevelP(2, AlgebraMode::Full)) ==
        vec(4, {{"1", {2}, {}, {}}, {"6/cM", {1, 1}, {}, {}}}));
  CHECK(buildS(VermaModule::atLevelP(3, AlgebraMode::Full)) ==
        vec(6, {{"1", {3}, {}, {}}, {"6/cM", {2, 1}, {}, {}}, {"9/cM^2", {1, 1, 1}, {}, {}}}));
}

TEST_CASE("S is annihilated by the whole raising set, p <= 4") {
  for (int p = 1; p <= 4; ++p) {
    VermaModule m = VermaModule::atLevelP(p, AlgebraMode::Full);
    ModuleVector s = buildS(m);
    CHECK(m.stats(s).ellL == 0);
    CHECK(m.stats(s).ellQ == 0);
    CHECK(s.highestTerm() == bmstest::mono({p}, {}, {}));
    for (int i = 1; i <= p; ++i) {
      CHECK(m.act(Generator::L(i), s).isZero());
      CHECK(m.act(Generator::M(i), s).isZero());
      CHECK(m.act(Generator::QRaise(i), s).isZero());
    }
    CHECK(m.isSingular(s));
  }
}

TEST_CASE("S against the kernel route (dual construction)") {
  for (int p = 1; p <= 4; ++p) {
    VermaModule m = VermaModule::atLevelP(p, AlgebraMode::Full);
    // restrict to the U(M_-) block and stack the L_k conditions
    auto partitions = partitionsOf(p);
    std::sort(partitions.begin(), partitions.end(), [](const Partition& a, const Partition& b) {
      return partitionCompare(a, b) > 0;
    });
    std::vector<std::vector<ModuleVector>> images;
    for (const auto& mu : partitions) {
      ModuleVector v = ModuleVector::monomial(PBWMonomial{mu, {}, {}});
      std::vector<ModuleVector> img;
      for (int k = 1; k <= p; ++k) img.push_back(m.act(Generator::L(k), v));
      images.push_back(std::move(img));
    }
    auto combos = kernelCombos(images);
    REQUIRE(combos.size() == 1);
    ModuleVector fromKernel(2 * p);
    for (size_t i = 0; i < combos[0].size(); ++i)
      fromKernel.addScaled(ModuleVector::monomial(PBWMonomial{partitions[i], {}, {}}),
                           combos[0][i]);
    Scalar lead = fromKernel.coeff(bmstest::mono({p}, {}, {}));
    REQUIRE_FALSE(lead.isZero());
    CHECK(fromKernel * lead.inverse() == buildS(m));
  }
}

TEST_CASE("R examples coefficient-for-coefficient") {
  CHECK(buildR(VermaModule::atLevelP(1, AlgebraMode::Full)) == vec(1, {{"1", {}, {1}, {}}}));
  CHECK(buildR(VermaModule::atLevelP(3, AlgebraMode::Full)) ==
        vec(3, {{"1", {}, {2}, {}}, {"3/cM", {1}, {1}, {}}}));
  CHECK(buildR(VermaModule::atLevelP(5, AlgebraMode::Full)) ==
        vec(5, {{"1", {}, {3}, {}},
                {"3/(2*cM)", {1}, {2}, {}},
                {"1/cM", {2}, {1}, {}},
                {"3/(2*cM^2)", {1, 1}, {1}, {}}}));
  CHECK_THROWS_AS(buildR(VermaModule::atLevelP(2, AlgebraMode::Full)), std::invalid_argument);
}

TEST_CASE("R is singular for p in {1,3,5}") {
  for (int p : {1, 3, 5}) {
    VermaModule m = VermaModule::atLevelP(p, AlgebraMode::Full);
    CHECK(m.isSingular(buildR(m)));
  }
}

TEST_CASE("R^2 = S") {
  for (int p : {1, 3, 5}) {
    VermaModule m = VermaModule::atLevelP(p, AlgebraMode::Full);
    CHECK(powerVector(SingularOp::R, 2, m) == buildS(m));
  }
}

TEST_CASE("powers are singular") {
  VermaModule m2 = VermaModule::atLevelP(2, AlgebraMode::Full);
  CHECK(powerVector(SingularOp::S, 1, m2) == buildS(m2));
  CHECK(m2.isSingular(powerVector(SingularOp::S, 2, m2)));
  VermaModule m1 = VermaModule::atLevelP(1, AlgebraMode::Full);
  CHECK(m1.isSingular(powerVector(SingularOp::R, 3, m1)));
}

TEST_CASE("singular space classification at p=2, small levels") {
  VermaModule m = VermaModule::atLevelP(2, AlgebraMode::Full);
  SingularReport l1 = singularSpace(2, m);
  CHECK(l1.space.dim() == 0);
  CHECK(l1.matchesClosedForm);
  SingularReport l2 = singularSpace(4, m);
  CHECK(l2.space.dim() == 1);
  CHECK(l2.matchesClosedForm);
  SingularReport half = singularSpace(1, m);
  CHECK(half.space.dim() == 0);
  CHECK(half.matchesClosedForm);
}

TEST_CASE("singular space at p=3 catches R at level 3/2") {
  VermaModule m = VermaModule::atLevelP(3, AlgebraMode::Full);
  SingularReport rep = singularSpace(3, m);
  CHECK(rep.space.dim() == 1);
  CHECK(rep.matchesClosedForm);
  CHECK(rep.space.vectors[0] == buildR(m));
}

TEST_CASE("error paths") {
  VermaModule noCm = VermaModule::atLevelP(2, AlgebraMode::Full)
                         .specialized({{Var::cM, mpq_class(1)}});
  CHECK_NOTHROW(buildS(noCm));
  HighestWeight w = HighestWeight::symbolic();
  w.cM = Scalar(0L);
  w.hM = Scalar(0L);
  VermaModule zeroCm(std::move(w), AlgebraMode::Full, 1);
  CHECK_THROWS_AS(buildS(zeroCm), std::domain_error);
  CHECK_THROWS_AS(powerVector(SingularOp::S, 0, noCm), std::invalid_argument);
}
