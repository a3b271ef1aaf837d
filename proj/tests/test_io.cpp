#include "doctest.h"
#include "helpers.hpp"

#include "bms/io.hpp"
#include "bms/singular.hpp"
#include "bms/subsingular.hpp"

using namespace bms;
using bmstest::vec;

TEST_CASE("vector JSON round-trips") {
  VermaModule m2 = VermaModule::atLevelP(2, AlgebraMode::Full);
  for (const ModuleVector& v : {buildS(m2), buildR(VermaModule::atLevelP(3, AlgebraMode::Full)),
                                vec(3, {{"-cL/2 + 1/3", {1}, {1}, {}}})}) {
    nlohmann::json j = toJson(v);
    ModuleVector back = vectorFromJson(j);
    CHECK(back == v);
    CHECK(back.level2() == v.level2());
  }
}

TEST_CASE("series JSON round-trips") {
  QSeries s = irreducibleCharacter(2, 1, 8, hPr(2, 1));
  QSeries back = seriesFromJson(toJson(s));
  CHECK(back.coeffs == s.coeffs);
  CHECK(back.offset == s.offset);
  CHECK(back.cutoff2 == s.cutoff2);
}

TEST_CASE("vector text rendering") {
  ModuleVector s2 = vec(4, {{"1", {2}, {}, {}}, {"6/cM", {1, 1}, {}, {}}});
  CHECK(toText(s2) == "M[-2] + (6/cM) M[-1]^2");
  ModuleVector t12 = vec(4, {{"1", {}, {}, {1, 1}}, {"6/cM", {2}, {}, {}}});
  CHECK(toText(t12) == "L[-1]^2 + (6/cM) M[-2]");
  ModuleVector withQ = vec(4, {{"-6/cM", {}, {2, 1}, {}}});
  CHECK(toText(withQ) == "-(6/cM) Q[-3/2]Q[-1/2]");
  CHECK(toText(ModuleVector(4)) == "0");
}

TEST_CASE("series text rendering") {
  QSeries s = vermaCharacter(4, Scalar::variable(Var::hL));
  std::string text = toText(s);
  CHECK(text.find("q^{hL}") != std::string::npos);
  CHECK(text.find("q^{3/2}") != std::string::npos);
  CHECK(text.find("2 q") != std::string::npos);
}

TEST_CASE("rational parsing for CLI flags") {
  CHECK(parseRational("3/4") == mpq_class(3, 4));
  CHECK(parseRational("-2") == mpq_class(-2));
  CHECK_THROWS(parseRational("cL"));
}
