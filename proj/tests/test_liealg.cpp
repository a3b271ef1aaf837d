#include "doctest.h"
#include "helpers.hpp"

#include "bms/liealg.hpp"

using namespace bms;

namespace {

AlgebraElement elem(std::initializer_list<std::pair<Generator, const char*>> terms) {
  AlgebraElement e;
  for (const auto& [g, c] : terms) e.add(g, bmstest::sc(c));
  return e;
}

}  // namespace

TEST_CASE("bracket examples") {
  CHECK(bracket(Generator::L(1), Generator::L(-1)).terms ==
        elem({{Generator::L(0), "2"}}).terms);
  CHECK(bracket(Generator::QRaise(1), Generator::QLower(1)).terms ==
        elem({{Generator::M(0), "2"}}).terms);
  CHECK(bracket(Generator::L(2), Generator::M(-2)).terms ==
        elem({{Generator::M(0), "4"}, {Generator::centralM(), "1/2"}}).terms);
  CHECK(bracket(Generator::M(3), Generator::QLower(1)).isZero());
  // central Q-Q term: [Q_{3/2}, Q_{-3/2}] = 2 M_0 + (1/3)(9/4 - 1/4) cM
  CHECK(bracket(Generator::QRaise(2), Generator::QLower(2)).terms ==
        elem({{Generator::M(0), "2"}, {Generator::centralM(), "2/3"}}).terms);
}

TEST_CASE("degrees and parities") {
  CHECK(Generator::QLower(2).degree2() == -3);  // Q_{-3/2}
  CHECK(Generator::M(5).degree2() == 10);
  CHECK(Generator::QRaise(1).isOdd());
  CHECK_FALSE(Generator::L(-4).isOdd());
  CHECK(Generator::centralL().degree2() == 0);
}

TEST_CASE("super-antisymmetry and grading over all small modes") {
  for (int a2 = -12; a2 <= 12; ++a2) {
    for (int b2 = -12; b2 <= 12; ++b2) {
      std::vector<Generator> xs, ys;
      if (a2 % 2 == 0) {
        xs.push_back(Generator{GenKind::L, a2});
        xs.push_back(Generator{GenKind::M, a2});
      } else {
        xs.push_back(Generator{GenKind::Q, a2});
      }
      if (b2 % 2 == 0) {
        ys.push_back(Generator{GenKind::L, b2});
        ys.push_back(Generator{GenKind::M, b2});
      } else {
        ys.push_back(Generator{GenKind::Q, b2});
      }
      for (const auto& x : xs)
        for (const auto& y : ys) {
          AlgebraElement lhs = bracket(x, y);
          AlgebraElement rhs = bracket(y, x);
          Scalar sign = (x.isOdd() && y.isOdd()) ? Scalar(1L) : Scalar(-1L);
          AlgebraElement scaled;
          for (const auto& [g, c] : rhs.terms) scaled.add(g, sign * c);
          CHECK(lhs.terms == scaled.terms);
          for (const auto& [g, c] : lhs.terms)
            if (!g.isCentral()) CHECK(g.degree2() == x.degree2() + y.degree2());
        }
    }
  }
}

TEST_CASE("W22 mode removes Q") {
  CHECK(inAlgebra(Generator::L(3), AlgebraMode::W22));
  CHECK(inAlgebra(Generator::M(-1), AlgebraMode::W22));
  CHECK_FALSE(inAlgebra(Generator::QLower(1), AlgebraMode::W22));
  CHECK(inAlgebra(Generator::QLower(1), AlgebraMode::Full));
}

TEST_CASE("generator text form") {
  CHECK(Generator::L(-3).str() == "L[-3]");
  CHECK(Generator::M(2).str() == "M[2]");
  CHECK(Generator::QLower(1).str() == "Q[-1/2]");
  CHECK(Generator::centralL().str() == "cL");
}
