#include "doctest.h"
#include "helpers.hpp"

#include "bms/pbw.hpp"

using namespace bms;
using bmstest::mono;
using bmstest::vec;

TEST_CASE("natural partition ordering") {
  CHECK(partitionCompare({2}, {1, 1}) > 0);
  CHECK(partitionCompare({3, 1}, {2, 2}) > 0);
  CHECK(partitionCompare({1}, {1}) == 0);
  CHECK(partitionCompare({}, {1}) < 0);
}

TEST_CASE("monomial ordering follows the five rules") {
  // rule (i): |nu| decides
  CHECK(monomialCompare(mono({}, {}, {2}), mono({1}, {2}, {})) > 0);
  // inside U(M_-): natural order on lambda
  CHECK(monomialCompare(mono({2}, {}, {}), mono({1, 1}, {}, {})) > 0);
  // rule (i) again with Q factors
  CHECK(monomialCompare(mono({}, {1}, {1}), mono({}, {2}, {})) > 0);
  // rule (ii): longer l(nu) is higher at equal weight
  CHECK(monomialCompare(mono({}, {}, {1, 1}), mono({}, {}, {2})) > 0);
  // rule (iv): mu decides when nu agrees
  CHECK(monomialCompare(mono({}, {2}, {1}), mono({1}, {1}, {1})) > 0);
}

TEST_CASE("level bases") {
  auto b1 = levelBasis(2, AlgebraMode::Full);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == mono({}, {}, {1}));
  CHECK(b1[1] == mono({1}, {}, {}));

  auto b32 = levelBasis(3, AlgebraMode::Full);
  REQUIRE(b32.size() == 3);
  CHECK(b32[0] == mono({}, {1}, {1}));
  CHECK(b32[1] == mono({}, {2}, {}));
  CHECK(b32[2] == mono({1}, {1}, {}));

  CHECK(levelBasis(4, AlgebraMode::Full).size() == 6);
  CHECK(levelBasis(4, AlgebraMode::W22).size() == 5);  // drop Q_{-3/2}Q_{-1/2}
  CHECK(levelBasis(3, AlgebraMode::W22).empty());
  CHECK(levelBasis(0, AlgebraMode::Full).size() == 1);
}

TEST_CASE("ordering of the paper's M-only list at weight p") {
  // M_{-p}, M_{-(p-1)}M_{-1}, M_{-(p-2)}M_{-2}, M_{-(p-2)}M_{-1}^2, ..., M_{-1}^p
  auto parts = partitionsOf(4);
  std::sort(parts.begin(), parts.end(),
            [](const Partition& a, const Partition& b) { return partitionCompare(a, b) > 0; });
  REQUIRE(parts.size() == 5);
  CHECK(parts[0] == Partition{4});
  CHECK(parts[1] == Partition{3, 1});
  CHECK(parts[2] == Partition{2, 2});
  CHECK(parts[3] == Partition{2, 1, 1});
  CHECK(parts[4] == Partition{1, 1, 1, 1});
}

TEST_CASE("highest term") {
  ModuleVector v = vec(4, {{"1", {}, {}, {1, 1}}, {"6/cM", {2}, {}, {}}});
  CHECK(highestTerm(v) == mono({}, {}, {1, 1}));
  ModuleVector w = vec(4, {{"1", {2}, {}, {}}, {"6/cM", {1, 1}, {}, {}}});
  CHECK(highestTerm(w) == mono({2}, {}, {}));
  ModuleVector q = vec(1, {{"5", {}, {1}, {}}});
  CHECK(highestTerm(q) == mono({}, {1}, {}));
  CHECK_THROWS_AS(highestTerm(ModuleVector(2)), std::domain_error);
}

TEST_CASE("formal Q-derivative") {
  CHECK(qDerivative(1, vec(1, {{"1", {}, {1}, {}}})) == vec(0, {{"1", {}, {}, {}}}));
  CHECK(qDerivative(1, vec(4, {{"1", {}, {2, 1}, {}}})) == vec(3, {{"-1", {}, {2}, {}}}));
  CHECK(qDerivative(1, vec(2, {{"1", {1}, {}, {}}})).isZero());
  CHECK(qDerivative(2, vec(4, {{"1", {}, {2, 1}, {}}})) == vec(1, {{"1", {}, {1}, {}}}));
}

TEST_CASE("strict total order across every pair at low levels") {
  for (int l2 = 1; l2 <= 10; ++l2) {
    auto basis = levelBasis(l2, AlgebraMode::Full);
    for (size_t i = 0; i < basis.size(); ++i) {
      for (size_t j = 0; j < basis.size(); ++j) {
        int cij = monomialCompare(basis[i], basis[j]);
        CHECK(((i == j) == (cij == 0)));
        CHECK(cij == -monomialCompare(basis[j], basis[i]));
      }
      // sorted descending by construction
      if (i + 1 < basis.size()) CHECK(monomialCompare(basis[i], basis[i + 1]) > 0);
    }
  }
}

TEST_CASE("monomial text form") {
  CHECK(mono({2, 1}, {2}, {1}).str() == "M[-2]M[-1]Q[-3/2]L[-1]");
  CHECK(mono({1, 1}, {}, {}).str() == "M[-1]^2");
  CHECK(mono({}, {}, {}).str() == "1");
}
