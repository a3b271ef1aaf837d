#pragma once

#include "bms/liealg.hpp"

#include <map>
#include <string>
#include <vector>

namespace bms {

// Partitions are non-increasing sequences of positive integers; strict
// partitions are strictly decreasing. The Q entries mu encode Q_{-mu_i+1/2}.
using Partition = std::vector<int>;

int weight(const Partition& p);

// Natural ordering: by weight, then lexicographically on entries.
// Returns <0, 0, >0 like a three-way comparison with a > b positive.
int partitionCompare(const Partition& a, const Partition& b);

std::vector<Partition> partitionsOf(int n);
std::vector<Partition> strictPartitionsOf(int n);

// Normal-form word M_{-lambda} Q_{-mu+1/2} L_{-nu} applied to the highest
// weight vector.
struct PBWMonomial {
  Partition mPart;  // lambda
  Partition qPart;  // mu, strictly decreasing
  Partition lPart;  // nu

  int level2() const;
  int parityOdd() const { return static_cast<int>(qPart.size()) % 2; }
  bool empty() const { return mPart.empty() && qPart.empty() && lPart.empty(); }
  size_t length() const { return mPart.size() + qPart.size() + lPart.size(); }
  std::vector<Generator> factors() const;  // in written order

  bool operator==(const PBWMonomial&) const = default;
  std::string str() const;  // M[-2]M[-1]Q[-3/2]L[-1], repeated factors as ^k
};

// Total ordering "succ": positive when x is higher than y. Compares
// (|nu|, l(nu), nu, mu, lambda); this restricts to the paper ordering on
// each level basis and extends it to a global total order.
int monomialCompare(const PBWMonomial& x, const PBWMonomial& y);

struct SuccGreater {
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const {
    return monomialCompare(a, b) > 0;
  }
};

// All monomials of the given doubled level, sorted descending in succ.
// W22 mode omits every monomial with Q factors.
std::vector<PBWMonomial> levelBasis(int level2, AlgebraMode mode);

// Vector in a fixed graded component of the Verma module (or an element of
// U(g_-) in PBW coordinates when used as an operator).
class ModuleVector {
 public:
  using CoeffMap = std::map<PBWMonomial, Scalar, SuccGreater>;

  ModuleVector() = default;
  explicit ModuleVector(int level2) : level2_(level2) {}
  static ModuleVector monomial(const PBWMonomial& m, Scalar c = Scalar(1L));

  int level2() const { return level2_; }
  bool isZero() const { return coeffs_.empty(); }
  const CoeffMap& coeffs() const { return coeffs_; }
  size_t termCount() const { return coeffs_.size(); }

  Scalar coeff(const PBWMonomial& m) const;
  void add(const PBWMonomial& m, const Scalar& c);
  void addScaled(const ModuleVector& v, const Scalar& c);

  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector operator*(const Scalar& c) const;
  ModuleVector operator-() const;
  bool operator==(const ModuleVector& o) const;

  // succ-maximal monomial of the support; throws on the zero vector
  const PBWMonomial& highestTerm() const;

  ModuleVector specialize(const std::map<Var, mpq_class>& assignment) const;

 private:
  int level2_ = 0;
  CoeffMap coeffs_;
};

const PBWMonomial& highestTerm(const ModuleVector& v);

// Formal partial derivative d/dQ_{-i+1/2} with the super-Leibniz rule.
ModuleVector qDerivative(int i, const ModuleVector& v);

}  // namespace bms
