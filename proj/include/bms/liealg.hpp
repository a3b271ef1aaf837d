#pragma once

#include "bms/scalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace bms {

enum class AlgebraMode { Full, W22 };

enum class GenKind : int { L = 0, M = 1, Q = 2, CL = 3, CM = 4 };

// One basis element of the algebra. Modes are stored doubled so that the
// half-integer Q modes stay exact: L_n / M_n have mode2 = 2n, Q_r has
// mode2 = 2r (odd), central elements have mode2 = 0.
struct Generator {
  GenKind kind;
  int mode2 = 0;

  static Generator L(int n) { return {GenKind::L, 2 * n}; }
  static Generator M(int n) { return {GenKind::M, 2 * n}; }
  static Generator Q2(int mode2) { return {GenKind::Q, mode2}; }
  // Q_{-j+1/2} for j >= 1 (the PBW letters), and Q_{j-1/2} for raising.
  static Generator QLower(int j) { return {GenKind::Q, -(2 * j - 1)}; }
  static Generator QRaise(int j) { return {GenKind::Q, 2 * j - 1}; }
  static Generator centralL() { return {GenKind::CL, 0}; }
  static Generator centralM() { return {GenKind::CM, 0}; }

  bool isCentral() const { return kind == GenKind::CL || kind == GenKind::CM; }
  bool isOdd() const { return kind == GenKind::Q; }
  int degree2() const { return isCentral() ? 0 : mode2; }

  auto operator<=>(const Generator&) const = default;

  std::string str() const;  // L[-3], M[2], Q[-1/2], cL, cM
};

// Linear combination of generators over the scalar field; the value type of
// the super-bracket.
struct AlgebraElement {
  std::map<Generator, Scalar> terms;

  bool isZero() const { return terms.empty(); }
  void add(const Generator& g, const Scalar& c);
};

// Bracket term with rational coefficient, the form the straightening loop
// consumes.
struct BracketTerm {
  Generator gen;
  mpq_class coeff;
};

// Super-bracket [x, y] of Def-level generators (anticommutator when both odd).
std::vector<BracketTerm> bracketTerms(const Generator& x, const Generator& y);
AlgebraElement bracket(const Generator& x, const Generator& y);

inline int generatorDegree2(const Generator& g) { return g.degree2(); }
inline bool generatorParityOdd(const Generator& g) { return g.isOdd(); }

// True when the generator exists in the given mode (W22 drops the Q family).
bool inAlgebra(const Generator& g, AlgebraMode mode);

}  // namespace bms
