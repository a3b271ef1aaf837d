#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>

namespace bms {

// Coefficient-field indeterminates, listed in monomial-order precedence.
enum class Var : int { cL = 0, cM = 1, hL = 2, hM = 3 };

inline constexpr int kNumVars = 4;
extern const std::array<const char*, kNumVars> kVarNames;

struct Expo {
  std::array<int, kNumVars> e{0, 0, 0, 0};

  int total() const { return e[0] + e[1] + e[2] + e[3]; }
  bool operator==(const Expo&) const = default;
  bool divides(const Expo& other) const;
  Expo plus(const Expo& other) const;
  Expo minus(const Expo& other) const;
};

// Graded lexicographic order with cL > cM > hL > hM.
struct ExpoGrlexGreater {
  bool operator()(const Expo& a, const Expo& b) const;
};

// Sparse multivariate polynomial in cL, cM, hL, hM over Q.
class Poly {
 public:
  using TermMap = std::map<Expo, mpq_class, ExpoGrlexGreater>;

  Poly() = default;
  Poly(long v);
  explicit Poly(const mpq_class& v);
  static Poly variable(Var v);
  static Poly term(const mpq_class& c, const Expo& ex);

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{}); }
  bool isOne() const;
  const TermMap& terms() const { return terms_; }
  size_t termCount() const { return terms_.size(); }

  // grlex-maximal term; polynomial must be nonzero
  const Expo& leadingExpo() const;
  const mpq_class& leadingCoeff() const;
  mpq_class constantTerm() const;

  int degreeIn(Var v) const;
  int totalDegree() const;

  void addTerm(const Expo& ex, const mpq_class& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator*(const mpq_class& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int k) const;

  // Partial substitution of variables by rationals.
  Poly substitute(const std::map<Var, mpq_class>& assignment) const;

  bool hasIntegerCoeffs() const;
  mpz_class integerContent() const;      // gcd of coefficients; requires integer coeffs, nonzero
  mpz_class coeffDenominatorLcm() const; // lcm of coefficient denominators (1 for zero poly)

 private:
  TermMap terms_;
};

Poly operator*(const mpq_class& c, const Poly& p);

// GCD of polynomials over Q, returned primitive with integer coefficients
// and positive leading coefficient (1 for coprime inputs).
Poly polyGcd(const Poly& a, const Poly& b);

// Exact division; throws std::domain_error when b does not divide a.
Poly divideExact(const Poly& a, const Poly& b);

}  // namespace bms
