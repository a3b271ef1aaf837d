#pragma once

#include "bms/poly.hpp"

#include <map>
#include <string>

namespace bms {

// Element of Q(cL, cM, hL, hM), kept in reduced canonical form:
// num and den have integer coefficients with joint content 1, gcd(num, den) = 1,
// and den's grlex-leading coefficient is positive. Zero is 0/1.
class Scalar {
 public:
  Scalar() : num_(), den_(1L) {}
  Scalar(long v);
  explicit Scalar(const mpq_class& v);
  explicit Scalar(const Poly& p);
  static Scalar variable(Var v);
  static Scalar fraction(const Poly& num, const Poly& den);  // throws on zero den
  static Scalar rational(long num, long den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  bool isRational() const { return num_.isConstant() && den_.isConstant(); }
  mpq_class asRational() const;  // throws unless isRational()

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(int k) const;

  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;  // arbitrary stable order, for containers

  // Partial substitution; throws std::domain_error naming the assignment when
  // the denominator vanishes.
  Scalar specialize(const std::map<Var, mpq_class>& assignment) const;

  std::string str() const;  // canonical text form

 private:
  void normalize();
  Poly num_, den_;
};

Scalar operator*(const mpq_class& c, const Scalar& s);

// Canonical text form of a polynomial (terms in grlex order).
std::string polyToString(const Poly& p);

}  // namespace bms
