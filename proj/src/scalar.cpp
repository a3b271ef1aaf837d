#include "bms/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace bms {

Scalar::Scalar(long v) : num_(v), den_(1L) {}

Scalar::Scalar(const mpq_class& v) : num_(), den_(1L) {
  num_ = Poly(v);
  normalize();
}

Scalar::Scalar(const Poly& p) : num_(p), den_(1L) { normalize(); }

Scalar Scalar::variable(Var v) { return Scalar(Poly::variable(v)); }

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
  if (den.isZero()) throw std::domain_error("Scalar: zero denominator");
  Scalar s;
  s.num_ = num;
  s.den_ = den;
  s.normalize();
  return s;
}

Scalar Scalar::rational(long num, long den) {
  return Scalar(mpq_class(num, den));
}

mpq_class Scalar::asRational() const {
  if (!isRational()) throw std::domain_error("Scalar::asRational: not a rational constant");
  if (num_.isZero()) return mpq_class(0);
  return num_.constantTerm() / den_.constantTerm();
}

void Scalar::normalize() {
  if (num_.isZero()) {
    den_ = Poly(1L);
    return;
  }
  // Scale both to integer coefficients with joint content 1.
  mpz_class l1 = num_.coeffDenominatorLcm();
  mpz_class l2 = den_.coeffDenominatorLcm();
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), l1.get_mpz_t(), l2.get_mpz_t());
  num_ = num_ * mpq_class(l);
  den_ = den_ * mpq_class(l);
  mpz_class c1 = num_.integerContent();
  mpz_class c2 = den_.integerContent();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
  if (g != 1) {
    mpq_class inv(mpz_class(1), g);
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
  Poly pg = polyGcd(num_, den_);
  if (!pg.isOne()) {
    num_ = divideExact(num_, pg);
    den_ = divideExact(den_, pg);
  }
  if (den_.leadingCoeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (isZero()) return o;
  if (o.isZero()) return *this;
  Scalar r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
  } else {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
  }
  r.normalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (isZero() || o.isZero()) return Scalar();
  Scalar r;
  r.num_ = num_ * o.num_;
  r.den_ = den_ * o.den_;
  r.normalize();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.isZero()) throw std::domain_error("Scalar: division by zero");
  if (isZero()) return Scalar();
  Scalar r;
  r.num_ = num_ * o.den_;
  r.den_ = den_ * o.num_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }
Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this / o; }

Scalar Scalar::inverse() const {
  if (isZero()) throw std::domain_error("Scalar: inverse of zero");
  return Scalar(1L) / *this;
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r(1L);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

bool Scalar::operator<(const Scalar& o) const {
  // stable order via canonical strings; used only for containers
  return str() < o.str();
}

Scalar Scalar::specialize(const std::map<Var, mpq_class>& assignment) const {
  Poly n = num_.substitute(assignment);
  Poly d = den_.substitute(assignment);
  if (d.isZero()) {
    std::ostringstream os;
    os << "Scalar::specialize: denominator vanishes under {";
    bool first = true;
    for (const auto& [v, val] : assignment) {
      if (!first) os << ", ";
      os << kVarNames[static_cast<int>(v)] << "=" << val;
      first = false;
    }
    os << "}";
    throw std::domain_error(os.str());
  }
  return Scalar::fraction(n, d);
}

Scalar operator*(const mpq_class& c, const Scalar& s) { return Scalar(c) * s; }

std::string polyToString(const Poly& p) {
  if (p.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ex, c] : p.terms()) {
    mpq_class coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool hasVars = !(ex == Expo{});
    if (!hasVars || coeff != 1) {
      os << coeff;
      if (hasVars) os << "*";
    }
    bool firstVar = true;
    for (int i = 0; i < kNumVars; ++i) {
      if (ex.e[i] == 0) continue;
      if (!firstVar) os << "*";
      firstVar = false;
      os << kVarNames[i];
      if (ex.e[i] > 1) os << "^" << ex.e[i];
    }
  }
  return os.str();
}

std::string Scalar::str() const {
  if (den_.isOne()) return polyToString(num_);
  bool negative = num_.leadingCoeff() < 0;
  Poly n = negative ? -num_ : num_;
  std::string out = negative ? "-" : "";
  if (n.termCount() > 1)
    out += "(" + polyToString(n) + ")";
  else
    out += polyToString(n);
  out += "/";
  bool denParens = den_.termCount() > 1;
  if (!denParens) {
    // a single term like 2*cM or cL*cM still needs parens after '/'
    const auto& [ex, c] = *den_.terms().begin();
    int varCount = 0;
    for (int i = 0; i < kNumVars; ++i)
      if (ex.e[i] > 0) ++varCount;
    if (c != 1 && varCount > 0) denParens = true;
    if (varCount > 1) denParens = true;
  }
  out += denParens ? "(" + polyToString(den_) + ")" : polyToString(den_);
  return out;
}

}  // namespace bms
