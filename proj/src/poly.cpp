#include "bms/poly.hpp"

#include <stdexcept>
#include <vector>

namespace bms {

const std::array<const char*, kNumVars> kVarNames = {"cL", "cM", "hL", "hM"};

bool Expo::divides(const Expo& other) const {
  for (int i = 0; i < kNumVars; ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Expo Expo::plus(const Expo& other) const {
  Expo r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + other.e[i];
  return r;
}

Expo Expo::minus(const Expo& other) const {
  Expo r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - other.e[i];
  return r;
}

bool ExpoGrlexGreater::operator()(const Expo& a, const Expo& b) const {
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta > tb;
  for (int i = 0; i < kNumVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

Poly::Poly(long v) {
  if (v != 0) terms_[Expo{}] = mpq_class(v);
}

Poly::Poly(const mpq_class& v) {
  if (v != 0) terms_[Expo{}] = v;
}

Poly Poly::variable(Var v) {
  Poly p;
  Expo ex;
  ex.e[static_cast<int>(v)] = 1;
  p.terms_[ex] = 1;
  return p;
}

Poly Poly::term(const mpq_class& c, const Expo& ex) {
  Poly p;
  if (c != 0) p.terms_[ex] = c;
  return p;
}

bool Poly::isOne() const {
  return terms_.size() == 1 && terms_.begin()->first == Expo{} && terms_.begin()->second == 1;
}

const Expo& Poly::leadingExpo() const {
  if (terms_.empty()) throw std::domain_error("leadingExpo of zero polynomial");
  return terms_.begin()->first;
}

const mpq_class& Poly::leadingCoeff() const {
  if (terms_.empty()) throw std::domain_error("leadingCoeff of zero polynomial");
  return terms_.begin()->second;
}

mpq_class Poly::constantTerm() const {
  auto it = terms_.find(Expo{});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int Poly::degreeIn(Var v) const {
  int d = 0;
  for (const auto& [ex, c] : terms_) d = std::max(d, ex.e[static_cast<int>(v)]);
  return d;
}

int Poly::totalDegree() const {
  int d = 0;
  for (const auto& [ex, c] : terms_) d = std::max(d, ex.total());
  return d;
}

void Poly::addTerm(const Expo& ex, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms_.find(ex);
  if (it == terms_.end()) {
    terms_[ex] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [ex, c] : terms_) r.terms_[ex] = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [ex, c] : o.terms_) addTerm(ex, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [ex, c] : o.terms_) addTerm(ex, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.addTerm(ea.plus(eb), ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator*(const mpq_class& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [ex, cc] : terms_) r.terms_[ex] = cc * c;
  return r;
}

Poly operator*(const mpq_class& c, const Poly& p) { return p * c; }

Poly Poly::pow(int k) const {
  if (k < 0) throw std::domain_error("Poly::pow: negative exponent");
  Poly r(1L);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    base = (k >>= 1) ? base * base : base;
  }
  return r;
}

Poly Poly::substitute(const std::map<Var, mpq_class>& assignment) const {
  Poly r;
  for (const auto& [ex, c] : terms_) {
    mpq_class coeff = c;
    Expo rest = ex;
    for (const auto& [v, val] : assignment) {
      int idx = static_cast<int>(v);
      for (int k = 0; k < ex.e[idx]; ++k) coeff *= val;
      rest.e[idx] = 0;
    }
    r.addTerm(rest, coeff);
  }
  return r;
}

bool Poly::hasIntegerCoeffs() const {
  for (const auto& [ex, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

mpz_class Poly::integerContent() const {
  if (terms_.empty()) throw std::domain_error("content of zero polynomial");
  mpz_class g = 0;
  for (const auto& [ex, c] : terms_) {
    if (c.get_den() != 1) throw std::domain_error("integerContent: non-integer coefficient");
    mpz_class num = c.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  return g;
}

mpz_class Poly::coeffDenominatorLcm() const {
  mpz_class l = 1;
  for (const auto& [ex, c] : terms_) {
    mpz_class den = c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  return l;
}

Poly divideExact(const Poly& a, const Poly& b) {
  if (b.isZero()) throw std::domain_error("divideExact: division by zero polynomial");
  Poly rem = a, q;
  while (!rem.isZero()) {
    const Expo& la = rem.leadingExpo();
    const Expo& lb = b.leadingExpo();
    if (!lb.divides(la)) throw std::domain_error("divideExact: not divisible");
    Expo qe = la.minus(lb);
    mpq_class qc = rem.leadingCoeff() / b.leadingCoeff();
    Poly t = Poly::term(qc, qe);
    q += t;
    rem -= t * b;
  }
  return q;
}

namespace {

// Integer-primitive polynomial with positive leading coefficient.
Poly makePrimitive(const Poly& p) {
  if (p.isZero()) return p;
  mpz_class l = p.coeffDenominatorLcm();
  Poly q = p * mpq_class(l);
  mpz_class g = q.integerContent();
  Poly r = q * mpq_class(mpz_class(1), g);
  if (r.leadingCoeff() < 0) r = -r;
  return r;
}

// View as univariate in v: coefficient polynomials by degree.
std::vector<Poly> univariateView(const Poly& p, Var v) {
  int idx = static_cast<int>(v);
  std::vector<Poly> coeffs(p.degreeIn(v) + 1);
  for (const auto& [ex, c] : p.terms()) {
    Expo rest = ex;
    int d = rest.e[idx];
    rest.e[idx] = 0;
    coeffs[d].addTerm(rest, c);
  }
  return coeffs;
}

Poly recompose(const std::vector<Poly>& coeffs, Var v) {
  Poly r;
  for (size_t d = 0; d < coeffs.size(); ++d) {
    Expo ex;
    ex.e[static_cast<int>(v)] = static_cast<int>(d);
    r += coeffs[d] * Poly::term(1, ex);
  }
  return r;
}

int degIn(const std::vector<Poly>& u) {
  for (int d = static_cast<int>(u.size()) - 1; d >= 0; --d)
    if (!u[d].isZero()) return d;
  return -1;
}

Poly gcdPrimitive(const Poly& a, const Poly& b);

Poly gcdMany(const std::vector<Poly>& ps) {
  Poly g;
  for (const Poly& p : ps) {
    if (p.isZero()) continue;
    Poly pp = makePrimitive(p);
    g = g.isZero() ? pp : gcdPrimitive(g, pp);
    if (g.isOne()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in variable v: lc(b)^(da-db+1) * a mod b.
std::vector<Poly> prem(std::vector<Poly> a, const std::vector<Poly>& b, Var v) {
  int da = degIn(a), db = degIn(b);
  const Poly& lb = b[db];
  int e = da - db + 1;
  while (true) {
    int d = degIn(a);
    if (d < db) break;
    Poly la = a[d];
    // a = lb*a - la * x^(d-db) * b
    std::vector<Poly> next(std::max<size_t>(a.size(), d + 1));
    for (int i = 0; i <= d; ++i)
      if (!a[i].isZero()) next[i] = a[i] * lb;
    for (int i = 0; i <= db; ++i)
      if (!b[i].isZero()) next[i + d - db] -= la * b[i];
    a = std::move(next);
    --e;
  }
  if (e > 0) {
    Poly f = lb.pow(e);
    for (Poly& c : a) c *= f;
  }
  return a;
}

// Subresultant PRS gcd of primitive integer polynomials.
Poly gcdPrimitive(const Poly& a, const Poly& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  Var mainVar = Var::cL;
  bool found = false;
  for (int i = 0; i < kNumVars && !found; ++i) {
    Var v = static_cast<Var>(i);
    if (a.degreeIn(v) > 0 || b.degreeIn(v) > 0) {
      mainVar = v;
      found = true;
    }
  }
  if (!found) return Poly(1L);  // both constants, primitive => units

  std::vector<Poly> ua = univariateView(a, mainVar);
  std::vector<Poly> ub = univariateView(b, mainVar);
  Poly contA = gcdMany(ua), contB = gcdMany(ub);
  Poly contG = gcdPrimitive(contA, contB);
  for (Poly& c : ua) c = c.isZero() ? c : divideExact(c, contA);
  for (Poly& c : ub) c = c.isZero() ? c : divideExact(c, contB);

  std::vector<Poly> F = ua, G = ub;
  if (degIn(F) < degIn(G)) std::swap(F, G);
  Poly g(1L), h(1L);
  while (true) {
    int dF = degIn(F), dG = degIn(G);
    if (dG < 0) {
      // gcd = pp(F): strip the polynomial content of the coefficients, then
      // the integer content
      Poly contF = gcdMany(F);
      std::vector<Poly> ppF = F;
      if (!contF.isOne())
        for (Poly& c : ppF)
          if (!c.isZero()) c = divideExact(c, contF);
      Poly res = makePrimitive(recompose(ppF, mainVar));
      return contG * res;
    }
    if (dG == 0) return contG;  // coprime primitive parts
    int d = dF - dG;
    std::vector<Poly> R = prem(F, G, mainVar);
    Poly divisor = g * h.pow(d);
    for (Poly& c : R)
      if (!c.isZero()) c = divideExact(c, divisor);
    F = std::move(G);
    G = std::move(R);
    g = F[degIn(F)];
    h = (d == 0) ? h : divideExact(g.pow(d), h.pow(d - 1));
  }
}

}  // namespace

Poly polyGcd(const Poly& a, const Poly& b) {
  if (a.isZero() && b.isZero()) return Poly();
  if (a.isZero()) return makePrimitive(b);
  if (b.isZero()) return makePrimitive(a);
  Poly pa = makePrimitive(a);
  Poly pb = makePrimitive(b);
  Poly g = gcdPrimitive(pa, pb);
  return makePrimitive(g);
}

}  // namespace bms
