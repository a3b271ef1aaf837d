#include "bms/liealg.hpp"

#include <sstream>

namespace bms {

std::string Generator::str() const {
  switch (kind) {
    case GenKind::CL:
      return "cL";
    case GenKind::CM:
      return "cM";
    case GenKind::L:
    case GenKind::M: {
      std::ostringstream os;
      os << (kind == GenKind::L ? "L[" : "M[") << mode2 / 2 << "]";
      return os.str();
    }
    case GenKind::Q: {
      std::ostringstream os;
      os << "Q[" << mode2 << "/2]";
      return os.str();
    }
  }
  return "?";
}

void AlgebraElement::add(const Generator& g, const Scalar& c) {
  if (c.isZero()) return;
  auto it = terms.find(g);
  if (it == terms.end()) {
    terms[g] = c;
  } else {
    it->second += c;
    if (it->second.isZero()) terms.erase(it);
  }
}

std::vector<BracketTerm> bracketTerms(const Generator& x, const Generator& y) {
  std::vector<BracketTerm> out;
  auto push = [&out](Generator g, mpq_class c) {
    if (c != 0) out.push_back({g, std::move(c)});
  };
  if (x.isCentral() || y.isCentral()) return out;

  const int xm2 = x.mode2, ym2 = y.mode2;
  if (x.kind == GenKind::L && y.kind == GenKind::L) {
    int m = xm2 / 2, n = ym2 / 2;
    push(Generator::L(m + n), m - n);
    if (m + n == 0) push(Generator::centralL(), mpq_class(mpz_class(m) * m * m - m, 12));
    return out;
  }
  if (x.kind == GenKind::L && y.kind == GenKind::M) {
    int m = xm2 / 2, n = ym2 / 2;
    push(Generator::M(m + n), m - n);
    if (m + n == 0) push(Generator::centralM(), mpq_class(mpz_class(m) * m * m - m, 12));
    return out;
  }
  if (x.kind == GenKind::M && y.kind == GenKind::L) {
    auto r = bracketTerms(y, x);
    for (auto& t : r) t.coeff = -t.coeff;
    return r;
  }
  if (x.kind == GenKind::Q && y.kind == GenKind::Q) {
    // anticommutator: [Q_r, Q_s] = 2 M_{r+s} + (1/3)(r^2 - 1/4) delta_{r+s,0} cM
    push(Generator::M((xm2 + ym2) / 2), 2);
    if (xm2 + ym2 == 0) push(Generator::centralM(), mpq_class(mpz_class(xm2) * xm2 - 1, 12));
    return out;
  }
  if (x.kind == GenKind::L && y.kind == GenKind::Q) {
    // [L_m, Q_r] = (m/2 - r) Q_{m+r}
    push(Generator::Q2(xm2 + ym2), mpq_class(xm2 - 2 * ym2, 4));
    return out;
  }
  if (x.kind == GenKind::Q && y.kind == GenKind::L) {
    auto r = bracketTerms(y, x);
    for (auto& t : r) t.coeff = -t.coeff;
    return r;
  }
  // [M,M] = [M,Q] = [Q,M] = 0
  return out;
}

AlgebraElement bracket(const Generator& x, const Generator& y) {
  AlgebraElement e;
  for (const auto& t : bracketTerms(x, y)) e.add(t.gen, Scalar(t.coeff));
  return e;
}

bool inAlgebra(const Generator& g, AlgebraMode mode) {
  if (mode == AlgebraMode::W22 && g.kind == GenKind::Q) return false;
  return true;
}

}  // namespace bms
