#include "bms/pbw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bms {

int weight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

int partitionCompare(const Partition& a, const Partition& b) {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb ? -1 : 1;
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

namespace {

void partitionsRec(int n, int maxPart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, maxPart); k >= 1; --k) {
    cur.push_back(k);
    partitionsRec(n - k, k, cur, out);
    cur.pop_back();
  }
}

void strictPartitionsRec(int n, int maxPart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, maxPart); k >= 1; --k) {
    cur.push_back(k);
    strictPartitionsRec(n - k, k - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitionsOf(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  partitionsRec(n, n == 0 ? 1 : n, cur, out);
  return out;
}

std::vector<Partition> strictPartitionsOf(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  strictPartitionsRec(n, n == 0 ? 1 : n, cur, out);
  return out;
}

int PBWMonomial::level2() const {
  int l2 = 2 * weight(mPart) + 2 * weight(lPart);
  for (int j : qPart) l2 += 2 * j - 1;
  return l2;
}

std::vector<Generator> PBWMonomial::factors() const {
  std::vector<Generator> fs;
  fs.reserve(length());
  for (int a : mPart) fs.push_back(Generator::M(-a));
  for (int j : qPart) fs.push_back(Generator::QLower(j));
  for (int a : lPart) fs.push_back(Generator::L(-a));
  return fs;
}

std::string PBWMonomial::str() const {
  if (empty()) return "1";
  std::ostringstream os;
  auto emitRun = [&os](const std::string& txt, int count) {
    os << txt;
    if (count > 1) os << "^" << count;
  };
  auto emitBlock = [&](char letter, const Partition& parts, bool half) {
    size_t i = 0;
    while (i < parts.size()) {
      size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      std::ostringstream one;
      if (half)
        one << letter << "[-" << (2 * parts[i] - 1) << "/2]";
      else
        one << letter << "[-" << parts[i] << "]";
      emitRun(one.str(), static_cast<int>(j - i));
      i = j;
    }
  };
  emitBlock('M', mPart, false);
  emitBlock('Q', qPart, true);
  emitBlock('L', lPart, false);
  return os.str();
}

int monomialCompare(const PBWMonomial& x, const PBWMonomial& y) {
  int wx = weight(x.lPart), wy = weight(y.lPart);
  if (wx != wy) return wx < wy ? -1 : 1;
  if (x.lPart.size() != y.lPart.size()) return x.lPart.size() < y.lPart.size() ? -1 : 1;
  if (int c = partitionCompare(x.lPart, y.lPart)) return c;
  if (int c = partitionCompare(x.qPart, y.qPart)) return c;
  return partitionCompare(x.mPart, y.mPart);
}

std::vector<PBWMonomial> levelBasis(int level2, AlgebraMode mode) {
  std::vector<PBWMonomial> out;
  if (level2 < 0) return out;
  // Q block contributes sum(2 mu_i - 1); enumerate strict partitions by weight
  // and bucket them by that contribution.
  std::vector<std::vector<Partition>> strictByContribution(level2 + 1);
  int maxW = level2;
  for (int w = 0; w <= maxW; ++w) {
    for (auto& sp : strictPartitionsOf(w)) {
      int c2 = 2 * w - static_cast<int>(sp.size());
      if (c2 <= level2) strictByContribution[c2].push_back(sp);
    }
  }
  for (int c2 = 0; c2 <= level2; ++c2) {
    const auto& sps = strictByContribution[c2];
    if (sps.empty()) continue;
    if (mode == AlgebraMode::W22 && c2 > 0) continue;
    int rest = level2 - c2;
    if (rest % 2 != 0) continue;
    for (int lw = 0; 2 * lw <= rest; ++lw) {
      int mw = rest / 2 - lw;
      auto lps = partitionsOf(lw);
      auto mps = partitionsOf(mw);
      for (const auto& sp : sps)
        for (const auto& lp : lps)
          for (const auto& mp : mps) out.push_back(PBWMonomial{mp, sp, lp});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PBWMonomial& a, const PBWMonomial& b) { return monomialCompare(a, b) > 0; });
  return out;
}

ModuleVector ModuleVector::monomial(const PBWMonomial& m, Scalar c) {
  ModuleVector v(m.level2());
  v.add(m, c);
  return v;
}

Scalar ModuleVector::coeff(const PBWMonomial& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void ModuleVector::add(const PBWMonomial& m, const Scalar& c) {
  if (c.isZero()) return;
  auto it = coeffs_.find(m);
  if (it == coeffs_.end()) {
    coeffs_[m] = c;
  } else {
    it->second += c;
    if (it->second.isZero()) coeffs_.erase(it);
  }
}

void ModuleVector::addScaled(const ModuleVector& v, const Scalar& c) {
  if (c.isZero()) return;
  for (const auto& [m, cc] : v.coeffs_) add(m, cc * c);
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  ModuleVector r = *this;
  for (const auto& [m, c] : o.coeffs_) r.add(m, c);
  return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  ModuleVector r = *this;
  for (const auto& [m, c] : o.coeffs_) r.add(m, -c);
  return r;
}

ModuleVector ModuleVector::operator*(const Scalar& c) const {
  ModuleVector r(level2_);
  if (c.isZero()) return r;
  for (const auto& [m, cc] : coeffs_) r.coeffs_[m] = cc * c;
  return r;
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector r(level2_);
  for (const auto& [m, c] : coeffs_) r.coeffs_[m] = -c;
  return r;
}

bool ModuleVector::operator==(const ModuleVector& o) const {
  return coeffs_ == o.coeffs_;
}

const PBWMonomial& ModuleVector::highestTerm() const {
  if (coeffs_.empty()) throw std::domain_error("highestTerm of the zero vector");
  return coeffs_.begin()->first;
}

ModuleVector ModuleVector::specialize(const std::map<Var, mpq_class>& assignment) const {
  ModuleVector r(level2_);
  for (const auto& [m, c] : coeffs_) r.add(m, c.specialize(assignment));
  return r;
}

const PBWMonomial& highestTerm(const ModuleVector& v) { return v.highestTerm(); }

ModuleVector qDerivative(int i, const ModuleVector& v) {
  ModuleVector out(v.level2() - (2 * i - 1));
  for (const auto& [m, c] : v.coeffs()) {
    // M and L factors are even and killed by the derivative; only the Q block
    // matters. Sign (-1)^t for the t odd factors passed.
    for (size_t t = 0; t < m.qPart.size(); ++t) {
      if (m.qPart[t] == i) {
        PBWMonomial r = m;
        r.qPart.erase(r.qPart.begin() + static_cast<long>(t));
        Scalar s = (t % 2 == 0) ? c : -c;
        out.add(r, s);
        break;  // strict partition: at most one match
      }
    }
  }
  return out;
}

}  // namespace bms
