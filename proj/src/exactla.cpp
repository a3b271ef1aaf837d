#include "bms/exactla.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bms {

namespace {

void requireSameLevel(const std::vector<ModuleVector>& vs) {
  int level2 = 0;
  bool seen = false;
  for (const auto& v : vs) {
    if (v.isZero()) continue;
    if (!seen) {
      level2 = v.level2();
      seen = true;
    } else if (v.level2() != level2) {
      throw std::invalid_argument("echelonize: vectors at mixed levels");
    }
  }
}

}  // namespace

bool echelonInsert(SubspaceBasis& b, const ModuleVector& v) {
  ModuleVector r = reduce(v, b);
  if (r.isZero()) return false;
  const PBWMonomial lead = r.highestTerm();
  r = r * r.coeff(lead).inverse();
  // keep the reduced echelon invariant: no other vector contains the new lead
  for (auto& w : b.vectors) {
    Scalar c = w.coeff(lead);
    if (!c.isZero()) w.addScaled(r, -c);
  }
  auto pos = std::find_if(b.vectors.begin(), b.vectors.end(), [&](const ModuleVector& w) {
    return monomialCompare(w.highestTerm(), lead) < 0;
  });
  b.vectors.insert(pos, std::move(r));
  return true;
}

SubspaceBasis echelonize(const std::vector<ModuleVector>& vs) {
  requireSameLevel(vs);
  SubspaceBasis b;
  for (const auto& v : vs) {
    if (v.isZero()) continue;
    b.level2 = v.level2();
    echelonInsert(b, v);
  }
  return b;
}

ModuleVector reduce(const ModuleVector& v, const SubspaceBasis& b) {
  if (v.isZero() || b.vectors.empty()) return v;
  if (v.level2() != b.vectors.front().level2())
    throw std::invalid_argument("reduce: level mismatch");
  ModuleVector r = v;
  for (const auto& w : b.vectors) {
    Scalar c = r.coeff(w.highestTerm());
    if (!c.isZero()) r.addScaled(w, -c);
  }
  return r;
}

namespace {

// Stacked coordinate: operator block plus target monomial; ordered by block,
// then succ-descending so pivots follow the highest terms first.
struct Coord {
  int block;
  PBWMonomial mono;
};

struct CoordLess {
  bool operator()(const Coord& a, const Coord& b) const {
    if (a.block != b.block) return a.block < b.block;
    return monomialCompare(a.mono, b.mono) > 0;
  }
};

// Reduced row echelon form of coefficient combinations over input indices;
// canonical output order for kernels.
std::vector<std::vector<Scalar>> comboRref(std::vector<std::vector<Scalar>> rows) {
  std::vector<std::vector<Scalar>> basis;
  for (auto& row : rows) {
    for (const auto& b : basis) {
      size_t lead = 0;
      while (lead < b.size() && b[lead].isZero()) ++lead;
      if (lead < row.size() && !row[lead].isZero()) {
        Scalar c = row[lead];
        for (size_t k = lead; k < row.size(); ++k) row[k] -= c * b[k];
      }
    }
    size_t lead = 0;
    while (lead < row.size() && row[lead].isZero()) ++lead;
    if (lead == row.size()) continue;
    Scalar inv = row[lead].inverse();
    for (size_t k = lead; k < row.size(); ++k) row[k] *= inv;
    for (auto& b : basis) {
      if (!b[lead].isZero()) {
        Scalar c = b[lead];
        for (size_t k = lead; k < row.size(); ++k) b[k] -= c * row[k];
      }
    }
    basis.push_back(std::move(row));
  }
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    size_t la = 0, lb = 0;
    while (la < a.size() && a[la].isZero()) ++la;
    while (lb < b.size() && b[lb].isZero()) ++lb;
    return la < lb;
  });
  return basis;
}

using ScalarRow = std::map<Coord, Scalar, CoordLess>;
using PolyRow = std::map<Coord, Poly, CoordLess>;

// Plain fraction elimination, preferable for small systems.
std::vector<std::vector<Scalar>> kernelPlain(
    const std::vector<std::vector<ModuleVector>>& images) {
  const size_t n = images.size();
  struct Row {
    ScalarRow entries;
    std::vector<Scalar> combo;
  };
  std::map<Coord, Row, CoordLess> pivots;  // normalized to leading coefficient 1
  std::vector<std::vector<Scalar>> kernel;
  for (size_t i = 0; i < n; ++i) {
    Row row;
    row.combo.assign(n, Scalar());
    row.combo[i] = Scalar(1L);
    for (size_t blk = 0; blk < images[i].size(); ++blk)
      for (const auto& [m, c] : images[i][blk].coeffs())
        row.entries[Coord{static_cast<int>(blk), m}] = c;
    while (!row.entries.empty()) {
      const Coord lead = row.entries.begin()->first;
      auto match = pivots.find(lead);
      if (match == pivots.end()) break;
      Scalar c = row.entries.begin()->second;
      for (const auto& [coord, val] : match->second.entries) {
        auto it = row.entries.find(coord);
        Scalar nv = (it == row.entries.end() ? Scalar() : it->second) - c * val;
        if (nv.isZero()) {
          if (it != row.entries.end()) row.entries.erase(it);
        } else {
          row.entries[coord] = nv;
        }
      }
      for (size_t k = 0; k < n; ++k)
        if (!match->second.combo[k].isZero()) row.combo[k] -= c * match->second.combo[k];
    }
    if (row.entries.empty()) {
      kernel.push_back(std::move(row.combo));
    } else {
      Scalar inv = row.entries.begin()->second.inverse();
      for (auto& [coord, val] : row.entries) val *= inv;
      for (auto& c : row.combo) c *= inv;
      Coord lead = row.entries.begin()->first;
      pivots.emplace(lead, std::move(row));
    }
  }
  return comboRref(std::move(kernel));
}

// Fraction-free online elimination over Poly: rows are cleared of
// denominators up front, reductions cross-multiply by pivot leads, and each
// updated row is stripped of its integer and polynomial content (exact
// divisions only). The single division back to field elements happens when
// kernel rows are converted to Scalar combinations.
std::vector<std::vector<Scalar>> kernelFractionFree(
    const std::vector<std::vector<ModuleVector>>& images) {
  const size_t n = images.size();
  struct Row {
    PolyRow entries;
    std::map<size_t, Poly> combo;
  };

  auto stripContent = [](Row& r) {
    // integer content over every entry
    mpz_class g = 0;
    bool allInteger = true;
    for (const auto& [cd, val] : r.entries)
      for (const auto& [ex, c] : val.terms()) {
        if (c.get_den() != 1) {
          allInteger = false;
          break;
        }
        mpz_class num = c.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
      }
    for (const auto& [k, val] : r.combo)
      for (const auto& [ex, c] : val.terms()) {
        if (c.get_den() != 1) {
          allInteger = false;
          break;
        }
        mpz_class num = c.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
      }
    if (allInteger && g > 1) {
      mpq_class inv(mpz_class(1), g);
      for (auto& [cd, val] : r.entries) val = val * inv;
      for (auto& [k, val] : r.combo) val = val * inv;
    }
    // polynomial content (gcd fold with early exit at a constant)
    Poly pg;
    auto fold = [&pg](const Poly& v) {
      if (pg.isOne()) return false;
      pg = pg.isZero() ? polyGcd(v, v) : polyGcd(pg, v);
      return true;
    };
    for (const auto& [cd, val] : r.entries)
      if (!fold(val)) break;
    for (const auto& [k, val] : r.combo)
      if (!fold(val)) break;
    if (!pg.isZero() && !pg.isOne() && !pg.isConstant()) {
      for (auto& [cd, val] : r.entries) val = divideExact(val, pg);
      for (auto& [k, val] : r.combo) val = divideExact(val, pg);
    }
  };

  std::map<Coord, Row, CoordLess> pivots;
  std::vector<std::vector<Scalar>> kernel;
  for (size_t i = 0; i < n; ++i) {
    Row row;
    // clear denominators with the lcm over the stacked image
    Poly lcm(1L);
    for (const auto& img : images[i])
      for (const auto& [m, c] : img.coeffs()) {
        Poly g = polyGcd(lcm, c.den());
        lcm = divideExact(lcm * c.den(), g);
      }
    row.combo[i] = lcm;
    for (size_t blk = 0; blk < images[i].size(); ++blk)
      for (const auto& [m, c] : images[i][blk].coeffs())
        row.entries[Coord{static_cast<int>(blk), m}] = c.num() * divideExact(lcm, c.den());
    stripContent(row);

    while (!row.entries.empty()) {
      const Coord lead = row.entries.begin()->first;
      auto match = pivots.find(lead);
      if (match == pivots.end()) break;
      const Row& p = match->second;
      Poly rl = row.entries.begin()->second;
      const Poly& pl = p.entries.begin()->second;
      // row <- pl * row - rl * pivot
      PolyRow updated;
      for (const auto& [cd, val] : row.entries) {
        Poly nv = pl * val;
        auto pit = p.entries.find(cd);
        if (pit != p.entries.end()) nv -= rl * pit->second;
        if (!nv.isZero()) updated.emplace(cd, std::move(nv));
      }
      for (const auto& [cd, val] : p.entries) {
        if (row.entries.count(cd)) continue;
        Poly nv = -(rl * val);
        if (!nv.isZero()) updated.emplace(cd, std::move(nv));
      }
      updated.erase(lead);
      row.entries = std::move(updated);
      std::map<size_t, Poly> comboUpdated;
      for (const auto& [k, val] : row.combo) {
        Poly nv = pl * val;
        auto pit = p.combo.find(k);
        if (pit != p.combo.end()) nv -= rl * pit->second;
        if (!nv.isZero()) comboUpdated.emplace(k, std::move(nv));
      }
      for (const auto& [k, val] : p.combo) {
        if (row.combo.count(k)) continue;
        Poly nv = -(rl * val);
        if (!nv.isZero()) comboUpdated.emplace(k, std::move(nv));
      }
      row.combo = std::move(comboUpdated);
      stripContent(row);
    }
    if (row.entries.empty()) {
      std::vector<Scalar> combo(n);
      for (const auto& [k, val] : row.combo)
        if (!val.isZero()) combo[k] = Scalar(val);
      kernel.push_back(std::move(combo));
    } else {
      Coord lead = row.entries.begin()->first;
      pivots.emplace(std::move(lead), std::move(row));
    }
  }
  return comboRref(std::move(kernel));
}

}  // namespace

std::vector<std::vector<Scalar>> kernelCombos(
    const std::vector<std::vector<ModuleVector>>& images) {
  constexpr size_t kSmallSystem = 12;
  if (images.size() <= kSmallSystem) return kernelPlain(images);
  return kernelFractionFree(images);
}

}  // namespace bms
