#pragma once

#include "bms/pbw.hpp"

#include <vector>

namespace bms {

// Echelonized basis of a subspace of one graded component. Leading monomials
// have coefficient 1, strictly decrease along the sequence, and occur in no
// other basis vector.
struct SubspaceBasis {
  int level2 = 0;
  std::vector<ModuleVector> vectors;

  size_t dim() const { return vectors.size(); }
};

// Basis of the span; throws std::invalid_argument on mixed levels.
SubspaceBasis echelonize(const std::vector<ModuleVector>& vs);

// Canonical representative of v modulo span(b); zero iff v lies in the span.
ModuleVector reduce(const ModuleVector& v, const SubspaceBasis& b);

// Adds v to an echelonized basis in place; returns false if v reduces to zero.
bool echelonInsert(SubspaceBasis& b, const ModuleVector& v);

// Kernel of the linear map described by the images of a fixed input basis.
// images[i] holds the stacked image of input vector i (one block per
// operator). Returns echelonized coefficient combinations, each of length
// images.size(), spanning the joint kernel.
std::vector<std::vector<Scalar>> kernelCombos(
    const std::vector<std::vector<ModuleVector>>& images);

}  // namespace bms
