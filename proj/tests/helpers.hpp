#pragma once

#include "bms/io.hpp"
#include "bms/verma.hpp"

#include <initializer_list>

namespace bmstest {

struct Term {
  const char* coeff;
  bms::Partition m, q, l;  // q entries are the indices j of Q_{-j+1/2}
};

inline bms::ModuleVector vec(int level2, std::initializer_list<Term> terms) {
  bms::ModuleVector v(level2);
  for (const auto& t : terms)
    v.add(bms::PBWMonomial{t.m, t.q, t.l}, bms::parseScalar(t.coeff));
  return v;
}

inline bms::Scalar sc(const char* text) { return bms::parseScalar(text); }

inline bms::PBWMonomial mono(bms::Partition m, bms::Partition q, bms::Partition l) {
  return bms::PBWMonomial{std::move(m), std::move(q), std::move(l)};
}

}  // namespace bmstest
