#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bms {

struct VerifyItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<std::string> verifySuiteNames();

// Runs one named suite; throws std::invalid_argument on an unknown name.
// All randomness is drawn from the seed.
std::vector<VerifyItem> runVerifySuite(const std::string& suite, int maxLevel2, uint64_t seed);

}  // namespace bms
