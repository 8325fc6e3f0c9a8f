#pragma once

#include <functional>
#include <random>

#include "drgforge/error.hpp"
#include "drgforge/residue.hpp"

namespace testutil {

/// Code of the drgforge::Error thrown by `f`, or Internal when none is thrown.
inline drgforge::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const drgforge::Error& e) {
    return e.code();
  }
  return drgforge::ErrorCode::Internal;
}

inline std::vector<int> random_subset(int m, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.05, 0.95)(rng));
  std::vector<int> out;
  for (int x = 0; x < m; ++x) {
    if (coin(rng)) out.push_back(x);
  }
  return out;
}

}  // namespace testutil
