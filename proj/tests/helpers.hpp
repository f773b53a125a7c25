#pragma once
#include <random>

#include "gauss.hpp"

namespace wk::testing {

// Uniform-ish random abstract Gauss code with n crossings. Any pairing of
// roles is a valid welded diagram, so no realizability filter is needed.
inline Code rand_code(std::mt19937_64& rng, int n) {
  std::vector<int> slots;
  for (int label = 1; label <= n; ++label) {
    slots.push_back(label);
    slots.push_back(label);
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<int> sign(n + 1), first_over(n + 1), seen(n + 1, 0);
  for (int label = 1; label <= n; ++label) {
    sign[label] = rng() & 1 ? 1 : -1;
    first_over[label] = rng() & 1;
  }
  Code code;
  for (int label : slots) {
    const bool first = !seen[label]++;
    const bool over = first == static_cast<bool>(first_over[label]);
    code.push_back(Pass{over ? Role::Over : Role::Under, label, sign[label]});
  }
  return code;
}

}  // namespace wk::testing
