#pragma once
#include <optional>
#include <vector>

#include "gauss.hpp"

namespace wk {

enum class Orientation { Forward, Reverse };

// Warping degree at a basepoint: the number of crossings met first on an
// under pass when walking the full code from position b. Reverse walks the
// reversed code from its position b.
int warping_degree_at(const Code& code, int b, Orientation o = Orientation::Forward);

// (min over basepoints of the forward degree, same for the reversed code).
// The empty code gives (0, 0).
struct WarpingPair {
  int forward;
  int reverse;
};
WarpingPair warping_pair(const Code& code);

// A diagram is descending when some basepoint has warping degree zero;
// returns such a basepoint. The empty code is descending at 0.
std::optional<int> is_descending(const Code& code);

}  // namespace wk
