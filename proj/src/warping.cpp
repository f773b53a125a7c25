#include "warping.hpp"

#include <algorithm>

#include "error.hpp"

namespace wk {

namespace {
int degree_at(const Code& code, int b) {
  const int n = static_cast<int>(code.size());
  std::vector<int> seen;
  int count = 0;
  for (int k = 0; k < n; ++k) {
    const Pass& p = code[(b + k) % n];
    if (std::find(seen.begin(), seen.end(), p.label) != seen.end()) continue;
    seen.push_back(p.label);
    count += p.role == Role::Under;
  }
  return count;
}
}  // namespace

int warping_degree_at(const Code& code, int b, Orientation o) {
  if (code.empty()) return 0;
  if (b < 0 || b >= static_cast<int>(code.size()))
    fail(Errc::BadArgument, "basepoint out of range");
  return degree_at(o == Orientation::Forward ? code : reverse_code(code), b);
}

WarpingPair warping_pair(const Code& code) {
  if (code.empty()) return {0, 0};
  const int n = static_cast<int>(code.size());
  const Code rev = reverse_code(code);
  int fwd = n, bwd = n;
  for (int b = 0; b < n; ++b) {
    fwd = std::min(fwd, degree_at(code, b));
    bwd = std::min(bwd, degree_at(rev, b));
  }
  return {fwd, bwd};
}

std::optional<int> is_descending(const Code& code) {
  if (code.empty()) return 0;
  for (int b = 0; b < static_cast<int>(code.size()); ++b)
    if (degree_at(code, b) == 0) return b;
  return std::nullopt;
}

}  // namespace wk
