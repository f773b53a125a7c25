#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "gauss.hpp"

namespace wk {

enum class MoveKind { R1_delete, R1_insert, R2_delete, R2_insert, FO_swap, R3 };

std::string move_kind_name(MoveKind k);

// A concrete move at concrete positions of a concrete code.
//
//   R1_delete  location {p}        delete the same-label pair at p, p+1
//   R2_delete  location {p, q}     delete O O at p,p+1 and U U at q,q+1
//   FO_swap    location {p}        swap the two over passes at p, p+1
//   R3         location {a, b, c}  swap inside the three pairs (x, x+1)
//   R1_insert  location {gap}      insert a kink at the gap; sign,
//                                  over_first pick the variant
//   R2_insert  location {go, gu}   insert O O at gap go, U U at gap gu;
//                                  sign is the sign of the first over pass
//
// Positions are indices into the code the move is applied to; gaps run
// 0..len (a gap of len appends). All pair positions wrap cyclically.
struct MoveInstance {
  MoveKind kind;
  std::vector<int> location;
  int sign = 0;
  bool over_first = true;
  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

// Every applicable deletion, over-swap and whitelisted R3 on this code, in a
// fixed deterministic order. Insertions are never enumerated; build them
// explicitly when needed.
std::vector<MoveInstance> applicable_moves(const Code& code);

// Applies one move. InapplicableMove if the code does not match the pattern
// at the given location.
Code apply_move(const Code& code, const MoveInstance& mv);

struct SimplifyReport {
  Diagram result;
  std::vector<MoveInstance> trace;  // replay: canonicalize, apply, repeat
  std::uint64_t states_explored = 0;
  bool budget_exhausted = false;
};

// Best-first search over canonical forms using deletions, over-swaps and
// whitelisted R3 moves; never inserts, so it is sound but incomplete. The
// budget counts expanded states. Stops early on reaching the empty code.
SimplifyReport simplify(const Diagram& d, std::uint64_t budget = 1000000);

// Replays a simplify trace: repeatedly canonicalize then apply, then
// canonicalize the end state. Reproduces SimplifyReport::result from the
// input independently of the search.
Code replay_trace(const Code& code, const std::vector<MoveInstance>& trace);

}  // namespace wk
