#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace wk {

enum class Role : std::uint8_t { Over, Under };

// One pass through a classical crossing. sign is +1 or -1.
struct Pass {
  Role role;
  int label;
  int sign;
  friend bool operator==(const Pass&, const Pass&) = default;
};

using Code = std::vector<Pass>;

// A welded knot diagram. Welded crossings are elided from the code entirely;
// welded_history records which labels were welded, newest last. History is
// informational only and never participates in equality.
struct Diagram {
  Code code;
  std::vector<int> welded_history;
};

// Text format: space separated tokens O<label><sign> / U<label><sign>,
// e.g. "O1+ U2+ O3+ U1+ O2+ U3+". Errors: MalformedToken,
// CrossingCountNotTwo, DuplicateRole, SignMismatch.
Code parse_code(const std::string& text);

// Inverse of parse for well-formed codes. Emits tokens exactly as stored:
// no renumbering, no rotation, single spaces, no trailing whitespace.
std::string serialize(const Code& code);
std::string serialize(const Diagram& d);

// Relabel crossings 1..n in order of first appearance; sequence unchanged.
Code relabel_first(const Code& code);

// Canonical representative: lexicographically least relabeled rotation.
// Two codes present the same diagram iff their canonical forms are equal.
Code canonical(const Code& code);
bool canon_equal(const Code& a, const Code& b);

// Orientation reversal: the sequence is reversed, roles and signs kept.
Code reverse_code(const Code& code);

// Mirror image: roles swapped and signs flipped. Internal helper for tests
// and family constructions; not part of the command surface.
Code mirror_code(const Code& code);

std::vector<int> crossing_labels(const Code& code);  // distinct, ascending
int crossing_count(const Code& code);

Diagram make_diagram(Code code);
Diagram parse_diagram(const std::string& text);

// Welding replaces crossing `label` by a welded crossing, which is then
// elided: both its passes are removed from the code. UnknownCrossing if the
// label is absent.
Diagram weld(const Diagram& d, int label);
Diagram weld_set(const Diagram& d, std::vector<int> labels);

// Arcs run between consecutive under-passes; a code with no under-pass is a
// single closed arc. arc_map gives, for every code position, the id of the
// arc that position lies on; ids count from 0 in traversal order.
int arc_count(const Code& code);
std::vector<int> arc_map(const Code& code);

}  // namespace wk
