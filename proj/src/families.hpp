#pragma once

#include "gauss.hpp"

namespace wk {

// Closed 2-strand torus diagram with 2n+1 positive crossings,
// "O1+ U2+ ... O(2n+1) U1+ O2+ ... U(2n+1)". n >= 1.
Code torus_2q(int n);

// torus_2q(n) with the highest-labeled crossing welded.
Diagram torus_welded_one(int n);

// torus_2q(n) with crossings {1, m1+2} welded, leaving m1 crossings
// between the welds on one side. n >= 2, 0 <= m1 <= n-1.
Diagram torus_welded_two(int n, int m1);

// Twist knot with n twist-region crossings (labels 1..n in ladder
// order) and a clasp (labels n+1, n+2). n >= 1.
Code twist(int n);

// twist(n) with the leftmost twist crossing welded.
Diagram twist_welded_one(int n);

// twist(n) with crossings {1, 3} welded (two welds, one classical
// crossing in between). n >= 4.
Diagram twist_welded_two(int n);

} // namespace wk
