#include "families.hpp"

#include "error.hpp"

namespace wk {

Code torus_2q(int n) {
    if (n < 1)
        fail(Errc::BadParameter, "torus_2q requires n >= 1");
    Code code;
    code.reserve(static_cast<size_t>(4 * n + 2));
    for (int i = 0; i < 2 * n + 1; ++i)
        code.push_back({i % 2 == 0 ? Role::Over : Role::Under, i + 1, 1});
    for (int i = 0; i < 2 * n + 1; ++i)
        code.push_back({i % 2 == 0 ? Role::Under : Role::Over, i + 1, 1});
    return code;
}

Diagram torus_welded_one(int n) {
    return weld(make_diagram(torus_2q(n)), 2 * n + 1);
}

Diagram torus_welded_two(int n, int m1) {
    if (n < 2)
        fail(Errc::BadParameter, "torus_welded_two requires n >= 2");
    if (m1 < 0 || m1 > n - 1)
        fail(Errc::BadGap, "gap m1 must satisfy 0 <= m1 <= n-1");
    return weld_set(make_diagram(torus_2q(n)), {1, m1 + 2});
}

Code twist(int n) {
    if (n < 1)
        fail(Errc::BadParameter, "twist requires n >= 1");
    // Ladder up, clasp, ladder down, clasp; the mirror at the end picks
    // the handedness that matches the trefoil/figure-eight oracles.
    Code toks;
    toks.reserve(static_cast<size_t>(2 * n + 4));
    for (int j = 1; j <= n; ++j)
        toks.push_back({j % 2 == 1 ? Role::Over : Role::Under, j, 1});
    if (n % 2 == 1) {
        toks.push_back({Role::Under, n + 1, 1});
        toks.push_back({Role::Over, n + 2, 1});
    } else {
        toks.push_back({Role::Over, n + 1, -1});
        toks.push_back({Role::Under, n + 2, -1});
    }
    for (int j = n; j >= 1; --j)
        toks.push_back({j % 2 == 0 ? Role::Over : Role::Under, j, 1});
    if (n % 2 == 1) {
        toks.push_back({Role::Over, n + 1, 1});
        toks.push_back({Role::Under, n + 2, 1});
    } else {
        toks.push_back({Role::Over, n + 2, -1});
        toks.push_back({Role::Under, n + 1, -1});
    }
    return mirror_code(toks);
}

Diagram twist_welded_one(int n) {
    return weld(make_diagram(twist(n)), 1);
}

Diagram twist_welded_two(int n) {
    if (n < 4)
        fail(Errc::BadParameter, "twist_welded_two requires n >= 4");
    return weld_set(make_diagram(twist(n)), {1, 3});
}

} // namespace wk
