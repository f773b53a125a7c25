#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "error.hpp"
#include "helpers.hpp"
#include "moves.hpp"
#include "warping.hpp"

using namespace wk;

namespace {
const char* TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+";

std::vector<MoveInstance> of_kind(const std::vector<MoveInstance>& mvs, MoveKind k) {
  std::vector<MoveInstance> out;
  for (const MoveInstance& m : mvs)
    if (m.kind == k) out.push_back(m);
  return out;
}
}  // namespace

TEST_CASE("trefoil admits no deletion-side moves") {
  CHECK(applicable_moves(parse_code(TREFOIL)).empty());
}

TEST_CASE("R1 kinks") {
  const Code kink = parse_code("O1+ U1+");
  const auto mvs = applicable_moves(kink);
  REQUIRE(of_kind(mvs, MoveKind::R1_delete).size() == 2);  // both rotations
  CHECK(apply_move(kink, {MoveKind::R1_delete, {0}}).empty());
  CHECK(apply_move(kink, {MoveKind::R1_delete, {1}}).empty());

  // wrap-around kink
  const Code wrap = parse_code("U3- O1+ U1+ O3-");
  CHECK(serialize(apply_move(wrap, {MoveKind::R1_delete, {3}})) == "O1+ U1+");

  CHECK_THROWS_AS(apply_move(parse_code(TREFOIL), {MoveKind::R1_delete, {0}}), Error);
}

TEST_CASE("R2 deletes only antiparallel pairs") {
  const Code good = parse_code("O1+ O2- U2- U1+");
  const auto sites = of_kind(applicable_moves(good), MoveKind::R2_delete);
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].location == std::vector<int>{0, 2});
  CHECK(apply_move(good, sites[0]).empty());

  // same signs: parallel band, not removable
  const Code parallel = parse_code("O1+ O2+ U2+ U1+");
  CHECK(of_kind(applicable_moves(parallel), MoveKind::R2_delete).empty());
  // under pair in the wrong order
  const Code wrong = parse_code("O1+ O2- U1+ U2-");
  CHECK(of_kind(applicable_moves(wrong), MoveKind::R2_delete).empty());
  CHECK_THROWS_AS(apply_move(parallel, {MoveKind::R2_delete, {0, 2}}), Error);
}

TEST_CASE("FO swaps adjacent over passes") {
  const Code w = parse_code("O1+ O3+ U1+ U3+");
  const auto fo = of_kind(applicable_moves(w), MoveKind::FO_swap);
  REQUIRE(fo.size() == 1);
  CHECK(fo[0].location == std::vector<int>{0});
  CHECK(serialize(apply_move(w, fo[0])) == "O3+ O1+ U1+ U3+");
  // involution
  CHECK(apply_move(apply_move(w, fo[0]), fo[0]) == w);
  CHECK_THROWS_AS(apply_move(w, {MoveKind::FO_swap, {1}}), Error);
}

TEST_CASE("R3 follows the whitelist") {
  const Code pos = parse_code("O1+ O2+ U1+ O3+ U2+ U3+");
  const auto mvs = applicable_moves(pos);
  const auto r3 = of_kind(mvs, MoveKind::R3);
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].location == std::vector<int>{0, 2, 4});
  CHECK(of_kind(mvs, MoveKind::FO_swap).size() == 1);  // and nothing else
  CHECK(mvs.size() == 2);

  const Code moved = apply_move(pos, r3[0]);
  CHECK(serialize(moved) == "O2+ O1+ O3+ U1+ U3+ U2+");
  CHECK(apply_move(moved, r3[0]) == pos);  // involutive on the same site

  // flipping two signs leaves the whitelist
  const Code neg = parse_code("O1+ O2+ U1+ O3- U2+ U3-");
  CHECK(of_kind(applicable_moves(neg), MoveKind::R3).empty());
  CHECK_THROWS_AS(apply_move(neg, {MoveKind::R3, {0, 2, 4}}), Error);
}

TEST_CASE("R3 admissibility is mirror invariant") {
  std::mt19937_64 rng(331);
  int seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Code c = wk::testing::rand_code(rng, 3 + static_cast<int>(rng() % 3));
    const auto a = of_kind(applicable_moves(c), MoveKind::R3);
    const auto b = of_kind(applicable_moves(mirror_code(c)), MoveKind::R3);
    CHECK(a.size() == b.size());
    seen += !a.empty();
    for (const MoveInstance& m : a) CHECK(apply_move(apply_move(c, m), m) == c);
  }
  CHECK(seen > 0);  // the sample actually exercised R3
}

TEST_CASE("insertions undo deletions") {
  const Code base = parse_code(TREFOIL);

  MoveInstance kink{MoveKind::R1_insert, {3}, -1, false};
  const Code k = apply_move(base, kink);
  CHECK(serialize(k) == "O1+ U2+ O3+ U4- O4- U1+ O2+ U3+");
  CHECK(apply_move(k, {MoveKind::R1_delete, {3}}) == base);

  MoveInstance band{MoveKind::R2_insert, {1, 4}, 1, true};
  const Code b2 = apply_move(base, band);
  CHECK(serialize(b2) == "O1+ O4+ O5- U2+ O3+ U1+ U5- U4+ O2+ U3+");
  const auto sites = of_kind(applicable_moves(b2), MoveKind::R2_delete);
  REQUIRE(sites.size() == 1);
  CHECK(apply_move(b2, sites[0]) == base);

  // same-gap band insert makes one O O U U block
  const Code b3 = apply_move(Code{}, {MoveKind::R2_insert, {0, 0}, -1, true});
  CHECK(serialize(b3) == "O1- O2+ U2+ U1-");
  CHECK(apply_move(b3, {MoveKind::R2_delete, {0, 2}}).empty());

  CHECK_THROWS_AS(apply_move(base, MoveInstance{MoveKind::R1_insert, {9}, 1, true}), Error);
  CHECK_THROWS_AS(apply_move(base, MoveInstance{MoveKind::R1_insert, {0}, 0, true}), Error);
}

TEST_CASE("moves preserve code validity and crossing deltas") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const Code c = wk::testing::rand_code(rng, 1 + static_cast<int>(rng() % 6));
    for (const MoveInstance& m : applicable_moves(c)) {
      const Code out = apply_move(c, m);
      CHECK_NOTHROW(parse_code(serialize(out)));
      const int delta = crossing_count(out) - crossing_count(c);
      if (m.kind == MoveKind::R1_delete) CHECK(delta == -1);
      if (m.kind == MoveKind::R2_delete) CHECK(delta == -2);
      if (m.kind == MoveKind::FO_swap || m.kind == MoveKind::R3) CHECK(delta == 0);
    }
  }
}

TEST_CASE("simplify reduces the welded trefoil to nothing") {
  const Diagram tref = parse_diagram(TREFOIL);
  const SimplifyReport direct = simplify(tref);
  CHECK(serialize(direct.result) == TREFOIL);  // nothing applies at all
  CHECK(direct.states_explored == 1);
  CHECK_FALSE(direct.budget_exhausted);
  CHECK(direct.trace.empty());

  const Diagram w = weld(tref, 2);
  const SimplifyReport rep = simplify(w);
  CHECK(rep.result.code.empty());
  CHECK(rep.result.welded_history == std::vector<int>{2});
  CHECK(rep.states_explored == 4);
  CHECK_FALSE(rep.budget_exhausted);
  // the trace replays from the input to the result
  CHECK(canonical(replay_trace(w.code, rep.trace)) == canonical(rep.result.code));
}

TEST_CASE("simplify respects its budget") {
  const Diagram w = weld(parse_diagram(TREFOIL), 2);
  const SimplifyReport rep = simplify(w, 2);
  CHECK(rep.states_explored == 2);
  CHECK(rep.budget_exhausted);
  CHECK_FALSE(rep.result.code.empty());
  CHECK(canonical(replay_trace(w.code, rep.trace)) == canonical(rep.result.code));
}

TEST_CASE("simplify traces always replay") {
  std::mt19937_64 rng(901);
  for (int trial = 0; trial < 60; ++trial) {
    const Diagram d = make_diagram(wk::testing::rand_code(rng, 1 + static_cast<int>(rng() % 5)));
    const SimplifyReport rep = simplify(d, 300);
    CHECK(canonical(replay_trace(d.code, rep.trace)) == canonical(rep.result.code));
    CHECK(crossing_count(rep.result.code) <= crossing_count(d.code));
  }
}

TEST_CASE("warping degrees") {
  const Code tref = parse_code(TREFOIL);
  CHECK(warping_degree_at(tref, 0) == 1);
  CHECK(warping_degree_at(tref, 1) == 2);
  const WarpingPair wp = warping_pair(tref);
  CHECK(wp.forward == 1);
  CHECK(wp.reverse == 1);
  CHECK_FALSE(is_descending(tref).has_value());

  const Code desc = parse_code("O1+ O2+ U1+ U2+");
  CHECK(is_descending(desc) == 0);
  CHECK(warping_pair(desc).forward == 0);

  CHECK(warping_pair(Code{}).forward == 0);
  CHECK(warping_pair(Code{}).reverse == 0);
  CHECK(is_descending(Code{}) == 0);

  CHECK_THROWS_AS(warping_degree_at(tref, 6), Error);
}

TEST_CASE("warping sum identity") {
  // min over basepoints of the reverse degree is the crossing count minus
  // the max forward degree
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 200; ++trial) {
    const Code c = wk::testing::rand_code(rng, 1 + static_cast<int>(rng() % 7));
    int mx = 0;
    for (int b = 0; b < static_cast<int>(c.size()); ++b)
      mx = std::max(mx, warping_degree_at(c, b));
    CHECK(warping_pair(c).reverse == crossing_count(c) - mx);
  }
}
