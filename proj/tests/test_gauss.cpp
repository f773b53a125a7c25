#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "error.hpp"
#include "gauss.hpp"
#include "helpers.hpp"

using namespace wk;

namespace {
Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::BadArgument;
}
}  // namespace

TEST_CASE("parse and serialize round-trip without renumbering") {
  const std::string tref = "O1+ U2+ O3+ U1+ O2+ U3+";
  CHECK(serialize(parse_code(tref)) == tref);

  // labels stay as given; serialize never renumbers or rotates
  const std::string sparse = "O7+ U9- O9- U7+";
  CHECK(serialize(parse_code(sparse)) == sparse);

  CHECK(parse_code("").empty());
  CHECK(parse_code("   ").empty());
  CHECK(serialize(Code{}) == "");
}

TEST_CASE("parse rejects malformed input") {
  CHECK(code_of([] { parse_code("O1"); }) == Errc::MalformedToken);
  CHECK(code_of([] { parse_code("X1+"); }) == Errc::MalformedToken);
  CHECK(code_of([] { parse_code("O+"); }) == Errc::MalformedToken);
  CHECK(code_of([] { parse_code("O1* U1*"); }) == Errc::MalformedToken);
  CHECK(code_of([] { parse_code("O0+ U0+"); }) == Errc::MalformedToken);
  CHECK(code_of([] { parse_code("O1+ U1+ O1+"); }) == Errc::CrossingCountNotTwo);
  CHECK(code_of([] { parse_code("O1+ U2+ U2+ O1+ O2+"); }) == Errc::CrossingCountNotTwo);
  CHECK(code_of([] { parse_code("O1+ O1+"); }) == Errc::DuplicateRole);
  CHECK(code_of([] { parse_code("U3- U3-"); }) == Errc::DuplicateRole);
  CHECK(code_of([] { parse_code("O1+ U1-"); }) == Errc::SignMismatch);
}

TEST_CASE("canonical is rotation and relabeling invariant, and idempotent") {
  std::mt19937_64 rng(20260815);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Code code = wk::testing::rand_code(rng, n);
    const Code canon = canonical(code);
    CHECK(canonical(canon) == canon);

    const size_t r = rng() % code.size();
    Code rot(code.begin() + r, code.end());
    rot.insert(rot.end(), code.begin(), code.begin() + r);
    CHECK(canonical(rot) == canon);

    // scramble the labels through a random permutation
    std::vector<int> perm(n + 1);
    for (int i = 1; i <= n; ++i) perm[i] = i;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    Code scrambled = code;
    for (Pass& p : scrambled) p.label = perm[p.label];
    CHECK(canonical(scrambled) == canon);
  }
}

TEST_CASE("canonical starts with an over pass when one exists") {
  const Code c = canonical(parse_code("U2+ O3+ U1+ O2+ U3+ O1+"));
  CHECK(c.front().role == Role::Over);
  CHECK(c.front().label == 1);
  CHECK(serialize(c) == "O1+ U2+ O3+ U1+ O2+ U3+");
}

TEST_CASE("reverse reverses the sequence and keeps roles and signs") {
  const Code tref = parse_code("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(serialize(reverse_code(tref)) == "U3+ O2+ U1+ O3+ U2+ O1+");
  CHECK(reverse_code(reverse_code(tref)) == tref);
  CHECK(reverse_code(Code{}).empty());
}

TEST_CASE("mirror swaps roles and flips signs") {
  const Code tref = parse_code("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(serialize(mirror_code(tref)) == "U1- O2- U3- O1- U2- O3-");
  CHECK(mirror_code(mirror_code(tref)) == tref);
}

TEST_CASE("weld elides the crossing and records history") {
  const Diagram tref = parse_diagram("O1+ U2+ O3+ U1+ O2+ U3+");
  const Diagram w = weld(tref, 2);
  CHECK(serialize(w) == "O1+ O3+ U1+ U3+");
  CHECK(w.welded_history == std::vector<int>{2});

  const Diagram ww = weld(w, 1);
  CHECK(serialize(ww) == "O3+ U3+");
  CHECK(ww.welded_history == std::vector<int>{2, 1});

  CHECK(code_of([&] { weld(tref, 7); }) == Errc::UnknownCrossing);
  CHECK(code_of([&] { weld(Diagram{}, 1); }) == Errc::UnknownCrossing);
}

TEST_CASE("weld_set order does not matter") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Diagram d = make_diagram(wk::testing::rand_code(rng, n));
    std::vector<int> subset;
    for (int label = 1; label <= n; ++label)
      if (rng() & 1) subset.push_back(label);
    if (subset.empty()) subset.push_back(1);
    std::vector<int> shuffled = subset;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);

    const Diagram a = weld_set(d, subset);
    Diagram b = d;
    for (int label : shuffled) b = weld(b, label);
    CHECK(a.code == b.code);
    // histories agree as sets even when the application order differed
    std::vector<int> hb = b.welded_history;
    std::sort(hb.begin(), hb.end());
    CHECK(a.welded_history == hb);
  }
}

TEST_CASE("history never affects equality") {
  const Diagram tref = parse_diagram("O1+ U2+ O3+ U1+ O2+ U3+");
  Diagram a = weld(weld(tref, 2), 1);
  Diagram b = weld(weld(tref, 1), 2);
  CHECK(a.welded_history != b.welded_history);
  CHECK(canon_equal(a.code, b.code));
}

TEST_CASE("arcs are delimited by under passes") {
  const Code tref = parse_code("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(arc_count(tref) == 3);
  CHECK(arc_map(tref) == std::vector<int>{0, 0, 1, 1, 2, 2});

  CHECK(arc_count(Code{}) == 1);

  // all-over segments wrap around onto arc 0
  const Code w = parse_code("O1+ O3+ U1+ U3+");
  CHECK(arc_count(w) == 2);
  CHECK(arc_map(w) == std::vector<int>{0, 0, 0, 1});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Code code = wk::testing::rand_code(rng, 1 + static_cast<int>(rng() % 7));
    const std::vector<int> amap = arc_map(code);
    int top = 0;
    for (int a : amap) top = std::max(top, a);
    CHECK(top + 1 == arc_count(code));
  }
}

TEST_CASE("crossing labels and counts") {
  const Code c = parse_code("O7+ U9- O9- U7+");
  CHECK(crossing_labels(c) == std::vector<int>{7, 9});
  CHECK(crossing_count(c) == 2);
  CHECK(crossing_count(Code{}) == 0);
}
