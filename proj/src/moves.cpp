#include "moves.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "error.hpp"

namespace wk {

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1_delete: return "R1_delete";
    case MoveKind::R1_insert: return "R1_insert";
    case MoveKind::R2_delete: return "R2_delete";
    case MoveKind::R2_insert: return "R2_insert";
    case MoveKind::FO_swap: return "FO_swap";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

namespace {

inline int nxt(int p, int n) { return (p + 1) % n; }

bool r1_at(const Code& c, int p) {
  const int n = static_cast<int>(c.size());
  return n >= 2 && p >= 0 && p < n && c[p].label == c[nxt(p, n)].label;
}

bool fo_at(const Code& c, int p) {
  const int n = static_cast<int>(c.size());
  if (n < 2 || p < 0 || p >= n) return false;
  const Pass &a = c[p], &b = c[nxt(p, n)];
  return a.role == Role::Over && b.role == Role::Over && a.label != b.label;
}

bool r2_at(const Code& c, int p, int q) {
  const int n = static_cast<int>(c.size());
  if (n < 4 || p < 0 || p >= n || q < 0 || q >= n) return false;
  const Pass &a = c[p], &b = c[nxt(p, n)];
  if (!(a.role == Role::Over && b.role == Role::Over && a.label != b.label &&
        a.sign == -b.sign))
    return false;
  const Pass &d = c[q], &e = c[nxt(q, n)];
  return d.role == Role::Under && e.role == Role::Under && d.label == b.label &&
         e.label == a.label;
}

// R3 classification. A candidate is three disjoint cyclically-adjacent pairs
// carrying exactly three labels twice each: one all-over pair (top strand),
// one all-under pair (bottom), one mixed (middle), where the middle strand
// goes under the top and over the bottom. The configuration key records
// which shared crossing comes first in each pair plus the three signs; only
// whitelisted keys are admissible.
struct R3Key {
  int t_first, m_first, b_first;  // 0 = TM/TM/TB, 1 = TB/MB/MB
  int s_tm, s_tb, s_mb;
  friend bool operator==(const R3Key&, const R3Key&) = default;
};

constexpr R3Key R3_WHITELIST[16] = {
    {1, 1, 1, -1, -1, -1}, {1, 1, 1, 1, 1, 1},   {1, 1, 0, -1, 1, 1},
    {1, 1, 0, 1, -1, -1},  {1, 0, 1, -1, 1, -1}, {1, 0, 1, 1, -1, 1},
    {1, 0, 0, -1, -1, 1},  {1, 0, 0, 1, 1, -1},  {0, 1, 1, -1, -1, 1},
    {0, 1, 1, 1, 1, -1},   {0, 1, 0, -1, 1, -1}, {0, 1, 0, 1, -1, 1},
    {0, 0, 1, -1, 1, 1},   {0, 0, 1, 1, -1, -1}, {0, 0, 0, -1, -1, -1},
    {0, 0, 0, 1, 1, 1},
};

std::optional<R3Key> classify_triangle(const Code& c, const std::array<int, 3>& starts) {
  const int n = static_cast<int>(c.size());
  const Pass* tok[3][2];
  for (int i = 0; i < 3; ++i) {
    tok[i][0] = &c[starts[i]];
    tok[i][1] = &c[nxt(starts[i], n)];
  }
  // three labels, each seen twice
  std::vector<int> labs;
  for (auto& pair : tok)
    for (auto* t : pair) labs.push_back(t->label);
  std::sort(labs.begin(), labs.end());
  if (labs[0] != labs[1] || labs[2] != labs[3] || labs[4] != labs[5] ||
      labs[1] == labs[2] || labs[3] == labs[4])
    return std::nullopt;

  int T = -1, B = -1, M = -1;
  for (int i = 0; i < 3; ++i) {
    const bool o0 = tok[i][0]->role == Role::Over, o1 = tok[i][1]->role == Role::Over;
    if (o0 && o1) {
      if (T >= 0) return std::nullopt;
      T = i;
    } else if (!o0 && !o1) {
      if (B >= 0) return std::nullopt;
      B = i;
    } else {
      if (M >= 0) return std::nullopt;
      M = i;
    }
  }
  if (T < 0 || B < 0 || M < 0) return std::nullopt;

  auto shared = [&](int i, int j) -> int {
    for (auto* a : tok[i])
      for (auto* b : tok[j])
        if (a->label == b->label) return a->label;
    return -1;
  };
  const int tm = shared(T, M), tb = shared(T, B), mb = shared(M, B);
  if (tm < 0 || tb < 0 || mb < 0) return std::nullopt;
  if (tm == tb || tm == mb || tb == mb) return std::nullopt;

  // middle strand: under at the crossing shared with the top, over at the
  // crossing shared with the bottom
  for (auto* t : tok[M]) {
    if (t->label == tm && t->role != Role::Under) return std::nullopt;
    if (t->label == mb && t->role != Role::Over) return std::nullopt;
  }

  int sign_of[3] = {0, 0, 0};  // tm, tb, mb
  for (auto& pair : tok)
    for (auto* t : pair) {
      if (t->label == tm) sign_of[0] = t->sign;
      if (t->label == tb) sign_of[1] = t->sign;
      if (t->label == mb) sign_of[2] = t->sign;
    }
  return R3Key{tok[T][0]->label == tm ? 0 : 1, tok[M][0]->label == tm ? 0 : 1,
               tok[B][0]->label == tb ? 0 : 1, sign_of[0], sign_of[1], sign_of[2]};
}

bool r3_at(const Code& c, const std::array<int, 3>& starts) {
  const int n = static_cast<int>(c.size());
  if (n < 6) return false;
  std::vector<int> poses;
  for (int s : starts) {
    if (s < 0 || s >= n) return false;
    poses.push_back(s);
    poses.push_back(nxt(s, n));
  }
  std::sort(poses.begin(), poses.end());
  if (std::adjacent_find(poses.begin(), poses.end()) != poses.end()) return false;
  const auto key = classify_triangle(c, starts);
  if (!key) return false;
  return std::find(std::begin(R3_WHITELIST), std::end(R3_WHITELIST), *key) !=
         std::end(R3_WHITELIST);
}

int fresh_label(const Code& c) {
  int top = 0;
  for (const Pass& p : c) top = std::max(top, p.label);
  return top + 1;
}

}  // namespace

std::vector<MoveInstance> applicable_moves(const Code& code) {
  const int n = static_cast<int>(code.size());
  std::vector<MoveInstance> out;
  for (int p = 0; p < n; ++p)
    if (r1_at(code, p)) out.push_back({MoveKind::R1_delete, {p}});
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (r2_at(code, p, q)) out.push_back({MoveKind::R2_delete, {p, q}});
  for (int p = 0; p < n; ++p)
    if (fo_at(code, p)) out.push_back({MoveKind::FO_swap, {p}});
  if (n >= 6)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          if (r3_at(code, {a, b, c})) out.push_back({MoveKind::R3, {a, b, c}});
  return out;
}

Code apply_move(const Code& code, const MoveInstance& mv) {
  const int n = static_cast<int>(code.size());
  auto bad = [&](const std::string& why) {
    fail(Errc::InapplicableMove, move_kind_name(mv.kind) + ": " + why);
  };

  switch (mv.kind) {
    case MoveKind::R1_delete: {
      if (mv.location.size() != 1 || !r1_at(code, mv.location[0]))
        bad("no kink at the given position");
      const int p = mv.location[0], q = nxt(p, n);
      Code out;
      for (int i = 0; i < n; ++i)
        if (i != p && i != q) out.push_back(code[i]);
      return out;
    }
    case MoveKind::R2_delete: {
      if (mv.location.size() != 2 || !r2_at(code, mv.location[0], mv.location[1]))
        bad("no antiparallel pair at the given positions");
      const int p = mv.location[0], q = mv.location[1];
      const std::unordered_set<int> kill{p, nxt(p, n), q, nxt(q, n)};
      Code out;
      for (int i = 0; i < n; ++i)
        if (!kill.count(i)) out.push_back(code[i]);
      return out;
    }
    case MoveKind::FO_swap: {
      if (mv.location.size() != 1 || !fo_at(code, mv.location[0]))
        bad("no adjacent over passes at the given position");
      Code out = code;
      std::swap(out[mv.location[0]], out[nxt(mv.location[0], n)]);
      return out;
    }
    case MoveKind::R3: {
      if (mv.location.size() != 3 ||
          !r3_at(code, {mv.location[0], mv.location[1], mv.location[2]}))
        bad("no admissible triangle at the given positions");
      Code out = code;
      for (int s : mv.location) std::swap(out[s], out[nxt(s, n)]);
      return out;
    }
    case MoveKind::R1_insert: {
      if (mv.location.size() != 1 || mv.location[0] < 0 || mv.location[0] > n)
        bad("gap out of range");
      if (mv.sign != 1 && mv.sign != -1) bad("sign must be +1 or -1");
      const int label = fresh_label(code);
      Code out = code;
      const Pass o{Role::Over, label, mv.sign}, u{Role::Under, label, mv.sign};
      out.insert(out.begin() + mv.location[0], {mv.over_first ? o : u, mv.over_first ? u : o});
      return out;
    }
    case MoveKind::R2_insert: {
      if (mv.location.size() != 2) bad("need two gaps");
      const int go = mv.location[0], gu = mv.location[1];
      if (go < 0 || go > n || gu < 0 || gu > n) bad("gap out of range");
      if (mv.sign != 1 && mv.sign != -1) bad("sign must be +1 or -1");
      const int la = fresh_label(code), lb = la + 1;
      Code out = code;
      out.insert(out.begin() + go,
                 {Pass{Role::Over, la, mv.sign}, Pass{Role::Over, lb, -mv.sign}});
      const int gu2 = gu >= go ? gu + 2 : gu;
      out.insert(out.begin() + gu2,
                 {Pass{Role::Under, lb, -mv.sign}, Pass{Role::Under, la, mv.sign}});
      return out;
    }
  }
  bad("unknown kind");
  return {};
}

SimplifyReport simplify(const Diagram& d, std::uint64_t budget) {
  const Code start = canonical(d.code);
  const std::string start_key = serialize(start);

  struct Entry {
    int ncross;
    std::uint64_t order;
    Code code;
    bool operator>(const Entry& o) const {
      return std::tie(ncross, order) > std::tie(o.ncross, o.order);
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  std::unordered_set<std::string> seen{start_key};
  std::unordered_map<std::string, std::pair<std::string, MoveInstance>> parent;

  heap.push({crossing_count(start), 0, start});
  std::uint64_t counter = 1, states = 0;
  Code best = start;

  auto make_report = [&](const Code& result, bool exhausted) {
    SimplifyReport rep;
    rep.result = Diagram{result, d.welded_history};
    rep.states_explored = states;
    rep.budget_exhausted = exhausted;
    std::string key = serialize(result);
    while (key != start_key) {
      const auto& [pkey, mv] = parent.at(key);
      rep.trace.push_back(mv);
      key = pkey;
    }
    std::reverse(rep.trace.begin(), rep.trace.end());
    return rep;
  };

  while (!heap.empty() && states < budget) {
    const Code cur = heap.top().code;
    heap.pop();
    ++states;
    if (cur.size() < best.size()) best = cur;
    if (cur.empty()) return make_report(best, false);
    const std::string cur_key = serialize(cur);
    for (const MoveInstance& mv : applicable_moves(cur)) {
      Code next = canonical(apply_move(cur, mv));
      std::string key = serialize(next);
      if (!seen.insert(key).second) continue;
      parent.emplace(key, std::make_pair(cur_key, mv));
      heap.push({crossing_count(next), counter++, std::move(next)});
    }
  }
  return make_report(best, !heap.empty());
}

Code replay_trace(const Code& code, const std::vector<MoveInstance>& trace) {
  Code cur = code;
  for (const MoveInstance& mv : trace) cur = apply_move(canonical(cur), mv);
  return canonical(cur);
}

}  // namespace wk
