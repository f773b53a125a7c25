#include "presentation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "error.hpp"

namespace wk {

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.exp = -l.exp;
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word v = free_reduce(w);
  while (v.size() >= 2 && v.front().gen == v.back().gen && v.front().exp == -v.back().exp) {
    v.erase(v.begin());
    v.pop_back();
    v = free_reduce(v);
  }
  return v;
}

Presentation wirtinger(const Code& code) {
  if (code.empty()) return Presentation{1, {}};
  const std::vector<int> amap = arc_map(code);
  const int n = static_cast<int>(code.size());
  Presentation p;
  p.ngens = arc_count(code);
  for (int label : crossing_labels(code)) {
    int opos = -1, upos = -1;
    for (int i = 0; i < n; ++i) {
      if (code[i].label != label) continue;
      (code[i].role == Role::Over ? opos : upos) = i;
    }
    const int a = amap[opos];            // over arc
    const int b = amap[upos];            // incoming under arc
    const int c = amap[(upos + 1) % n];  // outgoing under arc
    const Word rel = code[opos].sign > 0
                         ? Word{{c, 1}, {a, 1}, {b, -1}, {a, -1}}
                         : Word{{c, 1}, {a, -1}, {b, -1}, {a, 1}};
    p.relators.push_back(free_reduce(rel));
  }
  return p;
}

std::string generator_name(int gen, int ngens) {
  if (ngens <= 26) return std::string(1, static_cast<char>('a' + gen));
  return "g" + std::to_string(gen + 1);
}

std::string word_str(const Word& w, int ngens) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    std::string name = generator_name(l.gen, ngens);
    if (l.exp < 0)
      for (char& ch : name) ch = static_cast<char>(std::toupper(ch));
    out += name;
  }
  return out;
}

std::string presentation_str(const Presentation& p) {
  std::string out = "< ";
  for (int g = 0; g < p.ngens; ++g) {
    if (g) out += ", ";
    out += generator_name(g, p.ngens);
  }
  out += " |";
  for (size_t i = 0; i < p.relators.size(); ++i) {
    out += i ? ", " : " ";
    out += word_str(p.relators[i], p.ngens);
  }
  out += " >";
  return out;
}

IntMat exponent_matrix(const Presentation& p) {
  IntMat m(static_cast<int>(p.relators.size()), p.ngens);
  for (int r = 0; r < m.rows(); ++r)
    for (const Letter& l : p.relators[r]) m.at(r, l.gen) += l.exp;
  return m;
}

std::vector<Int> abelianization(const Presentation& p) {
  std::vector<Int> d = smith_diagonal(exponent_matrix(p));
  d.resize(static_cast<size_t>(p.ngens), Int(0));
  return d;
}

int free_rank(const Presentation& p) {
  int zeros = 0;
  for (const Int& x : abelianization(p)) zeros += x == 0;
  return zeros;
}

namespace {

// canonical form of a cyclic word up to rotation and inversion
Word cyc_canon(const Word& w) {
  const Word r = cyclic_reduce(w);
  if (r.empty()) return r;
  Word best;
  for (const Word& v : {r, inverse_word(r)})
    for (size_t i = 0; i < v.size(); ++i) {
      Word cand(v.begin() + i, v.end());
      cand.insert(cand.end(), v.begin(), v.begin() + i);
      if (best.empty() || cand < best) best = std::move(cand);
    }
  return best;
}

Word substitute(const Word& w, int gen, const Word& rep) {
  Word out;
  const Word repinv = inverse_word(rep);
  for (const Letter& l : w) {
    if (l.gen == gen) {
      const Word& r = l.exp == 1 ? rep : repinv;
      out.insert(out.end(), r.begin(), r.end());
    } else {
      out.push_back(l);
    }
  }
  return free_reduce(out);
}

}  // namespace

Presentation tietze_simplify(Presentation p, std::uint64_t budget) {
  int ngens = p.ngens;
  std::vector<Word> rels;
  for (const Word& w : p.relators) rels.push_back(cyclic_reduce(w));
  std::uint64_t ops = 0;

  bool changed = true;
  while (changed && ops < budget) {
    changed = false;
    for (Word& w : rels) w = cyclic_reduce(w);
    std::erase_if(rels, [](const Word& w) { return w.empty(); });
    {
      std::vector<Word> seen, ded;
      for (const Word& w : rels) {
        Word k = cyc_canon(w);
        if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
          seen.push_back(std::move(k));
          ded.push_back(w);
        }
      }
      rels = std::move(ded);
    }

    // cheapest (relator, generator) pair where the generator occurs exactly
    // once in that relator; the relator then solves for the generator
    struct Pick {
      std::uint64_t cost;
      size_t ri;
      int gen;
    };
    std::optional<Pick> best;
    for (size_t ri = 0; ri < rels.size(); ++ri) {
      const Word& w = rels[ri];
      std::vector<int> order;
      std::map<int, int> cnt;
      for (const Letter& l : w) {
        if (!cnt.count(l.gen)) order.push_back(l.gen);
        ++cnt[l.gen];
      }
      for (int g : order) {
        if (cnt[g] != 1) continue;
        std::uint64_t occ_else = 0;
        for (size_t rj = 0; rj < rels.size(); ++rj) {
          if (rj == ri) continue;
          for (const Letter& l : rels[rj]) occ_else += l.gen == g;
        }
        const std::uint64_t cost = (w.size() - 1) * std::max<std::uint64_t>(occ_else, 1);
        if (!best || cost < best->cost) best = Pick{cost, ri, g};
      }
    }
    ++ops;
    if (best) {
      Word w = rels[best->ri];
      size_t at = 0;
      while (w[at].gen != best->gen) ++at;
      std::rotate(w.begin(), w.begin() + at, w.end());
      const Word rest(w.begin() + 1, w.end());
      const Word rep = w[0].exp == 1 ? inverse_word(rest) : rest;
      std::vector<Word> next;
      for (size_t rj = 0; rj < rels.size(); ++rj) {
        if (rj == best->ri) continue;
        next.push_back(cyclic_reduce(substitute(rels[rj], best->gen, rep)));
      }
      for (Word& v : next)
        for (Letter& l : v)
          if (l.gen > best->gen) --l.gen;
      rels = std::move(next);
      --ngens;
      changed = true;
      continue;
    }

    // greedy shortening: replace a relator by a strictly shorter cyclic
    // product with a rotation of another relator or its inverse
    bool improved = false;
    for (size_t i = 0; i < rels.size() && !improved; ++i) {
      const size_t len_i = rels[i].size();
      for (size_t j = 0; j < rels.size() && !improved; ++j) {
        if (i == j) continue;
        for (const Word& v : {rels[j], inverse_word(rels[j])}) {
          for (size_t ri = 0; ri < len_i && !improved; ++ri) {
            Word wi(rels[i].begin() + ri, rels[i].end());
            wi.insert(wi.end(), rels[i].begin(), rels[i].begin() + ri);
            for (size_t rj = 0; rj < v.size(); ++rj) {
              if (++ops >= budget) break;
              Word vj(v.begin() + rj, v.end());
              vj.insert(vj.end(), v.begin(), v.begin() + rj);
              Word prod = wi;
              prod.insert(prod.end(), vj.begin(), vj.end());
              prod = cyclic_reduce(prod);
              if (prod.size() < len_i) {
                rels[i] = std::move(prod);
                improved = true;
                break;
              }
            }
            if (ops >= budget) break;
          }
          if (improved || ops >= budget) break;
        }
      }
    }
    if (improved) changed = true;
  }

  for (Word& w : rels) w = cyclic_reduce(w);
  std::erase_if(rels, [](const Word& w) { return w.empty(); });
  return Presentation{ngens, std::move(rels)};
}

Cert infinite_cyclic_certificate(const Presentation& p, std::uint64_t budget) {
  const Presentation s = tietze_simplify(p, budget);
  return s.ngens == 1 && s.relators.empty() ? Cert::Proved : Cert::Unknown;
}

IntMat coloring_matrix(const Code& code) {
  const std::vector<int> labels = crossing_labels(code);
  IntMat m(static_cast<int>(labels.size()), arc_count(code));
  if (labels.empty()) return m;  // 0 x 1
  const std::vector<int> amap = arc_map(code);
  const int n = static_cast<int>(code.size());
  for (int r = 0; r < m.rows(); ++r) {
    int opos = -1, upos = -1;
    for (int i = 0; i < n; ++i) {
      if (code[i].label != labels[r]) continue;
      (code[i].role == Role::Over ? opos : upos) = i;
    }
    m.at(r, amap[(upos + 1) % n]) += 1;  // out
    m.at(r, amap[upos]) += 1;           // in
    m.at(r, amap[opos]) -= 2;           // over
  }
  return m;
}

ColoringCount coloring_count(const Code& code, long m) {
  if (m < 2) fail(Errc::BadModulus, "colorings need modulus >= 2, got " + std::to_string(m));
  const IntMat mat = coloring_matrix(code);
  const std::vector<Int> diag = smith_diagonal(mat);
  Int total = 1;
  const Int mm(m);
  for (int j = 0; j < mat.cols(); ++j) {
    const Int d = j < static_cast<int>(diag.size()) ? diag[j] : Int(0);
    if (d == 0) {
      total *= mm;
    } else {
      Int g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), mm.get_mpz_t());
      total *= g;
    }
  }
  return ColoringCount{total, total > mm};
}

std::optional<long> dihedral_nontriviality(const Code& code, long m_max) {
  for (long m = 3; m <= m_max; m += 2)
    if (coloring_count(code, m).nontrivial) return m;
  return std::nullopt;
}

namespace {

// abelianized Fox derivative row of a relator, every generator sent to t
std::vector<Laurent> fox_row(const Word& w, int ngens) {
  std::vector<Laurent> row(static_cast<size_t>(ngens));
  int s = 0;
  for (const Letter& l : w) {
    if (l.exp == 1) {
      row[l.gen] += Laurent::term(1, s);
      ++s;
    } else {
      --s;
      row[l.gen] += Laurent::term(-1, s);
    }
  }
  return row;
}

void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> sel(static_cast<size_t>(k));
  std::function<void(int, int)> rec = [&](int from, int got) {
    if (got == k) {
      visit(sel);
      return;
    }
    for (int i = from; i <= n - (k - got); ++i) {
      sel[got] = i;
      rec(i + 1, got + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

Laurent alexander_from_presentation(const Presentation& p) {
  std::vector<Word> rels;
  for (const Word& w : p.relators) {
    Word r = cyclic_reduce(w);
    if (!r.empty()) rels.push_back(std::move(r));
  }
  const int g = p.ngens;
  if (g == 1 && rels.empty()) return Laurent::one();
  if (free_rank(Presentation{g, rels}) != 1)
    fail(Errc::NotRankOne, "alexander polynomial needs abelianization of free rank 1");

  std::vector<std::vector<Laurent>> M;
  for (const Word& w : rels) M.push_back(fox_row(w, g));
  const int r = static_cast<int>(rels.size());
  if (r < g - 1) return Laurent();  // the ideal is zero

  Laurent best;
  bool have = false, done = false;
  subsets(r, g - 1, [&](const std::vector<int>& rowsel) {
    if (done) return;
    subsets(g, g - 1, [&](const std::vector<int>& colsel) {
      if (done) return;
      std::vector<std::vector<Laurent>> sub;
      for (int i : rowsel) {
        std::vector<Laurent> row;
        for (int j : colsel) row.push_back(M[i][j]);
        sub.push_back(std::move(row));
      }
      const Laurent d = det_bareiss(std::move(sub));
      if (d.is_zero()) return;
      best = have ? Laurent::gcd(best, d) : d.normalized();
      have = true;
      if (best.is_one()) done = true;
    });
  });
  return have ? best : Laurent();
}

Laurent alexander(const Code& code) { return alexander_from_presentation(wirtinger(code)); }

}  // namespace wk
