#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gauss.hpp"
#include "intmat.hpp"
#include "laurent.hpp"

namespace wk {

// One letter of a word: generator index and exponent +1 or -1.
struct Letter {
  int gen;
  int exp;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

struct Presentation {
  int ngens = 0;
  std::vector<Word> relators;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

Word inverse_word(const Word& w);
Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);

// Wirtinger presentation on arc generators. The empty code gives < x | >.
Presentation wirtinger(const Code& code);

// Display names: a..z for small presentations, g1, g2, ... beyond that;
// uppercase means inverse.
std::string generator_name(int gen, int ngens);
std::string word_str(const Word& w, int ngens);
std::string presentation_str(const Presentation& p);

IntMat exponent_matrix(const Presentation& p);  // relators x generators

// Invariant factors of the abelianization, length ngens: torsion divisors
// first (units included), then one zero per free rank.
std::vector<Int> abelianization(const Presentation& p);
int free_rank(const Presentation& p);

// Tietze simplification: cyclic reduction, de-duplication up to rotation and
// inversion, cheapest single-occurrence generator elimination, and greedy
// relator shortening by rotated products. budget caps rewrite work.
Presentation tietze_simplify(Presentation p, std::uint64_t budget = 100000);

enum class Cert { Proved, Unknown };
// Proved exactly when tietze reaches one generator and no relators. Never
// claims the negative.
Cert infinite_cyclic_certificate(const Presentation& p, std::uint64_t budget = 100000);

IntMat coloring_matrix(const Code& code);  // crossings x arcs

struct ColoringCount {
  Int total;
  bool nontrivial;  // total > m
};
ColoringCount coloring_count(const Code& code, long m);  // BadModulus if m < 2

// Smallest odd m in 3..m_max with nontrivial m-colorings.
std::optional<long> dihedral_nontriviality(const Code& code, long m_max = 21);

// Alexander polynomial by Fox calculus with every generator sent to t,
// normalized to lowest degree 0 and positive leading coefficient. Requires
// abelianization of free rank exactly one (NotRankOne otherwise).
Laurent alexander_from_presentation(const Presentation& p);
Laurent alexander(const Code& code);

}  // namespace wk
