#include "intmat.hpp"

#include <algorithm>

namespace wk {

namespace {

void swap_rows(IntMat& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMat& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

}  // namespace

std::vector<Int> smith_diagonal(IntMat m) {
  const int R = m.rows(), C = m.cols();
  const int K = std::min(R, C);

  for (int t = 0; t < K; ++t) {
    // move the smallest nonzero of the trailing submatrix to the pivot
    int pr = -1, pc = -1;
    for (int r = t; r < R; ++r)
      for (int c = t; c < C; ++c)
        if (m.at(r, c) != 0 &&
            (pr < 0 || mpz_cmpabs(m.at(r, c).get_mpz_t(), m.at(pr, pc).get_mpz_t()) < 0)) {
          pr = r;
          pc = c;
        }
    if (pr < 0) break;  // rest is zero
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);

    // shrink the pivot until it clears its row and column; each row or
    // column swap strictly reduces |pivot|, so this terminates
    for (bool clean = false; !clean;) {
      clean = true;
      for (int r = t + 1; r < R; ++r) {
        if (m.at(r, t) == 0) continue;
        const Int q = m.at(r, t) / m.at(t, t);
        for (int c = t; c < C; ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {
          swap_rows(m, t, r);
          clean = false;
        }
      }
      for (int c = t + 1; c < C; ++c) {
        if (m.at(t, c) == 0) continue;
        const Int q = m.at(t, c) / m.at(t, t);
        for (int r = t; r < R; ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) {
          swap_cols(m, t, c);
          clean = false;
        }
      }
    }
  }

  std::vector<Int> d(K);
  for (int i = 0; i < K; ++i) d[i] = abs(m.at(i, i));

  // enforce the divisibility chain on the diagonal; diag(a, b) is
  // equivalent to diag(gcd, lcm), and adjacent passes reach a fixpoint
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i + 1 < K; ++i) {
      const Int a = d[i], b = d[i + 1];
      const bool ok = a == 0 ? b == 0 : b % a == 0;
      if (ok) continue;
      Int g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      d[i] = g;
      d[i + 1] = g == 0 ? Int(0) : Int(a / g * b);
      changed = true;
    }
  }
  return d;
}

}  // namespace wk
