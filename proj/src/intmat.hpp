#pragma once
#include <gmpxx.h>

#include <vector>

namespace wk {

using Int = mpz_class;

class IntMat {
public:
  IntMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// Diagonal of the Smith normal form: nonnegative entries, each dividing the
// next, zeros last, length min(rows, cols).
std::vector<Int> smith_diagonal(IntMat m);

}  // namespace wk
