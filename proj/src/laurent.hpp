#pragma once
#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace wk {

using Int = mpz_class;

// Laurent polynomial in one variable t over the integers. Kept sparse; no
// stored zero coefficients.
class Laurent {
public:
  Laurent() = default;  // zero
  static Laurent constant(Int c);
  static Laurent term(Int c, int deg);  // c * t^deg
  static Laurent one() { return constant(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_unit() const;   // +-t^k
  int lo() const;         // lowest degree, nonzero only
  int hi() const;         // highest degree, nonzero only
  Int coeff(int deg) const;
  Int leading() const;    // coefficient at hi()

  Laurent operator-() const;
  Laurent operator+(const Laurent&) const;
  Laurent operator-(const Laurent&) const;
  Laurent operator*(const Laurent&) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend bool operator==(const Laurent&, const Laurent&) = default;

  Laurent shifted(int k) const;  // times t^k
  Int content() const;           // gcd of coefficients, nonnegative
  Laurent primitive() const;

  // exact division; the caller promises b | a (Bareiss guarantees this)
  static Laurent divexact(const Laurent& a, const Laurent& b);
  // gcd up to units, returned with lowest degree 0 and positive leading
  // coefficient (primitive pseudo-remainder sequence)
  static Laurent gcd(const Laurent& a, const Laurent& b);

  // unit-normalize: lowest degree 0, leading coefficient positive
  Laurent normalized() const;
  // coefficients from lo() to hi(), lowest first; zero gives {}
  std::vector<Int> coeff_vector() const;
  std::string str() const;  // e.g. "1 - t + t^2"

private:
  std::map<int, Int> c_;
  void put(int deg, Int v);
};

// Fraction-free determinant of a square Laurent matrix.
Laurent det_bareiss(std::vector<std::vector<Laurent>> m);

}  // namespace wk
