#include "laurent.hpp"

#include <cassert>

namespace wk {

void Laurent::put(int deg, Int v) {
  if (v != 0) c_[deg] = std::move(v);
}

Laurent Laurent::constant(Int c) { return term(std::move(c), 0); }

Laurent Laurent::term(Int c, int deg) {
  Laurent p;
  p.put(deg, std::move(c));
  return p;
}

bool Laurent::is_one() const { return c_.size() == 1 && coeff(0) == 1; }

bool Laurent::is_unit() const {
  return c_.size() == 1 && abs(c_.begin()->second) == 1;
}

int Laurent::lo() const { return c_.begin()->first; }
int Laurent::hi() const { return c_.rbegin()->first; }

Int Laurent::coeff(int deg) const {
  auto it = c_.find(deg);
  return it == c_.end() ? Int(0) : it->second;
}

Int Laurent::leading() const { return c_.rbegin()->second; }

Laurent Laurent::operator-() const {
  Laurent out;
  for (const auto& [d, v] : c_) out.c_[d] = -v;
  return out;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent out = *this;
  for (const auto& [d, v] : o.c_) {
    auto it = out.c_.find(d);
    if (it == out.c_.end()) {
      out.c_[d] = v;
    } else {
      it->second += v;
      if (it->second == 0) out.c_.erase(it);
    }
  }
  return out;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent out;
  for (const auto& [da, va] : c_)
    for (const auto& [db, vb] : o.c_) {
      auto it = out.c_.find(da + db);
      if (it == out.c_.end()) {
        Int v = va * vb;
        if (v != 0) out.c_[da + db] = std::move(v);
      } else {
        it->second += va * vb;
        if (it->second == 0) out.c_.erase(it);
      }
    }
  return out;
}

Laurent Laurent::shifted(int k) const {
  Laurent out;
  for (const auto& [d, v] : c_) out.c_[d + k] = v;
  return out;
}

Int Laurent::content() const {
  Int g = 0;
  for (const auto& [d, v] : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

Laurent Laurent::primitive() const {
  if (is_zero()) return *this;
  const Int g = content();
  Laurent out;
  for (const auto& [d, v] : c_) out.c_[d] = v / g;
  return out;
}

namespace {

// dense coefficient vector with degree 0 at index 0
std::vector<Int> dense(const Laurent& p) {
  std::vector<Int> v(static_cast<size_t>(p.hi() - p.lo()) + 1, Int(0));
  for (int d = p.lo(); d <= p.hi(); ++d) v[d - p.lo()] = p.coeff(d);
  return v;
}

Laurent from_dense(const std::vector<Int>& v, int lo) {
  Laurent out;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out += Laurent::term(v[i], lo + static_cast<int>(i));
  return out;
}

int deg(const std::vector<Int>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (v[i] != 0) return i;
  return -1;
}

}  // namespace

Laurent Laurent::divexact(const Laurent& a, const Laurent& b) {
  assert(!b.is_zero());
  if (a.is_zero()) return a;
  std::vector<Int> A = dense(a), B = dense(b);
  const int da = deg(A), db = deg(B);
  assert(da >= db);
  std::vector<Int> Q(static_cast<size_t>(da - db) + 1, Int(0));
  for (int k = da - db; k >= 0; --k) {
    const Int& top = A[k + db];
    if (top == 0) continue;
    assert(top % B[db] == 0);
    Int q = top / B[db];
    for (int j = 0; j <= db; ++j) A[k + j] -= q * B[j];
    Q[k] = std::move(q);
  }
  for (const Int& r : A) {
    assert(r == 0);
    (void)r;
  }
  return from_dense(Q, a.lo() - b.lo());
}

namespace {

// pseudo-remainder of dense polynomials, deg a >= deg b >= 0
std::vector<Int> prem(std::vector<Int> r, const std::vector<Int>& b) {
  const int db = deg(b);
  const Int& lb = b[db];
  int dr = deg(r);
  while (dr >= db) {
    const Int lr = r[dr];
    for (int i = 0; i <= dr; ++i) r[i] *= lb;
    for (int j = 0; j <= db; ++j) r[dr - db + j] -= lr * b[j];
    int nd = deg(r);
    assert(nd < dr);
    dr = nd;
  }
  r.resize(static_cast<size_t>(dr + 1));
  return r;
}

}  // namespace

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  Int cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  Laurent A = a.primitive().normalized();
  Laurent B = b.primitive().normalized();
  if (A.hi() < B.hi()) std::swap(A, B);
  while (!B.is_zero()) {
    const Laurent r = from_dense(prem(dense(A), dense(B)), 0);
    A = std::move(B);
    B = r.is_zero() ? r : r.primitive().shifted(-r.lo());
  }
  return (Laurent::constant(cg) * A).normalized();
}

Laurent Laurent::normalized() const {
  if (is_zero()) return *this;
  Laurent out = shifted(-lo());
  if (out.leading() < 0) out = -out;
  return out;
}

std::vector<Int> Laurent::coeff_vector() const {
  if (is_zero()) return {};
  std::vector<Int> v;
  for (int d = lo(); d <= hi(); ++d) v.push_back(coeff(d));
  return v;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [d, v] : c_) {
    const bool neg = v < 0;
    const Int av = abs(v);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit_coeff = av == 1 && d != 0;
    if (!unit_coeff) out += av.get_str();
    if (d != 0) {
      if (!unit_coeff) out += " ";
      out += "t";
      if (d != 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

Laurent det_bareiss(std::vector<std::vector<Laurent>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Laurent::one();
  int sign = 1;
  Laurent prev = Laurent::one();
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Laurent();
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = Laurent::divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  Laurent det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace wk
