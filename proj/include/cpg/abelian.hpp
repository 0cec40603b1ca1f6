#pragma once

// Abelianization invariants.
//
// relation_matrix turns a presentation into its integer relation matrix
// (rows = relators, columns = generators, entries = exponent sums); for
// a cyclic presentation this matrix is the circulant of the representer
// polynomial f(t) = sum_j (exponent sum of x_{1+j}) t^j.
//
// smith_normal_form computes the elementary divisors.  Entries grow
// during elimination, so the int64 fast path detects overflow and the
// computation falls back to arbitrary-precision integers.
//
// ab_order_circulant computes |Res(t^n - 1, f)|, the abelianization
// order of the cyclic presentation, by an exact subresultant polynomial
// remainder sequence over Z; it must agree with the Smith normal form
// order whenever that is finite.

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace cpg {

using BigInt = boost::multiprecision::cpp_int;

struct RelationMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<long long>> entries;
};

inline RelationMatrix relation_matrix(const Presentation& p) {
  RelationMatrix m;
  m.rows = p.relators.size();
  m.cols = p.generators.size();
  m.entries.assign(m.rows, std::vector<long long>(m.cols, 0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (const auto& l : p.relators[i].letters)
      m.entries[i][l.index] += l.sign;
  return m;
}

struct AbelianInvariants {
  std::vector<BigInt> divisors;  // torsion divisors d1 | d2 | ..., each > 1
  int free_rank = 0;

  bool finite() const { return free_rank == 0; }
  BigInt order() const {
    BigInt o = 1;
    for (const auto& d : divisors) o *= d;
    return o;
  }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

namespace detail {

struct SnfOverflow {};

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw SnfOverflow{};
  return r;
}
inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw SnfOverflow{};
  return r;
}
inline long long checked_neg(long long a) {
  if (a == std::numeric_limits<long long>::min()) throw SnfOverflow{};
  return -a;
}
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_neg(const BigInt& a) { return -a; }

template <class I>
std::vector<I> snf_diagonal(std::vector<std::vector<I>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<I> diag;
  std::size_t t = 0;
  auto abs_less = [](const I& x, const I& y) {
    I ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
    return ax < ay;
  };
  while (t < rows && t < cols) {
    // smallest nonzero |entry|, lowest row then column on ties
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        if (!found || abs_less(a[i][j], a[pi][pj])) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(a[t], a[pi]);
    if (pj != t)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows && clean; ++i)
      if (a[i][t] != 0) clean = false;
    for (std::size_t j = t + 1; j < cols && clean; ++j)
      if (a[t][j] != 0) clean = false;

    if (!clean) {
      // one round of reduction, then re-pick the pivot
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        I q = a[i][t] / a[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j)
            a[i][j] = checked_add(a[i][j], checked_mul(checked_neg(q), a[t][j]));
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        I q = a[t][j] / a[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i)
            a[i][j] = checked_add(a[i][j], checked_mul(checked_neg(q), a[i][t]));
      }
      continue;
    }
    // divisibility: pivot must divide the remaining submatrix
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          // fold row i into row t and continue reducing
          for (std::size_t jj = t; jj < cols; ++jj)
            a[t][jj] = checked_add(a[t][jj], a[i][jj]);
          divides = false;
        }
    if (!divides) continue;
    diag.push_back(a[t][t] < 0 ? checked_neg(a[t][t]) : a[t][t]);
    ++t;
  }
  return diag;
}

}  // namespace detail

inline AbelianInvariants smith_normal_form(const RelationMatrix& m) {
  std::vector<BigInt> diag;
  try {
    std::vector<std::vector<long long>> a = m.entries;
    auto d = detail::snf_diagonal(std::move(a));
    diag.assign(d.begin(), d.end());
  } catch (const detail::SnfOverflow&) {
    std::vector<std::vector<BigInt>> a(m.rows, std::vector<BigInt>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = m.entries[i][j];
    diag = detail::snf_diagonal(std::move(a));
  }
  AbelianInvariants out;
  for (std::size_t i = 1; i < diag.size(); ++i)
    if (diag[i] % diag[i - 1] != 0)
      throw std::logic_error("smith_normal_form: divisor chain violated");
  out.free_rank = static_cast<int>(m.cols - diag.size());
  for (const auto& d : diag)
    if (d > 1) out.divisors.push_back(d);
  return out;
}

inline AbelianInvariants abelian_invariants(const Presentation& p) {
  return smith_normal_form(relation_matrix(p));
}

// ---- integer polynomials and the resultant --------------------------------

using IntPoly = std::vector<BigInt>;  // coefficients, low degree first

inline int poly_degree(const IntPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

inline IntPoly poly_trim(IntPoly f) {
  f.resize(poly_degree(f) + 1);
  return f;
}

// Pseudo-remainder: lc(B)^{deg A - deg B + 1} A mod B, with the full
// power applied even when the degree drops by more than one at a step.
inline IntPoly poly_prem(IntPoly a, const IntPoly& b) {
  const int db = poly_degree(b);
  const BigInt lb = b[db];
  int da = poly_degree(a);
  int remaining = da - db + 1;
  while (da >= db) {
    const BigInt coef = a[da];
    for (auto& x : a) x *= lb;
    --remaining;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= coef * b[i];
    a = poly_trim(a);
    da = poly_degree(a);
  }
  for (; remaining > 0; --remaining)
    for (auto& x : a) x *= lb;
  return a;
}

// Resultant over Z by the subresultant polynomial remainder sequence;
// exact, no floating point.
inline BigInt resultant(IntPoly a, IntPoly b) {
  a = poly_trim(a);
  b = poly_trim(b);
  int da = poly_degree(a), db = poly_degree(b);
  if (da < 0 || db < 0) return 0;
  int sign = 1;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;
  }
  if (db == 0) {
    BigInt r = 1;
    for (int i = 0; i < da; ++i) r *= b[0];
    return sign * r;
  }
  BigInt g = 1, h = 1;
  while (true) {
    da = poly_degree(a);
    db = poly_degree(b);
    const int delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;
    IntPoly r = poly_prem(a, b);
    a = b;
    b = r;
    if (poly_degree(b) < 0) return 0;
    // exact divisions guaranteed by subresultant theory
    BigInt denom = g;
    for (int i = 0; i < delta; ++i) denom *= h;
    for (auto& x : b) {
      BigInt q = x / denom;
      if (q * denom != x)
        throw std::logic_error("resultant: inexact subresultant division");
      x = q;
    }
    g = a[poly_degree(a)];
    // h = g^delta h^{1-delta}
    BigInt gh = 1;
    for (int i = 0; i < delta; ++i) gh *= g;
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = gh;
    } else {
      BigInt hd = 1;
      for (int i = 0; i < delta - 1; ++i) hd *= h;
      BigInt q = gh / hd;
      if (q * hd != gh)
        throw std::logic_error("resultant: inexact h update");
      h = q;
    }
    if (poly_degree(b) == 0) {
      // S_0 = lc(b)^{deg a} / h^{deg a - 1}
      const int d = poly_degree(a);
      BigInt num = 1;
      for (int i = 0; i < d; ++i) num *= b[0];
      BigInt den = 1;
      for (int i = 0; i < d - 1; ++i) den *= h;
      BigInt q = num / den;
      if (q * den != num)
        throw std::logic_error("resultant: inexact final division");
      return sign * q;
    }
  }
}

// Representer polynomial of a defining word: coefficient of t^j is the
// exponent sum of x_{1+j}.
inline IntPoly representer_polynomial(const CyclicWord& cw) {
  IntPoly f(cw.n, BigInt(0));
  for (const auto& l : cw.w.letters) f[l.index] += l.sign;
  return f;
}

// |Res(t^n - 1, f)|; nullopt when the resultant vanishes (infinite
// abelianization).
inline std::optional<BigInt> ab_order_circulant(const CyclicWord& cw) {
  IntPoly tn(cw.n + 1, BigInt(0));
  tn[0] = -1;
  tn[cw.n] = 1;
  BigInt r = resultant(tn, representer_polynomial(cw));
  if (r == 0) return std::nullopt;
  if (r < 0) r = -r;
  return r;
}

}  // namespace cpg
