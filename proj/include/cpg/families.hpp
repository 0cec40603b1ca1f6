#pragma once

// The defining-word families handled by the toolkit:
//
//   H_n(m,k)               w = x_1 x_{1+m} x_{1+k}^-1  (groups of
//                          Fibonacci type; F(2,n) = H_n(1,2),
//                          S(2,n) = H_n(2,1))
//   G^r_{n,k}(q ; eps)     w = x_1^{e0} x_{1+q1}^{e1} .. x_{1+qr}^{er}
//                          (x_{1+k}^{e0} .. x_{1+k+q_{r-1}}^{e_{r-1}})^-1
//   L_n(p_0..p_{r-1})      the positive-tail tadpole family, with the
//                          convention p_r = -1 built in
//
// together with the parameter conversions identifying L_n(p) with the
// k = 1, all-exponents-1 subfamily of G^r, the alternative y-generator
// presentation available when eps_r = 1, recognition of
// alternating-sign defining words, and a catalog of named words from
// the literature (G_1(n), H_1(n), G(l,n), generalised Sieradski).

#include <stdexcept>
#include <string>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace cpg {

struct HnkParams {
  int n = 2;
  long long m = 1;
  long long k = 2;
};

struct GnkParams {
  int n = 2;
  long long k = 1;
  std::vector<long long> q;    // q_1..q_r
  std::vector<long long> eps;  // eps_0..eps_r

  int r() const { return static_cast<int>(q.size()); }
  bool admissible() const {
    return !eps.empty() && (eps.back() == 1 || eps.back() == -1);
  }
};

struct LnParams {
  int n = 2;
  std::vector<long long> p;  // p_0..p_{r-1}; p_r = -1 is implicit

  int r() const { return static_cast<int>(p.size()); }
};

inline CyclicWord family_hnk(const HnkParams& P) {
  Word w(P.n);
  w.push(1, +1).push(1 + P.m, +1).push(1 + P.k, -1);
  return CyclicWord(P.n, free_reduce(w));
}

inline CyclicWord family_gnk(const GnkParams& P) {
  const int r = P.r();
  if (r < 1 || static_cast<int>(P.eps.size()) != r + 1)
    throw std::invalid_argument("family_gnk: need q_1..q_r and eps_0..eps_r");
  Word w(P.n);
  w.push_power(1, P.eps[0]);
  for (int j = 1; j <= r; ++j) w.push_power(1 + P.q[j - 1], P.eps[j]);
  Word tail(P.n);
  tail.push_power(1 + P.k, P.eps[0]);
  for (int j = 1; j <= r - 1; ++j)
    tail.push_power(1 + P.k + P.q[j - 1], P.eps[j]);
  w = concat(w, inverse(tail));
  return CyclicWord(P.n, free_reduce(w));
}

inline CyclicWord family_ln(const LnParams& P) {
  const int r = P.r();
  if (r < 1) throw std::invalid_argument("family_ln: need at least p_0");
  const long long p_r = -1;
  Word w(P.n);
  for (int j = 0; j < r; ++j) w.push(P.p[j] + j, +1);
  w.push(p_r + r, +1);
  Word tail(P.n);
  for (int j = 0; j < r; ++j) tail.push(P.p[j] + j + 1, +1);
  w = concat(w, inverse(tail));
  return CyclicWord(P.n, free_reduce(w));
}

// L_n(p) equals the k = 1, all-exponents-1 subfamily of G^r_{n,k}; the
// defining words agree up to the shift x_i -> x_{i + (q_r - r + 2)}.
inline GnkParams ln_to_gnk(const LnParams& P) {
  const int r = P.r();
  GnkParams out;
  out.n = P.n;
  out.k = 1;
  out.q.reserve(r);
  for (int j = 1; j <= r - 1; ++j) out.q.push_back(j + (P.p[j] - P.p[0]));
  out.q.push_back(r - 1 - P.p[0]);  // r + p_r - p_0 with p_r = -1
  out.eps.assign(r + 1, 1);
  return out;
}

inline LnParams gnk_to_ln(const GnkParams& P) {
  const int r = P.r();
  if (P.k != 1)
    throw std::invalid_argument("gnk_to_ln: conversion needs k = 1");
  for (long long e : P.eps)
    if (e != 1)
      throw std::invalid_argument("gnk_to_ln: conversion needs all eps = 1");
  LnParams out;
  out.n = P.n;
  const long long qr = P.q[r - 1];
  out.p.push_back((r - 1) - qr);
  for (int j = 1; j <= r - 1; ++j)
    out.p.push_back(P.q[j - 1] - j + (r - 1) - qr);
  return out;
}

// The y-generator presentation of G^r_{n,k}(q; eps) available when
// eps_r = 1:
//   (y_1^-1 y_{1+k})^{e0} (y_{1+q1}^-1 y_{1+q1+k})^{e1} ...
//   (y_{1+q_{r-1}}^-1 y_{1+q_{r-1}+k})^{e_{r-1}} y_{1+q_r}^-1
inline CyclicWord gnk_y_form(const GnkParams& P) {
  if (P.eps.empty() || P.eps.back() != 1)
    throw std::invalid_argument("gnk_y_form: needs eps_r = 1");
  const int r = P.r();
  Word w(P.n);
  auto push_block = [&](long long base, long long e) {
    Word block(P.n);
    block.push(base, -1).push(base + P.k, +1);
    const Word use = e >= 0 ? block : inverse(block);
    for (long long i = 0; i < (e >= 0 ? e : -e); ++i) w = concat(w, use);
  };
  push_block(1, P.eps[0]);
  for (int j = 1; j <= r - 1; ++j) push_block(1 + P.q[j - 1], P.eps[j]);
  w.push(1 + P.q[r - 1], -1);
  return CyclicWord(P.n, free_reduce(w));
}

// Matches w, up to a cyclic rotation, against the alternating-sign shape
//   y_1^-1 y_{1+l_1} y_{1+l_2}^-1 ... y_{1+l_{s-1}} y_{1+l_s}^-1
// (odd length, signs strictly alternating, first and last negative,
// first subscript 1).  Returns l_1..l_s as 1-based subscripts.
inline std::optional<std::vector<int>> recognize_alternating(const Word& w) {
  const std::size_t len = w.length();
  if (len < 3 || len % 2 == 0) return std::nullopt;
  for (std::size_t rot = 0; rot < len; ++rot) {
    Word cand = rotate(w, rot);
    if (cand.letters[0].index != 0 || cand.letters[0].sign != -1) continue;
    bool ok = true;
    for (std::size_t i = 0; i < len; ++i) {
      int want = (i % 2 == 0) ? -1 : +1;
      if (cand.letters[i].sign != want) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<int> ls;
    ls.reserve(len - 1);
    for (std::size_t i = 1; i < len; ++i) {
      // subscript of letter i is 1 + l_i, so l_i = index (as 1..n)
      int idx = cand.letters[i].index;
      ls.push_back(idx == 0 ? w.n : idx);
    }
    return ls;
  }
  return std::nullopt;
}

// ---- catalog words -------------------------------------------------------

inline CyclicWord catalog_g1(int n, int form) {
  Word w(n);
  if (form == 1) {
    w.push(1, -1).push(2, +1).push(1, -1).push(2, +1).push(n, +1).push(1, -1).push(n, +1);
  } else if (form == 2) {
    w.push(1, -1).push(n, +1).push(1, -1).push(n, +1).push(n - 1, -1).push(n, +1).push(n - 1, -1);
  } else {
    throw std::invalid_argument("catalog_g1: form must be 1 or 2");
  }
  return CyclicWord(n, w);
}

inline CyclicWord catalog_h1(int n, int form) {
  Word w(n);
  if (form == 1) {
    w.push(1, -1).push(2, +1).push(1, -1).push(2, +1);
    w.push(1, -1).push(1, -1).push(n, +1).push(1, -1).push(n, +1);
  } else if (form == 2) {
    w.push(1, -1).push(n, +1).push(1, -1).push(n, +1);
    w.push(1, -1).push(2, +1).push(1, -1).push(2, +1).push(1, -1);
  } else {
    throw std::invalid_argument("catalog_h1: form must be 1 or 2");
  }
  return CyclicWord(n, w);
}

inline CyclicWord catalog_gl(int l, int n, int form) {
  if (l < 2) throw std::invalid_argument("catalog_gl: need l >= 2");
  Word w(n);
  if (l % 2 == 0) {
    const int h = (l - 2) / 2;
    if (form == 1) {
      w.push(1, -1);
      for (int i = 0; i < h; ++i) w.push(2, +1).push(1, -1);
      w.push(2, +1);
      for (int i = 0; i < h; ++i) w.push(n, +1).push(1, -1);
      w.push(n, +1);
    } else if (form == 2) {
      for (int i = 0; i < h; ++i) w.push(1, -1).push(2, +1);
      w.push(1, -1).push(2, +1);
      for (int i = 0; i < h; ++i) w.push(3, -1).push(2, +1);
      w.push(3, -1);
    } else {
      throw std::invalid_argument("catalog_gl: form must be 1 or 2");
    }
  } else {
    const int h = (l - 1) / 2;
    if (form == 1) {
      w.push(1, +1);
      for (int i = 0; i < h; ++i) w.push(2, -1).push(1, +1);
      for (int i = 0; i < h; ++i) w.push(n, -1).push(1, +1);
    } else if (form == 2) {
      for (int i = 0; i < h; ++i) w.push(1, -1).push(n, +1);
      for (int i = 0; i < h; ++i) w.push(1, -1).push(2, +1);
      w.push(1, -1);
    } else {
      throw std::invalid_argument("catalog_gl: form must be 1 or 2");
    }
  }
  return CyclicWord(n, w);
}

// Generalised Sieradski word (x_1 x_3 ... x_{2r-1})(x_2 x_4 ... x_{2r-2})^-1.
inline CyclicWord catalog_sieradski(int r, int n) {
  if (r < 2) throw std::invalid_argument("catalog_sieradski: need r >= 2");
  Word w(n);
  for (int i = 1; i <= r; ++i) w.push(2 * i - 1, +1);
  Word tail(n);
  for (int i = 1; i <= r - 1; ++i) tail.push(2 * i, +1);
  w = concat(w, inverse(tail));
  return CyclicWord(n, free_reduce(w));
}

// Dispatcher used by the command line: name in
// {g1, h1, gl, sieradski}, with params as the builders above expect.
inline CyclicWord family_catalog(const std::string& name,
                                 const std::vector<long long>& params) {
  auto need = [&](std::size_t c) {
    if (params.size() != c)
      throw std::invalid_argument("family_catalog: wrong parameter count for " + name);
  };
  if (name == "g1") {
    need(2);
    return catalog_g1(static_cast<int>(params[0]), static_cast<int>(params[1]));
  }
  if (name == "h1") {
    need(2);
    return catalog_h1(static_cast<int>(params[0]), static_cast<int>(params[1]));
  }
  if (name == "gl") {
    need(3);
    return catalog_gl(static_cast<int>(params[0]), static_cast<int>(params[1]),
                      static_cast<int>(params[2]));
  }
  if (name == "sieradski") {
    need(2);
    return catalog_sieradski(static_cast<int>(params[0]),
                             static_cast<int>(params[1]));
  }
  throw std::invalid_argument("family_catalog: unknown family " + name);
}

}  // namespace cpg
