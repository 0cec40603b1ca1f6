#pragma once

// Words over the two-generator alphabet {a, c}, interpreted inside
// <a,c | [a,c^n]>.  Exposes the syllable decomposition
// a^{alpha_1} c^{gamma_1} ... a^{alpha_k} c^{gamma_k}, the exponent sums
// of a and c, the substitution x_i -> c^{i-1} a c^{-i} presenting the
// shift HNN extension on two generators, the generator change
// a -> a c^gamma zeroing the c-exponent sum, and the read-off of a
// cyclic defining word from the syllables.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "word.hpp"

namespace cpg {

enum class Gen2 : std::uint8_t { a = 0, c = 1 };

struct Letter2 {
  Gen2 gen = Gen2::a;
  int sign = +1;

  friend bool operator==(const Letter2&, const Letter2&) = default;

  Letter2 inverse() const { return {gen, -sign}; }
  bool cancels(const Letter2& o) const {
    return gen == o.gen && sign == -o.sign;
  }
};

struct TwoGenWord {
  int n = 1;  // modulus of the ambient [a,c^n] relation
  std::vector<Letter2> letters;

  TwoGenWord() = default;
  explicit TwoGenWord(int modulus) : n(modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  }

  friend bool operator==(const TwoGenWord&, const TwoGenWord&) = default;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  TwoGenWord& push(Gen2 g, int sign) {
    letters.push_back({g, sign});
    return *this;
  }
  TwoGenWord& push_power(Gen2 g, long long exponent) {
    int s = exponent >= 0 ? +1 : -1;
    for (long long i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i)
      push(g, s);
    return *this;
  }
};

inline TwoGenWord inverse(const TwoGenWord& w) {
  TwoGenWord r(w.n);
  r.letters.reserve(w.length());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(it->inverse());
  return r;
}

inline TwoGenWord concat(const TwoGenWord& a, const TwoGenWord& b) {
  if (a.n != b.n) throw std::invalid_argument("concat: modulus mismatch");
  TwoGenWord r(a.n);
  r.letters = a.letters;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

inline TwoGenWord free_reduce(const TwoGenWord& w) {
  TwoGenWord r(w.n);
  r.letters = reduce_letter_run(w.letters);
  return r;
}

inline TwoGenWord rotate(const TwoGenWord& w, std::size_t r) {
  if (w.letters.empty()) return w;
  r %= w.letters.size();
  TwoGenWord out(w.n);
  out.letters.insert(out.letters.end(), w.letters.begin() + r, w.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + r);
  return out;
}

inline TwoGenWord cyclically_reduce_two_gen(const TwoGenWord& w) {
  TwoGenWord fr = free_reduce(w);
  std::size_t lo = 0, hi = fr.letters.size();
  while (hi - lo >= 2 && fr.letters[lo].cancels(fr.letters[hi - 1])) {
    ++lo;
    --hi;
  }
  TwoGenWord core(w.n);
  core.letters.assign(fr.letters.begin() + lo, fr.letters.begin() + hi);
  return core;
}

// Equality as cyclic words: cyclically reduce, then match a rotation.
inline bool cyclic_rotation_equal_two_gen(const TwoGenWord& a, const TwoGenWord& b) {
  TwoGenWord ra = cyclically_reduce_two_gen(a);
  TwoGenWord rb = cyclically_reduce_two_gen(b);
  if (ra.n != rb.n || ra.length() != rb.length()) return false;
  if (ra.empty()) return true;
  for (std::size_t r = 0; r < ra.length(); ++r)
    if (rotate(ra, r) == rb) return true;
  return false;
}

inline long long exponent_sum(const TwoGenWord& w, Gen2 g) {
  long long s = 0;
  for (const auto& l : w.letters)
    if (l.gen == g) s += l.sign;
  return s;
}

inline long long asum(const TwoGenWord& w) { return exponent_sum(w, Gen2::a); }
inline long long csum(const TwoGenWord& w) { return exponent_sum(w, Gen2::c); }

// One block a^{alpha} c^{gamma}.  In a decomposition, alpha may be zero
// only in the first syllable and gamma only in the last.
struct Syllable {
  long long alpha = 0;
  long long gamma = 0;
};

inline std::vector<Syllable> syllables(const TwoGenWord& w) {
  std::vector<Syllable> out;
  std::size_t i = 0;
  const auto& ls = w.letters;
  while (i < ls.size()) {
    Syllable s;
    while (i < ls.size() && ls[i].gen == Gen2::a) s.alpha += ls[i++].sign;
    while (i < ls.size() && ls[i].gen == Gen2::c) s.gamma += ls[i++].sign;
    out.push_back(s);
  }
  return out;
}

// The images x_{i+1} -> c^i a c^{-(i+1)}, i = 0..n-1.  Substituting them
// into a defining word w yields the two-generator relator W(a,c) of the
// natural HNN extension presentation <a,c | W(a,c), [a,c^n]>.
inline std::vector<TwoGenWord> shift_hnn_images(int n) {
  std::vector<TwoGenWord> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    TwoGenWord im(n);
    im.push_power(Gen2::c, i);
    im.push(Gen2::a, +1);
    im.push_power(Gen2::c, -(i + 1));
    images.push_back(std::move(im));
  }
  return images;
}

// The images a_{i+1} -> c^{-i} a c^{i}, i = 0..n-1, used when collapsing
// a tadpole LOG presentation (there the stable letter c is t_0 itself
// rather than its inverse).
inline std::vector<TwoGenWord> circuit_collapse_images(int n) {
  std::vector<TwoGenWord> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    TwoGenWord im(n);
    im.push_power(Gen2::c, -i);
    im.push(Gen2::a, +1);
    im.push_power(Gen2::c, i);
    images.push_back(std::move(im));
  }
  return images;
}

// The commutator [a, c^n] = a^-1 c^-n a c^n.
inline TwoGenWord commutator_relator(int n) {
  TwoGenWord w(n);
  w.push(Gen2::a, -1);
  w.push_power(Gen2::c, -n);
  w.push(Gen2::a, +1);
  w.push_power(Gen2::c, n);
  return w;
}

}  // namespace cpg
