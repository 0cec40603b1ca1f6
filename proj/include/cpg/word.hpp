#pragma once

// Words in the free group on x_1..x_n with cyclically indexed subscripts:
// free and cyclic reduction, the subscript shift, substitution
// homomorphisms, and equivalence of defining words up to shift,
// rotation and inversion.
//
// Subscripts are stored as 0-based residues and printed 1-based, so the
// letter with index i stands for x_{i+1}.  All subscript arithmetic is
// reduced mod n on entry.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpg {

inline int mod_residue(long long value, long long n) {
  if (n <= 0) throw std::invalid_argument("modulus must be positive");
  long long r = value % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

struct Letter {
  int index = 0;  // 0-based residue
  int sign = +1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;

  Letter inverse() const { return {index, -sign}; }
  bool cancels(const Letter& o) const {
    return index == o.index && sign == -o.sign;
  }
};

// Generic one-pass free reduction; works for any letter type exposing
// cancels().  The result is independent of cancellation order.
template <class L>
std::vector<L> reduce_letter_run(const std::vector<L>& in) {
  std::vector<L> out;
  out.reserve(in.size());
  for (const auto& l : in) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

struct Word {
  int n = 1;  // subscript modulus
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(int modulus) : n(modulus) {
    if (modulus < 1) throw std::invalid_argument("word modulus must be >= 1");
  }
  Word(int modulus, std::vector<Letter> ls) : Word(modulus) {
    letters = std::move(ls);
    for (const auto& l : letters) {
      if (l.index < 0 || l.index >= n || (l.sign != 1 && l.sign != -1))
        throw std::invalid_argument("letter out of range for modulus");
    }
  }

  friend bool operator==(const Word&, const Word&) = default;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  // Appends x_{subscript}^{sign} with the 1-based subscript reduced mod n.
  Word& push(long long subscript, int sign) {
    letters.push_back({mod_residue(subscript - 1, n), sign});
    return *this;
  }
  // Appends x_{subscript}^{exponent}, expanded letter by letter.
  Word& push_power(long long subscript, long long exponent) {
    int s = exponent >= 0 ? +1 : -1;
    for (long long i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i)
      push(subscript, s);
    return *this;
  }
};

inline Word word_from(int n, std::initializer_list<std::pair<long long, int>> ls) {
  Word w(n);
  for (auto [sub, sign] : ls) w.push(sub, sign);
  return w;
}

inline Word inverse(const Word& w) {
  Word r(w.n);
  r.letters.reserve(w.length());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(it->inverse());
  return r;
}

inline Word concat(const Word& a, const Word& b) {
  if (a.n != b.n) throw std::invalid_argument("concat: modulus mismatch");
  Word r(a.n);
  r.letters = a.letters;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

inline Word free_reduce(const Word& w) {
  Word r(w.n);
  r.letters = reduce_letter_run(w.letters);
  return r;
}

inline bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    if (w.letters[i - 1].cancels(w.letters[i])) return false;
  return true;
}

// Splits free_reduce(w) as conjugator . core . conjugator^-1 with a
// cyclically reduced core.
struct CyclicReduction {
  Word core;
  Word conjugator;
};

inline CyclicReduction cyclically_reduce(const Word& w) {
  Word fr = free_reduce(w);
  Word conj(w.n);
  std::size_t lo = 0, hi = fr.letters.size();
  while (hi - lo >= 2 && fr.letters[lo].cancels(fr.letters[hi - 1])) {
    conj.letters.push_back(fr.letters[lo]);
    ++lo;
    --hi;
  }
  Word core(w.n);
  core.letters.assign(fr.letters.begin() + lo, fr.letters.begin() + hi);
  return {std::move(core), std::move(conj)};
}

inline bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  if (w.letters.size() >= 2 && w.letters.front().cancels(w.letters.back()))
    return false;
  return true;
}

// The shift x_i -> x_{i+s}; shift(w, n) == w.
inline Word shift(const Word& w, long long s) {
  Word r(w.n);
  r.letters.reserve(w.length());
  for (const auto& l : w.letters)
    r.letters.push_back({mod_residue(l.index + s, w.n), l.sign});
  return r;
}

// Cyclic permutation moving the first r letters to the end.
inline Word rotate(const Word& w, std::size_t r) {
  if (w.letters.empty()) return w;
  r %= w.letters.size();
  Word out(w.n);
  out.letters.reserve(w.length());
  out.letters.insert(out.letters.end(), w.letters.begin() + r, w.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + r);
  return out;
}

struct ExponentData {
  std::vector<long long> per_generator;  // indexed by 0-based residue
  long long total = 0;
  bool admissible = false;  // total == +-1
};

inline ExponentData exponent_data(const Word& w) {
  ExponentData d;
  d.per_generator.assign(w.n, 0);
  for (const auto& l : w.letters) {
    d.per_generator[l.index] += l.sign;
    d.total += l.sign;
  }
  d.admissible = (d.total == 1 || d.total == -1);
  return d;
}

// Homomorphic image of w under x_{i+1} -> images[i]; the result is
// freely reduced.  Works for image type Word as well as for the
// two-generator words defined in two_gen.hpp (anything with n, letters,
// and letter-level cancels()).
template <class WordT>
WordT substitute(const Word& w, const std::vector<WordT>& images) {
  if (static_cast<int>(images.size()) != w.n)
    throw std::invalid_argument("substitute: need one image per generator");
  WordT out;
  out.n = images.empty() ? 1 : images.front().n;
  for (const auto& l : w.letters) {
    const WordT& im = images[l.index];
    if (l.sign > 0) {
      for (const auto& x : im.letters) {
        if (!out.letters.empty() && out.letters.back().cancels(x))
          out.letters.pop_back();
        else
          out.letters.push_back(x);
      }
    } else {
      for (auto it = im.letters.rbegin(); it != im.letters.rend(); ++it) {
        auto x = it->inverse();
        if (!out.letters.empty() && out.letters.back().cancels(x))
          out.letters.pop_back();
        else
          out.letters.push_back(x);
      }
    }
  }
  return out;
}

// Witness that w2 is a cyclic permutation of shift(w1, shift_by) or of
// its inverse: rotate(maybe_inverse(shift(w1, shift_by)), rotation) == w2.
struct CyclicWitness {
  int shift_by = 0;
  bool inverted = false;
  int rotation = 0;
};

inline std::optional<CyclicWitness> cyclic_equivalent(const Word& w1,
                                                      const Word& w2) {
  if (w1.n != w2.n) return std::nullopt;
  if (w1.length() != w2.length()) return std::nullopt;
  if (w1.empty()) return CyclicWitness{0, false, 0};
  const std::size_t len = w1.length();
  for (int s = 0; s < w1.n; ++s) {
    Word shifted = shift(w1, s);
    for (int inv = 0; inv < 2; ++inv) {
      Word cand = inv ? inverse(shifted) : shifted;
      for (std::size_t r = 0; r < len; ++r) {
        if (rotate(cand, r) == w2)
          return CyclicWitness{s, inv != 0, static_cast<int>(r)};
      }
    }
  }
  return std::nullopt;
}

// Equality of cyclic words: rotation only, no shift, no inversion.
inline bool cyclic_rotation_equal(const Word& w1, const Word& w2) {
  if (w1.n != w2.n || w1.length() != w2.length()) return false;
  if (w1.empty()) return true;
  for (std::size_t r = 0; r < w1.length(); ++r)
    if (rotate(w1, r) == w2) return true;
  return false;
}

}  // namespace cpg
