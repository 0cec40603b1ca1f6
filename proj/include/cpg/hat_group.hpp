#pragma once

// Exact normal forms in <a,c | [a,c^n]>, which is the semidirect product
// F_n x| Z of the free group on x_1..x_n by the subscript shift.  An
// element is written uniquely as u . c^e with u a reduced word over the
// x_i: scanning an {a,c}-word left to right with a running offset d,
// a^{+-1} at offset d emits x_{(d mod n)+1}^{+-1} and c^{+-1} moves d.
//
// Multiplication shifts the right free part:
//   (u1, e1) (u2, e2) = (u1 . shift(u2, e1), e1 + e2).
//
// Equality of normal forms decides equality in the group, which is what
// certifies relator identities that hold only modulo [a,c^n].

#include <optional>
#include <stdexcept>
#include <vector>

#include "two_gen.hpp"
#include "word.hpp"

namespace cpg {

struct HatElement {
  int n = 1;
  Word u;            // reduced word over x_1..x_n
  long long e = 0;   // c-exponent

  HatElement() = default;
  HatElement(int modulus, Word free_part, long long exp)
      : n(modulus), u(std::move(free_part)), e(exp) {
    if (u.n != n) throw std::invalid_argument("hat element modulus mismatch");
  }

  friend bool operator==(const HatElement&, const HatElement&) = default;
};

inline HatElement hat_identity(int n) { return {n, Word(n), 0}; }

inline HatElement hat_rewrite(const TwoGenWord& w) {
  Word u(w.n);
  long long d = 0;
  for (const auto& l : w.letters) {
    if (l.gen == Gen2::a) {
      Letter x{mod_residue(d, w.n), l.sign};
      if (!u.letters.empty() && u.letters.back().cancels(x))
        u.letters.pop_back();
      else
        u.letters.push_back(x);
    } else {
      d += l.sign;
    }
  }
  return {w.n, std::move(u), d};
}

inline HatElement hat_multiply(const HatElement& g, const HatElement& h) {
  if (g.n != h.n) throw std::invalid_argument("hat_multiply: modulus mismatch");
  return {g.n, free_reduce(concat(g.u, shift(h.u, g.e))), g.e + h.e};
}

inline HatElement hat_inverse(const HatElement& g) {
  return {g.n, shift(inverse(g.u), -g.e), -g.e};
}

inline HatElement hat_from_free(const Word& u, long long e = 0) {
  return {u.n, free_reduce(u), e};
}

// Exact check of the witness equation w g w^-1 == h.
inline bool hat_conjugation_verifies(const HatElement& w, const HatElement& g,
                                     const HatElement& h) {
  return hat_multiply(hat_multiply(w, g), hat_inverse(w)) == h;
}

// Bounded witness search.  When a witness is supplied, only verifies it
// (sound and complete as a verifier).  Otherwise candidates of the form
// prefix(u_g) . c^d and prefix(u_h) . c^d, together with their
// inverses, are tried for |d| <= bound.  Absence of a witness within
// the bound is "unknown", never "not conjugate"; std::nullopt encodes
// unknown when no witness was supplied.
inline std::optional<HatElement> hat_conjugate(
    const HatElement& g, const HatElement& h, long long bound,
    const std::optional<HatElement>& witness = std::nullopt) {
  if (g.n != h.n) throw std::invalid_argument("hat_conjugate: modulus mismatch");
  if (witness) {
    if (hat_conjugation_verifies(*witness, g, h)) return *witness;
    return std::nullopt;
  }
  auto try_prefixes = [&](const Word& u) -> std::optional<HatElement> {
    for (std::size_t len = 0; len <= u.letters.size(); ++len) {
      Word prefix(u.n);
      prefix.letters.assign(u.letters.begin(), u.letters.begin() + len);
      for (long long d = -bound; d <= bound; ++d) {
        HatElement cand{g.n, prefix, d};
        if (hat_conjugation_verifies(cand, g, h)) return cand;
        HatElement inv = hat_inverse(cand);
        if (hat_conjugation_verifies(inv, g, h)) return inv;
      }
    }
    return std::nullopt;
  };
  if (auto w = try_prefixes(g.u)) return w;
  if (auto w = try_prefixes(h.u)) return w;
  return std::nullopt;
}

}  // namespace cpg
