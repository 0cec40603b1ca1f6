#pragma once

// Presentation transformations between a cyclic defining word w and the
// two-generator relator of the natural HNN extension:
//
//   hnn_two_generator : w(x_1,..,x_n) -> W(a,c) = w(ac^-1, cac^-2, ...)
//   normalize_c_sum   : generator change a -> a c^gamma making csum = 0
//   derive_cyclic_word: read a defining word off the syllables of
//                       U = a^{alpha_1} c^{gamma_1} ... a^{alpha_k} c^{gamma_k}
//                       as x_1^{alpha_1} x_{1+gamma_1}^{alpha_2} ...
//
// The round trip derive . normalize . hnn recovers the input defining
// word up to shift/rotation/inversion.

#include <stdexcept>

#include "presentation.hpp"
#include "two_gen.hpp"
#include "word.hpp"

namespace cpg {

inline TwoGenWord hnn_two_generator(const CyclicWord& cw) {
  return substitute(cw.w, shift_hnn_images(cw.n));
}

// Requires asum(W) == 1; replaces a by a c^gamma with gamma = -csum(W),
// so the result has csum 0 and asum 1.
inline TwoGenWord normalize_c_sum(const TwoGenWord& w) {
  if (asum(w) != 1)
    throw std::invalid_argument("normalize_c_sum: a-exponent sum must be 1");
  const long long gamma = -csum(w);
  TwoGenWord out(w.n);
  for (const auto& l : w.letters) {
    if (l.gen == Gen2::c) {
      out.push(Gen2::c, l.sign);
    } else if (l.sign > 0) {
      out.push(Gen2::a, +1);
      out.push_power(Gen2::c, gamma);
    } else {
      out.push_power(Gen2::c, -gamma);
      out.push(Gen2::a, -1);
    }
  }
  return free_reduce(out);
}

// Requires asum(U) == 1 and csum(U) == 0.  The output is admissible and
// freely reduced.
inline CyclicWord derive_cyclic_word(const TwoGenWord& u) {
  if (asum(u) != 1 || csum(u) != 0)
    throw std::invalid_argument(
        "derive_cyclic_word: need a-exponent sum 1 and c-exponent sum 0");
  const int n = u.n;
  Word w(n);
  long long offset = 0;  // running partial sum of the gamma_i
  for (const auto& syl : syllables(u)) {
    w.push_power(offset + 1, syl.alpha);
    offset += syl.gamma;
  }
  return CyclicWord(n, free_reduce(w));
}

}  // namespace cpg
