#pragma once

// Finite presentations: a named generator list plus relator words, the
// cyclic presentations G_n(w) = <x_1..x_n | w, theta(w), ...>, and
// single-generator elimination (the Tietze move used to collapse LOG
// presentations).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "word.hpp"

namespace cpg {

struct Presentation {
  // Relator letters index into generators; every relator has
  // modulus == generators.size().
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int rank() const { return static_cast<int>(generators.size()); }
  int deficiency() const {
    return rank() - static_cast<int>(relators.size());
  }
};

// A defining word together with its circuit size; stands for the cyclic
// presentation whose relators are the n shifts of w.
struct CyclicWord {
  int n = 1;
  Word w;

  CyclicWord() = default;
  CyclicWord(int circuit, Word word) : n(circuit), w(std::move(word)) {
    if (w.n != n)
      throw std::invalid_argument("cyclic word modulus mismatch");
  }
};

inline Presentation cyclic_presentation(const CyclicWord& cw) {
  if (cw.w.empty())
    throw std::invalid_argument("cyclic presentation needs a nonempty defining word");
  Presentation p;
  p.generators.reserve(cw.n);
  for (int i = 1; i <= cw.n; ++i)
    p.generators.push_back("x" + std::to_string(i));
  p.relators.reserve(cw.n);
  for (int i = 0; i < cw.n; ++i)
    p.relators.push_back(free_reduce(shift(cw.w, i)));
  return p;
}

// Solves relator = 1 for the generator gen, provided gen occurs exactly
// once in the relator: u g^e v = 1  =>  g = (v u)^{-e}.
inline std::optional<Word> solve_for_generator(const Word& relator, int gen) {
  int occurrences = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < relator.letters.size(); ++i) {
    if (relator.letters[i].index == gen) {
      ++occurrences;
      at = i;
    }
  }
  if (occurrences != 1) return std::nullopt;
  Word u(relator.n), v(relator.n);
  u.letters.assign(relator.letters.begin(), relator.letters.begin() + at);
  v.letters.assign(relator.letters.begin() + at + 1, relator.letters.end());
  Word expr = free_reduce(concat(v, u));
  if (relator.letters[at].sign > 0) expr = inverse(expr);
  return expr;
}

// Replaces every occurrence of gen by expr in all relators and drops the
// relator at defining_index.  Generator numbering is kept (the
// eliminated generator simply no longer occurs).
inline Presentation eliminate_generator(const Presentation& p, int gen,
                                        const Word& expr,
                                        std::size_t defining_index) {
  Presentation out;
  out.generators = p.generators;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i == defining_index) continue;
    Word r(p.relators[i].n);
    for (const auto& l : p.relators[i].letters) {
      if (l.index != gen) {
        r.letters.push_back(l);
        continue;
      }
      const Word piece = l.sign > 0 ? expr : inverse(expr);
      r.letters.insert(r.letters.end(), piece.letters.begin(),
                       piece.letters.end());
    }
    out.relators.push_back(free_reduce(r));
  }
  return out;
}

}  // namespace cpg
