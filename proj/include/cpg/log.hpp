#pragma once

// Labelled oriented graphs (LOGs) and tadpole LOGs.
//
// A LOG is a finite connected graph with maps iota, tau, lambda from
// edges to vertices; each edge contributes the relator
// tau(e)^-1 lambda(e)^-s iota(e) lambda(e)^s, where s is the label sign
// (classical LOGs have s = +1 throughout).
//
// A tadpole LOG Gamma(n; v) is a directed n-circuit, all of whose edges
// are labelled by the extremal tail vertex t_0, plus a directed tail of
// r edges whose labels spell v = a_{n-p_0}^{d_0} ... a_{n-p_{r-1}}^{d_{r-1}}
// in the circuit vertices.  Its presentation collapses to
// <a, c | U(a,c), [a,c^n]> with U = V^-1 c V a^-1 and
// V = v(a, c^-1 a c, c^-2 a c^2, ...), where a = a_1 and c = t_0.

#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "families.hpp"
#include "presentation.hpp"
#include "two_gen.hpp"
#include "word.hpp"

namespace cpg {

struct LogEdge {
  int from = 0;
  int to = 0;
  int label = 0;
  int label_sign = +1;
};

struct GeneralLOG {
  std::vector<std::string> vertices;
  std::vector<LogEdge> edges;
};

struct TailStep {
  int p = 0;      // residue 0..n-1
  int delta = 1;  // +1 or -1
};

struct TadpoleLOG {
  int n = 1;
  std::vector<TailStep> tail;  // length r >= 1

  int r() const { return static_cast<int>(tail.size()); }
};

// Checks the free-reducedness condition on the tail word: consecutive
// equal subscripts may not carry opposite signs.
inline void validate_tadpole(const TadpoleLOG& t) {
  if (t.n < 1) throw std::invalid_argument("tadpole: need n >= 1");
  if (t.tail.empty()) throw std::invalid_argument("tadpole: need r >= 1");
  for (const auto& s : t.tail) {
    if (s.p < 0 || s.p >= t.n) throw std::invalid_argument("tadpole: p out of range");
    if (s.delta != 1 && s.delta != -1)
      throw std::invalid_argument("tadpole: delta must be +-1");
  }
  for (int i = 0; i + 1 < t.r(); ++i)
    if (t.tail[i].p == t.tail[i + 1].p && t.tail[i].delta == -t.tail[i + 1].delta)
      throw std::invalid_argument("tadpole: tail word is not freely reduced");
}

// The tail word v = a_{n-p_0}^{d_0} ... a_{n-p_{r-1}}^{d_{r-1}} as a word
// over the circuit generators a_1..a_n.
inline Word tadpole_tail_word(const TadpoleLOG& t) {
  Word v(t.n);
  for (const auto& s : t.tail) v.push(t.n - s.p, s.delta);
  return v;
}

// Vertex layout: a_1..a_n get ids 0..n-1, t_0..t_{r-1} get ids n..n+r-1.
inline GeneralLOG tadpole_to_log(const TadpoleLOG& t) {
  validate_tadpole(t);
  const int n = t.n, r = t.r();
  GeneralLOG g;
  g.vertices.reserve(n + r);
  for (int i = 1; i <= n; ++i) g.vertices.push_back("a" + std::to_string(i));
  for (int j = 0; j < r; ++j) g.vertices.push_back("t" + std::to_string(j));
  // Tail: t_j -> t_{j+1} (last edge ends at a_1), labelled a_{n-p_j}^{d_j}.
  for (int j = 0; j < r; ++j) {
    LogEdge e;
    e.from = n + j;
    e.to = (j + 1 < r) ? n + j + 1 : 0;
    e.label = mod_residue(t.n - t.tail[j].p - 1, n);
    e.label_sign = t.tail[j].delta;
    g.edges.push_back(e);
  }
  // Circuit: a_i -> a_{i+1}, labelled t_0, so that a_i = t_0 a_{i+1} t_0^-1.
  for (int i = 0; i < n; ++i) {
    LogEdge e;
    e.from = i;
    e.to = (i + 1) % n;
    e.label = n;  // t_0
    e.label_sign = +1;
    g.edges.push_back(e);
  }
  return g;
}

inline bool log_connected(const GeneralLOG& g) {
  const int V = static_cast<int>(g.vertices.size());
  if (V == 0) return false;
  std::vector<std::vector<int>> adj(V);
  for (const auto& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<char> seen(V, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == V;
}

inline Presentation log_presentation(const GeneralLOG& g) {
  if (!log_connected(g))
    throw std::invalid_argument("log_presentation: graph must be connected");
  Presentation p;
  p.generators = g.vertices;
  const int V = p.rank();
  for (const auto& e : g.edges) {
    Word r(V);
    r.letters.push_back({e.to, -1});
    r.letters.push_back({e.label, -e.label_sign});
    r.letters.push_back({e.from, +1});
    r.letters.push_back({e.label, e.label_sign});
    p.relators.push_back(free_reduce(r));
  }
  return p;
}

// Direct collapse of the tadpole presentation:
// U = V^-1 c V a^-1 with V = v(a, c^-1 a c, ..., c^-(n-1) a c^(n-1)).
inline TwoGenWord collapse_tadpole(const TadpoleLOG& t) {
  validate_tadpole(t);
  const TwoGenWord v_image =
      substitute(tadpole_tail_word(t), circuit_collapse_images(t.n));
  TwoGenWord u = inverse(v_image);
  u.push(Gen2::c, +1);
  u = concat(u, v_image);
  u.push(Gen2::a, -1);
  return free_reduce(u);
}

// Independent route to the same relator: build the full LOG
// presentation and replay the generator eliminations (tail vertices
// first, then the circuit vertices a_2..a_n), renaming a_1 -> a,
// t_0 -> c.  Returns the surviving relator pair; the second entry always
// reduces to [a, c^n].
struct CollapsedPair {
  TwoGenWord relator;
  TwoGenWord commutator;
};

inline CollapsedPair collapse_by_elimination(const TadpoleLOG& t) {
  const int n = t.n, r = t.r();
  Presentation p = log_presentation(tadpole_to_log(t));
  // Tail relator j defines t_{j+1} in terms of t_j; eliminate t_1..t_{r-1}.
  for (int j = 1; j <= r - 1; ++j) {
    const int gen = n + j;
    bool done = false;
    for (std::size_t idx = 0; idx < p.relators.size(); ++idx) {
      auto expr = solve_for_generator(p.relators[idx], gen);
      if (expr) {
        p = eliminate_generator(p, gen, *expr, idx);
        done = true;
        break;
      }
    }
    if (!done)
      throw std::runtime_error("collapse_by_elimination: no defining relator");
  }
  // Circuit relator for a_i -> a_{i+1} defines a_{i+1}; eliminate a_2..a_n.
  for (int i = 1; i <= n - 1; ++i) {
    const int gen = i;  // a_{i+1}
    bool done = false;
    for (std::size_t idx = 0; idx < p.relators.size(); ++idx) {
      auto expr = solve_for_generator(p.relators[idx], gen);
      if (expr) {
        p = eliminate_generator(p, gen, *expr, idx);
        done = true;
        break;
      }
    }
    if (!done)
      throw std::runtime_error("collapse_by_elimination: no defining relator");
  }
  if (p.relators.size() != 2)
    throw std::runtime_error("collapse_by_elimination: unexpected relator count");
  // Surviving generators are a_1 (id 0) and t_0 (id n).
  auto to_two_gen = [&](const Word& w) {
    TwoGenWord out(n);
    for (const auto& l : w.letters) {
      if (l.index == 0)
        out.push(Gen2::a, l.sign);
      else if (l.index == n)
        out.push(Gen2::c, l.sign);
      else
        throw std::runtime_error("collapse_by_elimination: stray generator");
    }
    return free_reduce(out);
  };
  // The commutator [a_1, t_0^n] comes from the last circuit relator; the
  // other survivor is the collapsed tail relator.
  TwoGenWord first = to_two_gen(p.relators[0]);
  TwoGenWord second = to_two_gen(p.relators[1]);
  const TwoGenWord comm = free_reduce(commutator_relator(n));
  auto is_comm = [&](const TwoGenWord& w) {
    TwoGenWord fr = free_reduce(w);
    for (std::size_t rot = 0; rot < std::max<std::size_t>(fr.length(), 1); ++rot)
      if (rotate(fr, rot) == comm || free_reduce(inverse(rotate(fr, rot))) == comm)
        return true;
    return fr == comm;
  };
  if (is_comm(second)) return {first, second};
  if (is_comm(first)) return {second, first};
  throw std::runtime_error("collapse_by_elimination: commutator relator missing");
}

// Positive-tail two-generator relator
//   ( prod_{i=0}^{r-1} a c^{p_{i+1}-p_i} )^-1 c ( prod ) a^-1,  p_r = -1.
// In <a,c | [a,c^n]> this equals collapse_tadpole of the corresponding
// all-positive tadpole.
inline TwoGenWord positive_tail_relator(const LnParams& P) {
  const int r = P.r();
  if (r < 1) throw std::invalid_argument("positive_tail_relator: need r >= 1");
  TwoGenWord prod(P.n);
  for (int i = 0; i < r; ++i) {
    const long long next = (i + 1 < r) ? P.p[i + 1] : -1;
    prod.push(Gen2::a, +1);
    prod.push_power(Gen2::c, next - P.p[i]);
  }
  TwoGenWord rel = inverse(prod);
  rel.push(Gen2::c, +1);
  rel = concat(rel, prod);
  rel.push(Gen2::a, -1);
  return free_reduce(rel);
}

// The product part of positive_tail_relator, needed as a conjugating
// witness in the identities relating the tadpole relator to the
// two-generator relator of the cyclic word.
inline TwoGenWord positive_tail_product(const LnParams& P) {
  const int r = P.r();
  TwoGenWord prod(P.n);
  for (int i = 0; i < r; ++i) {
    const long long next = (i + 1 < r) ? P.p[i + 1] : -1;
    prod.push(Gen2::a, +1);
    prod.push_power(Gen2::c, next - P.p[i]);
  }
  return prod;
}

// The all-positive tadpole whose LOG group is the natural HNN extension
// of H_n(m,k): tail_length edges (tail_length == k, or any K = k mod n),
// each carrying p = (k-m)-1, so every tail label is a_{m-k+1}.
inline TadpoleLOG tadpole_hnk(const HnkParams& P, int tail_length = 0) {
  if (tail_length == 0) tail_length = mod_residue(P.k - 1, P.n) + 1;
  if (mod_residue(tail_length, P.n) != mod_residue(P.k, P.n))
    throw std::invalid_argument("tadpole_hnk: tail length must be k mod n");
  TadpoleLOG t;
  t.n = P.n;
  t.tail.assign(tail_length, TailStep{mod_residue(P.k - P.m - 1, P.n), +1});
  return t;
}

// L_n parameters induced by a positive tadpole (p_i read off the tail).
inline LnParams tadpole_ln_params(const TadpoleLOG& t) {
  LnParams P;
  P.n = t.n;
  for (const auto& s : t.tail) {
    if (s.delta != +1)
      throw std::invalid_argument("tadpole_ln_params: tail must be positive");
    P.p.push_back(s.p);
  }
  return P;
}

}  // namespace cpg
