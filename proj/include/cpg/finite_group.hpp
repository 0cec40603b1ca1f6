#pragma once

// Multiplication table of a finite group obtained from a completed
// coset enumeration over the trivial subgroup, together with the shift
// automorphism phi of a cyclically presented group computed on the
// finite quotient.
//
// Elements are the cosets; each one carries its definition word (a path
// from the identity in a breadth-first spanning tree of the action), so
// products are traced through the table and phi(g) is the trace of the
// definition word with every subscript shifted by one.

#include <queue>
#include <stdexcept>
#include <vector>

#include "coset_table.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace cpg {

struct FiniteGroupTable {
  long long order = 0;
  int ngens = 0;
  int n = 0;  // subscript modulus of the underlying cyclic presentation
  std::vector<std::int32_t> act;    // order x 2*ngens generator action
  std::vector<std::int32_t> mult;   // order x order
  std::vector<std::int32_t> inv;    // inverses
  std::vector<std::int32_t> phi;    // shift automorphism as a permutation
  int phi_order = 0;

  std::int32_t step(std::int64_t g, int col) const {
    return act[g * 2 * ngens + col];
  }
  std::int32_t product(std::int64_t g, std::int64_t h) const {
    return mult[g * order + h];
  }
  std::int32_t inverse(std::int64_t g) const { return inv[g]; }
  std::int32_t identity() const { return 0; }

  std::int32_t phi_power(std::int64_t g, long long p) const {
    p %= phi_order;
    if (p < 0) p += phi_order;
    auto e = static_cast<std::int32_t>(g);
    for (long long i = 0; i < p; ++i) e = phi[e];
    return e;
  }
};

// Builds the full multiplication table; feasible for the small-quotient
// work the conjugacy solver does (the element count is quadratic in
// memory, so a guard rejects very large tables).
inline FiniteGroupTable regular_representation(const CompletedTable& t,
                                               const CyclicWord& cw,
                                               long long max_order = 65536) {
  if (t.size < 1) throw std::invalid_argument("regular_representation: empty table");
  if (t.size > max_order)
    throw std::invalid_argument(
        "regular_representation: table too large for a multiplication table");
  FiniteGroupTable G;
  G.order = t.size;
  G.ngens = t.ngens;
  G.n = cw.n;
  G.act = t.act;

  // Definition words from a breadth-first spanning tree rooted at the
  // identity coset, exploring columns in order.
  std::vector<int> parent(G.order, -1), via(G.order, -1);
  std::queue<int> bfs;
  bfs.push(0);
  std::vector<char> seen(G.order, 0);
  seen[0] = 1;
  while (!bfs.empty()) {
    int g = bfs.front();
    bfs.pop();
    for (int col = 0; col < 2 * G.ngens; ++col) {
      int h = t.step(g, col);
      if (!seen[h]) {
        seen[h] = 1;
        parent[h] = g;
        via[h] = col;
        bfs.push(h);
      }
    }
  }
  for (int g = 0; g < G.order; ++g)
    if (!seen[g])
      throw std::invalid_argument("regular_representation: table not transitive");

  std::vector<std::vector<int>> word(G.order);  // definition paths as columns
  for (int g = 0; g < G.order; ++g) {
    std::vector<int> cols;
    for (int v = g; v != 0; v = parent[v]) cols.push_back(via[v]);
    std::reverse(cols.begin(), cols.end());
    word[g] = std::move(cols);
  }

  auto trace_cols = [&](std::int64_t from, const std::vector<int>& cols) {
    for (int c : cols) from = t.step(from, c);
    return static_cast<std::int32_t>(from);
  };

  G.mult.assign(G.order * G.order, 0);
  for (std::int64_t g = 0; g < G.order; ++g)
    for (std::int64_t h = 0; h < G.order; ++h)
      G.mult[g * G.order + h] = trace_cols(g, word[h]);

  G.inv.assign(G.order, 0);
  for (std::int64_t g = 0; g < G.order; ++g)
    for (std::int64_t h = 0; h < G.order; ++h)
      if (G.product(g, h) == 0) {
        G.inv[g] = static_cast<std::int32_t>(h);
        break;
      }

  // phi maps the element with definition word w(x_i) to the element
  // w(x_{i+1}); columns shift by one generator block.
  if (G.ngens != cw.n)
    throw std::invalid_argument("regular_representation: generator count != n");
  G.phi.assign(G.order, 0);
  for (int g = 0; g < G.order; ++g) {
    std::vector<int> shifted = word[g];
    for (int& col : shifted) {
      int gen = col / 2, sgn = col % 2;
      col = 2 * ((gen + 1) % cw.n) + sgn;
    }
    G.phi[g] = trace_cols(0, shifted);
  }
  // order of phi (divides n)
  std::vector<std::int32_t> pow(G.order);
  for (int g = 0; g < G.order; ++g) pow[g] = G.phi[g];
  int ord = 1;
  auto is_id = [&](const std::vector<std::int32_t>& p) {
    for (int g = 0; g < G.order; ++g)
      if (p[g] != g) return false;
    return true;
  };
  while (!is_id(pow)) {
    for (int g = 0; g < G.order; ++g) pow[g] = G.phi[pow[g]];
    ++ord;
    if (ord > cw.n)
      throw std::logic_error("regular_representation: phi order exceeds n");
  }
  G.phi_order = ord;
  return G;
}

// Exhaustive automorphism check: phi is a bijection preserving all
// products, phi^n = id, and phi cyclically permutes the generator
// images.
inline bool verify_shift_automorphism(const FiniteGroupTable& G) {
  std::vector<char> hit(G.order, 0);
  for (int g = 0; g < G.order; ++g) {
    if (hit[G.phi[g]]) return false;
    hit[G.phi[g]] = 1;
  }
  for (std::int64_t g = 0; g < G.order; ++g)
    for (std::int64_t h = 0; h < G.order; ++h)
      if (G.phi[G.product(g, h)] != G.product(G.phi[g], G.phi[h])) return false;
  if (G.n % G.phi_order != 0) return false;
  for (int i = 0; i < G.ngens; ++i) {
    std::int32_t xi = G.step(0, 2 * i);
    std::int32_t xnext = G.step(0, 2 * ((i + 1) % G.ngens));
    if (G.phi[xi] != xnext) return false;
  }
  return true;
}

}  // namespace cpg
