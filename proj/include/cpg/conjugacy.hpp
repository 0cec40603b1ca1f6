#pragma once

// Twisted conjugacy over a finite group table and the conjugacy
// reduction for semidirect products G x| Z.
//
// u is phi-twisted conjugate to v when g^-1 u phi(g) = v for some g;
// over a finite G the search is exhaustive, so a negative answer means
// "not twisted conjugate".  Elements of G x| Z are pairs (g, p) with
// (g,p)(h,l) = (g phi^p(h), p+l); (u,p) and (v,q) are conjugate exactly
// when p = q and u is phi^p-twisted conjugate to phi^m(v) for some m.

#include <optional>
#include <vector>

#include "finite_group.hpp"

namespace cpg {

struct SemidirectElement {
  std::int32_t g = 0;
  long long p = 0;

  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

inline SemidirectElement semidirect_multiply(const FiniteGroupTable& G,
                                             const SemidirectElement& a,
                                             const SemidirectElement& b) {
  return {G.product(a.g, G.phi_power(b.g, a.p)), a.p + b.p};
}

// Searches g with g^-1 u phi^{phi_pow}(g) = v.  Complete for finite G.
inline std::optional<std::int32_t> twisted_conjugate(const FiniteGroupTable& G,
                                                     long long phi_pow,
                                                     std::int32_t u,
                                                     std::int32_t v) {
  for (std::int32_t g = 0; g < G.order; ++g) {
    std::int32_t lhs = G.product(G.product(G.inverse(g), u), G.phi_power(g, phi_pow));
    if (lhs == v) return g;
  }
  return std::nullopt;
}

inline bool twisted_conjugate_verify(const FiniteGroupTable& G, long long phi_pow,
                                     std::int32_t u, std::int32_t v,
                                     std::int32_t g) {
  return G.product(G.product(G.inverse(g), u), G.phi_power(g, phi_pow)) == v;
}

struct SemidirectWitness {
  std::int32_t g = 0;
  long long m = 0;  // canonical representative 0 <= m < phi_order
};

// Decides conjugacy of (u,p) and (v,q) in G x| Z: false immediately
// when p != q, otherwise searches m and the twisted conjugator.
inline std::optional<SemidirectWitness> semidirect_conjugate(
    const FiniteGroupTable& G, const SemidirectElement& up,
    const SemidirectElement& vq) {
  if (up.p != vq.p) return std::nullopt;
  for (long long m = 0; m < G.phi_order; ++m) {
    std::int32_t target = G.phi_power(vq.g, m);
    if (auto g = twisted_conjugate(G, up.p, up.g, target))
      return SemidirectWitness{*g, m};
  }
  return std::nullopt;
}

// Witness replay: (u,p) (g,m) == (g,m) (v,q) in the semidirect product.
inline bool semidirect_witness_verifies(const FiniteGroupTable& G,
                                        const SemidirectElement& up,
                                        const SemidirectElement& vq,
                                        const SemidirectWitness& w) {
  SemidirectElement gm{w.g, w.m};
  return semidirect_multiply(G, up, gm) == semidirect_multiply(G, gm, vq);
}

// Independent route for cross-checking: direct search over conjugators
// (h, j), using (h,j)(u,p)(h,j)^-1 = (h phi^j(u) phi^p(h^-1), p).
inline bool semidirect_conjugate_direct(const FiniteGroupTable& G,
                                        const SemidirectElement& up,
                                        const SemidirectElement& vq,
                                        long long j_window) {
  if (up.p != vq.p) return false;
  for (long long j = -j_window; j <= j_window; ++j)
    for (std::int32_t h = 0; h < G.order; ++h) {
      std::int32_t img = G.product(
          G.product(h, G.phi_power(up.g, j)),
          G.phi_power(G.inverse(h), up.p));
      if (img == vq.g) return true;
    }
  return false;
}

}  // namespace cpg
