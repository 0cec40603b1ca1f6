#pragma once

// Star graphs of presentations and the small-cancellation conditions
// they control.
//
// The star graph has vertex set X u X^-1 and one edge {x, y} for each
// distinct word x^-1 y u (x != y) that is a cyclic permutation of a
// relator or of an inverse relator.  For a presentation whose relators
// all have length >= 3, C(3)-T(q) (q > 4) holds exactly when the star
// graph has no cycle shorter than q, so the T classification reduces to
// an exact girth computation.  Parallel edges count as 2-cycles.
//
// For the words x_1 x_{1+m} x_{1+k}^-1 the edges form three families
//   X: {x_i, x_{i+m}^-1}   Y: {x_i, x_{i+B}}   Z: {x_i^-1, x_{i+A}^-1}
// with A = k and B = k - m; the generic construction applied to the
// same relators gives the image of these families under the global
// involution v -> v^-1.

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace cpg {

// Vertex ids: generator i positive -> 2i, negative -> 2i+1.
inline int star_vertex(int index, int sign) {
  return 2 * index + (sign < 0 ? 1 : 0);
}
inline int star_vertex_index(int v) { return v / 2; }
inline int star_vertex_sign(int v) { return v % 2 ? -1 : +1; }
inline int star_vertex_involution(int v) { return v ^ 1; }

struct StarEdge {
  int u = 0;
  int v = 0;
  char type = '-';  // 'X', 'Y', 'Z' for the three-family graphs
};

struct StarGraph {
  int rank = 0;  // number of generators; 2*rank vertices
  std::vector<StarEdge> edges;

  int vertex_count() const { return 2 * rank; }
};

// Generic construction from a presentation; relators are cyclically
// reduced on entry, and identical permutation words are counted once.
inline StarGraph star_graph(const Presentation& p) {
  StarGraph g;
  g.rank = p.rank();
  std::set<std::vector<Letter>> words;
  for (const auto& rel : p.relators) {
    Word core = cyclically_reduce(rel).core;
    if (core.length() < 2) continue;
    for (int inv = 0; inv < 2; ++inv) {
      Word base = inv ? inverse(core) : core;
      for (std::size_t rot = 0; rot < base.length(); ++rot)
        words.insert(rotate(base, rot).letters);
    }
  }
  // Each word g1 g2 ... contributes the directed edge g1^-1 -> g2; the
  // inverse word supplies the reverse, so undirected multiplicities are
  // half the directed counts.
  std::map<std::pair<int, int>, int> directed;
  for (const auto& ls : words) {
    int u = star_vertex(ls[0].index, -ls[0].sign);
    int v = star_vertex(ls[1].index, ls[1].sign);
    if (u == v) continue;
    ++directed[{u, v}];
  }
  for (const auto& [key, cnt] : directed) {
    auto [u, v] = key;
    if (u > v) continue;
    int back = 0;
    if (auto it = directed.find({v, u}); it != directed.end()) back = it->second;
    if (cnt != back)
      throw std::logic_error("star_graph: directed edges failed to pair");
    for (int i = 0; i < cnt; ++i) g.edges.push_back({u, v, '-'});
  }
  return g;
}

// The three printed edge families of the words x_1 x_{1+m} x_{1+k}^-1,
// typed X/Y/Z; degenerate loops (A = 0 or B = 0) are dropped.
inline StarGraph star_hnk(int n, long long m, long long k) {
  StarGraph g;
  g.rank = n;
  const int A = mod_residue(k, n);
  const int B = mod_residue(k - m, n);
  const int M = mod_residue(m, n);
  for (int i = 0; i < n; ++i)
    g.edges.push_back({star_vertex(i, +1),
                       star_vertex(mod_residue(i + M, n), -1), 'X'});
  if (B != 0)
    for (int i = 0; i < n; ++i) {
      int u = star_vertex(i, +1), v = star_vertex(mod_residue(i + B, n), +1);
      g.edges.push_back({std::min(u, v), std::max(u, v), 'Y'});
    }
  if (A != 0)
    for (int i = 0; i < n; ++i) {
      int u = star_vertex(i, -1), v = star_vertex(mod_residue(i + A, n), -1);
      g.edges.push_back({std::min(u, v), std::max(u, v), 'Z'});
    }
  return g;
}

namespace detail {

struct StarAdjacency {
  // neighbor vertex and edge id per incidence
  std::vector<std::vector<std::pair<int, int>>> adj;

  explicit StarAdjacency(const StarGraph& g) : adj(g.vertex_count()) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      adj[g.edges[e].u].push_back({g.edges[e].v, static_cast<int>(e)});
      adj[g.edges[e].v].push_back({g.edges[e].u, static_cast<int>(e)});
    }
  }
};

}  // namespace detail

// Exact girth by breadth-first search from every vertex; nullopt means
// the graph is acyclic.  Parallel edges yield 2-cycles.
inline std::optional<int> star_girth(const StarGraph& g) {
  const int V = g.vertex_count();
  detail::StarAdjacency a(g);
  int best = -1;
  std::vector<int> dist(V), parent_edge(V);
  for (int root = 0; root < V; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (best != -1 && 2 * dist[v] >= best) continue;
      for (auto [w, e] : a.adj[v]) {
        if (e == parent_edge[v]) continue;
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent_edge[w] = e;
          q.push(w);
        } else {
          int cyc = dist[v] + dist[w] + 1;
          if (best == -1 || cyc < best) best = cyc;
        }
      }
    }
    if (best == 2) break;  // cannot improve
  }
  if (best == -1) return std::nullopt;
  return best;
}

struct CycleRecord {
  std::vector<int> vertices;  // canonical rotation/reflection
  std::vector<int> edge_ids;
  std::string types;

  friend bool operator<(const CycleRecord& a, const CycleRecord& b) {
    if (a.vertices.size() != b.vertices.size())
      return a.vertices.size() < b.vertices.size();
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.edge_ids < b.edge_ids;
  }
  friend bool operator==(const CycleRecord& a, const CycleRecord& b) {
    return a.vertices == b.vertices && a.edge_ids == b.edge_ids;
  }
};

struct CycleSpectrum {
  std::optional<int> girth;
  std::map<int, long long> count_by_length;
  std::vector<CycleRecord> cycles;  // sorted, deterministic
};

// Type pattern of a cycle up to rotation and reversal, e.g. every
// rotation of XYXZZZ and of its reversal maps to the same key.
inline std::string canonical_type_string(const std::string& s) {
  std::string best;
  for (int refl = 0; refl < 2; ++refl) {
    std::string t = s;
    if (refl) std::reverse(t.begin(), t.end());
    for (std::size_t r = 0; r < std::max<std::size_t>(t.size(), 1); ++r) {
      std::string cand = t.substr(r) + t.substr(0, r);
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

namespace detail {

// Canonical form of a closed vertex/edge sequence under rotation and
// reflection; ties broken by the edge-id sequence so parallel-edge
// cycles stay distinct.
inline CycleRecord canonical_cycle(const StarGraph& g,
                                   const std::vector<int>& vs,
                                   const std::vector<int>& es) {
  const std::size_t L = vs.size();
  CycleRecord best;
  bool have = false;
  for (int refl = 0; refl < 2; ++refl) {
    std::vector<int> v2 = vs, e2 = es;
    if (refl) {
      // reversed traversal anchored at the same start vertex:
      // vertices v0, v_{L-1}, ..., v_1 with edges e_{L-1}, ..., e_0
      std::reverse(v2.begin(), v2.end());
      std::rotate(v2.begin(), v2.begin() + (L - 1), v2.end());
      std::reverse(e2.begin(), e2.end());
    }
    for (std::size_t r = 0; r < L; ++r) {
      std::vector<int> vr(L), er(L);
      for (std::size_t i = 0; i < L; ++i) {
        vr[i] = v2[(r + i) % L];
        er[i] = e2[(r + i) % L];
      }
      CycleRecord cand{vr, er, {}};
      if (!have || cand < best) {
        best = cand;
        have = true;
      }
    }
  }
  best.types.clear();
  for (int e : best.edge_ids) best.types.push_back(g.edges[e].type);
  return best;
}

}  // namespace detail

// Enumerates all simple cycles of length <= max_len (2-cycles through
// parallel edges included), each reported once up to rotation and
// reflection, in a deterministic order.
inline CycleSpectrum star_cycles(const StarGraph& g, int max_len) {
  CycleSpectrum out;
  out.girth = star_girth(g);
  detail::StarAdjacency a(g);
  std::set<CycleRecord> found;
  std::vector<int> path_v, path_e;
  std::vector<char> on_path(g.vertex_count(), 0);

  // Cycles are rooted at their minimal vertex; larger vertices only.
  auto dfs = [&](auto&& self, int start, int v) -> void {
    for (auto [w, e] : a.adj[v]) {
      if (!path_e.empty() && e == path_e.back()) continue;
      if (w == start && path_v.size() >= 2) {
        if (e != path_e.front() || path_v.size() == 2) {
          std::vector<int> es = path_e;
          es.push_back(e);
          if (!(path_v.size() == 2 && es[0] == es[1]))
            found.insert(detail::canonical_cycle(g, path_v, es));
        }
        continue;
      }
      if (w <= start || on_path[w]) continue;
      if (static_cast<int>(path_v.size()) >= max_len) continue;
      path_v.push_back(w);
      path_e.push_back(e);
      on_path[w] = 1;
      self(self, start, w);
      on_path[w] = 0;
      path_v.pop_back();
      path_e.pop_back();
    }
  };
  for (int s = 0; s < g.vertex_count(); ++s) {
    path_v.assign(1, s);
    path_e.clear();
    on_path.assign(g.vertex_count(), 0);
    on_path[s] = 1;
    dfs(dfs, s, s);
  }
  for (const auto& c : found) {
    if (static_cast<int>(c.vertices.size()) > max_len) continue;
    out.cycles.push_back(c);
    ++out.count_by_length[static_cast<int>(c.vertices.size())];
  }
  return out;
}

// ---- special C(3)-T(6) test ----------------------------------------------

// Connected, bipartite, diameter 3, girth 6, minimum degree >= 3: exactly
// the incidence graphs of finite projective planes.
inline bool is_special_c3t6(const StarGraph& g) {
  const int V = g.vertex_count();
  if (V == 0) return false;
  detail::StarAdjacency a(g);
  for (int v = 0; v < V; ++v)
    if (a.adj[v].size() < 3) return false;
  // connectivity and diameter via BFS from every vertex
  int diameter = 0;
  std::vector<int> dist(V);
  for (int root = 0; root < V; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    int seen = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, e] : a.adj[v])
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          diameter = std::max(diameter, dist[w]);
          ++seen;
          q.push(w);
        }
    }
    if (seen != V) return false;
  }
  if (diameter != 3) return false;
  // bipartite
  std::vector<int> color(V, -1);
  std::queue<int> q;
  color[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [w, e] : a.adj[v]) {
      if (color[w] == -1) {
        color[w] = 1 - color[v];
        q.push(w);
      } else if (color[w] == color[v]) {
        return false;
      }
    }
  }
  auto girth = star_girth(g);
  return girth && *girth == 6;
}

// ---- pieces and C(p) ------------------------------------------------------

struct PieceAnalysis {
  std::vector<std::vector<Letter>> pieces;  // all distinct pieces
  std::size_t max_piece_length = 0;
  // Largest p such that C(p) holds; nullopt when no relator decomposes
  // into pieces at all (C(p) holds vacuously for every p).
  std::optional<int> max_c;
};

// A piece is a common prefix of two distinct "places": distinct cyclic
// permutation words, or the same word arising from two different
// relator instances.
inline PieceAnalysis pieces_and_c(const Presentation& p) {
  PieceAnalysis out;
  std::vector<Word> cores;
  for (const auto& rel : p.relators) {
    Word core = cyclically_reduce(rel).core;
    if (!core.empty()) cores.push_back(core);
  }
  // word -> number of instances it arises from (any rotation/inverse)
  std::map<std::vector<Letter>, int> place_count;
  std::vector<std::set<std::vector<Letter>>> per_instance(cores.size());
  for (std::size_t j = 0; j < cores.size(); ++j) {
    for (int inv = 0; inv < 2; ++inv) {
      Word base = inv ? inverse(cores[j]) : cores[j];
      for (std::size_t rot = 0; rot < base.length(); ++rot)
        per_instance[j].insert(rotate(base, rot).letters);
    }
    for (const auto& w : per_instance[j]) ++place_count[w];
  }
  auto is_piece = [&](const std::vector<Letter>& u) {
    int places = 0;
    for (const auto& [w, cnt] : place_count) {
      if (w.size() < u.size()) continue;
      if (std::equal(u.begin(), u.end(), w.begin())) {
        places += cnt;
        if (places >= 2) return true;
      }
    }
    return false;
  };
  std::set<std::vector<Letter>> piece_set;
  for (const auto& [w, cnt] : place_count)
    for (std::size_t len = 1; len <= w.size(); ++len) {
      std::vector<Letter> prefix(w.begin(), w.begin() + len);
      if (piece_set.count(prefix)) continue;
      if (is_piece(prefix)) piece_set.insert(prefix);
    }
  out.pieces.assign(piece_set.begin(), piece_set.end());
  for (const auto& u : out.pieces)
    out.max_piece_length = std::max(out.max_piece_length, u.size());
  // Minimal piece decompositions.
  std::optional<int> min_pieces;
  for (const auto& core : cores) {
    const std::size_t L = core.length();
    const int INF = 1 << 28;
    std::vector<int> cover(L + 1, INF);
    cover[L] = 0;
    for (std::size_t t = L; t-- > 0;) {
      for (std::size_t len = 1; t + len <= L; ++len) {
        std::vector<Letter> sub(core.letters.begin() + t,
                                core.letters.begin() + t + len);
        if (!piece_set.count(sub)) continue;
        if (cover[t + len] + 1 < cover[t]) cover[t] = cover[t + len] + 1;
      }
    }
    if (cover[0] >= INF) continue;  // not a product of pieces
    if (!min_pieces || cover[0] < *min_pieces) min_pieces = cover[0];
  }
  out.max_c = min_pieces;
  return out;
}

// ---- C(3)-T(q) classification from the girth criterion --------------------

struct TClassification {
  enum class Kind {
    Inapplicable,  // some relator shorter than 3 after cyclic reduction
    BelowT5,       // girth <= 4
    Tq,            // C(3)-T(q) with q = girth
    Unbounded,     // acyclic star graph
  };
  Kind kind = Kind::Inapplicable;
  int q = 0;
  std::string reason;
};

inline TClassification classify_t(const StarGraph& g, const Presentation& p) {
  TClassification out;
  for (const auto& rel : p.relators) {
    if (cyclically_reduce(rel).core.length() < 3) {
      out.kind = TClassification::Kind::Inapplicable;
      out.reason = "relator of length < 3: girth criterion does not apply";
      return out;
    }
  }
  auto girth = star_girth(g);
  if (!girth) {
    out.kind = TClassification::Kind::Unbounded;
    out.reason = "acyclic star graph";
    return out;
  }
  if (*girth <= 4) {
    out.kind = TClassification::Kind::BelowT5;
    out.q = *girth;
    out.reason = "girth " + std::to_string(*girth);
    return out;
  }
  out.kind = TClassification::Kind::Tq;
  out.q = *girth;
  out.reason = "girth " + std::to_string(*girth);
  return out;
}

}  // namespace cpg
