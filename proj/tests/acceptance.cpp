// Acceptance suite: one pass/fail line per criterion, exit 0 only when
// every criterion passes.  Each check is exact; elapsed times are
// printed alongside.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cpg/cpg.hpp"

using namespace cpg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

// ---- 1: finite orders by coset enumeration --------------------------------

Outcome criterion_finite_orders() {
  Outcome out;
  struct Case {
    int n, m, k;
    long long order;
    long long cap;
  };
  const std::vector<Case> cases = {
      {4, 3, 1, 5, 100000},      {5, 3, 1, 11, 100000},
      {6, 1, 3, 7, 100000},      {6, 2, 3, 9, 100000},
      {6, 3, 4, 56, 100000},     {8, 3, 1, 295245, 5000000},
  };
  std::ostringstream d;
  for (const auto& c : cases) {
    Presentation p = cyclic_presentation(family_hnk({c.n, c.m, c.k}));
    auto t0 = Clock::now();
    CompletedTable table;
    EnumerationResult res = todd_coxeter(p, {}, c.cap, &table);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool ok = res.completed && res.index == c.order && verify_table(table, p, {});
    out.pass = out.pass && ok;
    d << " (" << c.n << "," << c.m << "," << c.k << ")->"
      << (res.completed ? std::to_string(res.index) : "exhausted") << " ["
      << std::to_string(secs).substr(0, 5) << "s]" << (ok ? "" : " MISMATCH");
  }
  out.detail = "orders:" + d.str() + "; the (8,3,1) case is the stretch item";
  return out;
}

// ---- 2: congruence classification vs star-graph girth oracle --------------

Outcome criterion_oracle_equivalence() {
  Outcome out;
  long long total = 0, mismatches = 0, special_hits = 0;
  for (int n = 2; n <= 40; ++n)
    for (int m = 1; m <= n; ++m)
      for (int k = 1; k <= n; ++k) {
        ++total;
        SCClassification cls = classify_hnk_congruences(n, m, k);
        StarGraph g = star_hnk(n, m, k);
        auto girth = star_girth(g);
        bool len3 = hnk_relators_length3(n, m, k);
        bool oracle6 = len3 && (!girth || *girth >= 6);
        bool oracle7 = len3 && (!girth || *girth >= 7);
        if (cls.c3t6 != oracle6 || cls.c3t7 != oracle7) {
          ++mismatches;
          if (mismatches <= 5)
            out.detail += " (" + std::to_string(n) + "," + std::to_string(m) +
                          "," + std::to_string(k) + ")";
        }
        // the classified C(3)-T(6) presentations are never special
        if (cls.c3t6 && is_special_c3t6(g)) ++special_hits;
      }
  out.pass = mismatches == 0 && special_hits == 0;
  out.detail = std::to_string(total) + " triples, " +
               std::to_string(mismatches) + " mismatches, " +
               std::to_string(special_hits) + " special hits" + out.detail;
  return out;
}

// ---- 3: prime-grid closed form: divergences reported, evaluators compared -

Outcome criterion_prime_grid() {
  Outcome out;
  long long total = 0, evaluator_disagreements = 0;
  std::vector<std::pair<int, int>> divergences;
  for (int p = 3; p <= 97; ++p) {
    if (!is_odd_prime(p)) continue;
    for (int k = 3; 2 * k <= p - 1; ++k) {
      ++total;
      bool formula = c3t7_prime_prediction(p, k);
      bool cong = classify_hnk_congruences(p, 1, k).c3t7;
      auto girth = star_girth(star_hnk(p, 1, k));
      bool oracle = hnk_relators_length3(p, 1, k) && (!girth || *girth >= 7);
      if (cong != oracle) ++evaluator_disagreements;
      if (formula != cong) divergences.push_back({p, k});
    }
  }
  // Only the congruence/girth agreement is asserted; the closed-form
  // divergence set is reported, not judged.
  out.pass = evaluator_disagreements == 0;
  std::ostringstream d;
  d << total << " prime-grid pairs; congruences vs girth disagreements: "
    << evaluator_disagreements
    << "; closed-form divergences (reported): " << divergences.size() << " at";
  for (std::size_t i = 0; i < divergences.size() && i < 6; ++i)
    d << " (" << divergences[i].first << "," << divergences[i].second << ")";
  if (divergences.size() > 6) d << " ...";
  out.detail = d.str();
  return out;
}

// ---- 4: cycle taxonomy of the (n,3,1) star graphs --------------------------

Outcome criterion_taxonomy() {
  Outcome out;
  std::ostringstream d;
  for (int n = 11; n <= 30; ++n) {
    Hn3Taxonomy t = cycle_taxonomy_h_n3(n);
    bool ok = true;
    if (n != 12 && n != 14)
      ok = t.spectrum.girth == 5 && t.all_short_are_5 && t.all_5_are_form_i;
    if (n == 12) ok = t.has_6_cycle;
    if (n == 14) ok = t.has_7_cycle;
    if (n == 16) ok = ok && t.has_all_y_8_cycle;
    if (!ok) {
      out.pass = false;
      d << " n=" << n << " FAILED";
    }
  }
  out.detail =
      "n=11..30: shortest cycle 5 and every 5-cycle of the X-Z-Z-X-Y form "
      "except n=12 (6-cycle), n=14 (7-cycle); n=16 has the all-Y 8-cycle" +
      d.str();
  return out;
}

// ---- 5: transformation round trips -----------------------------------------

std::vector<CyclicWord> admissible_corpus() {
  std::vector<CyclicWord> corpus;
  auto add = [&](const CyclicWord& cw) {
    if (!cw.w.empty() && exponent_data(cw.w).admissible) corpus.push_back(cw);
  };
  for (int n = 2; n <= 12; ++n)
    for (int m = 1; m <= n; ++m)
      for (int k = 1; k <= n; ++k) add(family_hnk({n, m, k}));
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r <= 3; ++r) {
      LnParams P{n, {}};
      for (int i = 0; i < r; ++i) P.p.push_back((7 * i + n) % n);
      add(family_ln(P));
    }
  for (int n = 5; n <= 12; ++n) {
    add(catalog_g1(n, 1));
    add(catalog_g1(n, 2));
    add(catalog_h1(n, 1));
    add(catalog_h1(n, 2));
    for (int l = 2; l <= 6; ++l) {
      add(catalog_gl(l, n, 1));
      add(catalog_gl(l, n, 2));
    }
    for (int r = 2; r <= 4; ++r) add(catalog_sieradski(r, n));
  }
  std::mt19937 rng(987654);
  while (corpus.size() < 1200) {
    int n = 2 + static_cast<int>(rng() % 11);
    Word w(n);
    int L = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < L; ++i)
      w.push(1 + static_cast<int>(rng() % n), rng() % 2 ? +1 : -1);
    add(CyclicWord(n, free_reduce(w)));
  }
  return corpus;
}

Outcome criterion_round_trips() {
  Outcome out;
  auto corpus = admissible_corpus();
  long long failures = 0;
  for (const auto& cw : corpus) {
    TwoGenWord W = hnn_two_generator(cw);
    if (asum(W) == -1) W = free_reduce(inverse(W));
    CyclicWord back = derive_cyclic_word(normalize_c_sum(W));
    if (!cyclic_equivalent(back.w, cw.w)) ++failures;
  }
  out.pass = failures == 0 && corpus.size() >= 200;
  out.detail = std::to_string(corpus.size()) + " admissible words, " +
               std::to_string(failures) + " round-trip failures";
  return out;
}

// ---- 6: tadpole certification ----------------------------------------------

Outcome criterion_tadpole_certification() {
  Outcome out;
  long long cases = 0, collapse_failures = 0, witness_failures = 0;
  // all positive tadpoles with n <= 10, r <= 4 where the space is small,
  // a fixed-seed sample of 64 otherwise
  std::mt19937 rng(24601);
  std::vector<TadpoleLOG> sample;
  for (int n = 1; n <= 10; ++n)
    for (int r = 1; r <= 4; ++r) {
      long long space = 1;
      for (int i = 0; i < r; ++i) space *= n;
      if (space <= 64) {
        for (long long code = 0; code < space; ++code) {
          TadpoleLOG t;
          t.n = n;
          long long c = code;
          for (int i = 0; i < r; ++i) {
            t.tail.push_back({static_cast<int>(c % n), +1});
            c /= n;
          }
          sample.push_back(t);
        }
      } else {
        for (int draw = 0; draw < 64; ++draw) {
          TadpoleLOG t;
          t.n = n;
          for (int i = 0; i < r; ++i)
            t.tail.push_back({static_cast<int>(rng() % n), +1});
          sample.push_back(t);
        }
      }
    }
  for (const auto& t : sample) {
    ++cases;
    TwoGenWord direct = collapse_tadpole(t);
    CollapsedPair elim = collapse_by_elimination(t);
    if (!(free_reduce(rotate(elim.relator, 1)) == direct)) ++collapse_failures;
    LnParams P = tadpole_ln_params(t);
    // printed relator equals the collapse exactly in <a,c | [a,c^n]>
    if (!(hat_rewrite(positive_tail_relator(P)) == hat_rewrite(direct)))
      ++witness_failures;
    // and is hat-conjugate (with the explicit witness) to the
    // two-generator relator of the L word
    HatElement W = hat_rewrite(hnn_two_generator(family_ln(P)));
    HatElement R = hat_rewrite(positive_tail_relator(P));
    TwoGenWord wit(t.n);
    wit.push_power(Gen2::c, P.p[0] - 1);
    wit = concat(wit, positive_tail_product(P));
    if (!hat_conjugation_verifies(hat_rewrite(wit), hat_inverse(R), W))
      ++witness_failures;
  }
  out.pass = cases >= 500 && collapse_failures == 0 && witness_failures == 0;
  out.detail = std::to_string(cases) + " positive tadpoles; " +
               std::to_string(collapse_failures) + " elimination mismatches, " +
               std::to_string(witness_failures) + " witness failures";
  return out;
}

// ---- 7: abelianization ------------------------------------------------------

Outcome criterion_abelianization() {
  Outcome out;
  std::ostringstream d;
  long long checked = 0, disagreements = 0;
  auto check_pair = [&](const CyclicWord& cw) {
    ++checked;
    auto inv = smith_normal_form(relation_matrix(cyclic_presentation(cw)));
    auto res = ab_order_circulant(cw);
    bool agree = inv.finite() ? (res && inv.order() == *res) : !res;
    if (!agree) ++disagreements;
  };
  for (int n = 2; n <= 24; ++n)
    for (int m = 1; m <= n; ++m)
      for (int k = 1; k <= n; ++k)
        if (!family_hnk({n, m, k}).w.empty()) check_pair(family_hnk({n, m, k}));
  for (int n = 5; n <= 24; ++n) {
    check_pair(catalog_g1(n, 1));
    check_pair(catalog_h1(n, 1));
    for (int l = 3; l <= 6; ++l) check_pair(catalog_gl(l, n, 1));
    for (int r = 2; r <= 4; ++r) check_pair(catalog_sieradski(r, n));
  }
  if (disagreements) {
    out.pass = false;
    d << disagreements << " SNF/resultant disagreements; ";
  }

  // named invariants
  auto divisors = [&](int n, int m, int k) {
    return smith_normal_form(
        relation_matrix(cyclic_presentation(family_hnk({n, m, k}))));
  };
  auto h53 = divisors(5, 3, 1);
  auto h613 = divisors(6, 1, 3);
  auto h623 = divisors(6, 2, 3);
  bool named = h53.divisors == std::vector<BigInt>{11} &&
               h613.divisors == std::vector<BigInt>{7} &&
               h623.divisors == std::vector<BigInt>{9} && h53.finite() &&
               h613.finite() && h623.finite();
  if (!named) {
    out.pass = false;
    d << "named invariants wrong; ";
  }

  // m = 0 mod n closed form for n <= 12.  Both independent algorithms
  // give (2^{n/g} - 1)^g with g = gcd(k,n); the literal (2^n - 1)^g
  // holds exactly when g = 1.
  long long closed_form_failures = 0;
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) {
      auto res = ab_order_circulant(family_hnk({n, n, k}));
      long long g =
          std::gcd(static_cast<long long>(k), static_cast<long long>(n));
      BigInt expect = 1;
      BigInt base = (BigInt(1) << static_cast<unsigned>(n / g)) - 1;
      for (long long i = 0; i < g; ++i) expect *= base;
      auto inv = smith_normal_form(
          relation_matrix(cyclic_presentation(family_hnk({n, n, k}))));
      if (!res || *res != expect || !inv.finite() || inv.order() != expect)
        ++closed_form_failures;
    }
  if (closed_form_failures) {
    out.pass = false;
    d << closed_form_failures << " closed-form failures; ";
  }

  // abelianization of the (n,3,1) words is finite and nontrivial
  long long h3_failures = 0;
  for (int n = 11; n <= 40; ++n) {
    auto res = ab_order_circulant(family_hnk({n, 3, 1}));
    if (!res || *res <= 1) ++h3_failures;
  }
  if (h3_failures) {
    out.pass = false;
    d << h3_failures << " (n,3,1) finiteness failures; ";
  }
  d << checked << " SNF-vs-resultant pairs; [11]/[7]/[9] confirmed; m=0 "
    << "orders match (2^{n/g}-1)^g, g=gcd(k,n) (the literal (2^n-1)^g holds "
    << "iff g=1); (n,3,1) abelianizations finite and nontrivial for n=11..40";
  out.detail = d.str();
  return out;
}

// ---- 8: y-generator presentation, semantic and syntactic --------------------

Outcome criterion_y_form() {
  Outcome out;
  std::mt19937 rng(13579);
  long long cases = 0, semantic_failures = 0, syntactic_checked = 0,
            syntactic_failures = 0;
  while (cases < 400) {
    int n = 2 + static_cast<int>(rng() % 9);
    int r = 1 + static_cast<int>(rng() % 3);
    GnkParams P;
    P.n = n;
    P.k = static_cast<long long>(rng() % (n + 1));
    for (int i = 0; i < r; ++i) P.q.push_back(static_cast<long long>(rng() % n));
    for (int i = 0; i < r; ++i)
      P.eps.push_back(static_cast<long long>(rng() % 5) - 2);
    P.eps.push_back(1);
    CyclicWord x = family_gnk(P);
    CyclicWord y = gnk_y_form(P);
    if (x.w.empty() || y.w.empty()) continue;
    ++cases;
    auto a = abelian_invariants(cyclic_presentation(x));
    auto b = abelian_invariants(cyclic_presentation(y));
    if (!(a == b)) ++semantic_failures;
    // at r = 1 with eps_0 = 1 and nondegenerate k the two defining
    // words are related by inversion and rotation; for other eps_0, or
    // when k = 0 mod n collapses the y word, only the semantic check
    // applies (the words provably differ)
    if (r == 1 && P.eps[0] == 1 && mod_residue(P.k, n) != 0) {
      ++syntactic_checked;
      auto wit = cyclic_equivalent(y.w, x.w);
      if (!wit) ++syntactic_failures;
    }
  }
  // make sure the syntactic branch is exercised on a full grid
  for (int n = 4; n <= 10; ++n)
    for (int m = 1; m < n; ++m)
      for (int k = 1; k < n; ++k) {
        GnkParams P{n, k, {m}, {1, 1}};
        ++cases;
        ++syntactic_checked;
        auto a = abelian_invariants(cyclic_presentation(family_gnk(P)));
        auto b = abelian_invariants(cyclic_presentation(gnk_y_form(P)));
        if (!(a == b)) ++semantic_failures;
        if (!cyclic_equivalent(gnk_y_form(P).w, family_gnk(P).w))
          ++syntactic_failures;
      }
  out.pass = cases >= 300 && semantic_failures == 0 && syntactic_failures == 0;
  out.detail = std::to_string(cases) + " parameter tuples (eps_r = 1); " +
               std::to_string(semantic_failures) +
               " abelianization disagreements; syntactic r=1 eps_0=1 check on " +
               std::to_string(syntactic_checked) + " tuples, " +
               std::to_string(syntactic_failures) + " failures";
  return out;
}

// ---- 9: conjugacy solver ----------------------------------------------------

FiniteGroupTable quotient(int n, int m, int k) {
  CyclicWord cw = family_hnk({n, m, k});
  CompletedTable t;
  EnumerationResult res = todd_coxeter(cyclic_presentation(cw), {}, 200000, &t);
  if (!res.completed) throw std::runtime_error("quotient enumeration failed");
  return regular_representation(t, cw);
}

Outcome criterion_conjugacy() {
  Outcome out;
  std::ostringstream d;
  for (auto [n, m, k] : {std::tuple<int, int, int>{5, 3, 1},
                         std::tuple<int, int, int>{6, 3, 4}}) {
    FiniteGroupTable G = quotient(n, m, k);
    if (!verify_shift_automorphism(G)) {
      out.pass = false;
      d << " phi-verification failed (" << n << "," << m << "," << k << ");";
      continue;
    }
    long long disagreements = 0, witness_failures = 0;
    for (long long p = -3; p <= 3; ++p)
      for (long long q = -3; q <= 3; ++q)
        for (std::int32_t u = 0; u < G.order; ++u)
          for (std::int32_t v = 0; v < G.order; ++v) {
            auto red = semidirect_conjugate(G, {u, p}, {v, q});
            if (p != q) {
              if (red) ++disagreements;
              continue;
            }
            bool direct =
                semidirect_conjugate_direct(G, {u, p}, {v, q}, 2 * G.n);
            if (red.has_value() != direct) ++disagreements;
            if (red && !semidirect_witness_verifies(G, {u, p}, {v, q}, *red))
              ++witness_failures;
          }
    // equivalence relation per level, exhaustively
    long long relation_failures = 0;
    for (long long p = -3; p <= 3; ++p) {
      std::vector<int> cls(G.order, -1);
      int next = 0;
      for (std::int32_t u = 0; u < G.order; ++u) {
        if (cls[u] != -1) continue;
        cls[u] = next;
        for (std::int32_t v = u + 1; v < G.order; ++v)
          if (cls[v] == -1 && semidirect_conjugate(G, {u, p}, {v, p}))
            cls[v] = next;
        ++next;
      }
      for (std::int32_t u = 0; u < G.order; ++u)
        for (std::int32_t v = 0; v < G.order; ++v)
          if (semidirect_conjugate(G, {u, p}, {v, p}).has_value() !=
              (cls[u] == cls[v]))
            ++relation_failures;
    }
    bool ok =
        disagreements == 0 && witness_failures == 0 && relation_failures == 0;
    out.pass = out.pass && ok;
    d << " order " << G.order << ": " << disagreements
      << " reduction/direct disagreements, " << witness_failures
      << " witness failures, " << relation_failures << " relation failures;";
  }
  out.detail = d.str();
  return out;
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

}  // namespace

int main() {
  bool all_pass = true;
  const std::vector<Criterion> criteria = {
      {1, "finite orders by coset enumeration", criterion_finite_orders},
      {2, "classification congruences == girth oracle (n <= 40)",
       criterion_oracle_equivalence},
      {3, "prime-grid closed form: divergence report and evaluator agreement",
       criterion_prime_grid},
      {4, "cycle taxonomy of the (n,3,1) star graphs (n = 11..30)",
       criterion_taxonomy},
      {5, "derive . normalize . hnn round trips", criterion_round_trips},
      {6, "tadpole collapse and positive-tail certification",
       criterion_tadpole_certification},
      {7, "abelianization: Smith normal form vs resultant",
       criterion_abelianization},
      {8, "y-generator presentation checks", criterion_y_form},
      {9, "semidirect conjugacy reduction", criterion_conjugacy},
  };
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o = c.run();
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("[%s] criterion %d (%.2fs): %s -- %s\n",
                o.pass ? "PASS" : "FAIL", c.id, secs, c.name,
                o.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
