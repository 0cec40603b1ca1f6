// Command-line front end: family constructors, presentation expansion,
// the HNN / collapse / y-generator transformations, star graphs and the
// small-cancellation classification with its brute-force oracle,
// abelianization, coset enumeration, semidirect conjugacy over finite
// quotients, grid surveys, and the cross-module identity suite.
//
// Exit codes: 0 success, 1 usage error, 2 computation inconclusive,
// 3 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpg/cpg.hpp"

using nlohmann::json;
using namespace cpg;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInconclusive = 2, kViolation = 3 };

struct FamilyArgs {
  std::string name = "hnk";
  int n = 0;
  long long m = 1, k = 1;
  std::vector<long long> p, q, eps;
  int l = 0, r = 0, form = 1;
  std::string word;  // explicit defining word overrides the family
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa) {
  cmd->add_option("--family", fa.name,
                  "family name: hnk, ln, gnk, g1, h1, gl, sieradski");
  cmd->add_option("--n", fa.n, "circuit size n")->required();
  cmd->add_option("--m", fa.m, "parameter m (hnk)");
  cmd->add_option("--k", fa.k, "parameter k (hnk, gnk)");
  cmd->add_option("--p", fa.p, "tail residues p_0..p_{r-1} (ln)");
  cmd->add_option("--q", fa.q, "offsets q_1..q_r (gnk)");
  cmd->add_option("--eps", fa.eps, "exponents eps_0..eps_r (gnk)");
  cmd->add_option("--l", fa.l, "parameter l (gl)");
  cmd->add_option("--r", fa.r, "parameter r (sieradski)");
  cmd->add_option("--form", fa.form, "printed form, 1 or 2 (g1, h1, gl)");
  cmd->add_option("--word", fa.word, "explicit defining word, e.g. \"x1 x4 x2^-1\"");
}

// Out-of-range family parameters are accepted and reduced mod n.
void notice_normalized(const FamilyArgs& fa) {
  auto out_of_range = [&](long long v) { return v < 1 || v > fa.n; };
  if (fa.name == "hnk" && (out_of_range(fa.m) || out_of_range(fa.k)))
    std::cerr << "note: parameters taken mod n\n";
}

CyclicWord family_word(const FamilyArgs& fa) {
  if (!fa.word.empty()) return CyclicWord(fa.n, parse_word(fa.word, fa.n));
  if (fa.name == "hnk") return family_hnk({fa.n, fa.m, fa.k});
  if (fa.name == "ln") {
    if (fa.p.empty()) throw CLI::ValidationError("--p required for ln");
    return family_ln({fa.n, fa.p});
  }
  if (fa.name == "gnk") {
    GnkParams P{fa.n, fa.k, fa.q, fa.eps};
    return family_gnk(P);
  }
  if (fa.name == "g1") return catalog_g1(fa.n, fa.form);
  if (fa.name == "h1") return catalog_h1(fa.n, fa.form);
  if (fa.name == "gl") return catalog_gl(fa.l, fa.n, fa.form);
  if (fa.name == "sieradski") return catalog_sieradski(fa.r, fa.n);
  throw CLI::ValidationError("unknown family " + fa.name);
}

json word_to_json(const Word& w) {
  json letters = json::array();
  for (const auto& l : w.letters)
    letters.push_back({{"index", l.index + 1}, {"sign", l.sign}});
  return {{"n", w.n}, {"letters", letters}, {"text", print_word(w)}};
}

json two_gen_to_json(const TwoGenWord& w) {
  return {{"n", w.n}, {"text", print_two_gen(w)}};
}

std::string girth_str(const std::optional<int>& g) {
  return g ? std::to_string(*g) : std::string("inf");
}

int cmd_family(const FamilyArgs& fa, const std::string& format) {
  notice_normalized(fa);
  CyclicWord cw = family_word(fa);
  if (format == "json")
    std::cout << word_to_json(cw.w).dump(2) << "\n";
  else
    std::cout << print_word(cw.w) << "\n";
  return kOk;
}

int cmd_pres(const FamilyArgs& fa, const std::string& format) {
  Presentation p = cyclic_presentation(family_word(fa));
  if (format == "json") {
    json rels = json::array();
    for (const auto& r : p.relators) rels.push_back(print_word(r));
    std::cout << json{{"generators", p.generators}, {"relators", rels}}.dump(2)
              << "\n";
  } else {
    std::cout << "generators:";
    for (const auto& g : p.generators) std::cout << " " << g;
    std::cout << "\nrelators:\n";
    for (const auto& r : p.relators) std::cout << "  " << print_word(r) << "\n";
  }
  return kOk;
}

int cmd_hnn(const FamilyArgs& fa, const std::string& format) {
  CyclicWord cw = family_word(fa);
  TwoGenWord W = hnn_two_generator(cw);
  if (format == "json") {
    std::cout << json{{"relator", two_gen_to_json(W)},
                      {"commutator", print_two_gen(commutator_relator(cw.n))},
                      {"asum", asum(W)},
                      {"csum", csum(W)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "W(a,c)   = " << print_two_gen(W) << "\n"
              << "together with [a,c^" << cw.n << "]\n";
  }
  return kOk;
}

int cmd_derive(const std::string& word, int n, const std::string& format) {
  TwoGenWord u = free_reduce(parse_two_gen(word, n));
  bool inverted = false;
  if (asum(u) == -1) {
    u = free_reduce(inverse(u));
    inverted = true;
  }
  TwoGenWord normalized = normalize_c_sum(u);
  CyclicWord cw = derive_cyclic_word(normalized);
  if (format == "json") {
    std::cout << json{{"inverted", inverted},
                      {"normalized", print_two_gen(normalized)},
                      {"word", word_to_json(cw.w)}}
                     .dump(2)
              << "\n";
  } else {
    if (inverted) std::cout << "(relator inverted to reach a-sum +1)\n";
    std::cout << "normalized U = " << print_two_gen(normalized) << "\n"
              << "cyclic word  = " << print_word(cw.w) << "\n";
  }
  return kOk;
}

int cmd_ytrans(const FamilyArgs& fa, const std::string& format) {
  GnkParams P{fa.n, fa.k, fa.q, fa.eps};
  CyclicWord y = gnk_y_form(P);
  if (format == "json")
    std::cout << word_to_json(y.w).dump(2) << "\n";
  else
    std::cout << print_word(y.w, 'y') << "\n";
  return kOk;
}

int cmd_log_collapse(const std::string& file, const std::string& format) {
  std::ifstream in(file);
  if (!in) throw CLI::ValidationError("cannot open " + file);
  json j = json::parse(in);
  if (j.contains("tail")) {
    TadpoleLOG t;
    t.n = j.at("n").get<int>();
    for (const auto& step : j.at("tail"))
      t.tail.push_back({step.at("p").get<int>(), step.at("delta").get<int>()});
    validate_tadpole(t);
    TwoGenWord u = collapse_tadpole(t);
    CollapsedPair elim = collapse_by_elimination(t);
    bool agree = free_reduce(rotate(elim.relator, 1)) == u ||
                 cyclic_rotation_equal_two_gen(elim.relator, u);
    bool positive = true;
    for (const auto& s : t.tail) positive = positive && s.delta == 1;
    json out{{"n", t.n},
             {"relator", two_gen_to_json(u)},
             {"commutator", print_two_gen(commutator_relator(t.n))},
             {"elimination_agrees", agree}};
    if (positive) {
      LnParams P = tadpole_ln_params(t);
      TwoGenWord printed = positive_tail_relator(P);
      out["positive_tail_relator"] = print_two_gen(printed);
      out["hat_equal"] = hat_rewrite(printed) == hat_rewrite(u);
      out["cyclic_word"] = print_word(family_ln(P).w);
    }
    if (format == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "U(a,c) = " << out["relator"]["text"].get<std::string>()
                << "\ntogether with [a,c^" << t.n << "]\n";
      if (positive)
        std::cout << "positive-tail form = "
                  << out["positive_tail_relator"].get<std::string>()
                  << " (hat-equal: " << out["hat_equal"].get<bool>() << ")\n"
                  << "cyclic word = " << out["cyclic_word"].get<std::string>()
                  << "\n";
    }
    return agree ? kOk : kViolation;
  }
  // general LOG
  GeneralLOG g;
  for (const auto& v : j.at("vertices")) g.vertices.push_back(v.get<std::string>());
  auto vertex_id = [&](const std::string& name) {
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      if (g.vertices[i] == name) return static_cast<int>(i);
    throw CLI::ValidationError("unknown vertex " + name);
  };
  for (const auto& e : j.at("edges"))
    g.edges.push_back({vertex_id(e.at("from").get<std::string>()),
                       vertex_id(e.at("to").get<std::string>()),
                       vertex_id(e.at("label").get<std::string>()),
                       e.value("sign", 1)});
  Presentation p = log_presentation(g);
  if (format == "json") {
    json rels = json::array();
    for (const auto& r : p.relators) rels.push_back(print_word(r, p.generators));
    std::cout << json{{"generators", p.generators}, {"relators", rels}}.dump(2)
              << "\n";
  } else {
    std::cout << "generators:";
    for (const auto& gen : p.generators) std::cout << " " << gen;
    std::cout << "\nrelators:\n";
    for (const auto& r : p.relators)
      std::cout << "  " << print_word(r, p.generators) << "\n";
  }
  return kOk;
}

int cmd_star(const FamilyArgs& fa, bool generic, const std::string& format) {
  StarGraph g;
  if (!generic && fa.word.empty() && fa.name == "hnk") {
    g = star_hnk(fa.n, fa.m, fa.k);
  } else {
    g = star_graph(cyclic_presentation(family_word(fa)));
  }
  auto vname = [&](int v) {
    return "x" + std::to_string(star_vertex_index(v) + 1) +
           (star_vertex_sign(v) < 0 ? "^-1" : "");
  };
  if (format == "json") {
    json edges = json::array();
    for (const auto& e : g.edges)
      edges.push_back({{"u", vname(e.u)}, {"v", vname(e.v)},
                       {"type", std::string(1, e.type)}});
    std::cout << json{{"vertices", 2 * g.rank}, {"edges", edges}}.dump(2) << "\n";
  } else {
    std::cout << 2 * g.rank << " vertices, " << g.edges.size() << " edges\n";
    for (const auto& e : g.edges)
      std::cout << "  {" << vname(e.u) << ", " << vname(e.v) << "}"
                << (e.type != '-' ? std::string("  [") + e.type + "]" : "")
                << "\n";
  }
  return kOk;
}

int cmd_girth(const FamilyArgs& fa, int lmax, const std::string& format) {
  StarGraph g = (fa.word.empty() && fa.name == "hnk")
                    ? star_hnk(fa.n, fa.m, fa.k)
                    : star_graph(cyclic_presentation(family_word(fa)));
  CycleSpectrum spec = star_cycles(g, lmax);
  if (format == "json") {
    json counts = json::object();
    for (const auto& [len, c] : spec.count_by_length)
      counts[std::to_string(len)] = c;
    json cycles = json::array();
    for (const auto& c : spec.cycles) cycles.push_back(c.types);
    std::cout << json{{"girth", girth_str(spec.girth)},
                      {"counts", counts},
                      {"types", cycles}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "girth " << girth_str(spec.girth) << "\n";
    for (const auto& [len, c] : spec.count_by_length)
      std::cout << "  length " << len << ": " << c << " cycles\n";
  }
  return kOk;
}

int cmd_classify(const FamilyArgs& fa, const std::string& format) {
  SurveyRow row =
      survey_row(fa.n, static_cast<int>(mod_residue(fa.m - 1, fa.n)) + 1,
                 static_cast<int>(mod_residue(fa.k - 1, fa.n)) + 1);
  SCClassification cls = classify_hnk_congruences(fa.n, fa.m, fa.k);
  bool agrees =
      row.thm_c3t6 == row.oracle_c3t6 && row.thm_c3t7 == row.oracle_c3t7;
  if (format == "json") {
    json j{{"n", row.n},           {"m", row.m},
           {"k", row.k},           {"A", row.A},
           {"B", row.B},           {"c3t6", row.thm_c3t6},
           {"c3t7", row.thm_c3t7}, {"oracle_c3t6", row.oracle_c3t6},
           {"oracle_c3t7", row.oracle_c3t7},
           {"girth", girth_str(row.girth)},
           {"special", row.special},
           {"annotations", cls.annotations}};
    if (cls.excluded_case) j["excluded_case"] = *cls.excluded_case;
    if (!row.discrepancy_flags.empty()) j["discrepancies"] = row.discrepancy_flags;
    std::cout << j.dump(2) << "\n";
  } else {
    if (row.thm_c3t7)
      std::cout << "C(3)-T(7); girth>=7";
    else if (row.thm_c3t6)
      std::cout << "C(3)-T(6), non-special; girth=" << girth_str(row.girth);
    else
      std::cout << "not C(3)-T(6); girth=" << girth_str(row.girth)
                << (row.girth && *row.girth <= 4
                        ? "; " + below_t5_reason(fa.n, fa.m, fa.k)
                        : "");
    std::cout << (agrees ? "; oracle agrees" : "; ORACLE DISAGREES") << "\n";
    if (cls.excluded_case) std::cout << "excluded case: " << *cls.excluded_case << "\n";
    for (const auto& a : cls.annotations) std::cout << "note: " << a << "\n";
  }
  return agrees ? kOk : kViolation;
}

int cmd_special(const FamilyArgs& fa, const std::string& format) {
  StarGraph g = (fa.word.empty() && fa.name == "hnk")
                    ? star_hnk(fa.n, fa.m, fa.k)
                    : star_graph(cyclic_presentation(family_word(fa)));
  bool special = is_special_c3t6(g);
  if (format == "json")
    std::cout << json{{"special", special}}.dump(2) << "\n";
  else
    std::cout << (special ? "special" : "not special") << "\n";
  return kOk;
}

int cmd_taxonomy(int n, const std::string& format) {
  Hn3Taxonomy t = cycle_taxonomy_h_n3(n);
  if (format == "json") {
    json counts = json::object();
    for (const auto& [len, c] : t.spectrum.count_by_length)
      counts[std::to_string(len)] = c;
    json types = json::object();
    for (const auto& [pattern, c] : t.count_by_type) types[pattern] = c;
    std::cout << json{{"n", n},
                      {"girth", girth_str(t.spectrum.girth)},
                      {"counts", counts},
                      {"types", types},
                      {"all_short_are_5", t.all_short_are_5},
                      {"all_5_are_form_i", t.all_5_are_form_i},
                      {"has_6_cycle", t.has_6_cycle},
                      {"has_7_cycle", t.has_7_cycle},
                      {"has_all_y_8_cycle", t.has_all_y_8_cycle}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "star graph of the (n,3,1) presentation, n=" << n << "\n"
              << "girth " << girth_str(t.spectrum.girth) << "\n";
    for (const auto& [len, c] : t.spectrum.count_by_length)
      std::cout << "  length " << len << ": " << c << " cycles\n";
    std::cout << "by type pattern:\n";
    for (const auto& [pattern, c] : t.count_by_type)
      std::cout << "  " << pattern << ": " << c << "\n";
    std::cout << "short cycles all of length 5: "
              << (t.all_short_are_5 ? "yes" : "no") << "\n"
              << "5-cycles all of the X-Z-Z-X-Y form: "
              << (t.all_5_are_form_i ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_abelian(const FamilyArgs& fa, const std::string& format) {
  CyclicWord cw = family_word(fa);
  auto inv = smith_normal_form(relation_matrix(cyclic_presentation(cw)));
  auto res = ab_order_circulant(cw);
  bool agree = inv.finite() ? (res && inv.order() == *res) : !res;
  if (format == "json") {
    json divisors = json::array();
    for (const auto& d : inv.divisors) divisors.push_back(d.str());
    json j{{"divisors", divisors},
           {"free_rank", inv.free_rank},
           {"snf_order", inv.finite() ? inv.order().str() : "inf"},
           {"resultant_order", res ? res->str() : "inf"},
           {"agree", agree}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "invariants:";
    if (inv.divisors.empty() && inv.free_rank == 0) std::cout << " trivial";
    for (const auto& d : inv.divisors) std::cout << " Z_" << d.str();
    for (int i = 0; i < inv.free_rank; ++i) std::cout << " Z";
    std::cout << "\norder (SNF)       = "
              << (inv.finite() ? inv.order().str() : "inf")
              << "\norder (resultant) = " << (res ? res->str() : "inf") << "\n";
  }
  return agree ? kOk : kViolation;
}

long long default_max_cosets() {
  if (const char* env = std::getenv("CPG_MAX_COSETS")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 5'000'000;
}

int cmd_order(const FamilyArgs& fa, long long max_cosets,
              const std::vector<std::string>& subgroup, bool dump_table,
              const std::string& format) {
  CyclicWord cw = family_word(fa);
  Presentation p = cyclic_presentation(cw);
  std::vector<Word> sub;
  for (const auto& s : subgroup) sub.push_back(parse_word(s, fa.n));
  CompletedTable table;
  EnumerationResult res = todd_coxeter(p, sub, max_cosets, &table);
  if (!res.completed) {
    if (format == "json")
      std::cout << json{{"status", "exhausted"},
                        {"cap", res.cap},
                        {"total_defined", res.total_defined}}
                       .dump(2)
                << "\n";
    else
      std::cout << "no conclusion within " << res.cap << " cosets\n";
    return kInconclusive;
  }
  if (!verify_table(table, p, sub)) {
    std::cerr << "internal error: completed table failed verification\n";
    return kViolation;
  }
  if (format == "json")
    std::cout << json{{"status", "completed"},
                      {"index", res.index},
                      {"total_defined", res.total_defined}}
                     .dump(2)
              << "\n";
  else
    std::cout << res.index << "\n";
  if (dump_table) {
    for (std::int64_t c = 0; c < table.size; ++c) {
      std::cout << (c + 1) << ":";
      for (int col = 0; col < 2 * table.ngens; ++col)
        std::cout << " " << table.step(c, col) + 1;
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_conj(const FamilyArgs& fa, const std::string& u_text, long long p_pow,
             const std::string& v_text, long long q_pow, long long max_cosets,
             const std::string& format) {
  CyclicWord cw = family_word(fa);
  Presentation pres = cyclic_presentation(cw);
  CompletedTable table;
  EnumerationResult res = todd_coxeter(pres, {}, max_cosets, &table);
  if (!res.completed) {
    std::cout << "no conclusion: quotient not enumerated within cap\n";
    return kInconclusive;
  }
  FiniteGroupTable G = regular_representation(table, cw);
  if (!verify_shift_automorphism(G)) {
    std::cerr << "internal error: shift automorphism failed verification\n";
    return kViolation;
  }
  std::int32_t u =
      static_cast<std::int32_t>(table.trace(0, parse_word(u_text, fa.n)));
  std::int32_t v =
      static_cast<std::int32_t>(table.trace(0, parse_word(v_text, fa.n)));
  auto w = semidirect_conjugate(G, {u, p_pow}, {v, q_pow});
  if (w && !semidirect_witness_verifies(G, {u, p_pow}, {v, q_pow}, *w)) {
    std::cerr << "internal error: witness failed verification\n";
    return kViolation;
  }
  if (format == "json") {
    json j{{"order", G.order}, {"conjugate", w.has_value()}};
    if (w) j["witness"] = {{"g", w->g}, {"m", w->m}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "quotient order " << G.order << "\n";
    if (w)
      std::cout << "conjugate via (g, m) = (element " << w->g << ", t^" << w->m
                << ")\n";
    else
      std::cout << "not conjugate\n";
  }
  return kOk;
}

int cmd_survey(int nmax, const std::string& out_file, unsigned jobs) {
  auto rows = run_survey(nmax, jobs);
  std::string csv = survey_csv(rows);
  if (out_file.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_file, std::ios::binary);
    out << csv;
  }
  long long mismatches = 0;
  for (const auto& r : rows)
    if (r.thm_c3t6 != r.oracle_c3t6 || r.thm_c3t7 != r.oracle_c3t7) ++mismatches;
  std::cerr << rows.size() << " rows, " << mismatches
            << " congruence/oracle mismatches\n";
  return mismatches == 0 ? kOk : kViolation;
}

// Cross-module identity suite for one parameter triple.
bool verify_triple(int n, int m, int k, std::ostream& log) {
  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    log << (cond ? "  ok   " : "  FAIL ") << what << "\n";
    ok = ok && cond;
  };
  CyclicWord cw = family_hnk({n, m, k});
  if (cw.w.empty()) {
    log << "  (defining word reduces to the empty word; skipping)\n";
    return true;
  }
  // round trip through the two-generator presentation
  TwoGenWord W = hnn_two_generator(cw);
  if (asum(W) == -1) W = free_reduce(inverse(W));
  if (asum(W) == 1) {
    CyclicWord back = derive_cyclic_word(normalize_c_sum(W));
    check(cyclic_equivalent(back.w, cw.w).has_value(),
          "derive . normalize . hnn recovers the defining word");
  }
  // congruence classification against the girth oracle
  SurveyRow row = survey_row(n, m, k);
  check(row.thm_c3t6 == row.oracle_c3t6, "C(3)-T(6) congruences == girth oracle");
  check(row.thm_c3t7 == row.oracle_c3t7, "C(3)-T(7) congruences == girth oracle");
  // abelianization: SNF vs resultant
  auto inv = smith_normal_form(relation_matrix(cyclic_presentation(cw)));
  auto res = ab_order_circulant(cw);
  check(inv.finite() ? (res && inv.order() == *res) : !res,
        "Smith normal form order == resultant order");
  // tadpole collapse identities
  TadpoleLOG t = tadpole_hnk({n, m, k});
  TwoGenWord direct = collapse_tadpole(t);
  CollapsedPair elim = collapse_by_elimination(t);
  check(free_reduce(rotate(elim.relator, 1)) == direct,
        "tadpole collapse == symbolic elimination");
  LnParams P = tadpole_ln_params(t);
  check(hat_rewrite(positive_tail_relator(P)) == hat_rewrite(direct),
        "printed positive-tail relator == collapse in <a,c | [a,c^n]>");
  HatElement Wl = hat_rewrite(hnn_two_generator(family_ln(P)));
  HatElement R = hat_rewrite(positive_tail_relator(P));
  TwoGenWord wit(n);
  wit.push_power(Gen2::c, P.p[0] - 1);
  wit = concat(wit, positive_tail_product(P));
  check(hat_conjugation_verifies(hat_rewrite(wit), hat_inverse(R), Wl),
        "hat-conjugacy witness between the tadpole and L-word relators");
  // L-word abelianization agrees with the (m,k) word's
  auto invL = smith_normal_form(relation_matrix(cyclic_presentation(family_ln(P))));
  check(inv == invL, "L-word and (m,k)-word abelianizations agree");
  // adjudication of the L = (m,k) identification: the defining words
  // coincide up to shift only at k = 1; the relator-level hat-conjugacy
  // outcome is reported, never asserted
  bool words_equal = cyclic_equivalent(family_ln(P).w, cw.w).has_value();
  log << "  note: L and (m,k) defining words "
      << (words_equal ? "agree up to shift/rotation/inversion"
                      : "differ as cyclic words (identification is "
                        "group-level)")
      << "\n";
  auto adjw = hat_conjugate(R, hat_rewrite(hnn_two_generator(cw)), 4);
  log << "  note: relator hat-conjugacy (L vs (m,k)): "
      << (adjw ? "witness found and verified" : "unknown within bound 4")
      << "\n";
  return ok;
}

int cmd_verify(const FamilyArgs& fa, bool grid) {
  bool ok = true;
  if (!grid) {
    std::cout << "verifying (n,m,k) = (" << fa.n << "," << fa.m << "," << fa.k
              << ")\n";
    ok = verify_triple(fa.n, static_cast<int>(fa.m), static_cast<int>(fa.k),
                       std::cout);
  } else {
    for (int n = 2; n <= fa.n; ++n)
      for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
          std::ostringstream log;
          if (!verify_triple(n, m, k, log)) {
            std::cout << "(n,m,k) = (" << n << "," << m << "," << k << ")\n"
                      << log.str();
            ok = false;
          }
        }
    if (ok) std::cout << "all triples up to n = " << fa.n << " verified\n";
  }
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for cyclically presented groups, tadpole LOG groups, "
               "and their natural HNN extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  FamilyArgs fa;

  auto* family = app.add_subcommand("family", "emit a family defining word");
  add_family_options(family, fa);

  auto* pres = app.add_subcommand("pres", "expand a cyclic presentation");
  add_family_options(pres, fa);

  auto* hnn = app.add_subcommand(
      "hnn", "two-generator relator of the natural HNN extension");
  add_family_options(hnn, fa);

  auto* derive = app.add_subcommand(
      "derive", "cyclic word of a balanced two-generator relator");
  std::string derive_word;
  int derive_n = 0;
  derive->add_option("--word", derive_word, "relator over a and c")->required();
  derive->add_option("--n", derive_n, "modulus n")->required();

  auto* ytrans = app.add_subcommand("ytrans", "y-generator presentation");
  add_family_options(ytrans, fa);

  auto* logc = app.add_subcommand("log-collapse", "collapse a LOG from JSON");
  std::string log_file;
  logc->add_option("file", log_file, "LOG JSON file")->required();

  auto* star = app.add_subcommand("star", "star graph of a presentation");
  bool star_generic = false;
  add_family_options(star, fa);
  star->add_flag("--generic", star_generic,
                 "use the generic definition even for the (m,k) family");

  auto* girth = app.add_subcommand("girth", "girth and cycle spectrum");
  int lmax = 8;
  add_family_options(girth, fa);
  girth->add_option("--lmax", lmax, "maximum cycle length to enumerate");

  auto* classify = app.add_subcommand(
      "classify", "small-cancellation classification with oracle");
  add_family_options(classify, fa);

  auto* special = app.add_subcommand("special", "special C(3)-T(6) test");
  add_family_options(special, fa);

  auto* taxonomy = app.add_subcommand(
      "taxonomy", "cycle taxonomy of the (n,3,1) star graph");
  int tax_n = 0;
  taxonomy->add_option("--n", tax_n, "circuit size")->required();

  auto* abelian = app.add_subcommand("abelian", "abelianization invariants");
  add_family_options(abelian, fa);

  auto* order = app.add_subcommand("order", "Todd-Coxeter coset enumeration");
  add_family_options(order, fa);
  long long max_cosets = default_max_cosets();
  std::vector<std::string> subgroup;
  bool dump_table = false;
  order->add_option("--max-cosets", max_cosets, "coset cap");
  order->add_option("--subgroup", subgroup, "subgroup generator words");
  order->add_flag("--dump-table", dump_table, "print the coset table");

  auto* conj = app.add_subcommand(
      "conj", "conjugacy in the natural HNN extension of a finite quotient");
  conj->add_option("--family", fa.name, "family name (hnk)");
  conj->add_option("--n", fa.n, "circuit size n")->required();
  conj->add_option("--m", fa.m, "parameter m");
  conj->add_option("--k", fa.k, "parameter k");
  conj->add_option("--word", fa.word, "explicit defining word");
  std::string u_text, v_text;
  long long p_pow = 0, q_pow = 0;
  conj->add_option("--u", u_text, "left element, word in the x_i")->required();
  conj->add_option("--p", p_pow, "power of t on the left")->required();
  conj->add_option("--v", v_text, "right element, word in the x_i")->required();
  conj->add_option("--q", q_pow, "power of t on the right")->required();
  conj->add_option("--max-cosets", max_cosets, "coset cap");

  auto* survey = app.add_subcommand("survey", "grid survey CSV");
  int nmax = 20;
  std::string out_file;
  unsigned jobs = 1;
  survey->add_option("--nmax", nmax, "largest circuit size");
  survey->add_option("--out", out_file, "output CSV path (stdout if absent)");
  survey->add_option("--jobs", jobs, "worker threads");

  auto* verify = app.add_subcommand("verify", "cross-module identity suite");
  bool verify_grid = false;
  add_family_options(verify, fa);
  verify->add_flag("--grid", verify_grid,
                   "verify every (m,k) for all circuit sizes up to n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (family->parsed()) return cmd_family(fa, format);
    if (pres->parsed()) return cmd_pres(fa, format);
    if (hnn->parsed()) return cmd_hnn(fa, format);
    if (derive->parsed()) return cmd_derive(derive_word, derive_n, format);
    if (ytrans->parsed()) return cmd_ytrans(fa, format);
    if (logc->parsed()) return cmd_log_collapse(log_file, format);
    if (star->parsed()) return cmd_star(fa, star_generic, format);
    if (girth->parsed()) return cmd_girth(fa, lmax, format);
    if (classify->parsed()) return cmd_classify(fa, format);
    if (special->parsed()) return cmd_special(fa, format);
    if (taxonomy->parsed()) return cmd_taxonomy(tax_n, format);
    if (abelian->parsed()) return cmd_abelian(fa, format);
    if (order->parsed())
      return cmd_order(fa, max_cosets, subgroup, dump_table, format);
    if (conj->parsed())
      return cmd_conj(fa, u_text, p_pow, v_text, q_pow, max_cosets, format);
    if (survey->parsed()) return cmd_survey(nmax, out_file, jobs);
    if (verify->parsed()) return cmd_verify(fa, verify_grid);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}
