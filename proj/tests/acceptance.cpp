// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion (sub-checks listed underneath).
#include <chrono>
#include <iostream>
#include <set>

#include "percox/glnspecies.hpp"
#include "percox/orbitcat.hpp"
#include "percox/report.hpp"

using namespace percox;

namespace {

struct Check {
  std::string name;
  bool pass;
};

struct Criterion {
  int id;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;
  bool pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::vector<Criterion> g_results;

template <typename F>
void run_criterion(int id, const std::string& title, F&& body) {
  Criterion crit;
  crit.id = id;
  crit.title = title;
  auto t0 = std::chrono::steady_clock::now();
  body(crit.checks);
  crit.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (crit.pass() ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": "
            << title << "  (" << crit.seconds << " s)\n";
  for (auto& c : crit.checks)
    if (!c.pass) std::cout << "        failed sub-check: " << c.name << "\n";
  std::cout.flush();
  g_results.push_back(crit);
}

int count_dim(const Complex& cx, int dim) {
  int c = 0;
  for (auto& f : cx.faces)
    if (f.dim == dim) ++c;
  return c;
}

int central_node(const Complex& cx) {
  for (int i = 0; i < cx.rs.rank; ++i) {
    int adj = 0;
    for (int j = 0; j < cx.rs.rank; ++j)
      if (j != i &&
          dot(cx.rs.roots[cx.rs.simple_idx[i]], cx.rs.roots[cx.rs.simple_idx[j]]) != 0)
        ++adj;
    if (adj == 3) return i;
  }
  throw Error("no trivalent node");
}

void criterion1(std::vector<Check>& out) {
  auto cx = build_complex(Series::A, 2);
  out.push_back({"6 chambers", count_dim(cx, 3) == 6});
  out.push_back({"6 rays", count_dim(cx, 2) == 6});
  out.push_back({"1 minimal face", count_dim(cx, 1) == 1});
  auto ot = build_orbit_table(cx);
  int flat = cx.faces[cx.dominant_face[1]].flat_id;
  int codim1 = 0;
  bool one_orbit = true;
  for (auto& fl : cx.flats)
    if (fl.dim == 2) {
      ++codim1;
      if (ot.flat_orbit[fl.id] != ot.flat_orbit[flat]) one_orbit = false;
    }
  out.push_back({"3 codim-1 flats", codim1 == 3});
  out.push_back({"codim-1 flats in one W-orbit", one_orbit});
  auto lg = levi_group_data(cx, flat);
  out.push_back({"W(l_alpha) trivial", quotient_group_structure(cx, lg).is_trivial()});
  auto q = coinvariant_presentation(cx, flat);
  auto qi = presentation_invariants(q);
  out.push_back({"Br(l_alpha,W) has 2 objects", qi.object_count == 2});
  out.push_back({"vertex abelianization Z", qi.vertex_abelianization == AbelianGroup{1, {}}});
}

void criterion2(std::vector<Check>& out) {
  auto cx = build_complex(Series::B, 2);
  out.push_back({"8 chambers", count_dim(cx, 2) == 8});
  auto ot = build_orbit_table(cx);
  std::set<int> orbits;
  for (auto& fl : cx.flats)
    if (fl.dim == 1) orbits.insert(ot.flat_orbit[fl.id]);
  out.push_back({"two W-orbits of codim-1 flats", orbits.size() == 2});
  int flat = cx.faces[cx.dominant_face[2]].flat_id; // short simple root
  auto lg = levi_group_data(cx, flat);
  out.push_back({"Stab(l_alpha) has order 4", lg.stab.size() == 4});
  out.push_back({"W(l) = Z/2", quotient_group_structure(cx, lg).is_z2()});
  auto q = coinvariant_presentation(cx, flat);
  auto qi = presentation_invariants(q);
  out.push_back({"Br one object", qi.object_count == 1});
  out.push_back({"vertex group Z", qi.vertex_abelianization == AbelianGroup{1, {}}});
}

void criterion3(std::vector<Check>& out) {
  auto cx = build_complex(Series::D, 4);
  out.push_back({"|W| = 192", cx.W.size() == 192});
  out.push_back({"192 chambers", count_dim(cx, 4) == 192});
  out.push_back({"384 codim-1 facets", count_dim(cx, 3) == 384});
  auto ot = build_orbit_table(cx);
  int flat = cx.faces[cx.dominant_face[1 << central_node(cx)]].flat_id;
  int codim1 = 0;
  bool one_orbit = true;
  for (auto& fl : cx.flats)
    if (fl.dim == 3) {
      ++codim1;
      if (ot.flat_orbit[fl.id] != ot.flat_orbit[flat]) one_orbit = false;
    }
  out.push_back({"12 codim-1 flats in one orbit", codim1 == 12 && one_orbit});
  out.push_back({"7 induced wall classes", cx.flats[flat].wall_classes.size() == 7});
  auto lg = levi_group_data(cx, flat);
  out.push_back({"W(l) = (Z/2)^3", quotient_group_structure(cx, lg).is_elementary_2(3)});
  auto q = coinvariant_presentation(cx, flat);
  auto qi = presentation_invariants(q);
  out.push_back({"quotient groupoid: 4 objects", qi.object_count == 4});
  out.push_back({"12 generators", qi.generator_count == 12});
  out.push_back({"9 relations", qi.relation_count == 9});
  // Paper-presentation oracle: Aut(*) = <6 generators | commutators> -> Z^6.
  auto paper = presentation_h1(1, std::vector<std::pair<int, int>>(6, {0, 0}), {});
  // KNOWN PAPER DEFECT: the machine abelianization is Z^4 and provably correct
  // (transfer: 4 W(l)-orbits on the 7 walls); the criterion as stated demands
  // Z^6 and fails honestly. See /root/notes analysis and README.
  out.push_back({"vertex abelianization = Z^6 matching the paper presentation "
                 "(machine computes " +
                     qi.vertex_abelianization.str() + ", known paper defect)",
                 qi.vertex_abelianization == paper});
}

void criterion4(std::vector<Check>& out) {
  auto cx = build_complex(Series::D, 4);
  int c = central_node(cx);
  int other = c == 0 ? 1 : 0;
  // case (a): adjacent pair {alpha*, alpha}
  int flat_a = cx.faces[cx.dominant_face[(1 << c) | (1 << other)]].flat_id;
  auto lg_a = levi_group_data(cx, flat_a);
  out.push_back({"case a: W(l) = Z/2", quotient_group_structure(cx, lg_a).is_z2()});
  auto qa = presentation_invariants(coinvariant_presentation(cx, flat_a));
  // paper-displayed presentation: 3 objects, 6 generators, (abc)^2 = (c'b'a')^2 = 1
  std::vector<std::pair<int, int>> arrows_a{{0, 2}, {2, 1}, {1, 0}, {2, 0}, {1, 2}, {0, 1}};
  auto paper_a = presentation_h1(3, arrows_a, {{2, 2, 2, 0, 0, 0}, {0, 0, 0, 2, 2, 2}});
  bool match_a = qa.object_count == 3 && qa.generator_count == 6 &&
                 qa.relation_count == 2 && qa.vertex_abelianization == paper_a;
  out.push_back({"case a: presentation matches the paper list (machine: 3 obj, 6 gen, " +
                     std::to_string(qa.relation_count) + " rel, " +
                     qa.vertex_abelianization.str() + " vs paper " + paper_a.str() +
                     "; known paper defect)",
                 match_a});
  // case (b): orthogonal pair of outer nodes
  std::vector<int> outer;
  for (int i = 0; i < 4; ++i)
    if (i != c) outer.push_back(i);
  int flat_b = cx.faces[cx.dominant_face[(1 << outer[0]) | (1 << outer[1])]].flat_id;
  auto lg_b = levi_group_data(cx, flat_b);
  auto qgroup_b = quotient_group_structure(cx, lg_b);
  out.push_back({"case b: W(l) = (Z/2)^2 (machine computes a group of order " +
                     std::to_string(qgroup_b.order) + ", known paper defect)",
                 qgroup_b.is_elementary_2(2)});
  auto qb = presentation_invariants(coinvariant_presentation(cx, flat_b));
  bool match_b = qb.object_count == 2 && qb.generator_count == 4 && qb.relation_count == 2;
  out.push_back({"case b: presentation matches the paper figure (machine: " +
                     std::to_string(qb.object_count) + " obj, " +
                     std::to_string(qb.generator_count) + " gen, " +
                     std::to_string(qb.relation_count) + " rel; known paper defect)",
                 match_b});
}

void criterion5(std::vector<Check>& out) {
  struct Sys {
    Series s;
    int r;
    std::string name;
  };
  std::vector<Sys> systems{{Series::A, 2, "A2"},
                           {Series::B, 2, "B2"},
                           {Series::A, 3, "A3"},
                           {Series::B, 3, "B3"},
                           {Series::D, 4, "D4"}};
  for (auto& sys : systems) {
    auto cx = build_complex(sys.s, sys.r);
    PCox pc(cx);
    int full = cx.num_masks() - 1;
    bool counts_ok = true, bijections_ok = true, proofs_ok = true, replays_ok = true;
    int unknowns = 0;
    for (int m1 = 0; m1 < cx.num_masks(); ++m1)
      for (int m2 = 0; m2 < cx.num_masks(); ++m2) {
        auto rep = verify_langlands(pc, m1, m2, full);
        auto W1 = face_stabilizer(cx, cx.dominant_face[m1]);
        auto W2 = face_stabilizer(cx, cx.dominant_face[m2]);
        if (rep.coset_reps.size() != double_cosets(cx.W, W1, W2).size())
          counts_ok = false;
        if (!rep.bijection_ok) bijections_ok = false;
        for (auto& t : rep.terms) {
          if (t.proto.proof.verdict != Verdict::Proved) proofs_ok = false;
          else if (!replay_proof(cx, t.proto.lhs, t.proto.rhs, t.proto.proof))
            replays_ok = false;
        }
        if (rep.final_check.verdict != Verdict::Proved) ++unknowns;
        if (sys.name == "B2" && m1 == 2 && m2 == 1)
          out.push_back({"B2 (alpha,beta) yields exactly 2 terms",
                         rep.coset_reps.size() == 2});
      }
    out.push_back({sys.name + ": term counts = |W1\\W/W2|", counts_ok});
    out.push_back({sys.name + ": structural bijections validate", bijections_ok});
    out.push_back({sys.name + ": all per-term proto-Langlands proved, replayable",
                   proofs_ok && replays_ok});
    out.push_back({sys.name + ": no Unknown verdicts", unknowns == 0});
    // a sample of proper through-objects p3
    int proper = 0;
    bool proper_ok = true;
    for (int m3 = 1; m3 < full && proper < 3; ++m3) {
      for (int m1 = 0; m1 <= m3 && proper < 3; ++m1)
        for (int m2 = 0; m2 <= m3 && proper < 3; ++m2) {
          if ((m1 & m3) != m1 || (m2 & m3) != m2) continue;
          auto rep = verify_langlands(pc, m1, m2, m3);
          if (!rep.proved()) proper_ok = false;
          ++proper;
        }
    }
    out.push_back({sys.name + ": proper through-object samples proved",
                   proper_ok && proper > 0});
  }
}

void criterion6(std::vector<Check>& out) {
  for (auto [s, r, name] :
       {std::tuple{Series::A, 2, "A2"}, {Series::B, 2, "B2"}}) {
    auto cx = build_complex(s, r);
    bool all_proved = true, all_certs = true;
    int n = 0;
    for (auto& p : cx.faces)
      for (auto& p1 : cx.faces)
        for (auto& p2 : cx.faces) {
          if (!cx.closure_leq(p.id, p1.id) || !cx.closure_leq(p.id, p2.id)) continue;
          auto rep = verify_proto_langlands(cx, p1.id, p.id, p2.id);
          if (rep.proof.verdict != Verdict::Proved) all_proved = false;
          if (rep.certs.size() != 4) all_certs = false;
          ++n;
        }
    out.push_back({std::string(name) + ": all " + std::to_string(n) +
                       " valid triples proved",
                   all_proved});
    out.push_back({std::string(name) + ": 4-chain collinearity certificates produced",
                   all_certs});
  }
}

void criterion7(std::vector<Check>& out) {
  // face <-> OSP bijection, exhaustive n <= 5
  bool bij = true;
  for (int n = 2; n <= 5; ++n) {
    auto g = build_gln(n);
    auto osps = all_osps(n);
    if (osps.size() != g.cx.faces.size()) bij = false;
    for (auto& p : osps)
      if (partition_of(g, face_of(g, p)) != p) bij = false;
  }
  out.push_back({"face <-> ordered-set-partition bijection exhaustive, n <= 5", bij});
  // tits_lex == sign rule, n <= 4
  bool lex = true;
  for (int n = 2; n <= 4; ++n) {
    auto g = build_gln(n);
    auto osps = all_osps(n);
    for (auto& a : osps)
      for (auto& b : osps)
        if (partition_of(g, g.cx.tits(face_of(g, a), face_of(g, b))) != tits_lex(a, b))
          lex = false;
  }
  out.push_back({"tits_lex = sign-rule Tits product exhaustive, n <= 4", lex});
  // SB3 for all (J, L) at n <= 4
  bool sb3 = true;
  for (int n = 2; n <= 4; ++n) {
    auto g = build_gln(n);
    for (int jm = 0; jm < (1 << n); ++jm)
      for (int lm = 0; lm < (1 << n); ++lm) {
        std::vector<int> J1, J2, L1, L2;
        for (int i = 1; i <= n; ++i) {
          ((jm >> (i - 1)) & 1 ? J1 : J2).push_back(i);
          ((lm >> (i - 1)) & 1 ? L1 : L2).push_back(i);
        }
        if (!verify_SB3(g, J1, J2, L1, L2).proved()) sb3 = false;
      }
  }
  out.push_back({"verify_SB3 proved for all (J,L), n <= 4", sb3});
  // exchange-index triple bijection for all margins, n <= 6
  bool exch = true;
  for (int n = 2; n <= 6; ++n) {
    auto g = build_gln(n);
    for (int p1 = 0; p1 <= n; ++p1)
      for (int q1 = 0; q1 <= n; ++q1)
        if (!exchange_bijection(g, p1, n - p1, q1, n - q1).bijections_ok) exch = false;
  }
  out.push_back({"exchange-index triple bijection for all margins, n <= 6", exch});
  // lambda partial homomorphism over S4
  auto g4 = build_gln(4);
  bool lam = true;
  int additive = 0;
  for (auto& [p1, w1] : g4.weyl_of_perm)
    for (auto& [p2, w2] : g4.weyl_of_perm) {
      auto rep = verify_lambda_partial_hom(g4, p1, p2);
      if (!rep.additive) continue;
      ++additive;
      if (rep.verdict != Verdict::Proved) lam = false;
    }
  out.push_back({"lambda partial homomorphism proved for all " +
                     std::to_string(additive) + " length-additive pairs in S4",
                 lam});
}

void criterion8(std::vector<Check>& out) {
  GlnTower t;
  bool hex = true;
  int hex_count = 0;
  auto objects_of = [](int sz) {
    std::vector<OSP> objs;
    OSP block;
    std::vector<int> all;
    for (int i = 1; i <= sz; ++i) all.push_back(i);
    objs.push_back({all});
    if (sz >= 2) {
      OSP singles;
      for (int i = 1; i <= sz; ++i) singles.push_back({i});
      objs.push_back(singles);
    }
    return objs;
  };
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int k = 1; k <= 3; ++k) {
        if (n + m + k > 5) continue;
        for (auto& I : objects_of(n))
          for (auto& J : objects_of(m))
            for (auto& K : objects_of(k)) {
              if (!hexagon1(t, I, J, K).ok()) hex = false;
              if (!hexagon2(t, I, J, K).ok()) hex = false;
              hex_count += 2;
            }
      }
  out.push_back({"hexagon triangles proved at total degree <= 5 (" +
                     std::to_string(hex_count) + " instances)",
                 hex});
  bool nat = true;
  int nat_count = 0;
  for (int nf = 2; nf <= 3; ++nf) {
    auto& gn = t.at(nf);
    std::vector<MorphWord> gens;
    for (auto& x : gn.cx.faces)
      for (auto& y : gn.cx.faces) {
        if (x.id == y.id) continue;
        if (gn.cx.closure_leq(y.id, x.id))
          gens.push_back(make_word(gn.cx, x.id, {Letter{true, x.id, y.id}}));
        else if (gn.cx.closure_leq(x.id, y.id))
          gens.push_back(make_word(gn.cx, x.id, {Letter{false, x.id, y.id}}));
      }
    for (int m = 1; nf + m <= 5 && m <= 3; ++m)
      for (auto& J : objects_of(m))
        for (auto& f : gens)
          for (bool left : {true, false}) {
            if (!braiding_naturality(t, f, nf, J, left).ok()) nat = false;
            ++nat_count;
          }
  }
  out.push_back({"braiding naturality proved at total degree <= 5 (" +
                     std::to_string(nat_count) + " squares)",
                 nat});
  out.push_back({"double crossing at (1,1) certified non-identity",
                 double_crossing_nonidentity(t.at(2))});
}

void criterion9(std::vector<Check>& out) {
  auto corpus = default_corpus();
  bool corners = true;
  int nonfree = 0;
  for (auto& item : corpus) {
    if (!corner_iso_check(item.cat, item.action).ok()) corners = false;
    if (!item.action.free_on_objects()) ++nonfree;
  }
  out.push_back({"corner isomorphism on " + std::to_string(corpus.size()) +
                     " corpus categories (need >= 5)",
                 corners && corpus.size() >= 5});
  out.push_back({"includes a non-free object action", nonfree >= 1});
  int pairs = 0;
  bool descent = true;
  for (auto& item : corpus) {
    auto t = total_algebra(item.cat);
    auto act = action_on_total_algebra(item.cat, item.action);
    auto sub = invariant_subalgebra(t.alg, act);
    for (uint64_t seed : {101ull, 202ull}) {
      auto mod = random_module(sub.alg, 2, 2, seed);
      if (mod.dim == 0) continue;
      if (!descent_unit_check(t.alg, act, mod).ok()) descent = false;
      ++pairs;
    }
  }
  out.push_back({"descent unit isomorphism on " + std::to_string(pairs) +
                     " seeded (algebra, module) pairs (need >= 10)",
                 descent && pairs >= 10});
  bool freecmp = true;
  int freed = 0;
  for (auto& item : corpus) {
    if (!item.action.free_on_objects()) continue;
    ++freed;
    if (!coinvariant_vs_invariant(item.cat, item.action).ok()) freecmp = false;
  }
  out.push_back({"free-action coinvariant/invariant comparison (" +
                     std::to_string(freed) + " items)",
                 freecmp && freed >= 1});
}

void criterion10(std::vector<Check>& out) {
  for (auto [s, r, name] :
       {std::tuple{Series::A, 2, "A2"}, {Series::B, 2, "B2"}}) {
    auto cx = build_complex(s, r);
    bool ok = true;
    for (size_t f = 0; f < cx.faces.size(); ++f)
      for (size_t g = 0; g < cx.faces.size(); ++g)
        if (cx.tits((int)f, (int)g) != cx.tits_oracle((int)f, (int)g)) ok = false;
    out.push_back({std::string(name) + ": tits_product = tits_oracle, exhaustive", ok});
  }
  {
    auto cx = build_complex(Series::D, 4);
    SplitMix64 rng(2026);
    bool ok = true;
    for (int k = 0; k < 10000; ++k) {
      int f = (int)rng.below(cx.faces.size());
      int g = (int)rng.below(cx.faces.size());
      if (cx.tits(f, g) != cx.tits_oracle(f, g)) ok = false;
    }
    out.push_back({"D4: tits_product = tits_oracle on 10^4 seeded pairs", ok});
  }
  for (auto [s, r, name] :
       {std::tuple{Series::A, 2, "A2"}, {Series::B, 2, "B2"}, {Series::D, 4, "D4"}}) {
    auto cx = build_complex(s, r);
    SplitMix64 rng(77);
    bool sym = true, probes = true;
    int n = (int)cx.faces.size();
    for (int k = 0; k < 1000; ++k) {
      int f = (int)rng.below(n), g = (int)rng.below(n), h = (int)rng.below(n);
      if (cx.is_collinear(f, g, h) != cx.is_collinear(h, g, f)) sym = false;
    }
    for (int k = 0; k < 1000; ++k) {
      int f = (int)rng.below(n), h = (int)rng.below(n);
      Rat t((long long)rng.below(97) + 1, 101);
      Vec b = vadd(vscale(1 - t, cx.faces[f].witness), vscale(t, cx.faces[h].witness));
      if (!cx.is_collinear(f, cx.face_of_point(b), h)) probes = false;
    }
    out.push_back({std::string(name) + ": reversal symmetry on 10^3 sampled triples", sym});
    out.push_back({std::string(name) + ": 10^3 seeded segment probes consistent", probes});
  }
}

} // namespace

int main() {
  std::cout << "percox acceptance suite\n=======================\n";
  run_criterion(1, "A2 complex, flats, W(l), Br(l_alpha,W)", criterion1);
  run_criterion(2, "B2 complex, flat orbits, W(l), Br", criterion2);
  run_criterion(3, "D4 l=1: counts, walls, W(l), quotient groupoid", criterion3);
  run_criterion(4, "D4 l=2: both cases vs the paper's displayed data", criterion4);
  run_criterion(5, "Langlands verifier on A2, B2, A3, B3, D4", criterion5);
  run_criterion(6, "proto-Langlands exhaustive on A2 and B2", criterion6);
  run_criterion(7, "GL_n dictionary: bijection, Tits rule, SB3, exchange, lambda",
                criterion7);
  run_criterion(8, "braided structure: hexagons, naturality, double crossing",
                criterion8);
  run_criterion(9, "appendix corpus: corner iso, descent, coinvariants", criterion9);
  run_criterion(10, "oracle soundness: Tits oracle and collinearity probes", criterion10);
  int failed = 0;
  for (auto& c : g_results)
    if (!c.pass()) ++failed;
  std::cout << "=======================\n"
            << (g_results.size() - failed) << "/" << g_results.size()
            << " criteria passed\n";
  if (failed) {
    std::cout << "Criteria 3 and 4 contain sub-checks that compare against data "
                 "displayed in the source text that is inconsistent with the "
                 "machine-verified geometry (see the README's known-defects note); "
                 "those sub-checks fail honestly rather than being weakened.\n";
  }
  return failed ? 1 : 0;
}
