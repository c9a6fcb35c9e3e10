#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "percox/stratpi1.hpp"

using namespace percox;

namespace {

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

int flat_of_mask(const Complex& cx, int mask) {
  return cx.faces[cx.dominant_face[mask]].flat_id;
}

} // namespace

TEST_CASE("A2 line flat: free groupoid on an edge pair, vertex group Z") {
  auto cx = build_complex(Series::A, 2);
  int flat = flat_of_mask(cx, 1);
  auto p = stratum_presentation(cx, flat);
  auto pi = presentation_invariants(p);
  CHECK(pi.object_count == 2);
  CHECK(pi.generator_count == 2);
  CHECK(pi.relation_count == 0);
  CHECK(pi.vertex_abelianization == AbelianGroup{1, {}});
}

TEST_CASE("A2 full space: 6 objects, 12 generators, hexagon relations") {
  auto cx = build_complex(Series::A, 2);
  auto p = stratum_presentation(cx, cx.top_flat);
  auto pi = presentation_invariants(p);
  CHECK(pi.object_count == 6);
  CHECK(pi.generator_count == 12);
  CHECK(pi.relation_count == 3); // one per unordered opposite pair around the origin
  // pi_1 of the complement of three concurrent complex lines: Z x F_2
  CHECK(pi.vertex_abelianization == AbelianGroup{3, {}});
}

TEST_CASE("A2 full-space quotient recovers the braid group presentation of Br_{A2}") {
  auto cx = build_complex(Series::A, 2);
  auto p = coinvariant_presentation(cx, cx.top_flat);
  auto pi = presentation_invariants(p);
  CHECK(pi.object_count == 1);
  CHECK(pi.generator_count == 2);
  CHECK(pi.relation_count == 1);
  // braid relation sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2
  CHECK(p.relations[0].lhs.size() == 3);
  CHECK(p.relations[0].rhs.size() == 3);
  CHECK(pi.vertex_abelianization == AbelianGroup{1, {}}); // B_3 abelianized
}

TEST_CASE("A2 l_alpha quotient: two objects {alpha},{beta}, one generator each way") {
  auto cx = build_complex(Series::A, 2);
  auto p = coinvariant_presentation(cx, flat_of_mask(cx, 1));
  auto pi = presentation_invariants(p);
  CHECK(pi.object_count == 2);
  CHECK(pi.generator_count == 2);
  CHECK(pi.relation_count == 0);
  std::set<std::string> labels(p.object_labels.begin(), p.object_labels.end());
  CHECK(labels == std::set<std::string>{"{1}", "{2}"});
  CHECK(pi.vertex_abelianization == AbelianGroup{1, {}});
}

TEST_CASE("B2 l_alpha quotient: one object, single loop, vertex group Z") {
  auto cx = build_complex(Series::B, 2);
  auto p = coinvariant_presentation(cx, flat_of_mask(cx, 2)); // short root flat
  auto pi = presentation_invariants(p);
  CHECK(pi.object_count == 1);
  CHECK(pi.generator_count == 1);
  CHECK(pi.relation_count == 0);
  CHECK(pi.vertex_abelianization == AbelianGroup{1, {}});
}

TEST_CASE("quotient object count equals number of chamber types") {
  for (auto [s, r] : {std::pair{Series::A, 2}, {Series::B, 2}, {Series::D, 4}}) {
    auto cx = build_complex(s, r);
    for (auto& fl : cx.flats) {
      if (s == Series::D && fl.dim > 3) continue; // skip the big top stratum
      auto chams = cx.chambers_of_flat(fl.id);
      std::set<int> types;
      for (int c : chams) types.insert(cx.faces[c].type_mask);
      auto p = coinvariant_presentation(cx, fl.id);
      CHECK(p.objects.size() == types.size());
    }
  }
}

TEST_CASE("D4 central flat: full and quotient presentations; abelianization Z^6") {
  auto cx = build_complex(Series::D, 4);
  int flat = flat_of_mask(cx, 1 << central_node(cx));
  auto p = stratum_presentation(cx, flat);
  CHECK(p.objects.size() == 32);
  auto q = coinvariant_presentation(cx, flat);
  auto qi = presentation_invariants(q);
  CHECK(qi.object_count == 4);
  CHECK(qi.generator_count == 12);
  CHECK(qi.relation_count == 9);
  // Transfer oracle: H1(Br;Q) has rank = number of W(l)-orbits on the 7 walls.
  auto lg = levi_group_data(cx, flat);
  std::vector<int> wall_orbit(cx.flats[flat].wall_classes.size(), -1);
  int orbits = 0;
  auto wall_of_root = [&](int root) {
    for (size_t k = 0; k < cx.flats[flat].wall_classes.size(); ++k)
      for (int b : cx.flats[flat].wall_classes[k])
        if (b == root) return (int)k;
    return -1;
  };
  for (size_t k = 0; k < wall_orbit.size(); ++k) {
    if (wall_orbit[k] >= 0) continue;
    int oid = orbits++;
    std::vector<int> stack{(int)k};
    wall_orbit[k] = oid;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int w : lg.stab) {
        int img_root = cx.W.pos_act[w][cx.flats[flat].wall_classes[cur][0]];
        if (img_root >= cx.rs.num_positive) img_root -= cx.rs.num_positive;
        int img = wall_of_root(img_root);
        if (wall_orbit[img] < 0) {
          wall_orbit[img] = oid;
          stack.push_back(img);
        }
      }
    }
  }
  CHECK(orbits == 4);
  CHECK(qi.vertex_abelianization == AbelianGroup{orbits, {}});
  // The paper's displayed Aut(*) list abelianizes to Z^6 instead (known defect,
  // reported by the acceptance suite): commutator-only relators on 6 generators.
  std::vector<std::pair<int, int>> loops(6, {0, 0});
  auto paper_oracle = presentation_h1(1, loops, {});
  CHECK(paper_oracle == AbelianGroup{6, {}});
  CHECK_FALSE(qi.vertex_abelianization == paper_oracle);
  // Objects are the four types {1},{2},{3},{*}.
  std::set<std::string> labels(q.object_labels.begin(), q.object_labels.end());
  CHECK(labels.size() == 4);
}

TEST_CASE("D4 l=2 adjacent pair: machine presentation vs paper-displayed relation list") {
  auto cx = build_complex(Series::D, 4);
  int c = central_node(cx);
  int other = c == 0 ? 1 : 0;
  auto q = coinvariant_presentation(cx, flat_of_mask(cx, (1 << c) | (1 << other)));
  auto qi = presentation_invariants(q);
  CHECK(qi.object_count == 3);
  CHECK(qi.generator_count == 6);
  CHECK(qi.relation_count == 3);
  // Truth: the stratum is C* x (P^1 minus 3 points) mod a Z/2 trivial on P^1,
  // so the vertex group is Z x F_2 with abelianization Z^3.
  CHECK(qi.vertex_abelianization == AbelianGroup{3, {}});
  // The paper's displayed list (abc)^2 = 1, (c'b'a')^2 = 1 abelianizes differently;
  // the mismatch is recorded as a known paper defect (see acceptance output).
  std::vector<std::pair<int, int>> arrows{{0, 2}, {2, 1}, {1, 0}, {2, 0}, {1, 2}, {0, 1}};
  std::vector<std::vector<long long>> relators{{2, 2, 2, 0, 0, 0}, {0, 0, 0, 2, 2, 2}};
  auto paper = presentation_h1(3, arrows, relators);
  CHECK(paper == AbelianGroup{2, {BigInt(2), BigInt(2)}});
  CHECK_FALSE(qi.vertex_abelianization == paper);
}

TEST_CASE("D4 l=2 orthogonal pairs: all three flats give the same quotient shape") {
  auto cx = build_complex(Series::D, 4);
  int c = central_node(cx);
  std::vector<int> outer;
  for (int i = 0; i < 4; ++i)
    if (i != c) outer.push_back(i);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      int mask = (1 << outer[a]) | (1 << outer[b]);
      auto lg = levi_group_data(cx, flat_of_mask(cx, mask));
      CHECK(lg.stab.size() == 32);
      CHECK(lg.levi_weyl.size() == 4);
      CHECK(lg.quotient_reps.size() == 8); // order-8 dihedral, not (Z/2)^2
      auto q = coinvariant_presentation(cx, flat_of_mask(cx, mask));
      auto qi = presentation_invariants(q);
      CHECK(qi.object_count == 1);
      CHECK(qi.generator_count == 2);
      CHECK(qi.relation_count == 1);
    }
}

TEST_CASE("positive word equality: identity, braid relation, backtrack refutation") {
  auto cx = build_complex(Series::A, 2);
  auto p = stratum_presentation(cx, cx.top_flat);
  WordBudget budget;
  // word vs itself
  GenWord w0{0};
  CHECK(positive_words_equal(cx, p, cx.top_flat, w0, w0, budget).verdict == Verdict::Proved);
  // the two minimal galleries from C_b to the opposite chamber
  int cb = cx.dominant_face[0];
  std::string neg = cx.faces[cb].signs;
  for (auto& ch : neg) ch = ch == '+' ? '-' : (ch == '-' ? '+' : '0');
  int opp = cx.face_by_signs.at(neg);
  auto g1 = cx.generic_gallery(cx.top_flat, cb, opp, 1);
  auto g2 = cx.generic_gallery(cx.top_flat, cb, opp, 12); // try to get the other side
  auto w1 = gallery_word(p, g1);
  // rewrite w1 by the stored braid relation to get the other minimal gallery
  GenWord w2;
  for (auto& rel : p.rewrite_rules) {
    if (rel.lhs == w1) w2 = rel.rhs;
    if (rel.rhs == w1) w2 = rel.lhs;
  }
  REQUIRE(!w2.empty());
  CHECK(positive_words_equal(cx, p, cx.top_flat, w1, w2, budget).verdict == Verdict::Proved);
  (void)g2;
}

TEST_CASE("B2 full space: length-3 vs length-5 with a backtrack is refuted") {
  auto cx = build_complex(Series::B, 2);
  auto p = stratum_presentation(cx, cx.top_flat);
  // minimal gallery of length 3 between chambers at distance 3
  int cb = cx.dominant_face[0];
  int target = -1;
  for (int ch : cx.chambers_of_flat(cx.top_flat))
    if (cx.separating_wall_classes(cx.top_flat, cb, ch).size() == 3) target = ch;
  REQUIRE(target >= 0);
  auto gal = cx.generic_gallery(cx.top_flat, cb, target, 1);
  auto w3 = gallery_word(p, gal);
  CHECK(w3.size() == 3);
  // insert a backtrack: first step, then back, then the full gallery
  std::map<std::pair<int, int>, int> arrow;
  for (size_t g = 0; g < p.gens.size(); ++g)
    arrow[{p.gens[g].src, p.gens[g].dst}] = (int)g;
  GenWord w5;
  w5.push_back(w3[0]);
  w5.push_back(arrow.at({p.gens[w3[0]].dst, p.gens[w3[0]].src}));
  for (int g : w3) w5.push_back(g);
  auto res = positive_words_equal(cx, p, cx.top_flat, w3, w5, WordBudget{});
  CHECK(res.verdict == Verdict::Refuted);
}

TEST_CASE("generic galleries between the same chambers are Proved equal") {
  for (auto [s, r] : {std::pair{Series::A, 2}, {Series::B, 2}}) {
    auto cx = build_complex(s, r);
    auto p = stratum_presentation(cx, cx.top_flat);
    auto chams = cx.chambers_of_flat(cx.top_flat);
    SplitMix64 rng(21);
    for (int k = 0; k < 40; ++k) {
      int a = chams[rng.below(chams.size())];
      int b = chams[rng.below(chams.size())];
      if (a == b) continue;
      auto ga = cx.generic_gallery(cx.top_flat, a, b, 100 + k);
      auto gb = cx.generic_gallery(cx.top_flat, a, b, 200 + k);
      auto res = positive_words_equal(cx, p, cx.top_flat, gallery_word(p, ga),
                                      gallery_word(p, gb), WordBudget{});
      CHECK(res.verdict == Verdict::Proved);
    }
  }
}

TEST_CASE("quotient relation lifts are relations upstairs (spot checks)") {
  auto cx = build_complex(Series::B, 2);
  auto full = stratum_presentation(cx, cx.top_flat);
  auto q = coinvariant_presentation(cx, cx.top_flat);
  // every quotient relation has balanced endpoints
  for (auto& rel : q.relations) {
    CHECK(q.gens[rel.lhs.front()].src == q.gens[rel.rhs.front()].src);
    CHECK(q.gens[rel.lhs.back()].dst == q.gens[rel.rhs.back()].dst);
  }
  CHECK(q.objects.size() == 1);
  CHECK(q.gens.size() == 2);
  (void)full;
}
