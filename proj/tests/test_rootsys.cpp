#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "percox/rootsys.hpp"

using namespace percox;

TEST_CASE("classical root counts and ambient data") {
  auto a2 = build_root_system(Series::A, 2);
  CHECK(a2.roots.size() == 6);
  CHECK(a2.num_positive == 3);
  CHECK(a2.ambient_dim == 3);
  CHECK(a2.lineality_dim == 1);

  auto d4 = build_root_system(Series::D, 4);
  CHECK(d4.roots.size() == 24);
  CHECK(d4.num_positive == 12);
  CHECK(d4.lineality_dim == 0);

  auto b2 = build_root_system(Series::B, 2);
  CHECK(b2.roots.size() == 8);
  CHECK(b2.num_positive == 4);
  // two root lengths
  std::set<Rat> lens;
  for (int i = 0; i < b2.num_positive; ++i) lens.insert(dot(b2.roots[i], b2.roots[i]));
  CHECK(lens.size() == 2);

  auto c3 = build_root_system(Series::C, 3);
  CHECK(c3.num_positive == 9);
  auto g2 = build_root_system(Series::G2, 2);
  CHECK(g2.num_positive == 6);
  CHECK(g2.lineality_dim == 1);
  auto f4 = build_root_system(Series::F4, 4);
  CHECK(f4.num_positive == 24);
  CHECK(f4.lineality_dim == 0);

  CHECK_THROWS_AS(build_root_system(Series::D, 2), UnsupportedType);
  CHECK_THROWS_AS(parse_series("H3"), UnsupportedType);
}

TEST_CASE("positive roots ordered by height then lex, negatives aligned") {
  auto b2 = build_root_system(Series::B, 2);
  for (int i = 0; i + 1 < b2.num_positive; ++i)
    CHECK(b2.height[i] <= b2.height[i + 1]);
  for (int i = 0; i < b2.num_positive; ++i)
    CHECK(b2.roots[i + b2.num_positive] == vscale(-1, b2.roots[i]));
}

TEST_CASE("weyl group orders") {
  auto a2 = build_root_system(Series::A, 2);
  CHECK(weyl_group(a2).size() == 6);
  auto b2 = build_root_system(Series::B, 2);
  CHECK(weyl_group(b2).size() == 8);
  auto d4 = build_root_system(Series::D, 4);
  CHECK(weyl_group(d4).size() == 192);
}

TEST_CASE("simple reflections preserve roots; matrices orthogonal") {
  for (auto [s, r] : {std::pair{Series::A, 2}, {Series::B, 2}, {Series::G2, 2}}) {
    auto rs = build_root_system(s, r);
    for (int i : rs.simple_idx) {
      auto w = reflection(rs, i);
      // orthogonality: M^T M = I
      auto mt = mat_transpose(w.matrix);
      CHECK(mat_mul(mt, w.matrix) == mat_identity(rs.ambient_dim));
    }
  }
}

TEST_CASE("length, reduced words, parabolic subgroups") {
  auto a2 = build_root_system(Series::A, 2);
  auto W = weyl_group(a2);
  CHECK(W.length(W.identity) == 0);
  CHECK(W.reduced_word(W.identity).empty());
  CHECK(W.length(W.longest_element()) == 3);

  auto b2 = build_root_system(Series::B, 2);
  auto Wb = weyl_group(b2);
  CHECK(Wb.parabolic_subgroup({0}).size() == 2);
  CHECK(Wb.parabolic_subgroup({1}).size() == 2);
  CHECK(Wb.length(Wb.longest_element()) == 4);
}

TEST_CASE("reduced word round-trip for all elements, rank <= 4 samples") {
  for (auto [s, r] : {std::pair{Series::A, 3}, {Series::B, 3}, {Series::D, 4}}) {
    auto rs = build_root_system(s, r);
    auto W = weyl_group(rs);
    for (int w = 0; w < W.size(); ++w) {
      auto word = W.reduced_word(w);
      CHECK((int)word.size() == W.length(w));
      int prod = W.identity;
      for (int i : word) prod = W.mult(prod, W.simple_refl[i]);
      CHECK(prod == w);
    }
  }
}

TEST_CASE("w s_a w^-1 = s_{w(a)}") {
  for (auto [s, r] : {std::pair{Series::A, 2}, {Series::B, 3}}) {
    auto rs = build_root_system(s, r);
    auto W = weyl_group(rs);
    for (int w = 0; w < W.size(); ++w)
      for (int a = 0; a < rs.num_positive; ++a) {
        int img = W.pos_act[w][a];
        if (img >= rs.num_positive) img -= rs.num_positive;
        int lhs = W.mult(W.mult(w, W.reflection_index(a)), W.inv(w));
        CHECK(lhs == W.reflection_index(img));
      }
  }
  // sampled for rank 4
  auto rs = build_root_system(Series::D, 4);
  auto W = weyl_group(rs);
  SplitMix64 rng(7);
  for (int k = 0; k < 200; ++k) {
    int w = (int)rng.below(W.size());
    int a = (int)rng.below(rs.num_positive);
    int img = W.pos_act[w][a];
    if (img >= rs.num_positive) img -= rs.num_positive;
    CHECK(W.mult(W.mult(w, W.reflection_index(a)), W.inv(w)) == W.reflection_index(img));
  }
}

TEST_CASE("parabolic subgroup orders divide |W|") {
  auto rs = build_root_system(Series::B, 3);
  auto W = weyl_group(rs);
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> I;
    for (int i = 0; i < 3; ++i)
      if ((mask >> i) & 1) I.push_back(i);
    CHECK(W.size() % W.parabolic_subgroup(I).size() == 0);
  }
}

TEST_CASE("coroot pairings are integral (crystallographic)") {
  for (auto [s, r] :
       {std::pair{Series::A, 3}, {Series::B, 2}, {Series::C, 3}, {Series::G2, 2}, {Series::F4, 4}}) {
    auto rs = build_root_system(s, r);
    for (size_t i = 0; i < rs.roots.size(); ++i)
      for (size_t j = 0; j < rs.roots.size(); ++j)
        CHECK(denominator(dot(rs.roots[i], rs.coroots[j])) == 1);
  }
}
