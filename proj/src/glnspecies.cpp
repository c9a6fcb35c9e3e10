#include "percox/glnspecies.hpp"

#include <functional>
#include <set>

namespace percox {

std::vector<OSP> all_osps(int n) {
  std::vector<OSP> out;
  OSP cur;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.push_back(osp_normalize(cur));
      return;
    }
    for (size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(i);
      rec(i + 1);
      cur[b].pop_back();
    }
    for (size_t pos = 0; pos <= cur.size(); ++pos) {
      cur.insert(cur.begin() + pos, {i});
      rec(i + 1);
      cur.erase(cur.begin() + pos);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OSP osp_normalize(OSP p) {
  OSP out;
  for (auto& b : p) {
    if (b.empty()) continue;
    auto s = b;
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  return out;
}

bool osp_valid(const OSP& p, int n) {
  std::vector<char> seen(n + 1, 0);
  int count = 0;
  for (auto& b : p) {
    if (b.empty()) return false;
    for (int x : b) {
      if (x < 1 || x > n || seen[x]) return false;
      seen[x] = 1;
      ++count;
    }
  }
  return count == n;
}

OSP perm_apply_osp(const Perm& sigma, const OSP& p) {
  OSP out;
  for (auto& b : p) {
    std::vector<int> nb;
    for (int x : b) nb.push_back(sigma[x - 1] + 1);
    std::sort(nb.begin(), nb.end());
    out.push_back(nb);
  }
  return out;
}

GlnCtx build_gln(int n) {
  if (n < 2) throw UnsupportedType("build_gln needs n >= 2");
  GlnCtx g{n, build_complex(Series::A, n - 1), {}, {}};
  for (int w = 0; w < g.cx.W.size(); ++w) {
    const Mat& m = g.cx.W.elems[w].matrix;
    Perm sigma(n);
    for (int i = 0; i < n; ++i) {
      int img = -1;
      for (int j = 0; j < n; ++j)
        if (m[j][i] == 1) img = j;
      if (img < 0) throw Error("non-permutation Weyl matrix in type A");
      sigma[i] = img;
    }
    g.weyl_of_perm[sigma] = w;
  }
  g.top_pres = stratum_presentation(g.cx, g.cx.top_flat);
  return g;
}

int face_of(const GlnCtx& g, const OSP& p) {
  if (!osp_valid(p, g.n)) throw WrongSystem("face_of: not an ordered set partition");
  Vec t(g.n);
  for (size_t b = 0; b < p.size(); ++b)
    for (int x : p[b]) t[x - 1] = Rat((long long)b + 1);
  return g.cx.face_of_point(t);
}

OSP partition_of(const GlnCtx& g, int face) {
  const Vec& w = g.cx.faces[face].witness;
  std::map<Rat, std::vector<int>> by_val;
  for (int i = 0; i < g.n; ++i) by_val[w[i]].push_back(i + 1);
  OSP out;
  for (auto& [v, blk] : by_val) out.push_back(blk);
  return out;
}

OSP tits_lex(const OSP& I, const OSP& J) {
  OSP out;
  for (auto& bi : I)
    for (auto& bj : J) {
      std::vector<int> inter;
      std::set_intersection(bi.begin(), bi.end(), bj.begin(), bj.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) out.push_back(inter);
    }
  return out;
}

OSP osp_concat(const OSP& I, int n, const OSP& J) {
  OSP out = I;
  for (auto& b : J) {
    std::vector<int> nb;
    for (int x : b) nb.push_back(x + n);
    out.push_back(nb);
  }
  return out;
}

Perm sigma_shuffle(int n, int m) {
  Perm s(n + m);
  for (int i = 0; i < n; ++i) s[i] = m + i;
  for (int j = 0; j < m; ++j) s[n + j] = j;
  return s;
}

MorphWord tensor_word_right(const GlnCtx& gn, const GlnCtx& gnm, const MorphWord& w,
                            const OSP& J) {
  auto map_face = [&](int f) {
    return face_of(gnm, osp_concat(partition_of(gn, f), gn.n, J));
  };
  MorphWord out{map_face(w.src), map_face(w.dst), {}};
  for (auto& l : w.letters)
    out.letters.push_back(Letter{l.ind, map_face(l.src), map_face(l.dst)});
  return out;
}

MorphWord tensor_word_left(const GlnCtx& gm, const GlnCtx& gnm, const OSP& I,
                           const MorphWord& w) {
  int n = 0;
  for (auto& b : I) n += (int)b.size();
  auto map_face = [&](int f) {
    return face_of(gnm, osp_concat(I, n, partition_of(gm, f)));
  };
  MorphWord out{map_face(w.src), map_face(w.dst), {}};
  for (auto& l : w.letters)
    out.letters.push_back(Letter{l.ind, map_face(l.src), map_face(l.dst)});
  return out;
}

namespace {

// (xi, s) tensored by the object J on the right: permutation extends by the
// identity on J's letters.
SdPair sd_tensor_right(const GlnCtx& gsub, const GlnCtx& gall, const SdPair& f,
                       const OSP& J) {
  int sub = gsub.n, m = 0;
  for (auto& b : J) m += (int)b.size();
  Perm ext(sub + m);
  for (int i = 0; i < sub; ++i) ext[i] = f.g[i];
  for (int i = 0; i < m; ++i) ext[sub + i] = sub + i;
  return SdPair{tensor_word_right(gsub, gall, f.xi, J), ext};
}

SdPair sd_tensor_left(const GlnCtx& gsub, const GlnCtx& gall, const OSP& I,
                      const SdPair& f) {
  int sub = gsub.n, n = 0;
  for (auto& b : I) n += (int)b.size();
  Perm ext(n + sub);
  for (int i = 0; i < n; ++i) ext[i] = i;
  for (int i = 0; i < sub; ++i) ext[n + i] = n + f.g[i];
  return SdPair{tensor_word_left(gsub, gall, I, f.xi), ext};
}

} // namespace

SdPair sd_compose(const GlnCtx& g, const SdPair& f, const SdPair& h) {
  int gw = g.weyl_of_perm.at(f.g);
  MorphWord moved = act_word(g.cx, gw, h.xi);
  if (moved.dst != f.xi.src) throw CompositionMismatch("sd_compose: endpoint mismatch");
  return SdPair{word_concat(moved, f.xi), perm_compose(f.g, h.g)};
}

int osp_size(const OSP& p) {
  int n = 0;
  for (auto& b : p) n += (int)b.size();
  return n;
}

SdPair braiding(const GlnCtx& gnm, const OSP& I, const OSP& J) {
  int n = osp_size(I), m = osp_size(J);
  if (n + m != gnm.n) throw WrongSystem("braiding: block sizes do not add up");
  Perm sigma = sigma_shuffle(n, m);
  OSP IJ = osp_concat(I, n, J);
  OSP JI = osp_concat(J, m, I);
  int src = face_of(gnm, perm_apply_osp(sigma, IJ));
  int dst = face_of(gnm, JI);
  return SdPair{tau(gnm.cx, src, dst), sigma};
}

const GlnCtx& GlnTower::at(int n) {
  auto it = ctxs.find(n);
  if (it == ctxs.end()) it = ctxs.emplace(n, build_gln(n)).first;
  return it->second;
}

SquareReport braiding_naturality(GlnTower& t, const MorphWord& f, int nf, const OSP& J,
                                 bool f_on_left) {
  SquareReport rep;
  const GlnCtx& gn = t.at(nf);
  int m = osp_size(J);
  const GlnCtx& gnm = t.at(nf + m);
  OSP src_p = partition_of(gn, f.src), dst_p = partition_of(gn, f.dst);
  Perm id = perm_identity(nf + m);
  SdPair lhs, rhs;
  if (f_on_left) {
    // R_{I',J} o (f (x) J) = (J (x) f) o R_{I,J},  f : p_I -> p_{I'} in Q_n
    lhs = sd_compose(gnm, braiding(gnm, dst_p, J),
                     SdPair{tensor_word_right(gn, gnm, f, J), id});
    rhs = sd_compose(gnm, SdPair{tensor_word_left(gn, gnm, J, f), id},
                     braiding(gnm, src_p, J));
  } else {
    // R_{J,I'} o (J (x) f) = (f (x) J) o R_{J,I}
    lhs = sd_compose(gnm, braiding(gnm, J, dst_p),
                     SdPair{tensor_word_left(gn, gnm, J, f), id});
    rhs = sd_compose(gnm, SdPair{tensor_word_right(gn, gnm, f, J), id},
                     braiding(gnm, J, src_p));
  }
  rep.perms_equal = lhs.g == rhs.g;
  if (lhs.xi.src == rhs.xi.src && lhs.xi.dst == rhs.xi.dst)
    rep.words = prove_equal(gnm.cx, lhs.xi, rhs.xi).verdict;
  return rep;
}

SquareReport hexagon1(GlnTower& t, const OSP& I, const OSP& J, const OSP& K) {
  // R_{I(x)J, K} = (R_{I,K} (x) J) o (I (x) R_{J,K})
  SquareReport rep;
  int n = osp_size(I), m = osp_size(J), k = osp_size(K);
  const GlnCtx& gall = t.at(n + m + k);
  SdPair lhs = braiding(gall, osp_concat(I, n, J), K);
  SdPair r_jk = braiding(t.at(m + k), J, K);
  SdPair step1 = sd_tensor_left(t.at(m + k), gall, I, r_jk);
  SdPair r_ik = braiding(t.at(n + k), I, K);
  SdPair step2 = sd_tensor_right(t.at(n + k), gall, r_ik, J);
  SdPair rhs = sd_compose(gall, step2, step1);
  rep.perms_equal = lhs.g == rhs.g;
  if (lhs.xi.src == rhs.xi.src && lhs.xi.dst == rhs.xi.dst)
    rep.words = prove_equal(gall.cx, lhs.xi, rhs.xi).verdict;
  return rep;
}

SquareReport hexagon2(GlnTower& t, const OSP& I, const OSP& J, const OSP& K) {
  // R_{I, J(x)K} = (J (x) R_{I,K}) o (R_{I,J} (x) K)
  SquareReport rep;
  int n = osp_size(I), m = osp_size(J), k = osp_size(K);
  const GlnCtx& gall = t.at(n + m + k);
  SdPair lhs = braiding(gall, I, osp_concat(J, m, K));
  SdPair r_ij = braiding(t.at(n + m), I, J);
  SdPair step1 = sd_tensor_right(t.at(n + m), gall, r_ij, K);
  SdPair r_ik = braiding(t.at(n + k), I, K);
  SdPair step2 = sd_tensor_left(t.at(n + k), gall, J, r_ik);
  SdPair rhs = sd_compose(gall, step2, step1);
  rep.perms_equal = lhs.g == rhs.g;
  if (lhs.xi.src == rhs.xi.src && lhs.xi.dst == rhs.xi.dst)
    rep.words = prove_equal(gall.cx, lhs.xi, rhs.xi).verdict;
  return rep;
}

bool double_crossing_nonidentity(const GlnCtx& g2) {
  OSP I{{1}}, J{{1}};
  auto R = braiding(g2, I, J);
  auto RR = sd_compose(g2, R, R);
  if (RR.g != perm_identity(2)) return false;
  if (RR.xi.src != RR.xi.dst) return false;
  auto chain = word_chain(RR.xi);
  std::vector<int> gallery;
  for (int f : chain)
    if (g2.cx.faces[f].flat_id == g2.cx.top_flat) gallery.push_back(f);
  auto w = gallery_word(g2.top_pres, gallery);
  auto res =
      positive_words_equal(g2.cx, g2.top_pres, g2.cx.top_flat, w, {}, WordBudget{});
  return res.verdict == Verdict::Refuted;
}

ExchangeReport exchange_bijection(const GlnCtx& g, int p1, int p2, int q1, int q2) {
  if (p1 + p2 != g.n || q1 + q2 != g.n || p1 < 0 || p2 < 0 || q1 < 0 || q2 < 0)
    throw PreconditionFailure("exchange_bijection: bad margins");
  ExchangeReport rep;
  std::vector<std::array<int, 4>> mats;
  for (int a = 0; a <= std::min(p1, q1); ++a) {
    int b = p1 - a, c = q1 - a, d = p2 - c;
    if (b < 0 || c < 0 || d < 0 || b != q2 - d) continue;
    mats.push_back({a, b, c, d});
  }
  rep.n_matrices = (int)mats.size();
  auto young = [&](int cut) {
    std::vector<int> simples;
    for (int i = 0; i + 1 < g.n; ++i)
      if (i + 1 != cut) simples.push_back(i);
    return g.cx.W.parabolic_subgroup(simples);
  };
  auto Wp = young(p1), Wq = young(q1);
  auto cosets = double_cosets(g.cx.W, Wq, Wp);
  rep.n_cosets = (int)cosets.size();
  auto ot = build_orbit_table(g.cx);
  auto two_block = [&](int cut) {
    OSP p;
    if (cut == 0 || cut == g.n) {
      std::vector<int> all;
      for (int i = 1; i <= g.n; ++i) all.push_back(i);
      p = {all};
    } else {
      std::vector<int> a, b;
      for (int i = 1; i <= cut; ++i) a.push_back(i);
      for (int i = cut + 1; i <= g.n; ++i) b.push_back(i);
      p = {a, b};
    }
    return face_of(g, p);
  };
  int fq = two_block(q1), fp = two_block(p1);
  auto por =
      orbit_pairs_vs_double_cosets(g.cx, ot, ot.face_orbit[fq], ot.face_orbit[fp]);
  rep.n_pair_orbits = por.n_pair_orbits;
  auto matrix_of = [&](int widx) {
    const Mat& m = g.cx.W.elems[widx].matrix;
    Perm sigma(g.n);
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        if (m[j][i] == 1) sigma[i] = j;
    std::array<int, 4> cnt{0, 0, 0, 0};
    for (int x = 0; x < g.n; ++x) {
      int pi = x < p1 ? 0 : 1;
      int qi = sigma[x] < q1 ? 0 : 1;
      cnt[pi * 2 + qi]++;
    }
    return cnt;
  };
  std::set<std::array<int, 4>> seen;
  bool ok = (int)cosets.size() == rep.n_matrices && por.bijection_ok &&
            rep.n_pair_orbits == rep.n_cosets;
  for (int w : cosets) {
    auto m0 = matrix_of(w);
    if (seen.count(m0)) ok = false;
    seen.insert(m0);
    for (int a : Wq)
      for (int b : Wp)
        if (matrix_of(g.cx.W.mult(g.cx.W.mult(a, w), b)) != m0) ok = false;
  }
  for (auto& m : mats)
    if (!seen.count(m)) ok = false;
  rep.bijections_ok = ok;
  return rep;
}

SB3Report verify_SB3(const GlnCtx& g, std::vector<int> J1, std::vector<int> J2,
                     std::vector<int> L1, std::vector<int> L2) {
  std::sort(J1.begin(), J1.end());
  std::sort(J2.begin(), J2.end());
  std::sort(L1.begin(), L1.end());
  std::sort(L2.begin(), L2.end());
  OSP J = osp_normalize({J1, J2}), L = osp_normalize({L1, L2});
  if (!osp_valid(J, g.n) || !osp_valid(L, g.n))
    throw PreconditionFailure("verify_SB3: J1|J2 and L1|L2 must partition {1..n}");
  SB3Report rep;
  int fj = face_of(g, J), fl = face_of(g, L);
  int mn = g.cx.minimal_face;
  rep.lhs = word_concat(tau(g.cx, fj, mn), tau(g.cx, mn, fl));
  auto inter = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
  };
  OSP Kj = osp_normalize({inter(J1, L1), inter(J1, L2), inter(J2, L1), inter(J2, L2)});
  OSP Kl = osp_normalize({inter(J1, L1), inter(J2, L1), inter(J1, L2), inter(J2, L2)});
  rep.K = Kj;
  int fkj = face_of(g, Kj), fkl = face_of(g, Kl);
  rep.k_matches_tits =
      fkj == g.cx.tits(fj, fl) && fkl == g.cx.tits(fl, fj) && Kj == tits_lex(J, L);
  rep.rhs = word_concat(word_concat(tau(g.cx, fj, fkj), tau(g.cx, fkj, fkl)),
                        tau(g.cx, fkl, fl));
  rep.proof = prove_equal(g.cx, rep.lhs, rep.rhs);
  return rep;
}

GenWord lambda_section(const GlnCtx& g, const Perm& s) {
  int widx = g.weyl_of_perm.at(s);
  auto word = g.cx.W.reduced_word(widx);
  std::vector<int> gallery;
  int cur = g.cx.W.identity;
  gallery.push_back(g.cx.act_face(cur, g.cx.dominant_face[0]));
  for (int i : word) {
    cur = g.cx.W.mult(cur, g.cx.W.simple_refl[i]);
    gallery.push_back(g.cx.act_face(cur, g.cx.dominant_face[0]));
  }
  return gallery_word(g.top_pres, gallery);
}

LambdaReport verify_lambda_partial_hom(const GlnCtx& g, const Perm& s1, const Perm& s2) {
  LambdaReport rep;
  int w1 = g.weyl_of_perm.at(s1), w2 = g.weyl_of_perm.at(s2);
  int w12 = g.cx.W.mult(w1, w2);
  rep.additive = g.cx.W.length(w12) == g.cx.W.length(w1) + g.cx.W.length(w2);
  if (!rep.additive) return rep;
  auto lam12 = lambda_section(g, perm_compose(s1, s2));
  auto lam1 = lambda_section(g, s1);
  auto word2 = g.cx.W.reduced_word(w2);
  std::vector<int> gal;
  int cur = w1;
  gal.push_back(g.cx.act_face(cur, g.cx.dominant_face[0]));
  for (int i : word2) {
    cur = g.cx.W.mult(cur, g.cx.W.simple_refl[i]);
    gal.push_back(g.cx.act_face(cur, g.cx.dominant_face[0]));
  }
  auto lam2_moved = gallery_word(g.top_pres, gal);
  GenWord concat = lam1;
  concat.insert(concat.end(), lam2_moved.begin(), lam2_moved.end());
  rep.verdict =
      positive_words_equal(g.cx, g.top_pres, g.cx.top_flat, concat, lam12, WordBudget{})
          .verdict;
  return rep;
}

StrataTable strata_partition_table(int n) {
  StrataTable t;
  std::vector<std::vector<long long>> dp(n + 1, std::vector<long long>(n + 1, 0));
  for (int j = 0; j <= n; ++j) dp[0][j] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      dp[i][j] = dp[i][j - 1] + (i >= j ? dp[i - j][j] : 0);
  t.partitions = (int)dp[n][n];
  if (n == 1) {
    t.flat_orbits = 1;
    return t;
  }
  auto cx = build_complex(Series::A, n - 1);
  t.flat_orbits = build_orbit_table(cx).n_flat_orbits;
  return t;
}

} // namespace percox
