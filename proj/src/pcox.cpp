#include "percox/pcox.hpp"

#include <set>

namespace percox {

const PCox::PairData& PCox::pair_data(int o1, int o2) const {
  {
    std::lock_guard<std::mutex> lock(*cache_mutex);
    auto it = cache.find({o1, o2});
    if (it != cache.end()) return it->second;
  }
  PairData pd;
  int d1 = ot.orbit_dominant[o1], d2 = ot.orbit_dominant[o2];
  auto W1 = face_stabilizer(cx, d1);
  auto W2 = face_stabilizer(cx, d2);
  pd.coset_reps = double_cosets(cx.W, W1, W2);
  // transport: BFS from each representative pair (d1, w.d2) backwards.
  for (int w : pd.coset_reps) {
    std::pair<int, int> rep{d1, cx.act_face(w, d2)};
    // g = identity at the representative pair itself
    if (!pd.transport.count(rep)) pd.transport[rep] = {w, cx.W.identity};
    std::vector<std::pair<int, int>> stack{rep};
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      int g0 = pd.transport.at({x, y}).second;
      for (int h = 0; h < cx.W.size(); ++h) {
        // (x', y') = h^{-1}.(x, y) so that g0 h maps it to the representative
        int hi = cx.W.inv(h);
        std::pair<int, int> pre{cx.act_face(hi, x), cx.act_face(hi, y)};
        if (!pd.transport.count(pre)) {
          pd.transport[pre] = {w, cx.W.mult(g0, h)};
          stack.push_back(pre);
        }
      }
    }
  }
  std::lock_guard<std::mutex> lock(*cache_mutex);
  return cache.emplace(std::pair{o1, o2}, std::move(pd)).first->second;
}

std::vector<int> PCox::stab_of_orbit(int o) const {
  return face_stabilizer(cx, ot.orbit_dominant[o]);
}

namespace {

void add_to(FormalSum& sum, const MorphWord& w, const Rat& c) {
  auto it = sum.find(w);
  if (it == sum.end()) {
    if (c != 0) sum[w] = c;
  } else {
    it->second += c;
    if (it->second == 0) sum.erase(it);
  }
}

} // namespace

OrbitMorphism underline(const PCox& pc, const MorphWord& m) {
  const Complex& cx = pc.cx;
  OrbitMorphism om;
  om.src_orbit = pc.ot.face_orbit[m.src];
  om.dst_orbit = pc.ot.face_orbit[m.dst];
  Rat coeff = Rat(1) / Rat((long long)pair_stabilizer(cx, m.src, m.dst).size());
  const auto& pd = pc.pair_data(om.src_orbit, om.dst_orbit);
  int d1 = pc.ot.orbit_dominant[om.src_orbit], d2 = pc.ot.orbit_dominant[om.dst_orbit];
  for (int g = 0; g < cx.W.size(); ++g) {
    auto gw = act_word(cx, g, m);
    // keep only the summands landing at a representative pair
    for (int w : pd.coset_reps)
      if (gw.src == d1 && gw.dst == cx.act_face(w, d2)) add_to(om.comps[w], gw, coeff);
  }
  for (int w : pd.coset_reps)
    if (!om.comps.count(w)) om.comps[w] = {};
  return om;
}

OrbitMorphism identity_orbit_morphism(const PCox& pc, int orbit) {
  int dom = pc.ot.orbit_dominant[orbit];
  return underline(pc, MorphWord{dom, dom, {}});
}

std::map<std::pair<int, int>, FormalSum> expand(const PCox& pc, const OrbitMorphism& om) {
  const Complex& cx = pc.cx;
  const auto& pd = pc.pair_data(om.src_orbit, om.dst_orbit);
  std::map<std::pair<int, int>, FormalSum> full;
  for (auto& [pair, tw] : pd.transport) {
    auto [w, g] = tw;
    auto it = om.comps.find(w);
    if (it == om.comps.end() || it->second.empty()) continue;
    FormalSum& target = full[pair];
    int gi = cx.W.inv(g);
    for (auto& [word, c] : it->second) add_to(target, act_word(cx, gi, word), c);
  }
  return full;
}

OrbitMorphism compress(const PCox& pc, int o1, int o2,
                       const std::map<std::pair<int, int>, FormalSum>& full) {
  OrbitMorphism om;
  om.src_orbit = o1;
  om.dst_orbit = o2;
  const auto& pd = pc.pair_data(o1, o2);
  int d1 = pc.ot.orbit_dominant[o1], d2 = pc.ot.orbit_dominant[o2];
  for (int w : pd.coset_reps) {
    std::pair<int, int> rep{d1, pc.cx.act_face(w, d2)};
    auto it = full.find(rep);
    om.comps[w] = it == full.end() ? FormalSum{} : it->second;
  }
  return om;
}

namespace {

// W-invariance of a full collection (consistency of compress/expand).
bool is_invariant(const PCox& pc, const std::map<std::pair<int, int>, FormalSum>& full) {
  const Complex& cx = pc.cx;
  for (auto& [pair, sum] : full) {
    for (int g = 0; g < cx.W.size(); ++g) {
      std::pair<int, int> img{cx.act_face(g, pair.first), cx.act_face(g, pair.second)};
      FormalSum moved;
      for (auto& [word, c] : sum) add_to(moved, act_word(cx, g, word), c);
      auto it = full.find(img);
      FormalSum target = it == full.end() ? FormalSum{} : it->second;
      if (moved != target) return false;
    }
  }
  return true;
}

std::map<std::pair<int, int>, FormalSum> compose_full(
    const PCox& pc, const std::map<std::pair<int, int>, FormalSum>& fb,
    const std::map<std::pair<int, int>, FormalSum>& fa) {
  std::map<std::pair<int, int>, FormalSum> out;
  std::map<int, std::vector<std::pair<int, const FormalSum*>>> by_mid;
  for (auto& [pair, sum] : fb)
    if (!sum.empty()) by_mid[pair.first].push_back({pair.second, &sum});
  for (auto& [pair, sum] : fa) {
    if (sum.empty()) continue;
    auto it = by_mid.find(pair.second);
    if (it == by_mid.end()) continue;
    for (auto& [dst, bsum] : it->second) {
      FormalSum& target = out[{pair.first, dst}];
      for (auto& [wa, ca] : sum)
        for (auto& [wb, cb] : *bsum) add_to(target, word_concat(wa, wb), ca * cb);
    }
  }
  return out;
}

} // namespace

OrbitMorphism compose(const PCox& pc, const OrbitMorphism& b, const OrbitMorphism& a,
                      bool compare_paths) {
  if (a.dst_orbit != b.src_orbit)
    throw CompositionMismatch("compose: middle orbit mismatch");
  auto fa = expand(pc, a);
  auto fb = expand(pc, b);
  auto full = compose_full(pc, fb, fa);
  auto result = compress(pc, a.src_orbit, b.dst_orbit, full);
  if (compare_paths) {
    // Representative-level path: compute each component directly by summing
    // over the middle orbit, using lazy transport lookups.
    const Complex& cx = pc.cx;
    const auto& pd = pc.pair_data(a.src_orbit, b.dst_orbit);
    int d1 = pc.ot.orbit_dominant[a.src_orbit];
    int d3 = pc.ot.orbit_dominant[b.dst_orbit];
    std::vector<int> mids;
    for (auto& f : cx.faces)
      if (pc.ot.face_orbit[f.id] == a.dst_orbit) mids.push_back(f.id);
    for (int w : pd.coset_reps) {
      FormalSum direct;
      int q3 = cx.act_face(w, d3);
      for (int q2 : mids) {
        auto ita = fa.find({d1, q2});
        auto itb = fb.find({q2, q3});
        if (ita == fa.end() || itb == fb.end()) continue;
        for (auto& [wa, ca] : ita->second)
          for (auto& [wb, cb] : itb->second) add_to(direct, word_concat(wa, wb), ca * cb);
      }
      if (direct != result.comps.at(w))
        throw Error("compose: representative-level and full paths disagree");
    }
    if (!is_invariant(pc, full)) throw Error("compose: result not W-invariant");
  }
  return result;
}

OrbitMorphism om_add(const PCox& pc, const OrbitMorphism& x, const OrbitMorphism& y) {
  (void)pc;
  if (x.src_orbit != y.src_orbit || x.dst_orbit != y.dst_orbit)
    throw CompositionMismatch("om_add: orbit mismatch");
  OrbitMorphism out = x;
  for (auto& [w, sum] : y.comps)
    for (auto& [word, c] : sum) add_to(out.comps[w], word, c);
  return out;
}

OrbitEqualResult orbit_equal(const PCox& pc, const OrbitMorphism& x,
                             const OrbitMorphism& y, const ProveBudget& budget) {
  OrbitEqualResult res;
  if (x.src_orbit != y.src_orbit || x.dst_orbit != y.dst_orbit) {
    res.verdict = Verdict::Unknown;
    return res;
  }
  std::set<int> keys;
  for (auto& [w, s] : x.comps) keys.insert(w);
  for (auto& [w, s] : y.comps) keys.insert(w);
  for (int w : keys) {
    ++res.components_checked;
    FormalSum sx = x.comps.count(w) ? x.comps.at(w) : FormalSum{};
    FormalSum sy = y.comps.count(w) ? y.comps.at(w) : FormalSum{};
    // Group summands into prover-equivalence classes and compare class totals.
    std::vector<std::pair<MorphWord, Rat>> all;
    for (auto& [word, c] : sx) all.push_back({word, c});
    for (auto& [word, c] : sy) all.push_back({word, -c});
    std::vector<int> cls(all.size(), -1);
    int nc = 0;
    for (size_t i = 0; i < all.size(); ++i) {
      if (cls[i] >= 0) continue;
      cls[i] = nc++;
      for (size_t j = i + 1; j < all.size(); ++j) {
        if (cls[j] >= 0) continue;
        if (all[i].first.src != all[j].first.src || all[i].first.dst != all[j].first.dst)
          continue;
        auto pr = prove_equal(pc.cx, all[i].first, all[j].first, budget);
        if (pr.verdict == Verdict::Proved) cls[j] = cls[i];
      }
    }
    std::vector<Rat> totals(nc, 0);
    for (size_t i = 0; i < all.size(); ++i) totals[cls[i]] += all[i].second;
    for (auto& t : totals)
      if (t != 0) {
        res.verdict = Verdict::Unknown;
        return res;
      }
  }
  res.verdict = Verdict::Proved;
  return res;
}

LanglandsReport verify_langlands(const PCox& pc, int p1_mask, int p2_mask,
                                 int through_mask, const ProveBudget& budget) {
  const Complex& cx = pc.cx;
  LanglandsReport rep;
  rep.p1_mask = p1_mask;
  rep.p2_mask = p2_mask;
  rep.through_mask = through_mask;
  int d1 = cx.dominant_face[p1_mask];
  int d2 = cx.dominant_face[p2_mask];
  int t = cx.dominant_face[through_mask];
  if (!cx.closure_leq(t, d1) || !cx.closure_leq(t, d2))
    throw PreconditionFailure("verify_langlands: need p1, p2 contained in p3");
  auto W1 = face_stabilizer(cx, d1);
  auto W2 = face_stabilizer(cx, d2);
  auto W3 = face_stabilizer(cx, t);
  // double cosets W1 \ W3 / W2 inside W3
  std::set<int> w3(W3.begin(), W3.end());
  std::vector<char> handled(cx.W.size(), 1);
  for (int w : W3) handled[w] = 0;
  for (int w : W3) {
    if (handled[w]) continue;
    rep.coset_reps.push_back(w);
    std::vector<int> stack{w};
    handled[w] = 1;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int a : W1)
        for (int b : W2) {
          int x = cx.W.mult(cx.W.mult(a, cur), b);
          if (!handled[x]) {
            handled[x] = 1;
            stack.push_back(x);
          }
        }
    }
  }
  // structural bijection against weylact (only for the g-object case, where
  // the coset space is the full W1\W/W2)
  if (t == cx.minimal_face) {
    auto por = orbit_pairs_vs_double_cosets(cx, pc.ot, pc.ot.face_orbit[d1],
                                            pc.ot.face_orbit[d2]);
    rep.bijection_ok =
        por.bijection_ok && por.coset_reps.size() == rep.coset_reps.size();
  } else {
    rep.bijection_ok = true;
  }
  // LHS = ul-Res_{p3}^{p2} o ul-Ind_{p1}^{p3}
  auto lhs =
      compose(pc, underline(pc, tau(cx, t, d2)), underline(pc, tau(cx, d1, t)));
  // RHS = sum over cosets of ul-Ind o ul-tau o ul-Res
  OrbitMorphism rhs;
  bool first = true;
  for (int w : rep.coset_reps) {
    int wd2 = cx.act_face(w, d2);
    int m12 = cx.tits(d1, wd2);
    int m21 = cx.tits(wd2, d1);
    LanglandsTerm term;
    term.w = w;
    term.proto = verify_proto_langlands(cx, d1, t, wd2, budget);
    rep.terms.push_back(term);
    auto ul_res = underline(pc, tau(cx, d1, m12));
    auto ul_tau = underline(pc, tau(cx, m12, m21));
    auto ul_ind = underline(pc, tau(cx, m21, wd2));
    auto piece = compose(pc, ul_ind, compose(pc, ul_tau, ul_res));
    rhs = first ? piece : om_add(pc, rhs, piece);
    first = false;
  }
  rep.final_check = orbit_equal(pc, lhs, rhs, budget);
  return rep;
}

UlabReport check_lemma_ulab(const PCox& pc, const MorphWord& b, const MorphWord& a,
                            const ProveBudget& budget) {
  const Complex& cx = pc.cx;
  if (b.dst != a.src) throw CompositionMismatch("check_lemma_ulab: b then a must compose");
  int p = b.src, q = b.dst, r = a.dst;
  UlabReport rep;
  auto spq = pair_stabilizer(cx, p, q);
  auto sqr = pair_stabilizer(cx, q, r);
  auto sp = face_stabilizer(cx, p);
  auto sq = face_stabilizer(cx, q);
  auto sr = face_stabilizer(cx, r);
  auto invariant_under = [&](const MorphWord& m, const std::vector<int>& grp) {
    for (int g : grp)
      if (act_word(cx, g, m) != m) return false;
    return true;
  };
  rep.cond1 = invariant_under(a, sqr) && invariant_under(b, spq);
  rep.cond2 = spq == sp && sqr == sq;
  rep.cond2p = spq == sq && sqr == sr;
  if (rep.applicable()) {
    auto lhs = underline(pc, word_concat(b, a));
    auto rhs = compose(pc, underline(pc, a), underline(pc, b), true);
    rep.equality = orbit_equal(pc, lhs, rhs, budget);
  }
  return rep;
}

} // namespace percox
