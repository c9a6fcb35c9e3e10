#include "percox/weylact.hpp"

#include <set>

namespace percox {

OrbitTable build_orbit_table(const Complex& cx) {
  OrbitTable ot;
  int nf = (int)cx.faces.size();
  ot.face_orbit.assign(nf, -1);
  for (int f = 0; f < nf; ++f) {
    if (ot.face_orbit[f] >= 0) continue;
    int oid = ot.n_face_orbits++;
    std::vector<int> stack{f};
    ot.face_orbit[f] = oid;
    int dominant = -1, type = -1;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int d = 0; d < cx.num_masks(); ++d)
        if (cx.dominant_face[d] == cur) {
          if (dominant >= 0 && dominant != cur)
            throw Error("orbit meets the dominant chamber twice");
          dominant = cur;
          type = d;
        }
      for (int w = 0; w < cx.W.size(); ++w) {
        int img = cx.act_face(w, cur);
        if (ot.face_orbit[img] < 0) {
          ot.face_orbit[img] = oid;
          stack.push_back(img);
        }
      }
    }
    if (dominant < 0) throw Error("orbit misses the dominant chamber");
    ot.orbit_dominant.push_back(dominant);
    ot.orbit_type.push_back(type);
  }
  int nl = (int)cx.flats.size();
  ot.flat_orbit.assign(nl, -1);
  for (int l = 0; l < nl; ++l) {
    if (ot.flat_orbit[l] >= 0) continue;
    int oid = ot.n_flat_orbits++;
    ot.flat_orbit_rep.push_back(l);
    std::vector<int> stack{l};
    ot.flat_orbit[l] = oid;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int w = 0; w < cx.W.size(); ++w) {
        int img = cx.act_flat(w, cur);
        if (ot.flat_orbit[img] < 0) {
          ot.flat_orbit[img] = oid;
          stack.push_back(img);
        }
      }
    }
  }
  ot.assoc.resize(cx.num_masks());
  for (int mask = 0; mask < cx.num_masks(); ++mask)
    ot.assoc[mask] = ot.flat_orbit[cx.faces[cx.dominant_face[mask]].flat_id];
  return ot;
}

std::vector<int> face_stabilizer(const Complex& cx, int face) {
  std::vector<int> out;
  for (int w = 0; w < cx.W.size(); ++w)
    if (cx.act_face(w, face) == face) out.push_back(w);
  return out;
}

std::vector<int> pair_stabilizer(const Complex& cx, int f1, int f2) {
  std::vector<int> out;
  for (int w = 0; w < cx.W.size(); ++w)
    if (cx.act_face(w, f1) == f1 && cx.act_face(w, f2) == f2) out.push_back(w);
  return out;
}

LeviGroupData levi_group_data(const Complex& cx, int flat) {
  LeviGroupData lg;
  lg.flat = flat;
  for (int w = 0; w < cx.W.size(); ++w)
    if (cx.act_flat(w, flat) == flat) lg.stab.push_back(w);
  std::vector<int> gens;
  for (int a : cx.flats[flat].zero_set) gens.push_back(cx.W.reflection_index(a));
  lg.levi_weyl = cx.W.subgroup_closure(gens);
  // Normality of W_l in Stab (Prop on W(l), part a).
  std::set<int> wl(lg.levi_weyl.begin(), lg.levi_weyl.end());
  for (int s : lg.stab)
    for (int x : lg.levi_weyl)
      if (!wl.count(cx.W.mult(cx.W.mult(s, x), cx.W.inv(s))))
        throw Error("levi_group_data: W_l not normal in Stab");
  // Coset reps, minimal (length, key): elements are sorted that way already.
  std::set<int> seen;
  for (int s : lg.stab) {
    if (!seen.count(s)) {
      lg.quotient_reps.push_back(s);
      for (int x : lg.levi_weyl) seen.insert(cx.W.mult(s, x));
    }
  }
  // Freeness of W(l) on the chambers of the flat (part b).
  auto chams = cx.chambers_of_flat(flat);
  for (int s : lg.stab) {
    if (wl.count(s)) continue;
    for (int c : chams)
      if (cx.act_face(s, c) == c)
        throw NotFreeAction("levi_group_data: W(l) not free on chambers");
  }
  return lg;
}

bool QuotientGroup::is_elementary_2(int k) const {
  if (order != (1 << k)) return false;
  for (int o : element_orders)
    if (o > 2) return false;
  return abelian;
}

QuotientGroup quotient_group_structure(const Complex& cx, const LeviGroupData& lg) {
  const auto& W = cx.W;
  std::set<int> wl(lg.levi_weyl.begin(), lg.levi_weyl.end());
  auto normalize = [&](int w) {
    for (int r : lg.quotient_reps)
      if (wl.count(W.mult(W.inv(r), w))) return r;
    throw Error("quotient_group_structure: normalization failed");
  };
  QuotientGroup q;
  q.order = (int)lg.quotient_reps.size();
  q.abelian = true;
  for (int a : lg.quotient_reps)
    for (int b : lg.quotient_reps)
      if (normalize(W.mult(a, b)) != normalize(W.mult(b, a))) q.abelian = false;
  int id = normalize(W.identity);
  for (int a : lg.quotient_reps) {
    int x = normalize(a), o = 1;
    while (x != id) {
      x = normalize(W.mult(x, a));
      ++o;
      if (o > q.order) throw Error("order computation overflow");
    }
    q.element_orders.push_back(o);
  }
  std::sort(q.element_orders.begin(), q.element_orders.end());
  return q;
}

std::vector<int> double_cosets(const WeylGroup& W, const std::vector<int>& A,
                               const std::vector<int>& B) {
  std::vector<char> handled(W.size(), 0);
  std::vector<int> reps;
  for (int w = 0; w < W.size(); ++w) {
    if (handled[w]) continue;
    reps.push_back(w);
    std::vector<int> stack{w};
    handled[w] = 1;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int a : A) {
        int aw = W.mult(a, cur);
        for (int b : B) {
          int x = W.mult(aw, b);
          if (!handled[x]) {
            handled[x] = 1;
            stack.push_back(x);
          }
        }
      }
    }
  }
  return reps;
}

PairOrbitReport orbit_pairs_vs_double_cosets(const Complex& cx, const OrbitTable& ot,
                                             int orbit1, int orbit2) {
  PairOrbitReport rep;
  int d1 = ot.orbit_dominant[orbit1], d2 = ot.orbit_dominant[orbit2];
  auto W1 = face_stabilizer(cx, d1);
  auto W2 = face_stabilizer(cx, d2);
  rep.coset_reps = double_cosets(cx.W, W1, W2);
  std::vector<int> o1, o2;
  for (auto& f : cx.faces) {
    if (ot.face_orbit[f.id] == orbit1) o1.push_back(f.id);
    if (ot.face_orbit[f.id] == orbit2) o2.push_back(f.id);
  }
  std::map<std::pair<int, int>, int> pair_orbit;
  int npo = 0;
  for (int a : o1)
    for (int b : o2) {
      if (pair_orbit.count({a, b})) continue;
      int oid = npo++;
      std::vector<std::pair<int, int>> stack{{a, b}};
      pair_orbit[{a, b}] = oid;
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (int w = 0; w < cx.W.size(); ++w) {
          std::pair<int, int> img{cx.act_face(w, x), cx.act_face(w, y)};
          if (!pair_orbit.count(img)) {
            pair_orbit[img] = oid;
            stack.push_back(img);
          }
        }
      }
    }
  rep.n_pair_orbits = npo;
  // Bijection: class of w -> W-orbit of (d1, w.d2); checked well-defined + onto.
  std::set<int> hit;
  bool ok = (int)rep.coset_reps.size() == npo;
  for (int w : rep.coset_reps) {
    int po = pair_orbit.at({d1, cx.act_face(w, d2)});
    if (hit.count(po)) ok = false;
    hit.insert(po);
    for (int a : W1)
      for (int b : W2) {
        int x = cx.W.mult(cx.W.mult(a, w), b);
        if (pair_orbit.at({d1, cx.act_face(x, d2)}) != po) ok = false;
      }
  }
  rep.bijection_ok = ok && (int)hit.size() == npo;
  return rep;
}

} // namespace percox
