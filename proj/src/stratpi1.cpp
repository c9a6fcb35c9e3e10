#include "percox/stratpi1.hpp"

#include <set>

namespace percox {

namespace {

// Exact angular comparator for nonzero 2D rational points (ccw from +x axis).
int half_of(const std::pair<Rat, Rat>& p) {
  if (p.second > 0 || (p.second == 0 && p.first > 0)) return 0;
  return 1;
}

bool angle_less(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  Rat cross = a.first * b.second - a.second * b.first;
  return cross > 0;
}

std::string mask_label(const Complex& cx, int mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < cx.rs.rank; ++i)
    if ((mask >> i) & 1) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

// Ordered 2s-gon instances around each codim-2 face of the induced arrangement.
struct GonInstance {
  int cell;                   // the codim-2 face
  std::vector<int> cycle;     // chambers in cyclic order
  int base;                   // index into cycle: relation from cycle[base] to the opposite
};

struct FullData {
  std::vector<int> chambers;
  std::map<std::pair<int, int>, int> arrow; // (src face, dst face) -> gen index
  std::vector<std::pair<int, int>> arrows;  // face pairs
  std::vector<int> arrow_wall;
  std::vector<GonInstance> instances;
};

FullData full_data(const Complex& cx, int flat) {
  FullData fd;
  fd.chambers = cx.chambers_of_flat(flat);
  const auto& fl = cx.flats[flat];
  auto cells = cx.faces_in_flat(flat);
  // Codim-1 cells give adjacent chamber pairs.
  for (int g : cells) {
    if (cx.faces[g].dim != fl.dim - 1) continue;
    std::vector<int> cof;
    for (int c : fd.chambers)
      if (cx.closure_leq(g, c)) cof.push_back(c);
    if (cof.size() != 2) throw Error("codim-1 cell without exactly two chambers");
    // wall class of the cell
    int wall = -1;
    for (size_t k = 0; k < fl.wall_classes.size(); ++k)
      if (cx.faces[g].signs[fl.wall_classes[k][0]] == '0') {
        wall = (int)k;
        break;
      }
    for (int d = 0; d < 2; ++d) {
      std::pair<int, int> key{cof[d], cof[1 - d]};
      if (!fd.arrow.count(key)) {
        fd.arrow[key] = (int)fd.arrows.size();
        fd.arrows.push_back(key);
        fd.arrow_wall.push_back(wall);
      }
    }
  }
  // Codim-2 cells: build the link cycle of chambers around each.
  Mat zr;
  for (int i : fl.zero_set) zr.push_back(cx.rs.roots[i]);
  std::vector<Vec> span_basis = zr.empty() ? [&] {
    std::vector<Vec> b;
    for (int i = 0; i < cx.rs.ambient_dim; ++i) {
      Vec e(cx.rs.ambient_dim, 0);
      e[i] = 1;
      b.push_back(e);
    }
    return b;
  }() : nullspace(zr);
  for (int e : cells) {
    if (cx.faces[e].dim != fl.dim - 2) continue;
    // Complement basis of span(e) inside span(flat).
    Mat ez;
    for (int i = 0; i < cx.rs.num_positive; ++i)
      if (cx.faces[e].signs[i] == '0') ez.push_back(cx.rs.roots[i]);
    std::vector<Vec> espan = nullspace(ez);
    // Pick two flat-span vectors independent modulo espan.
    std::vector<Vec> comp;
    Mat acc;
    for (auto& v : espan) acc.push_back(v);
    int base_rank = rank_of(acc);
    for (auto& bvec : span_basis) {
      Mat t2 = acc;
      for (auto& c : comp) t2.push_back(c);
      t2.push_back(bvec);
      if (rank_of(t2) == base_rank + (int)comp.size() + 1) comp.push_back(bvec);
      if (comp.size() == 2) break;
    }
    if (comp.size() != 2) throw Error("no 2D complement for codim-2 cell");
    // Chambers around e with projected angular coordinates.
    Mat cols(cx.rs.ambient_dim, Vec(espan.size() + 2));
    for (size_t j = 0; j < espan.size(); ++j)
      for (int i = 0; i < cx.rs.ambient_dim; ++i) cols[i][j] = espan[j][i];
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < cx.rs.ambient_dim; ++i) cols[i][espan.size() + j] = comp[j][i];
    std::vector<std::pair<std::pair<Rat, Rat>, int>> around;
    for (int c : fd.chambers) {
      if (!cx.closure_leq(e, c)) continue;
      auto sol = solve_linear(cols, cx.faces[c].witness);
      if (!sol) throw Error("witness outside flat span");
      std::pair<Rat, Rat> xy{(*sol)[espan.size()], (*sol)[espan.size() + 1]};
      if (xy.first == 0 && xy.second == 0) throw Error("degenerate projection");
      around.push_back({xy, c});
    }
    std::sort(around.begin(), around.end(),
              [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    int m = (int)around.size();
    if (m % 2 != 0 || m < 4) throw Error("bad link cycle size");
    std::vector<int> cycle(m);
    for (int i = 0; i < m; ++i) cycle[i] = around[i].second;
    for (int i = 0; i < m; ++i)
      if (!fd.arrow.count({cycle[i], cycle[(i + 1) % m]}))
        throw Error("link cycle consecutive chambers not adjacent");
    for (int b = 0; b < m; ++b) fd.instances.push_back(GonInstance{e, cycle, b});
  }
  return fd;
}

std::pair<GenWord, GenWord> instance_words(const FullData& fd, const GonInstance& gi) {
  int m = (int)gi.cycle.size(), s = m / 2;
  GenWord up, down;
  for (int k = 0; k < s; ++k) {
    up.push_back(fd.arrow.at({gi.cycle[(gi.base + k) % m], gi.cycle[(gi.base + k + 1) % m]}));
    down.push_back(
        fd.arrow.at({gi.cycle[(gi.base - k + m) % m], gi.cycle[(gi.base - k - 1 + m) % m]}));
  }
  return {up, down};
}

std::vector<long long> exponent_diff(size_t ngens, const GenWord& a, const GenWord& b) {
  std::vector<long long> v(ngens, 0);
  for (int g : a) v[g] += 1;
  for (int g : b) v[g] -= 1;
  return v;
}

} // namespace

Presentation stratum_presentation(const Complex& cx, int flat) {
  auto fd = full_data(cx, flat);
  Presentation p;
  p.flat = flat;
  p.objects = fd.chambers;
  p.obj_of_face.assign(cx.faces.size(), -1);
  for (size_t i = 0; i < fd.chambers.size(); ++i) {
    p.object_labels.push_back("f" + std::to_string(fd.chambers[i]));
    p.obj_of_face[fd.chambers[i]] = (int)i;
  }
  for (size_t a = 0; a < fd.arrows.size(); ++a)
    p.gens.push_back(Generator{p.obj_of_face[fd.arrows[a].first],
                               p.obj_of_face[fd.arrows[a].second], fd.arrow_wall[a]});
  std::set<std::pair<GenWord, GenWord>> seen;
  for (auto& gi : fd.instances) {
    auto [up, down] = instance_words(fd, gi);
    p.ab_vectors.push_back(exponent_diff(fd.arrows.size(), up, down));
    p.rewrite_rules.push_back(Relation{up, down});
    // Canonical form: dedup the (base, base+s) instance against its reverse.
    int m = (int)gi.cycle.size();
    int src = gi.cycle[gi.base], dst = gi.cycle[(gi.base + m / 2) % m];
    if (src > dst) continue;
    auto key = up < down ? std::pair{up, down} : std::pair{down, up};
    if (seen.insert(key).second) p.relations.push_back(Relation{key.first, key.second});
  }
  return p;
}

Presentation coinvariant_presentation(const Complex& cx, int flat) {
  auto fd = full_data(cx, flat);
  auto lg = levi_group_data(cx, flat); // throws NotFreeAction if the check fails
  Presentation p;
  p.flat = flat;
  p.quotient = true;
  // Chamber orbits under Stab (W_l acts trivially on the flat).
  p.obj_of_face.assign(cx.faces.size(), -1);
  for (int c : fd.chambers) {
    if (p.obj_of_face[c] >= 0) continue;
    int oid = (int)p.objects.size();
    int rep = c;
    for (int w : lg.stab) {
      int img = cx.act_face(w, c);
      if (p.obj_of_face[img] >= 0) throw Error("orbit collision");
      rep = std::min(rep, img);
    }
    for (int w : lg.stab) p.obj_of_face[cx.act_face(w, c)] = oid;
    p.objects.push_back(rep);
    p.object_labels.push_back(mask_label(cx, cx.faces[rep].type_mask));
  }
  // Arrow orbits.
  std::vector<int> arrow_class(fd.arrows.size(), -1);
  for (size_t a = 0; a < fd.arrows.size(); ++a) {
    if (arrow_class[a] >= 0) continue;
    int cid = (int)p.gens.size();
    for (int w : lg.stab) {
      auto img = std::pair{cx.act_face(w, fd.arrows[a].first),
                           cx.act_face(w, fd.arrows[a].second)};
      arrow_class[fd.arrow.at(img)] = cid;
    }
    p.gens.push_back(Generator{p.obj_of_face[fd.arrows[a].first],
                               p.obj_of_face[fd.arrows[a].second], fd.arrow_wall[a]});
  }
  auto qword = [&](const GenWord& w) {
    GenWord out;
    for (int g : w) out.push_back(arrow_class[g]);
    return out;
  };
  // Relation orbits: act on (cell, unordered opposite pair) instances.
  std::map<std::pair<int, std::pair<int, int>>, int> inst_of;
  for (size_t i = 0; i < fd.instances.size(); ++i) {
    auto& gi = fd.instances[i];
    int m = (int)gi.cycle.size();
    int a = gi.cycle[gi.base], b = gi.cycle[(gi.base + m / 2) % m];
    inst_of[{gi.cell, {std::min(a, b), std::max(a, b)}}] = (int)i;
  }
  std::set<int> done;
  std::set<std::pair<GenWord, GenWord>> content;
  for (size_t i = 0; i < fd.instances.size(); ++i) {
    auto& gi = fd.instances[i];
    auto [up, down] = instance_words(fd, gi);
    p.ab_vectors.push_back(exponent_diff(p.gens.size(), qword(up), qword(down)));
    if (done.count((int)i)) continue;
    int m = (int)gi.cycle.size();
    int a0 = gi.cycle[gi.base], b0 = gi.cycle[(gi.base + m / 2) % m];
    for (int w : lg.stab) {
      int ia = cx.act_face(w, a0), ib = cx.act_face(w, b0);
      int ecell = -1;
      // the image cell: act on the codim-2 face
      ecell = cx.act_face(w, gi.cell);
      auto it = inst_of.find({ecell, {std::min(ia, ib), std::max(ia, ib)}});
      if (it == inst_of.end()) throw Error("relation orbit image missing");
      done.insert(it->second);
      // both base choices of the unordered pair
      auto& gj = fd.instances[it->second];
      int mj = (int)gj.cycle.size();
      for (size_t j = 0; j < fd.instances.size(); ++j) {
        auto& gk = fd.instances[j];
        if (gk.cell != ecell) continue;
        int ka = gk.cycle[gk.base], kb = gk.cycle[(gk.base + (int)gk.cycle.size() / 2) %
                                                  (int)gk.cycle.size()];
        if (std::min(ka, kb) == std::min(ia, ib) && std::max(ka, kb) == std::max(ia, ib))
          done.insert((int)j);
      }
      (void)mj;
    }
    auto qu = qword(up), qd = qword(down);
    auto key = qu < qd ? std::pair{qu, qd} : std::pair{qd, qu};
    if (content.insert(key).second) p.relations.push_back(Relation{key.first, key.second});
  }
  return p;
}

AbelianGroup presentation_h1(int nobj, const std::vector<std::pair<int, int>>& arrows,
                             const std::vector<std::vector<long long>>& relators) {
  return complex_h1(nobj, arrows, relators);
}

PresentationInvariants presentation_invariants(const Presentation& p) {
  PresentationInvariants pi;
  pi.object_count = (int)p.objects.size();
  pi.generator_count = (int)p.gens.size();
  pi.relation_count = (int)p.relations.size();
  // Connectivity of the underlying graph.
  std::vector<int> comp(p.objects.size(), -1);
  std::vector<int> stack{0};
  if (!p.objects.empty()) comp[0] = 0;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (auto& g : p.gens) {
      int nxt = -1;
      if (g.src == cur) nxt = g.dst;
      if (g.dst == cur) nxt = g.src;
      if (nxt >= 0 && comp[nxt] < 0) {
        comp[nxt] = 0;
        stack.push_back(nxt);
      }
    }
  }
  for (int c : comp)
    if (c < 0) throw PreconditionFailure("presentation_invariants: not connected");
  std::vector<std::pair<int, int>> arrows;
  for (auto& g : p.gens) arrows.push_back({g.src, g.dst});
  pi.vertex_abelianization = complex_h1((int)p.objects.size(), arrows, p.ab_vectors);
  return pi;
}

int word_src(const Presentation& p, const GenWord& w) {
  if (w.empty()) throw PreconditionFailure("empty word has no endpoints here");
  return p.gens[w.front()].src;
}

int word_dst(const Presentation& p, const GenWord& w) {
  if (w.empty()) throw PreconditionFailure("empty word has no endpoints here");
  return p.gens[w.back()].dst;
}

GenWord gallery_word(const Presentation& p, const std::vector<int>& gallery_faces) {
  GenWord w;
  std::map<std::pair<int, int>, int> arrow;
  for (size_t g = 0; g < p.gens.size(); ++g)
    arrow[{p.gens[g].src, p.gens[g].dst}] = (int)g;
  for (size_t i = 0; i + 1 < gallery_faces.size(); ++i) {
    int a = p.obj_of_face[gallery_faces[i]], b = p.obj_of_face[gallery_faces[i + 1]];
    auto it = arrow.find({a, b});
    if (it == arrow.end()) throw Error("gallery_word: missing arrow");
    w.push_back(it->second);
  }
  return w;
}

namespace {

bool valid_word(const Presentation& p, const GenWord& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (p.gens[w[i]].dst != p.gens[w[i + 1]].src) return false;
  return true;
}

} // namespace

WordResult positive_words_equal(const Complex& cx, const Presentation& p, int flat,
                                const GenWord& w1, const GenWord& w2,
                                const WordBudget& budget) {
  WordResult res;
  if (!valid_word(p, w1) || !valid_word(p, w2))
    throw PreconditionFailure("positive_words_equal: words not composable");
  auto ab_refuted = [&] {
    std::vector<long long> diff(p.gens.size(), 0);
    for (int g : w1) diff[g] += 1;
    for (int g : w2) diff[g] -= 1;
    ZMat rows;
    for (auto& v : p.ab_vectors) {
      std::vector<BigInt> row(v.size());
      for (size_t i = 0; i < v.size(); ++i) row[i] = v[i];
      rows.push_back(row);
    }
    std::vector<BigInt> d(diff.size());
    for (size_t i = 0; i < diff.size(); ++i) d[i] = diff[i];
    return !in_row_lattice(rows, d);
  };
  if (w1.empty() && w2.empty()) {
    res.verdict = Verdict::Proved;
    return res;
  }
  if (w1.empty() || w2.empty()) {
    res.verdict = ab_refuted() ? Verdict::Refuted : Verdict::Unknown;
    return res;
  }
  if (word_src(p, w1) != word_src(p, w2) || word_dst(p, w1) != word_dst(p, w2)) {
    res.verdict = Verdict::Refuted;
    return res;
  }
  if (w1 == w2) {
    res.verdict = Verdict::Proved;
    return res;
  }
  // Deligne fast path: two minimal galleries between the same chambers.
  int src_face = p.objects[word_src(p, w1)], dst_face = p.objects[word_dst(p, w1)];
  size_t minimal = cx.separating_wall_classes(flat, src_face, dst_face).size();
  if (w1.size() == minimal && w2.size() == minimal) {
    res.verdict = Verdict::Proved;
    return res;
  }
  if (ab_refuted()) {
    res.verdict = Verdict::Refuted;
    return res;
  }
  // Bidirectional BFS over 2-cell rewrites.
  struct Side {
    std::map<GenWord, int> depth;
    std::vector<GenWord> frontier;
  };
  Side L, R;
  L.depth[w1] = 0;
  L.frontier = {w1};
  R.depth[w2] = 0;
  R.frontier = {w2};
  const auto& rules = p.rewrite_rules.empty() ? p.relations : p.rewrite_rules;
  auto rewrites = [&](const GenWord& w) {
    std::vector<GenWord> out;
    for (auto& rel : rules)
      for (int dir = 0; dir < 2; ++dir) {
        const GenWord& from = dir ? rel.rhs : rel.lhs;
        const GenWord& to = dir ? rel.lhs : rel.rhs;
        if (from.size() > w.size()) continue;
        for (size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
          bool match = true;
          for (size_t k = 0; k < from.size(); ++k)
            if (w[pos + k] != from[k]) {
              match = false;
              break;
            }
          if (!match) continue;
          GenWord nw(w.begin(), w.begin() + pos);
          nw.insert(nw.end(), to.begin(), to.end());
          nw.insert(nw.end(), w.begin() + pos + from.size(), w.end());
          out.push_back(nw);
        }
      }
    return out;
  };
  size_t states = 2;
  for (int depth = 0; depth < budget.max_moves; ++depth) {
    Side& S = L.frontier.size() <= R.frontier.size() ? L : R;
    Side& O = (&S == &L) ? R : L;
    std::vector<GenWord> next;
    for (auto& w : S.frontier)
      for (auto& nw : rewrites(w)) {
        if (S.depth.count(nw)) continue;
        if (O.depth.count(nw)) {
          res.verdict = Verdict::Proved;
          return res;
        }
        S.depth[nw] = depth + 1;
        next.push_back(nw);
        if (++states > budget.max_states) {
          res.verdict = Verdict::Unknown;
          return res;
        }
      }
    S.frontier = next;
    if (L.frontier.empty() && R.frontier.empty()) break;
  }
  res.verdict = Verdict::Unknown;
  return res;
}

} // namespace percox
