#include "percox/arrangement.hpp"

#include <array>

namespace percox {

namespace {

char sign_char(int s) { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }

std::string signs_at(const RootSystem& rs, const Vec& x) {
  std::string s(rs.num_positive, '0');
  for (int i = 0; i < rs.num_positive; ++i) s[i] = sign_char(sign_of(dot(rs.roots[i], x)));
  return s;
}

} // namespace

Complex build_complex(Series series, int rank, size_t max_order) {
  Complex cx;
  cx.rs = build_root_system(series, rank);
  cx.W = weyl_group(cx.rs, max_order);
  const RootSystem& rs = cx.rs;
  int r = rs.rank, P = rs.num_positive;

  // Dominant face witnesses: alpha_i = 0 on I, = 1 off I.
  std::vector<Vec> dom_witness(1 << r);
  std::vector<int> dom_dim(1 << r);
  for (int mask = 0; mask < (1 << r); ++mask) {
    Mat m(rs.ambient_dim, Vec(r));
    Vec b(rs.ambient_dim, 0);
    // Solve alpha_i(x) = c_i: rows indexed by simples.
    Mat rows(r, Vec(rs.ambient_dim));
    Vec c(r);
    for (int i = 0; i < r; ++i) {
      rows[i] = rs.roots[rs.simple_idx[i]];
      c[i] = (mask >> i) & 1 ? 0 : 1;
    }
    auto x = solve_linear(rows, c);
    if (!x) throw Error("dominant witness solve failed");
    dom_witness[mask] = *x;
    Mat zr;
    for (int i = 0; i < r; ++i)
      if ((mask >> i) & 1) zr.push_back(rs.roots[rs.simple_idx[i]]);
    dom_dim[mask] = rs.ambient_dim - rank_of(zr);
  }

  // Faces = W-translates of the dominant faces, dedup by sign vector.
  struct Raw {
    std::string signs;
    int dim, mask;
    Vec wit;
  };
  std::map<std::string, Raw> raw;
  std::vector<std::string> dom_signs(1 << r);
  for (int mask = 0; mask < (1 << r); ++mask) {
    for (int w = 0; w < cx.W.size(); ++w) {
      Vec p = mat_vec(cx.W.elems[w].matrix, dom_witness[mask]);
      std::string s = signs_at(rs, p);
      if (!raw.count(s)) raw[s] = Raw{s, dom_dim[mask], mask, p};
    }
    dom_signs[mask] = signs_at(rs, dom_witness[mask]);
  }
  std::vector<Raw> list;
  for (auto& [k, v] : raw) list.push_back(v);
  std::sort(list.begin(), list.end(), [](const Raw& a, const Raw& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.signs < b.signs;
  });
  for (auto& e : list) {
    Face f;
    f.signs = e.signs;
    f.dim = e.dim;
    f.witness = e.wit;
    f.type_mask = e.mask;
    f.id = (int)cx.faces.size();
    cx.face_by_signs[f.signs] = f.id;
    cx.faces.push_back(f);
  }
  cx.dominant_face.resize(1 << r);
  for (int mask = 0; mask < (1 << r); ++mask)
    cx.dominant_face[mask] = cx.face_by_signs.at(dom_signs[mask]);
  cx.minimal_face = cx.face_by_signs.at(std::string(P, '0'));

  // Flats from face zero sets (implication-closed by construction).
  for (auto& f : cx.faces) {
    std::vector<int> zs;
    for (int i = 0; i < P; ++i)
      if (f.signs[i] == '0') zs.push_back(i);
    auto it = cx.flat_by_zeroset.find(zs);
    if (it == cx.flat_by_zeroset.end()) {
      FlatData fl;
      fl.zero_set = zs;
      Mat zr;
      for (int i : zs) zr.push_back(rs.roots[i]);
      fl.dim = rs.ambient_dim - rank_of(zr);
      fl.id = -1;
      cx.flat_by_zeroset[zs] = (int)cx.flats.size();
      cx.flats.push_back(fl);
      f.flat_id = (int)cx.flats.size() - 1;
    } else {
      f.flat_id = it->second;
    }
  }
  // Renumber flats deterministically by (dim desc, zero_set).
  std::vector<int> order(cx.flats.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (cx.flats[a].dim != cx.flats[b].dim) return cx.flats[a].dim > cx.flats[b].dim;
    return cx.flats[a].zero_set < cx.flats[b].zero_set;
  });
  std::vector<int> newpos(cx.flats.size());
  std::vector<FlatData> nf(cx.flats.size());
  for (size_t i = 0; i < order.size(); ++i) {
    nf[i] = cx.flats[order[i]];
    nf[i].id = (int)i;
    newpos[order[i]] = (int)i;
  }
  cx.flats = nf;
  cx.flat_by_zeroset.clear();
  for (auto& fl : cx.flats) cx.flat_by_zeroset[fl.zero_set] = fl.id;
  for (auto& f : cx.faces) f.flat_id = newpos[f.flat_id];
  cx.top_flat = cx.flat_by_zeroset.at({});

  // Wall classes: non-vanishing roots grouped by equal trace on the flat.
  for (auto& fl : cx.flats) {
    Mat zr;
    for (int i : fl.zero_set) zr.push_back(rs.roots[i]);
    int zrank = rank_of(zr);
    std::vector<int> cls(P, -1);
    for (int b = 0; b < P; ++b) {
      if (std::binary_search(fl.zero_set.begin(), fl.zero_set.end(), b)) continue;
      bool placed = false;
      for (auto& wc : fl.wall_classes) {
        int b0 = wc[0];
        Mat m1 = zr;
        m1.push_back(rs.roots[b0]);
        Mat m2 = m1;
        m2.push_back(rs.roots[b]);
        if (rank_of(m2) == zrank + 1) { // b in span(zeros + b0), and vice versa
          wc.push_back(b);
          placed = true;
          break;
        }
      }
      if (!placed) fl.wall_classes.push_back({b});
    }
    (void)cls;
  }

  // Action table via signed permutation of the positive roots.
  cx.act_tab.assign(cx.W.size(), std::vector<int>(cx.faces.size()));
  for (int w = 0; w < cx.W.size(); ++w) {
    for (auto& f : cx.faces) {
      std::string s(P, '0');
      for (int i = 0; i < P; ++i) {
        int img = cx.W.pos_act[w][i];
        char c = f.signs[i];
        if (img < P)
          s[img] = c;
        else
          s[img - P] = (c == '+') ? '-' : (c == '-' ? '+' : '0');
      }
      cx.act_tab[w][f.id] = cx.face_by_signs.at(s);
    }
  }
  return cx;
}

bool Complex::closure_leq(int g, int f) const {
  const std::string& a = faces[g].signs;
  const std::string& b = faces[f].signs;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != '0' && a[i] != b[i]) return false;
  return true;
}

int Complex::act_flat(int w, int flat) const {
  std::vector<int> zs;
  int P = rs.num_positive;
  for (int i : flats[flat].zero_set) {
    int img = W.pos_act[w][i];
    zs.push_back(img < P ? img : img - P);
  }
  std::sort(zs.begin(), zs.end());
  return flat_by_zeroset.at(zs);
}

int Complex::tits(int f, int g) const {
  std::string s = faces[f].signs;
  const std::string& t = faces[g].signs;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] == '0') s[i] = t[i];
  auto it = face_by_signs.find(s);
  if (it == face_by_signs.end()) throw Error("tits: sign word not realizable");
  return it->second;
}

Rat Complex::eps_for(const Vec& a, const Vec& c) const {
  // eps > 0 with sign(r.(a + eps c)) = lex-sign(r.a, r.c) for all roots r.
  Rat eps = 1;
  for (int i = 0; i < rs.num_positive; ++i) {
    Rat va = dot(rs.roots[i], a), vc = dot(rs.roots[i], c);
    if (va != 0 && vc != 0) {
      Rat bound = (va < 0 ? -va : va) / (vc < 0 ? -vc : vc);
      if (bound <= eps) eps = bound / 2;
    }
  }
  return eps;
}

int Complex::face_of_point(const Vec& x) const {
  auto it = face_by_signs.find(signs_at(rs, x));
  if (it == face_by_signs.end()) throw Error("face_of_point: unknown sign vector");
  return it->second;
}

int Complex::face_of_point_eps(const Vec& a, const Vec& c) const {
  std::string s(rs.num_positive, '0');
  for (int i = 0; i < rs.num_positive; ++i) {
    int sa = sign_of(dot(rs.roots[i], a));
    int sc = sign_of(dot(rs.roots[i], c));
    s[i] = sign_char(sa != 0 ? sa : sc);
  }
  auto it = face_by_signs.find(s);
  if (it == face_by_signs.end()) throw Error("face_of_point_eps: unknown sign vector");
  return it->second;
}

int Complex::tits_oracle(int f, int g) const {
  return face_of_point_eps(faces[f].witness, faces[g].witness);
}

bool Complex::collinear_decide(int f, int g, int h, CollinearCert* cert) const {
  const std::string& sf = faces[f].signs;
  const std::string& sg = faces[g].signs;
  const std::string& sh = faces[h].signs;
  int P = rs.num_positive;
  // Per-coordinate necessary condition on sign(r.a + r.c).
  for (int i = 0; i < P; ++i) {
    char a = sf[i], c = sh[i], b = sg[i];
    if (a == '0' && c == '0') {
      if (b != '0') return false;
    } else if (a == '0') {
      if (b != c) return false;
    } else if (c == '0' || a == c) {
      if (b != a) return false;
    }
  }
  // Constructive candidates.
  auto finish = [&](const Vec& a, const Vec& c) {
    if (cert) *cert = CollinearCert{a, c, vadd(a, c)};
    return true;
  };
  const Vec& wf = faces[f].witness;
  const Vec& wh = faces[h].witness;
  if (tits(f, h) == g) {
    Vec c = vscale(eps_for(wf, wh), wh);
    return finish(wf, c);
  }
  if (tits(h, f) == g) {
    Vec a = vscale(eps_for(wh, wf), wf);
    return finish(a, wh);
  }
  {
    Vec b = vadd(wf, wh);
    if (signs_at(rs, b) == sg) return finish(wf, wh);
  }
  // Exact feasibility on (a, c).
  int d = rs.ambient_dim;
  StrictSystem sys;
  sys.dim = 2 * d;
  auto add_rows = [&](const std::string& s, int offset, bool on_sum) {
    for (int i = 0; i < P; ++i) {
      Vec row(2 * d, 0);
      for (int j = 0; j < d; ++j) {
        if (on_sum || offset == 0) row[j] = rs.roots[i][j];
        if (on_sum || offset == d) row[d + j] = rs.roots[i][j];
      }
      if (s[i] == '0')
        sys.eq.push_back(row);
      else
        sys.pos.push_back(s[i] == '+' ? row : vscale(-1, row));
    }
  };
  add_rows(sf, 0, false);
  add_rows(sh, d, false);
  add_rows(sg, 0, true);
  auto x = strict_feasible(sys);
  if (!x) return false;
  Vec a(x->begin(), x->begin() + d), c(x->begin() + d, x->end());
  return finish(a, c);
}

bool Complex::is_collinear(int f, int g, int h) const {
  std::array<int, 3> key{f, g, h};
  {
    std::lock_guard<std::mutex> lock(*collinear_mutex);
    auto it = collinear_cache.find(key);
    if (it != collinear_cache.end()) return it->second;
  }
  bool r = collinear_decide(f, g, h, nullptr);
  std::lock_guard<std::mutex> lock(*collinear_mutex);
  collinear_cache[key] = r;
  return r;
}

std::optional<CollinearCert> Complex::collinear_cert(int f, int g, int h) const {
  CollinearCert cert;
  if (!collinear_decide(f, g, h, &cert)) return std::nullopt;
  // Replay the certificate exactly.
  if (face_of_point(cert.a) != f || face_of_point(cert.c) != h ||
      face_of_point(cert.b) != g)
    throw Error("collinear_cert: certificate replay failed");
  return cert;
}

std::vector<int> Complex::chambers_of_flat(int flat) const {
  std::vector<int> out;
  for (auto& f : faces)
    if (f.flat_id == flat) out.push_back(f.id);
  return out;
}

std::vector<int> Complex::faces_in_flat(int flat) const {
  std::vector<int> out;
  const auto& zs = flats[flat].zero_set;
  for (auto& f : faces) {
    bool in = true;
    for (int i : zs)
      if (f.signs[i] != '0') {
        in = false;
        break;
      }
    if (in) out.push_back(f.id);
  }
  return out;
}

std::vector<int> Complex::separating_wall_classes(int flat, int c1, int c2) const {
  std::vector<int> out;
  const auto& wcs = flats[flat].wall_classes;
  for (size_t k = 0; k < wcs.size(); ++k) {
    int b = wcs[k][0];
    if (faces[c1].signs[b] != faces[c2].signs[b]) out.push_back((int)k);
  }
  return out;
}

std::vector<int> Complex::generic_gallery(int flat, int c_from, int c_to,
                                          uint64_t seed) const {
  if (faces[c_from].flat_id != flat || faces[c_to].flat_id != flat)
    throw PreconditionFailure("generic_gallery: endpoints must be chambers of the flat");
  if (c_from == c_to) return {c_from};
  const auto& fl = flats[flat];
  // Span basis for in-flat perturbations.
  Mat zr;
  for (int i : fl.zero_set) zr.push_back(rs.roots[i]);
  std::vector<Vec> span = zr.empty() ? [&] {
    std::vector<Vec> b;
    for (int i = 0; i < rs.ambient_dim; ++i) {
      Vec e(rs.ambient_dim, 0);
      e[i] = 1;
      b.push_back(e);
    }
    return b;
  }() : nullspace(zr);
  SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + flat * 1315423911ULL + c_from * 31 + c_to);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vec x = faces[c_from].witness, y = faces[c_to].witness;
    if (attempt > 0) {
      Rat scale(1, 1 << std::min(30, 12 + attempt));
      for (auto& bvec : span) {
        Rat dx = Rat((long long)(rng.below(13)) - 6) * scale;
        Rat dy = Rat((long long)(rng.below(13)) - 6) * scale;
        x = vadd(x, vscale(dx, bvec));
        y = vadd(y, vscale(dy, bvec));
      }
      if (signs_at(rs, x) != faces[c_from].signs || signs_at(rs, y) != faces[c_to].signs)
        continue;
    }
    std::vector<std::pair<Rat, int>> crossings;
    bool bad = false;
    for (size_t k = 0; k < fl.wall_classes.size() && !bad; ++k) {
      int b = fl.wall_classes[k][0];
      Rat v0 = dot(rs.roots[b], x), v1 = dot(rs.roots[b], y);
      if (v0 == 0 || v1 == 0) {
        bad = true;
        break;
      }
      if (sign_of(v0) != sign_of(v1)) crossings.push_back({v0 / (v0 - v1), (int)k});
    }
    if (bad) continue;
    std::sort(crossings.begin(), crossings.end());
    for (size_t i = 0; i + 1 < crossings.size(); ++i)
      if (crossings[i].first == crossings[i + 1].first) {
        bad = true;
        break;
      }
    if (bad) continue;
    // Validate each crossing point lies on a codim-1 cell of the flat.
    Vec dir = vsub(y, x);
    std::vector<int> gallery{c_from};
    Rat prev = 0;
    for (size_t i = 0; i <= crossings.size(); ++i) {
      Rat next = i < crossings.size() ? crossings[i].first : Rat(1);
      Rat tm = (prev + next) / 2;
      int cham = face_of_point(vadd(x, vscale(tm, dir)));
      if (faces[cham].flat_id != flat) {
        bad = true;
        break;
      }
      if (gallery.back() != cham) gallery.push_back(cham);
      if (i < crossings.size()) {
        int cell = face_of_point(vadd(x, vscale(next, dir)));
        if (faces[cell].dim != fl.dim - 1) {
          bad = true;
          break;
        }
        prev = next;
      }
    }
    if (bad) continue;
    if (gallery.front() != c_from || gallery.back() != c_to) continue;
    if ((int)gallery.size() - 1 !=
        (int)separating_wall_classes(flat, c_from, c_to).size())
      continue;
    return gallery;
  }
  throw GenericityFailure("generic_gallery: no generic segment found");
}

long long Complex::zaslavsky_chambers(int flat) const {
  // Sum of |mu(L, M)| over flats M inside L, Moebius on reverse inclusion.
  std::vector<int> sub;
  for (auto& fl : flats) {
    bool in = std::includes(fl.zero_set.begin(), fl.zero_set.end(),
                            flats[flat].zero_set.begin(), flats[flat].zero_set.end());
    if (in) sub.push_back(fl.id);
  }
  // Order: M <= N iff zero_set(M) subset of zero_set(N) (L is minimum).
  auto leq = [&](int a, int b) {
    return std::includes(flats[b].zero_set.begin(), flats[b].zero_set.end(),
                         flats[a].zero_set.begin(), flats[a].zero_set.end());
  };
  std::map<int, long long> mu;
  std::sort(sub.begin(), sub.end(),
            [&](int a, int b) { return flats[a].zero_set.size() < flats[b].zero_set.size(); });
  long long total = 0;
  for (int m : sub) {
    long long s = 0;
    for (int k : sub)
      if (k != m && leq(k, m)) s += mu[k];
    mu[m] = (m == flat) ? 1 : -s;
    total += mu[m] < 0 ? -mu[m] : mu[m];
  }
  return total;
}

} // namespace percox
